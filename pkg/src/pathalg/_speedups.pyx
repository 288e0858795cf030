# cython: boundscheck=False, wraparound=False
"""Compiled word-matching kernels; same contract as pathalg._matchpy."""

BACKEND = "c"


def find_leftmost(tuple word, tips):
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t i, k, lt, t_idx
    cdef tuple t
    for i in range(n):
        for t_idx in range(len(tips)):
            t = <tuple> tips[t_idx]
            lt = len(t)
            if i + lt > n:
                continue
            for k in range(lt):
                if word[i + k] != t[k]:
                    break
            else:
                return i, t_idx
    return -1, -1


def find_rightmost(tuple word, tips):
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t i, k, lt, t_idx
    cdef tuple t
    for i in range(n - 1, -1, -1):
        for t_idx in range(len(tips)):
            t = <tuple> tips[t_idx]
            lt = len(t)
            if i + lt > n:
                continue
            for k in range(lt):
                if word[i + k] != t[k]:
                    break
            else:
                return i, t_idx
    return -1, -1


def contains_tip(tuple word, tips):
    return find_leftmost(word, tips)[0] >= 0


def has_tip_suffix(tuple word, tips):
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t k, lt, t_idx
    cdef tuple t
    for t_idx in range(len(tips)):
        t = <tuple> tips[t_idx]
        lt = len(t)
        if lt > n:
            continue
        for k in range(lt):
            if word[n - lt + k] != t[k]:
                break
        else:
            return True
    return False


def occurrences(tuple word, tuple sub):
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t m = len(sub)
    cdef Py_ssize_t i, k
    out = []
    for i in range(n - m + 1):
        for k in range(m):
            if word[i + k] != sub[k]:
                break
        else:
            out.append(i)
    return out
