"""Pure-Python word-matching kernels.

These are the innermost operations of rewriting: locate occurrences of
rule tips (tuples of arrow indices) inside a word.  pathalg.kernels picks
this module or the compiled _speedups extension at import time.
"""

BACKEND = "python"


def find_leftmost(word, tips):
    """First (position, tip_index) scanning positions from the left end,
    tips in declaration order at each position; (-1, -1) if no match."""
    n = len(word)
    for i in range(n):
        for t_idx, t in enumerate(tips):
            lt = len(t)
            if i + lt <= n and word[i:i + lt] == t:
                return i, t_idx
    return -1, -1


def find_rightmost(word, tips):
    """Like find_leftmost but scanning start positions from the right end."""
    n = len(word)
    for i in range(n - 1, -1, -1):
        for t_idx, t in enumerate(tips):
            lt = len(t)
            if i + lt <= n and word[i:i + lt] == t:
                return i, t_idx
    return -1, -1


def contains_tip(word, tips):
    return find_leftmost(word, tips)[0] >= 0


def has_tip_suffix(word, tips):
    """Does some tip equal a suffix of word?  (Basis extension test.)"""
    n = len(word)
    for t in tips:
        lt = len(t)
        if lt <= n and word[n - lt:] == t:
            return True
    return False


def occurrences(word, sub):
    """All start positions of sub inside word, ascending."""
    out = []
    n, m = len(word), len(sub)
    for i in range(n - m + 1):
        if word[i:i + m] == sub:
            out.append(i)
    return out
