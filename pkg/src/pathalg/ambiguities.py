"""n-ambiguities of a reduction system (Anick chains), with left and right
factorizations, plus the quadratic-system shortcut.

Degree convention: degree -1 holds the trivial paths, degree 0 the arrows,
degree 1 the rule tips, and degree n >= 2 the minimal proper superpositions
of n tips.  A left factorization u_0|u_1|...|u_n has u_0 a single arrow,
every u_i irreducible, u_i·u_{i+1} reducible, and u_i·d irreducible for
every proper prefix d of u_{i+1}; right factorizations are the mirror
image.  Both factorizations of an ambiguity are unique and recovered here
by independent parses, which the enumeration cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import NotQuadratic
from .quiver import concat


@dataclass(frozen=True)
class Ambiguity:
    degree: int
    path: object                 # Path
    left: tuple                  # (u_0, ..., u_n) as Paths
    right: tuple                 # (v_n, ..., v_0) as Paths, written order

    def __repr__(self):
        q = self.path.quiver
        return (f"Ambiguity({self.degree}, {q.path_str(self.path)}, "
                f"L={'|'.join(q.path_str(u) for u in self.left)}, "
                f"R={'|'.join(q.path_str(v) for v in self.right)})")


def _word_extensions(last, tips):
    """Extension words w such that last·w is reducible, minimally so.

    Every valid extension comes from a tip occurrence straddling the right
    boundary of last; minimality asks that no shorter prefix of w already
    makes last·(prefix) reducible.
    """
    out = []
    L = len(last)
    for t in tips:
        for i in range(L):
            k = L - i
            if len(t) <= k or last[i:] != t[:k]:
                continue
            w = t[k:]
            ok = True
            for cut in range(1, len(w)):
                if kernels.contains_tip(last + w[:cut], tips):
                    ok = False
                    break
            if ok:
                out.append(w)
    out.sort(key=lambda w: (len(w), w))
    return out


def _parse_left(word, tips):
    """The left factorization of word as a list of subwords, or None.

    Greedy parse: after u_0 = word[0], each next factor is the shortest
    prefix d of the remainder with (previous factor)·d reducible; the parse
    must consume the word exactly and every factor must be irreducible.
    """
    if not word:
        return None
    factors = [word[:1]]
    pos = 1
    while pos < len(word):
        prev = factors[-1]
        step = None
        for cut in range(pos + 1, len(word) + 1):
            cand = word[pos:cut]
            if kernels.contains_tip(cand, tips):
                return None          # factors must stay irreducible
            if kernels.contains_tip(prev + cand, tips):
                step = cand
                break
        if step is None:
            return None
        factors.append(step)
        pos += len(step)
    if len(factors) < 2:
        return None
    return factors


class AmbiguityEnumerator:
    """Per-degree enumeration with caching; caller supplies length caps
    because chain families can grow without bound."""

    def __init__(self, system):
        self.system = system
        self.quiver = system.quiver
        self.tips = list(system.tip_words)
        self._rev_tips = [tuple(reversed(t)) for t in self.tips]
        self._cache = {}             # degree -> (cap, list[Ambiguity], truncated)

    # -- factorization parses -------------------------------------------------

    def left_factorize(self, path):
        parts = _parse_left(path.word, self.tips)
        if parts is None:
            return None
        return self._paths_from_split(path, parts)

    def right_factorize(self, path):
        parts = _parse_left(tuple(reversed(path.word)), self._rev_tips)
        if parts is None:
            return None
        rev_parts = [tuple(reversed(w)) for w in reversed(parts)]
        return self._paths_from_split(path, rev_parts)

    def _paths_from_split(self, path, parts):
        out = []
        pos = 0
        for w in parts:
            out.append(path.sub(pos, pos + len(w)))
            pos += len(w)
        return tuple(out)

    # -- enumeration ------------------------------------------------------------

    def degree(self, n, length_cap=64):
        """(ambiguities of degree n with |path| <= length_cap, truncated?).

        truncated is True when some chain was cut off by the cap, so the
        returned list may be incomplete at this cap.
        """
        if n <= 1:
            return self._base_degree(n), False
        cached = self._cache.get(n)
        if cached is not None and cached[0] >= length_cap:
            cap, items, trunc = cached
            kept = [a for a in items if len(a.path.word) <= length_cap]
            return kept, trunc or len(kept) < len(items)
        prev, trunc = self.degree(n - 1, length_cap)
        out = []
        for amb in prev:
            last = amb.left[-1]
            for w in _word_extensions(last.word, self.tips):
                if len(amb.path.word) + len(w) > length_cap:
                    trunc = True
                    continue
                ext = self.quiver._intern(w)
                path = concat(amb.path, ext)
                right = self.right_factorize(path)
                if right is None or len(right) != n + 1:
                    raise AssertionError(
                        "left/right ambiguity factorizations disagree")
                out.append(Ambiguity(n, path, amb.left + (ext,), right))
        out.sort(key=lambda a: a.path.skey)
        self._cache[n] = (length_cap, out, trunc)
        return out, trunc

    def _base_degree(self, n):
        quiver = self.quiver
        if n == -1:
            return [Ambiguity(-1, quiver.trivial(v), (quiver.trivial(v),),
                              (quiver.trivial(v),))
                    for v in range(len(quiver.vertices))]
        if n == 0:
            arrows = sorted(quiver._arrows, key=lambda p: p.skey)
            return [Ambiguity(0, a, (a,), (a,)) for a in arrows]
        if n == 1:
            out = []
            for t in sorted(self.system.tips, key=lambda p: p.skey):
                left = (t.sub(0, 1), t.sub(1, len(t.word)))
                right = (t.sub(0, len(t.word) - 1),
                         t.sub(len(t.word) - 1, len(t.word)))
                out.append(Ambiguity(1, t, left, right))
            return out
        raise ValueError(n)

    def paths(self, n, length_cap=64):
        items, _ = self.degree(n, length_cap)
        return [a.path for a in items]

    def by_path(self, n, length_cap=64):
        items, _ = self.degree(n, length_cap)
        return {a.path: a for a in items}

    # -- quadratic shortcut -------------------------------------------------------

    def quadratic(self, n):
        """Walks in the graph on arrows with an edge a -> b when ab is a tip;
        only valid when every tip has length exactly 2."""
        if any(len(t) != 2 for t in self.tips):
            raise NotQuadratic("some rule tip does not have length 2")
        if n < 1:
            return self._base_degree(n)
        edges = {}
        for t in self.tips:
            edges.setdefault(t[0], []).append(t[1])
        words = [(a,) for a in range(len(self.quiver.arrow_ids))]
        for _ in range(n):
            words = [w + (b,) for w in words for b in edges.get(w[-1], ())]
        out = []
        for w in sorted(words):
            path = self.quiver._intern(w)
            factors = tuple(path.sub(i, i + 1) for i in range(len(w)))
            out.append(Ambiguity(n, path, factors, factors))
        return out
