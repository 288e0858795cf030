"""Reduction systems over a path algebra: basic reductions with recorded
traces, normal forms under a deterministic strategy, irreducibility, and
enumeration of the irreducible basis.

Strategy convention: LEFTMOST scans redex start positions from the left
end of the written word, RIGHTMOST from the right end; at a position the
first matching rule in declaration order wins.  Support paths of a
PathPoly are visited in canonical (length, word) order.  Under a system
that passes the diamond check the final value is strategy-independent.
"""

from __future__ import annotations

from . import kernels
from .errors import (FuelExhausted, InputError, TraceMismatch, UnknownRule)
from .quiver import PathPoly, concat

LEFTMOST = "leftmost"
RIGHTMOST = "rightmost"
DEFAULT_FUEL = 100_000


class Rule:
    __slots__ = ("index", "tip", "rhs")

    def __init__(self, index, tip, rhs):
        self.index = index
        self.tip = tip
        self.rhs = rhs

    def __repr__(self):
        return f"Rule({self.tip.quiver.path_str(self.tip)} -> {self.rhs!r})"


class BasicReduction:
    """Triple (a, s, c): rewrite the single monomial a·s·c to a·f_s·c."""

    __slots__ = ("left", "rule", "right")

    def __init__(self, left, rule, right):
        self.left = left
        self.rule = rule
        self.right = right

    def redex(self):
        asc = concat(self.left, self.rule.tip)
        if asc is None:
            return None
        return concat(asc, self.right)

    def __repr__(self):
        q = self.rule.tip.quiver
        return (f"r[{q.path_str(self.left)},{q.path_str(self.rule.tip)},"
                f"{q.path_str(self.right)}]")


class ReductionTrace:
    """Ordered basic reductions, applied first to last."""

    __slots__ = ("steps",)

    def __init__(self, steps=()):
        self.steps = list(steps)

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def replay(self, system, x):
        for br in self.steps:
            x = apply_basic(system, br, x)
        return x


class ReductionSystem:
    """Immutable set of rules (s, f) with s a path of length >= 2, f a
    parallel PathPoly different from s, and no tip dividing another."""

    def __init__(self, field, quiver, rules):
        self.field = field
        self.quiver = quiver
        rs = []
        for i, (s, f) in enumerate(rules):
            if len(s.word) < 2:
                raise InputError(
                    f"rule tip {quiver.path_str(s)} is shorter than 2 arrows")
            if not f.is_zero() and (f.source, f.target) != (s.source, s.target):
                raise InputError(
                    f"rule value for {quiver.path_str(s)} is not parallel")
            if f.terms.get(s) is not None and len(f.terms) == 1 and \
                    f.terms[s] == field.one:
                raise InputError(
                    f"rule for {quiver.path_str(s)} replaces the tip by itself")
            rs.append(Rule(i, s, f))
        for r in rs:
            for r2 in rs:
                if r is not r2 and kernels.occurrences(r2.tip.word, r.tip.word):
                    raise InputError(
                        f"tip {quiver.path_str(r.tip)} divides tip "
                        f"{quiver.path_str(r2.tip)}")
        self.rules = tuple(rs)
        self.tip_words = [r.tip.word for r in rs]
        self.tips = tuple(r.tip for r in rs)
        self._beta_cache = {}

    # -- conveniences ---------------------------------------------------------

    def monomial(self, path, coef=None):
        return PathPoly.monomial(self.field, path, coef)

    def poly(self, pairs):
        return PathPoly.from_terms(self.field, pairs)

    # -- irreducibility -------------------------------------------------------

    def is_irreducible(self, p):
        return not kernels.contains_tip(p.word, self.tip_words)

    def is_irreducible_poly(self, x):
        return all(self.is_irreducible(p) for p in x.terms)

    def find_redex(self, p, strategy=LEFTMOST):
        """(BasicReduction) for the strategy's first redex of path p, or None."""
        if strategy == LEFTMOST:
            i, t = kernels.find_leftmost(p.word, self.tip_words)
        else:
            i, t = kernels.find_rightmost(p.word, self.tip_words)
        if i < 0:
            return None
        rule = self.rules[t]
        return BasicReduction(p.sub(0, i), rule,
                              p.sub(i + len(rule.tip.word), len(p.word)))

    # -- rewriting ------------------------------------------------------------

    def normal_form(self, x, strategy=LEFTMOST, fuel=DEFAULT_FUEL):
        """Fully reduce x, returning (value, trace)."""
        if not isinstance(x, PathPoly):
            x = self.monomial(x)
        trace = ReductionTrace()
        while True:
            br = None
            for p in x.support():
                br = self.find_redex(p, strategy)
                if br is not None:
                    break
            if br is None:
                return x, trace
            if fuel <= 0:
                raise FuelExhausted(
                    "normal form did not stabilize within the fuel budget")
            fuel -= 1
            trace.steps.append(br)
            x = apply_basic(self, br, x)

    def beta(self, p, fuel=DEFAULT_FUEL):
        """Normal form of a single path, cached."""
        v = self._beta_cache.get(p)
        if v is None:
            v, _ = self.normal_form(p, LEFTMOST, fuel)
            self._beta_cache[p] = v
        return v

    def beta_poly(self, x, fuel=DEFAULT_FUEL):
        out = PathPoly.zero(self.field)
        for p, c in x.terms.items():
            out = out + self.beta(p, fuel).scale(c)
        return out

    # -- the irreducible basis --------------------------------------------------

    def irreducible_basis(self, length_cap):
        """All irreducible paths of length <= length_cap, by length then word.

        Valid because the basis is closed under divisors: a word extends an
        irreducible word by one arrow on the right iff no tip is a suffix."""
        quiver = self.quiver
        level = [quiver.trivial(v) for v in range(len(quiver.vertices))]
        out = list(level)
        arrows_into = {}
        for a in range(len(quiver.arrow_ids)):
            arrows_into.setdefault(quiver.arrow_target[a], []).append(a)
        for _ in range(length_cap):
            nxt = []
            for p in level:
                for a in arrows_into.get(p.source, ()):
                    word = p.word + (a,)
                    if not kernels.has_tip_suffix(word, self.tip_words):
                        nxt.append(quiver._intern(word))
            nxt.sort(key=lambda q: q.skey)
            out.extend(nxt)
            level = nxt
        return out


def apply_basic(system, br, x):
    """Replace the monomial a·s·c in x (if present) by a·f·c."""
    if br.rule is not system.rules[br.rule.index]:
        raise UnknownRule("basic reduction refers to a foreign rule")
    asc = br.redex()
    if asc is None:
        raise TraceMismatch("non-composable basic reduction")
    coef = x.terms.get(asc)
    if coef is None:
        return x
    terms = dict(x.terms)
    del terms[asc]
    for t, c in br.rule.rhs.terms.items():
        path = concat(concat(br.left, t), br.right)
        s = terms.get(path)
        s = coef * c if s is None else s + coef * c
        if s.is_zero():
            terms.pop(path, None)
        else:
            terms[path] = s
    if not terms:
        return PathPoly.zero(x.field)
    return PathPoly(x.field, x.source, x.target, terms)
