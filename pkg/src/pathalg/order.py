"""Weighted deglex monomial orders, tips, minimal tips, and the bounded
reachability oracle for the rewrite-induced partial order on scaled paths.

Comparison convention: paths are written word[0]...word[-1] left to right
and the lexicographic tie-break reads arrows from the RIGHT end of the
written word (the first arrow under right-to-left composition).  With
strictly positive weights this yields a total order with finite down-sets
that is compatible with concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import CapExceeded, InputError, ZeroPoly

DEFAULT_FUEL = 10_000


class WeightedDeglex:
    def __init__(self, quiver, arrow_order, weights=None):
        """arrow_order: all arrow ids, smallest first.  weights: id -> int >= 1."""
        self.quiver = quiver
        if sorted(arrow_order) != sorted(quiver.arrow_ids):
            raise InputError("arrow_order must list every arrow exactly once")
        self._rank = [0] * len(quiver.arrow_ids)
        for r, name in enumerate(arrow_order):
            self._rank[quiver.arrow_index[name]] = r
        self.arrow_order = tuple(arrow_order)
        if weights is None:
            weights = {a: 1 for a in quiver.arrow_ids}
        if set(weights) != set(quiver.arrow_ids):
            raise InputError("weights must cover every arrow exactly once")
        self._weight = [0] * len(quiver.arrow_ids)
        for name, w in weights.items():
            if not isinstance(w, int) or w < 1:
                raise InputError("weights must be positive integers")
            self._weight[quiver.arrow_index[name]] = w
        self.weights = dict(weights)

    def weight(self, p):
        return sum(self._weight[a] for a in p.word)

    def key(self, p):
        """Total-order key: weight, then ranks from the rightmost arrow,
        then vertex id for trivial paths."""
        ranks = tuple(self._rank[a] for a in reversed(p.word))
        return (self.weight(p), ranks, p.source if p.is_trivial else -1)

    def compare(self, p, q):
        kp, kq = self.key(p), self.key(q)
        if kp < kq:
            return -1
        if kp > kq:
            return 1
        return 0

    def orients(self, tip_path, rhs):
        """True when every support path of rhs is strictly below tip_path."""
        kt = self.key(tip_path)
        return all(self.key(p) < kt for p in rhs.terms)


def tip(order, x):
    """(coefficient, path) of the order-maximal support path of x != 0."""
    if x.is_zero():
        raise ZeroPoly("tip of the zero element")
    best = max(x.terms, key=order.key)
    return x.terms[best], best


@dataclass
class ReachResult:
    status: str                     # "yes" | "no" | "fuel"
    trace: list = dc_field(default_factory=list)

    def __bool__(self):
        return self.status == "yes"


def reaches(system, source, target, fuel=DEFAULT_FUEL):
    """Bounded decision oracle: is there a reduction r such that r applied
    to source contains the target path with exactly the target coefficient?

    target is a (Scalar, Path) pair.  Breadth-first search over whole
    reduction states (PathPolys); every basic-reduction application costs
    one unit of fuel.  "no" is only reported when the reachable state space
    was exhausted, which is sound for reduction-finite systems.
    """
    from .rewrite import BasicReduction, apply_basic

    coef, path = target
    start = system.monomial(source)

    def hit(poly):
        c = poly.terms.get(path)
        return c is not None and c == coef

    if hit(start):
        return ReachResult("yes", [])
    seen = {_poly_fingerprint(start)}
    queue = [(start, [])]
    while queue:
        next_queue = []
        for poly, trace in queue:
            for p in poly.support():
                word = p.word
                n = len(word)
                for i in range(n):
                    for rule in system.rules:
                        lt = len(rule.tip.word)
                        if i + lt <= n and word[i:i + lt] == rule.tip.word:
                            if fuel <= 0:
                                return ReachResult("fuel")
                            fuel -= 1
                            br = BasicReduction(p.sub(0, i), rule,
                                                p.sub(i + lt, n))
                            nxt = apply_basic(system, br, poly)
                            fp = _poly_fingerprint(nxt)
                            if fp in seen:
                                continue
                            seen.add(fp)
                            step = trace + [br]
                            if hit(nxt):
                                return ReachResult("yes", step)
                            next_queue.append((nxt, step))
        queue = next_queue
    return ReachResult("no")


def _poly_fingerprint(poly):
    return tuple(sorted(
        (p.uid, c.fingerprint()) for p, c in poly.terms.items()))


def minimal_tips(order, generators, degree_cap=12, max_rounds=200,
                 fuel=100_000):
    """Minimal tips of the ideal spanned by the generators, computed by
    running completion to the degree cap; exact when completion finishes."""
    from .completion import complete_generators

    generators = [g for g in generators if not g.is_zero()]
    if not generators:
        return set()
    field = generators[0].field
    quiver = next(iter(generators[0].terms)).quiver
    result = complete_generators(field, quiver, order, generators,
                                 max_rounds=max_rounds,
                                 degree_cap=degree_cap, fuel=fuel)
    if result.status != "complete":
        raise CapExceeded(
            f"completion still active at degree cap {degree_cap}")
    return {rule.tip for rule in result.system.rules}
