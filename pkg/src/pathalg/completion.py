"""Overlap detection, diamond (confluence) checking, and completion of a
reduction system to one where every overlap resolves.

An overlap is a degree-2 ambiguity p = u0·u1·u2 = v2·v1·v0: the tips
u0·u1 and v1·v0 superpose properly inside p.  Resolving compares the
normal form reached by first rewriting the left tip against the one
reached by first rewriting the right tip; a nonzero difference is an
ideal element that completion orients at its tip and adds as a new rule,
interreducing the rest of the system.  Shortest overlaps are processed
first.  Termination is not guaranteed in general, so completion stops
with a partial system when a tip would exceed the degree cap or the
round budget runs out.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import kernels
from .ambiguities import AmbiguityEnumerator
from .errors import CapExceeded, InputError, OrderViolation
from .order import tip as order_tip
from .quiver import PathPoly, concat
from .rewrite import (LEFTMOST, BasicReduction, ReductionSystem, apply_basic)

DEFAULT_FUEL = 100_000


@dataclass(frozen=True)
class Overlap:
    path: object
    left: tuple          # (u0, u1, u2)
    right: tuple         # (v2, v1, v0)
    left_rule: object
    right_rule: object

    def __repr__(self):
        q = self.path.quiver
        return f"Overlap({q.path_str(self.path)})"


def overlaps(system, length_cap=None):
    """All degree-2 ambiguities of the system, shortest first."""
    if length_cap is None:
        length_cap = 2 * max((len(t) for t in system.tip_words), default=2)
    enum = AmbiguityEnumerator(system)
    ambs, truncated = enum.degree(2, length_cap)
    if truncated:
        raise AssertionError("overlap enumeration hit an impossible cap")
    by_tip = {r.tip: r for r in system.rules}
    out = []
    for a in ambs:
        left_tip = concat(a.left[0], a.left[1])
        right_tip = concat(a.right[1], a.right[2])
        out.append(Overlap(a.path, a.left, a.right,
                           by_tip[left_tip], by_tip[right_tip]))
    out.sort(key=lambda o: o.path.skey)
    return out


@dataclass
class OverlapResolution:
    resolvable: bool
    residual: object             # PathPoly (zero when resolvable)
    left_value: object
    right_value: object
    left_trace: object
    right_trace: object


def resolve_overlap(system, overlap, fuel=DEFAULT_FUEL):
    """Reduce the overlap once starting on the left and once starting on
    the right, both continued with the leftmost strategy."""
    p = overlap.path
    left_first = BasicReduction(p.sub(0, 0), overlap.left_rule,
                                overlap.left[2])
    right_first = BasicReduction(overlap.right[0], overlap.right_rule,
                                 p.sub(len(p.word), len(p.word)))
    lv, lt = _finish(system, left_first, p, fuel)
    rv, rt = _finish(system, right_first, p, fuel)
    residual = lv - rv
    return OverlapResolution(residual.is_zero(), residual, lv, rv, lt, rt)


def _finish(system, first, p, fuel):
    x = apply_basic(system, first, system.monomial(p))
    value, trace = system.normal_form(x, LEFTMOST, fuel)
    trace.steps.insert(0, first)
    return value, trace


def orient(order, g):
    """Split a nonzero ideal element g at its tip into a monic rule (s, f)."""
    coef, s = order_tip(order, g)
    f = PathPoly.monomial(g.field, s) - g.scale(coef.inverse())
    if len(s.word) < 2:
        raise InputError(
            "relation with a tip shorter than 2 arrows; the classes of "
            "vertices and arrows must stay linearly independent")
    return s, f


@dataclass
class CompletionResult:
    status: str                  # "complete" | "cap-exceeded"
    system: object
    rounds: int
    log: list = dc_field(default_factory=list)


class _Workspace:
    """Mutable rule list during completion; rebuilds immutable systems."""

    def __init__(self, field, quiver):
        self.field = field
        self.quiver = quiver
        self.pairs = []          # list of (tip Path, rhs PathPoly)
        self.log = []

    def system(self):
        return ReductionSystem(self.field, self.quiver, self.pairs)

    def add(self, order, g, degree_cap, fuel):
        """Add the ideal element g as a rule, interreducing; g is assumed
        fully reduced w.r.t. the current rules."""
        pending = [g]
        while pending:
            h = pending.pop(0)
            h = self.system().normal_form(h, LEFTMOST, fuel)[0]
            if h.is_zero():
                continue
            s, f = orient(order, h)
            if not order.orients(s, f):
                raise OrderViolation(
                    "residual cannot be oriented by the supplied order")
            if len(s.word) > degree_cap:
                raise CapExceeded(
                    f"new tip {self.quiver.path_str(s)} exceeds degree cap")
            retired = [(s2, f2) for (s2, f2) in self.pairs
                       if kernels.occurrences(s2.word, s.word)]
            self.pairs = [(s2, f2) for (s2, f2) in self.pairs
                          if not kernels.occurrences(s2.word, s.word)]
            self.pairs.append((s, f))
            self.log.append({"event": "add-rule",
                             "tip": self.quiver.path_str(s)})
            for s2, f2 in retired:
                self.log.append({"event": "retire-rule",
                                 "tip": self.quiver.path_str(s2)})
                pending.append(PathPoly.monomial(self.field, s2) - f2)
            self._renormalize(fuel)

    def _renormalize(self, fuel):
        """Keep every right-hand side irreducible."""
        while True:
            system = self.system()
            for i, (s, f) in enumerate(self.pairs):
                if not system.is_irreducible_poly(f):
                    f2 = system.normal_form(f, LEFTMOST, fuel)[0]
                    self.pairs[i] = (s, f2)
                    self.log.append({"event": "renormalize",
                                     "tip": self.quiver.path_str(s)})
                    break
            else:
                return


def complete(system, order, max_rounds=200, degree_cap=12,
             fuel=DEFAULT_FUEL):
    """Run completion until every overlap resolves.

    Requires every rule of the input system to be oriented by the order.
    Returns a CompletionResult whose status is "cap-exceeded" when the
    degree cap or round budget cut the run short; the partial system is
    still returned.
    """
    for r in system.rules:
        if not order.orients(r.tip, r.rhs):
            raise OrderViolation(
                f"rule with tip {system.quiver.path_str(r.tip)} is not "
                "oriented by the supplied order")
    ws = _Workspace(system.field, system.quiver)
    ws.pairs = [(r.tip, r.rhs) for r in system.rules]
    ws._renormalize(fuel)
    for round_no in range(1, max_rounds + 1):
        current = ws.system()
        conflict = None
        for o in overlaps(current):
            res = resolve_overlap(current, o, fuel)
            if not res.resolvable:
                conflict = (o, res)
                break
        if conflict is None:
            return CompletionResult("complete", current, round_no, ws.log)
        o, res = conflict
        ws.log.append({
            "event": "conflict",
            "overlap": current.quiver.path_str(o.path),
            "residual": [(current.field.to_text(c),
                          current.quiver.path_str(p))
                         for p, c in res.residual.items_sorted()],
        })
        try:
            ws.add(order, res.residual, degree_cap, fuel)
        except CapExceeded:
            ws.log.append({"event": "cap-exceeded"})
            return CompletionResult("cap-exceeded", ws.system(), round_no,
                                    ws.log)
    ws.log.append({"event": "round-budget-exhausted"})
    return CompletionResult("cap-exceeded", ws.system(), max_rounds, ws.log)


def complete_generators(field, quiver, order, generators, **kwargs):
    """Completion starting from raw ideal generators instead of a system."""
    fuel = kwargs.get("fuel", DEFAULT_FUEL)
    degree_cap = kwargs.get("degree_cap", 12)
    ws = _Workspace(field, quiver)
    for g in generators:
        if not g.is_zero():
            ws.add(order, g, degree_cap, fuel)
    return complete(ws.system(), order, **kwargs)


@dataclass
class DiamondReport:
    satisfied: bool
    violations: list
    rhs_irreducible: bool
    termination: str             # "order-certified" | "fuel-attested"

    def __bool__(self):
        return self.satisfied


def check_diamond(system, order=None, fuel=DEFAULT_FUEL, spot_length=6):
    """Bergman's criterion: every right-hand side irreducible and every
    overlap resolvable.  Reduction-finiteness is certified by the order
    when one is supplied and orients every rule; otherwise it is only
    attested by fuel-bounded normal forms of all short paths.
    """
    rhs_ok = all(system.is_irreducible_poly(r.rhs) for r in system.rules)
    violations = []
    for o in overlaps(system):
        res = resolve_overlap(system, o, fuel)
        if not res.resolvable:
            violations.append((o, res.residual))
    termination = "order-certified" if (
        order is not None
        and all(order.orients(r.tip, r.rhs) for r in system.rules)
    ) else "fuel-attested"
    if termination == "fuel-attested":
        _spot_check_termination(system, spot_length, fuel)
    return DiamondReport(rhs_ok and not violations, violations, rhs_ok,
                         termination)


def _spot_check_termination(system, max_length, fuel):
    """Normalize every path up to max_length; FuelExhausted propagates."""
    quiver = system.quiver
    level = [quiver.trivial(v) for v in range(len(quiver.vertices))]
    for _ in range(max_length):
        nxt = []
        for p in level:
            for a in range(len(quiver.arrow_ids)):
                if quiver.arrow_target[a] == p.source:
                    nxt.append(quiver._intern(p.word + (a,)))
        for p in nxt:
            system.normal_form(p, LEFTMOST, fuel)
        level = nxt
