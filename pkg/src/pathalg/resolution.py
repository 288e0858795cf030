"""Projective bimodule resolutions built from ambiguities.

The Resolution class holds, per degree n, the table of the differential
on generators 1⊗q⊗1 (q an ambiguity path) and a memoized contraction
table.  Degrees -1..2 are seeded with the explicit low-degree formulas
(multiplication, the arrow splitting, the normal-form splitting
difference, and the two-sided overlap trace difference); from degree 3 on
the differential is generated inductively as

    d(1⊗q⊗1) = delta(1⊗q⊗1) - rho(d(delta(1⊗q⊗1)))

where delta is the projected monomial (Bardzell) differential and rho is
the contraction, itself extended recursively from the Sköldberg splitting.
Everything is exact arithmetic; d∘d = 0 is checked as tables are built.
"""

from __future__ import annotations

from .ambiguities import AmbiguityEnumerator
from .completion import check_diamond
from .errors import (ComplexViolation, DiamondUnverified, FuelExhausted,
                     InfiniteChains)
from .order import reaches
from .quiver import PathPoly, concat
from .rewrite import LEFTMOST, BasicReduction, apply_basic
from .tensor import (REDUCED, TensorElt, bardzell_map, include, left_mul,
                     project, right_mul, skoldberg_map)

DEFAULT_LENGTH_CAP = 64
DEFAULT_RHO_FUEL = 200_000


def splitting_map(system, x):
    """Split every path of x at each arrow: Σ π(prefix)⊗arrow⊗π(suffix).

    Returns a reduced degree-0 tensor; trivial paths contribute nothing.
    """
    if isinstance(x, PathPoly):
        items = list(x.terms.items())
        field = x.field
    else:
        field = system.field
        items = [(x, field.one)]
    pairs = []
    for p, coef in items:
        L = len(p.word)
        for k in range(L):
            left = system.beta(p.sub(0, k))
            arrow = p.sub(k, k + 1)
            right = system.beta(p.sub(k + 1, L))
            for pa, ca in left.terms.items():
                for pc, cc in right.terms.items():
                    pairs.append(((pa, arrow, pc), coef * ca * cc))
    return TensorElt.from_terms(field, 0, REDUCED, pairs, validate=False)


def trace_map(system, trace, x):
    """Accumulate π(a)⊗s⊗π(c) along a reduction trace applied to x.

    Each step contributes with the coefficient the rewritten monomial has
    in the running value at that moment; steps whose redex is absent
    contribute nothing.
    """
    if not isinstance(x, PathPoly):
        x = system.monomial(x)
    out = TensorElt.zero(system.field, 1, REDUCED)
    cur = x
    for br in trace:
        asc = br.redex()
        coef = cur.terms.get(asc)
        if coef is not None:
            left = system.beta(br.left)
            right = system.beta(br.right)
            pairs = []
            for pa, ca in left.terms.items():
                for pc, cc in right.terms.items():
                    pairs.append(((pa, br.rule.tip, pc), coef * ca * cc))
            out = out + TensorElt.from_terms(system.field, 1, REDUCED, pairs,
                                             validate=False)
            cur = apply_basic(system, br, cur)
    return out


class Resolution:
    def __init__(self, system, order=None, length_cap=DEFAULT_LENGTH_CAP,
                 fuel=DEFAULT_RHO_FUEL, diamond=None):
        self.system = system
        self.field = system.field
        self.quiver = system.quiver
        self.order = order
        self.length_cap = length_cap
        self.fuel = fuel
        self.enum = AmbiguityEnumerator(system)
        if diamond is None:
            diamond = check_diamond(system, order)
        self.diamond = diamond
        if not diamond.satisfied:
            raise DiamondUnverified(
                "the reduction system fails the diamond check; complete it "
                "first")
        self._d = {}                 # degree -> {gen path: TensorElt}
        self._rho = {}               # degree -> {(gen, right): TensorElt}
        self._rho_busy = set()
        self._rho_steps = 0
        self.built = 1               # d tables exist up to this degree
        self._seed()

    # -- generators ------------------------------------------------------------

    def generators(self, n):
        """Ambiguity paths of degree n within the length cap."""
        items, _ = self.enum.degree(n, self.length_cap)
        return [a.path for a in items]

    def truncated(self, n):
        return self.enum.degree(n, self.length_cap)[1]

    def resolution_length(self, up_to):
        """The first degree with no generators (the complex stops there),
        or None when generators persist through the horizon or the length
        cap hides the answer."""
        for n in range(1, up_to + 2):
            if not self.generators(n):
                if n >= 2 and self.truncated(n):
                    return None
                return n
        return None

    # -- seeded low degrees ------------------------------------------------------

    def _seed(self):
        field = self.field
        d0 = {}
        for amb in self.enum.degree(0)[0]:
            d0[amb.path] = project(self.system,
                                   bardzell_map(field, amb, []))
        self._d[0] = d0
        d1 = {}
        for amb in self.enum.degree(1)[0]:
            s = amb.path
            d1[s] = splitting_map(self.system, s) - \
                splitting_map(self.system, self.system.beta(s))
        self._d[1] = d1

    def _build_d2(self):
        by_tip = {r.tip: r for r in self.system.rules}
        d2 = {}
        for amb in self.enum.degree(2, self.length_cap)[0]:
            p = amb.path
            _, left_trace = self.system.normal_form(p, LEFTMOST, self.fuel)
            v2, v1, v0 = amb.right
            first = BasicReduction(v2, by_tip[concat(v1, v0)],
                                   p.sub(len(p.word), len(p.word)))
            after = apply_basic(self.system, first, self.system.monomial(p))
            _, right_rest = self.system.normal_form(after, LEFTMOST, self.fuel)
            right_rest.steps.insert(0, first)
            d2[p] = trace_map(self.system, right_rest, p) - \
                trace_map(self.system, left_trace, p)
        self._d[2] = d2

    # -- the inductive step --------------------------------------------------------

    def extend(self, up_to):
        """Build differential tables through degree up_to; verifies
        d∘d = 0 on every stored generator."""
        while self.built < up_to:
            n = self.built + 1
            if n == 2:
                self._build_d2()
            else:
                table = {}
                for amb in self.enum.degree(n, self.length_cap)[0]:
                    delta = project(self.system,
                                    self._bardzell(amb))
                    v = self.apply_d(n - 1, delta)
                    table[amb.path] = delta - self.apply_rho(n - 1, v)
                self._d[n] = table
            for q, val in self._d[n].items():
                if not self.apply_d(n - 1, val).is_zero():
                    raise ComplexViolation(
                        f"d{n-1}∘d{n} is nonzero on "
                        f"{self.quiver.path_str(q)}")
            self.built = n
        return self

    def _bardzell(self, amb):
        lower = self.enum.paths(amb.degree - 1, self.length_cap) \
            if amb.degree % 2 == 1 else []
        return bardzell_map(self.field, amb, lower)

    def differential(self, n):
        if n > self.built:
            self.extend(n)
        return self._d[n]

    def delta(self, n, q):
        """The projected monomial differential on 1⊗q⊗1."""
        amb = self.enum.by_path(n, self.length_cap)[q]
        return project(self.system, self._bardzell(amb))

    # -- applying tables ------------------------------------------------------------

    def apply_d(self, n, x):
        """d_n applied to a reduced tensor of degree n; degree -1 lands in
        the algebra itself (a PathPoly of basis paths)."""
        if n == -1:
            out = PathPoly.zero(self.field)
            for (a, q, c), coef in x.terms.items():
                ac = concat(a, c)
                if ac is not None:
                    out = out + self.system.beta(ac).scale(coef)
            return out
        table = self.differential(n)
        out = TensorElt.zero(self.field, n - 1)
        for (a, q, c), coef in x.terms.items():
            v = table[q].scale(coef)
            v = left_mul(self.system, self.system.monomial(a), v)
            v = right_mul(self.system, v, self.system.monomial(c))
            out = out + v
        return out

    def apply_rho(self, m, x):
        """rho_m applied degreewise: left factors multiply through, right
        factors stay (left A-linear, right E-linear)."""
        if m == -1:
            # x is a PathPoly in the algebra; rho maps a to a⊗1
            pairs = []
            for p, coef in x.terms.items():
                e = self.quiver.trivial(p.source)
                pairs.append(((p, e, e), coef))
            return TensorElt.from_terms(self.field, -1, REDUCED, pairs,
                                        validate=False)
        out = TensorElt.zero(self.field, m)
        for (a, q, c), coef in x.terms.items():
            v = self.contraction(m, q, c).scale(coef)
            out = out + left_mul(self.system, self.system.monomial(a), v)
        return out

    def skoldberg_reduced(self, m, x):
        """Projected splitting s_m on a reduced tensor of degree m-1."""
        need = 0
        for (a, q, c), _ in x.terms.items():
            need = max(need, len(q.word) + len(c.word) + len(a.word))
        paths = self.enum.paths(m, max(self.length_cap, need))
        return project(self.system, skoldberg_map(self.field, m, include(x),
                                                  paths))

    # -- the contraction ---------------------------------------------------------------

    def contraction(self, m, q, b):
        """rho_m(1⊗q⊗π(b)) for q a degree-(m-1) generator and b a basis
        path, built by the recursive deformation of the splitting."""
        memo = self._rho.setdefault(m, {})
        key = (q, b)
        val = memo.get(key)
        if val is not None:
            return val
        if (m, key) in self._rho_busy:
            raise ComplexViolation(
                "contraction recursion revisited its own argument; the "
                "system is not reduction-unique")
        self._rho_steps += 1
        if self._rho_steps > self.fuel:
            raise FuelExhausted("contraction recursion exceeded its budget")
        self._rho_busy.add((m, key))
        try:
            e = self.quiver.trivial(q.target)
            x = TensorElt(self.field, m - 1, REDUCED,
                          {(e, q, b): self.field.one}, validate=False)
            s_val = self.skoldberg_reduced(m, x)
            if m == 0:
                down = self.apply_rho(-1, self.apply_d(-1, x))
            else:
                down = self.apply_rho(m - 1, self.apply_d(m - 1, x))
            xi = x - down - self.apply_d(m, s_val)
            val = s_val
            for (bl, q2, br), coef in xi.items_sorted():
                sub = self.contraction(m, q2, br).scale(coef)
                val = val + left_mul(self.system, self.system.monomial(bl),
                                     sub)
        finally:
            self._rho_busy.discard((m, key))
        memo[key] = val
        return val

    # -- verification -------------------------------------------------------------------

    def verify(self, up_to, right_cap=4, strict_prec=False,
               reaches_fuel=10_000):
        """Per-degree report: d∘d = 0, the support condition on d - delta,
        and the contraction identity on 1⊗q⊗π(b) for |b| <= right_cap."""
        self.extend(up_to + 1)
        graded = _length_homogeneous(self.system)
        basis = self.system.irreducible_basis(right_cap)
        report = {"degrees": {}, "termination": self.diamond.termination}
        all_ok = self._contraction_check(-1, basis)
        report["degrees"][-1] = {"contraction_ok": all_ok}
        for n in range(0, up_to + 1):
            entry = {}
            dd = all(self.apply_d(n - 1, v).is_zero()
                     for v in self._d[n].values())
            entry["dd_zero"] = dd
            entry["support_ok"], entry["support_mode"] = \
                self._support_check(n, graded, strict_prec, reaches_fuel)
            entry["contraction_ok"] = self._contraction_check(n, basis)
            all_ok = all_ok and dd and entry["support_ok"] is not False \
                and entry["contraction_ok"]
            report["degrees"][n] = entry
        report["all_ok"] = all_ok
        return report

    def _support_check(self, n, graded, strict_prec, reaches_fuel):
        for q, val in self._d[n].items():
            diff = val - self.delta(n, q)
            for (a, p, c), coef in diff.items_sorted():
                w = concat(concat(a, p), c)
                if graded:
                    if w is None or len(w.word) != len(q.word):
                        return False, "graded-exact"
                elif strict_prec:
                    if w is None or w is q:
                        return False, "prec-oracle"
                    hit = reaches(self.system, q, (coef, w), reaches_fuel)
                    if not hit:
                        hit = reaches(self.system, q, (-coef, w),
                                      reaches_fuel)
                    if hit.status == "fuel":
                        return None, "prec-oracle-fuel-exhausted"
                    if not hit:
                        return False, "prec-oracle"
                else:
                    return None, "skipped-not-graded"
        return True, ("graded-exact" if graded else
                      ("prec-oracle" if strict_prec else "trivial"))

    def _contraction_check(self, n, basis):
        """d_{n+1}∘rho_{n+1} + rho_n∘d_n = id on 1⊗q⊗π(b) in degree n."""
        if n >= 0:
            gens = self.generators(n)
        else:
            gens = [self.quiver.trivial(v)
                    for v in range(len(self.quiver.vertices))]
        for q in gens:
            for b in basis:
                if b.target != q.source:
                    continue
                e = self.quiver.trivial(q.target)
                x = TensorElt(self.field, n, REDUCED,
                              {(e, q, b): self.field.one}, validate=False)
                up = self.apply_d(n + 1, self.apply_rho(n + 1, x))
                down = self.apply_rho(n, self.apply_d(n, x))
                if up + down != x:
                    return False
        return True

    # -- minimality and Koszul flags ---------------------------------------------------------

    def minimality(self, up_to):
        """True at degree n when every stored differential value lies in
        the radical (no triple with two trivial outer factors)."""
        self.extend(up_to)
        out = {}
        for n in range(0, up_to + 1):
            ok = True
            for val in self._d[n].values():
                for (a, p, c) in val.terms:
                    if a.is_trivial and c.is_trivial:
                        ok = False
            out[n] = ok
        return out

    def chain_growth(self, up_to):
        """Strictly increasing generator lengths degree by degree."""
        for n in range(1, up_to + 1):
            cur = self.generators(n)
            nxt = self.generators(n + 1)
            if cur and nxt:
                if max(len(p.word) for p in cur) >= \
                        min(len(p.word) for p in nxt):
                    return False
        return True

    # -- dualization ------------------------------------------------------------------------

    def dual_tables(self, up_to):
        """Transpose tables of the complex Hom(-, A^e): for each generator
        P of degree n-1, d*_n(1⊗P*⊗1) = Σ over degree-n generators q and
        terms λ a⊗P⊗c of d_n(1⊗q⊗1) of λ c⊗q*⊗a.

        Requires the ambiguity sets through degree up_to to be complete."""
        self.extend(up_to)
        for n in range(-1, up_to + 1):
            if self.truncated(n) if n >= 2 else False:
                raise InfiniteChains(
                    f"ambiguities of degree {n} exceed the length cap")
        out = {}
        for n in range(0, up_to + 1):
            lower = self.generators(n - 1)
            table = {p: [] for p in lower}
            for q, val in self._d[n].items():
                for (a, p, c), coef in val.items_sorted():
                    table[p].append(((c, q, a), coef))
            out[n] = {
                p: TensorElt.from_terms(self.field, n, REDUCED, pairs,
                                        validate=False)
                for p, pairs in table.items()
            }
        return out


def _length_homogeneous(system):
    for r in system.rules:
        L = len(r.tip.word)
        for p in r.rhs.terms:
            if len(p.word) != L:
                return False
    return True


def koszul_report(system, up_to=6, length_cap=DEFAULT_LENGTH_CAP):
    """Quadratic and N-homogeneous shape flags plus strict chain growth."""
    tips = [len(r.tip.word) for r in system.rules]
    rhs_hom = _length_homogeneous(system)
    quadratic = bool(tips) and all(L == 2 for L in tips) and rhs_hom
    n_hom = None
    if tips and len(set(tips)) == 1 and rhs_hom and tips[0] >= 2:
        n_hom = tips[0]
    enum = AmbiguityEnumerator(system)
    growth = True
    for n in range(1, up_to + 1):
        cur = [a.path for a in enum.degree(n, length_cap)[0]]
        nxt = [a.path for a in enum.degree(n + 1, length_cap)[0]]
        if cur and nxt and max(len(p.word) for p in cur) >= \
                min(len(p.word) for p in nxt):
            growth = False
    return {
        "quadratic": quadratic,
        "koszul": quadratic,
        "homogeneous_length": n_hom,
        "chain_growth": growth,
        "n_koszul": n_hom if (n_hom is not None and growth) else None,
    }
