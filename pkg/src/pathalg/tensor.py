"""Elements of the tensor bimodules kQ⊗kA_n⊗kQ and A⊗kA_n⊗A.

A TensorElt maps triples (left, gen, right) of paths to nonzero scalars;
gen runs over degree-n ambiguity paths (trivial paths in degree -1).  The
FREE ambient allows arbitrary composable outer factors; in the REDUCED
ambient the outer factors are irreducible, i.e. the triple is a basis
element of A⊗kA_n⊗A.  project normalizes outer factors with the rewrite
normal form; include views a reduced element freely; project∘include is
the identity on reduced elements.

The Bardzell map (monomial differential before projection) and the
Sköldberg splitting (the homotopy before projection) live here as well,
both as sums over ambiguity divisors of words.
"""

from __future__ import annotations

from .errors import DegreeMismatch
from .quiver import concat

FREE = "free"
REDUCED = "reduced"


class TensorElt:
    __slots__ = ("field", "degree", "ambient", "terms")

    def __init__(self, field, degree, ambient, terms, validate=True):
        self.field = field
        self.degree = degree
        self.ambient = ambient
        self.terms = terms
        if validate:
            for (a, q, c) in terms:
                if a.source != q.target or q.source != c.target:
                    raise DegreeMismatch(
                        f"non-composable tensor key {(a, q, c)!r}")

    @classmethod
    def zero(cls, field, degree, ambient=REDUCED):
        return cls(field, degree, ambient, {}, validate=False)

    @classmethod
    def from_terms(cls, field, degree, ambient, pairs, validate=True):
        terms = {}
        for key, coef in pairs:
            if coef.is_zero():
                continue
            c = terms.get(key)
            c = coef if c is None else c + coef
            if c.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = c
        return cls(field, degree, ambient, terms, validate=validate)

    # -- structure -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def keys_sorted(self):
        return sorted(self.terms, key=lambda k: (k[0].skey, k[1].skey,
                                                 k[2].skey))

    def items_sorted(self):
        return [(k, self.terms[k]) for k in self.keys_sorted()]

    def __eq__(self, other):
        if not isinstance(other, TensorElt):
            return NotImplemented
        if self.degree != other.degree or set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[k] for k, c in self.terms.items())

    __hash__ = None

    # -- linear structure ------------------------------------------------------

    def _merged(self, other, negate):
        if self.degree != other.degree or self.ambient != other.ambient:
            raise DegreeMismatch("tensor sum across degrees or ambients")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            if negate:
                c = -c
            s = terms.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(k, None)
            else:
                terms[k] = s
        return TensorElt(self.field, self.degree, self.ambient, terms,
                         validate=False)

    def __add__(self, other):
        return self._merged(other, False)

    def __sub__(self, other):
        return self._merged(other, True)

    def __neg__(self):
        return TensorElt(self.field, self.degree, self.ambient,
                         {k: -c for k, c in self.terms.items()},
                         validate=False)

    def scale(self, coef):
        if coef.is_zero():
            return TensorElt.zero(self.field, self.degree, self.ambient)
        return TensorElt(self.field, self.degree, self.ambient,
                         {k: c * coef for k, c in self.terms.items()},
                         validate=False)

    def __repr__(self):
        if self.is_zero():
            return f"TensorElt({self.degree}, 0)"
        q = next(iter(self.terms))[0].quiver
        body = " + ".join(
            f"({self.field.to_text(c)})·{q.path_str(a)}⊗{q.path_str(p)}⊗"
            f"{q.path_str(b)}" for (a, p, b), c in self.items_sorted())
        return f"TensorElt({self.degree}, {body})"


def unit_tensor(field, gen, degree, ambient=REDUCED):
    """1⊗gen⊗1 with trivial outer factors at the matching vertices."""
    quiver = gen.quiver
    left = quiver.trivial(gen.target)
    right = quiver.trivial(gen.source)
    return TensorElt(field, degree, ambient, {(left, gen, right): field.one},
                     validate=False)


def include(x):
    """View a reduced element inside the free bimodule (the basis section)."""
    return TensorElt(x.field, x.degree, FREE, dict(x.terms), validate=False)


def project(system, x):
    """Normalize outer factors with the rewrite normal form (π⊗id⊗π)."""
    pairs = []
    for (a, q, c), coef in x.terms.items():
        left = system.beta(a)
        right = system.beta(c)
        for pa, ca in left.terms.items():
            for pc, cc in right.terms.items():
                pairs.append(((pa, q, pc), coef * ca * cc))
    return TensorElt.from_terms(x.field, x.degree, REDUCED, pairs,
                                validate=False)


def project_monomial(system, x):
    """Projection to the associated monomial quotient: outer factors that
    are reducible are killed instead of rewritten."""
    pairs = []
    for (a, q, c), coef in x.terms.items():
        if system.is_irreducible(a) and system.is_irreducible(c):
            pairs.append(((a, q, c), coef))
    return TensorElt.from_terms(x.field, x.degree, REDUCED, pairs,
                                validate=False)


def left_mul(system, poly, x):
    """π(poly)·x inside the reduced ambient (left factors renormalized)."""
    pairs = []
    for (a, q, c), coef in x.terms.items():
        for p, cp in poly.terms.items():
            pa = concat(p, a)
            if pa is None:
                continue
            for b, cb in system.beta(pa).terms.items():
                pairs.append(((b, q, c), coef * cp * cb))
    return TensorElt.from_terms(x.field, x.degree, REDUCED, pairs,
                                validate=False)


def right_mul(system, x, poly):
    """x·π(poly) inside the reduced ambient (right factors renormalized)."""
    pairs = []
    for (a, q, c), coef in x.terms.items():
        for p, cp in poly.terms.items():
            cp_path = concat(c, p)
            if cp_path is None:
                continue
            for b, cb in system.beta(cp_path).terms.items():
                pairs.append(((a, q, b), coef * cp * cb))
    return TensorElt.from_terms(x.field, x.degree, REDUCED, pairs,
                                validate=False)


def left_mul_path(system, path, x):
    return left_mul(system, system.monomial(path), x)


def right_mul_path(system, x, path):
    return right_mul(system, x, system.monomial(path))


# -- structural maps ----------------------------------------------------------


def bardzell_map(field, amb, lower_paths):
    """Value of the monomial complex map on 1⊗amb.path⊗1, in the free
    ambient, one degree down.

    Even degree: outer(right-factorization)⊗rest⊗1 minus
    1⊗rest⊗outer(left-factorization).  Odd degree: the sum of all divisor
    positions of one-lower ambiguity paths.
    """
    n = amb.degree
    if n < 0:
        raise DegreeMismatch("no differential below degree 0")
    p = amb.path
    quiver = p.quiver
    L = len(p.word)
    if n % 2 == 0:
        v_n = amb.right[0]
        u_n = amb.left[-1]
        head = p.sub(len(v_n.word), L)          # v_{n-1}...v_0
        tail = p.sub(0, L - len(u_n.word))      # u_0...u_{n-1}
        pairs = [
            ((v_n, head, quiver.trivial(head.source)), field.one),
            ((quiver.trivial(tail.target), tail, u_n), -field.one),
        ]
        return TensorElt.from_terms(field, n - 1, FREE, pairs, validate=False)
    pairs = []
    for q in lower_paths:
        lq = len(q.word)
        if lq > L:
            continue
        for i in range(L - lq + 1):
            if p.word[i:i + lq] == q.word:
                pairs.append(((p.sub(0, i), q, p.sub(i + lq, L)), field.one))
    return TensorElt.from_terms(field, n - 1, FREE, pairs, validate=False)


def skoldberg_map(field, n, x, chain_paths):
    """The degree-raising splitting on the free bimodule: on a key
    (a, q, b) of degree n-1 it contributes (-1)^(n+1) Σ a·a'⊗p⊗c over all
    factorizations q·b = a'·p·c with p a degree-n ambiguity path.  Left
    kQ-linear, right E-linear."""
    sign = field.one if (n + 1) % 2 == 0 else -field.one
    pairs = []
    for (a, q, b), coef in x.terms.items():
        qb = concat(q, b)
        if qb is None:
            continue
        L = len(qb.word)
        for p in chain_paths:
            lp = len(p.word)
            if lp > L:
                continue
            for i in range(L - lp + 1):
                if qb.word[i:i + lp] == p.word:
                    a2 = concat(a, qb.sub(0, i))
                    if a2 is None:
                        continue
                    pairs.append(((a2, p, qb.sub(i + lp, L)), coef * sign))
    return TensorElt.from_terms(field, n, FREE, pairs, validate=False)
