"""Exact coefficient arithmetic: rationals and rational functions over Q.

A Field is determined by its tuple of parameter names; Field() is plain Q
and Field(("a", "b")) is the fraction field Q(a, b).  Elements are stored
as quotients num/den of multivariate polynomials with integer coefficients
in a canonical shape:

  * numerator and denominator have integer coefficients with overall
    content 1 (the gcd of all coefficients of both is 1),
  * a common monomial factor of all terms of both is cancelled,
  * the leading coefficient of the denominator (graded-lex order on the
    parameter exponents) is positive,
  * zero is 0/1.

Equality is decided by cross multiplication, never by evaluation; a full
multivariate gcd is deliberately not performed (the canonical shape above
is enough for soundness and keeps the arithmetic simple).  Because the
canonical shape is not a complete normal form, Scalar is unhashable.

Polynomials are plain dicts mapping exponent tuples to Fraction
coefficients; only this module looks inside them.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DivisionByZero, MixedFields, ParseError

# ---------------------------------------------------------------------------
# raw polynomial helpers (dict: exponent tuple -> Fraction, no zero values)


def _padd(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _pneg(a):
    return {e: -c for e, c in a.items()}


def _pmul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _pscale(a, c):
    if not c:
        return {}
    return {e: x * c for e, x in a.items()}


def _grlex_key(e):
    return (sum(e), e)


def _leading_coeff(a):
    return a[max(a, key=_grlex_key)]


def _int_content_scale(num, den):
    """Scale factor making all coefficients of num and den integers with
    overall content 1."""
    denom_lcm = 1
    for c in list(num.values()) + list(den.values()):
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    g = 0
    for c in list(num.values()) + list(den.values()):
        g = math.gcd(g, abs(c.numerator * (denom_lcm // c.denominator)))
    return Fraction(denom_lcm, g if g else 1)


def _monomial_gcd(a):
    it = iter(a)
    g = list(next(it))
    for e in it:
        for i, x in enumerate(e):
            if x < g[i]:
                g[i] = x
    return tuple(g)


def _shift_down(a, g):
    return {tuple(x - y for x, y in zip(e, g)): c for e, c in a.items()}


class Scalar:
    """Element of a Field, canonicalized on construction."""

    __slots__ = ("field", "num", "den")
    # canonical shape is not a complete normal form, so hashing by value
    # would be inconsistent with equals()
    __hash__ = None

    def __init__(self, field, num, den, _canonical=False):
        self.field = field
        if _canonical:
            self.num = num
            self.den = den
            return
        num = {e: c for e, c in num.items() if c}
        den = {e: c for e, c in den.items() if c}
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            self.num = {}
            self.den = {field._unit_exp: Fraction(1)}
            return
        scale = _int_content_scale(num, den)
        num = _pscale(num, scale)
        den = _pscale(den, scale)
        if field.params:
            g = tuple(
                min(x, y)
                for x, y in zip(_monomial_gcd(num), _monomial_gcd(den))
            )
            if any(g):
                num = _shift_down(num, g)
                den = _shift_down(den, g)
        if _leading_coeff(den) < 0:
            num = _pneg(num)
            den = _pneg(den)
        self.num = num
        self.den = den

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == self.den

    def is_rational(self):
        return (len(self.num) <= 1 and len(self.den) == 1
                and all(not any(e) for e in self.num)
                and not any(next(iter(self.den))))

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("scalar is not a plain rational")
        if not self.num:
            return Fraction(0)
        return Fraction(next(iter(self.num.values())),
                        next(iter(self.den.values())))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.field is not other.field and self.field.params != other.field.params:
            raise MixedFields(
                f"cannot mix Q{self.field.params} with Q{other.field.params}")

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return Scalar(self.field, num, _pmul(self.den, other.den))

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Scalar(self.field, _pneg(self.num), self.den, _canonical=True)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        return Scalar(self.field, _pmul(self.num, other.num),
                      _pmul(self.den, other.den))

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return Scalar(self.field, self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        # cross multiplication on canonical integer-coefficient dicts
        return _pmul(self.num, other.den) == _pmul(other.num, self.den)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    # -- utilities ----------------------------------------------------------

    def fingerprint(self):
        """Hashable token of the canonical representation.  Equal scalars in
        the same shape share fingerprints; distinct fingerprints do not prove
        inequality (use == for that)."""
        return (tuple(sorted(self.num.items())), tuple(sorted(self.den.items())))

    def evaluate(self, values):
        """Evaluate at rational parameter values; for sanity cross-checks."""
        def ev(poly):
            total = Fraction(0)
            for e, c in poly.items():
                t = c
                for name, k in zip(self.field.params, e):
                    t *= Fraction(values[name]) ** k
                total += t
            return total

        den = ev(self.den)
        if den == 0:
            raise DivisionByZero("denominator vanishes at these values")
        return ev(self.num) / den

    def __repr__(self):
        return f"Scalar({self.field.to_text(self)})"


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def inv(a):
    return a.inverse()


def is_zero(a):
    return a.is_zero()


def equals(a, b):
    return a == b


# ---------------------------------------------------------------------------


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*|\*\*|[-+*/^()])")


class Field:
    """The rationals (no parameters) or Q(parameters)."""

    def __init__(self, params=()):
        params = tuple(params)
        if len(set(params)) != len(params):
            raise ParseError(f"duplicate parameter names in {params}")
        self.params = params
        self._unit_exp = (0,) * len(params)
        self.zero = Scalar(self, {}, {self._unit_exp: Fraction(1)},
                           _canonical=True)
        self.one = Scalar(self, {self._unit_exp: Fraction(1)},
                          {self._unit_exp: Fraction(1)}, _canonical=True)

    def __repr__(self):
        return f"Field{self.params}" if self.params else "Field(Q)"

    def rational(self, p, q=1):
        return Scalar(self, {self._unit_exp: Fraction(p, q)},
                      {self._unit_exp: Fraction(1)})

    def from_fraction(self, fr):
        return self.rational(fr.numerator, fr.denominator)

    def param(self, name):
        if name not in self.params:
            raise ParseError(f"unknown parameter {name!r} in Q{self.params}")
        e = tuple(1 if p == name else 0 for p in self.params)
        return Scalar(self, {e: Fraction(1)}, {self._unit_exp: Fraction(1)},
                      _canonical=True)

    # -- text form ----------------------------------------------------------

    def parse(self, text):
        """Parse +,-,*,/,^ expressions over integers and declared parameters."""
        tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ParseError(f"bad scalar literal at {text[pos:]!r}")
                break
            tokens.append(m.group(1))
            pos = m.end()
        tokens.append(None)
        idx = [0]

        def peek():
            return tokens[idx[0]]

        def take():
            t = tokens[idx[0]]
            idx[0] += 1
            return t

        def parse_expr():
            t = peek()
            if t in ("+", "-"):
                take()
                v = parse_term()
                if t == "-":
                    v = -v
            else:
                v = parse_term()
            while peek() in ("+", "-"):
                op = take()
                w = parse_term()
                v = v + w if op == "+" else v - w
            return v

        def parse_term():
            v = parse_power()
            while peek() in ("*", "/"):
                op = take()
                w = parse_power()
                if op == "*":
                    v = v * w
                else:
                    if w.is_zero():
                        raise DivisionByZero(f"division by zero in {text!r}")
                    v = v / w
            return v

        def parse_power():
            v = parse_atom()
            while peek() in ("^", "**"):
                take()
                sign = 1
                if peek() == "-":
                    take()
                    sign = -1
                e = take()
                if e is None or not e.isdigit():
                    raise ParseError(f"bad exponent in {text!r}")
                k = int(e)
                w = self.one
                for _ in range(k):
                    w = w * v
                v = w.inverse() if sign < 0 else w
            return v

        def parse_atom():
            t = take()
            if t == "(":
                v = parse_expr()
                if take() != ")":
                    raise ParseError(f"unbalanced parentheses in {text!r}")
                return v
            if t == "-":
                return -parse_atom()
            if t is None:
                raise ParseError(f"unexpected end of scalar literal {text!r}")
            if t.isdigit():
                return self.rational(int(t))
            if t in self.params:
                return self.param(t)
            raise ParseError(f"unknown symbol {t!r} in scalar literal")

        v = parse_expr()
        if peek() is not None:
            raise ParseError(f"trailing input in scalar literal {text!r}")
        return v

    def _poly_text(self, poly):
        if not poly:
            return "0"
        parts = []
        for e in sorted(poly, key=_grlex_key, reverse=True):
            c = poly[e]
            factors = []
            for name, k in zip(self.params, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            coeff = ""
            if not mono or abs(c) != 1:
                coeff = str(abs(c.numerator)) if c.denominator == 1 else \
                    f"{abs(c.numerator)}/{c.denominator}"
            body = "*".join(x for x in (coeff, mono) if x) or "1"
            parts.append(("-" if c < 0 else "+", body))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_text(self, s):
        num = self._poly_text(s.num)
        if s.den == {self._unit_exp: Fraction(1)}:
            return num
        if len(s.den) == 1 and not any(next(iter(s.den))):
            c = next(iter(s.den.values()))
            if len(s.num) <= 1 and all(not any(e) for e in s.num):
                n = next(iter(s.num.values())) if s.num else Fraction(0)
                fr = Fraction(n, c)
                return str(fr.numerator) if fr.denominator == 1 else \
                    f"{fr.numerator}/{fr.denominator}"
        return f"({num})/({self._poly_text(s.den)})"
