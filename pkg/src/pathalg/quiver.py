"""Quivers, interned paths, and elements of the path algebra kQ.

Paths store their arrow word in written order: word[0] is the leftmost
arrow of the written path and word[-1] the rightmost, which is the arrow
applied first under right-to-left composition.  concat(a, b) is the
written juxtaposition a·b, nonzero exactly when source(a) == target(b).

All Path objects are interned per quiver, so equality and hashing are
identity-based and O(1).
"""

from __future__ import annotations

from .errors import InputError, ParallelismError, ParseError


class Path:
    __slots__ = ("quiver", "word", "source", "target", "uid")

    def __init__(self, quiver, word, source, target, uid):
        self.quiver = quiver
        self.word = word
        self.source = source
        self.target = target
        self.uid = uid

    def __len__(self):
        return len(self.word)

    @property
    def is_trivial(self):
        return not self.word

    @property
    def skey(self):
        """Canonical sort key, independent of interning order."""
        return (len(self.word), self.word, self.source)

    def vertex_at(self, i):
        """Vertex sitting after i arrows from the left end of the word."""
        if i < len(self.word):
            return self.quiver.arrow_target[self.word[i]]
        return self.source

    def sub(self, i, j):
        """Subpath spanned by word[i:j]; a trivial path when i == j."""
        if i == j:
            return self.quiver.trivial(self.vertex_at(i))
        return self.quiver._intern(self.word[i:j])

    def __repr__(self):
        return f"Path({self.quiver.path_str(self)})"


class Quiver:
    def __init__(self, vertices, arrows):
        """vertices: iterable of names; arrows: iterable of (id, src, tgt)."""
        self.vertices = tuple(vertices)
        if not self.vertices:
            raise InputError("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex names")
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        arrows = list(arrows)
        self.arrow_ids = tuple(a[0] for a in arrows)
        if len(set(self.arrow_ids)) != len(self.arrow_ids):
            raise InputError("duplicate arrow names")
        if set(self.arrow_ids) & set(self.vertices):
            raise InputError("arrow and vertex names must be disjoint")
        for name, src, tgt in arrows:
            if src not in self.vertex_index or tgt not in self.vertex_index:
                raise InputError(f"arrow {name!r} uses an undeclared vertex")
        self.arrow_index = {a: i for i, a in enumerate(self.arrow_ids)}
        self.arrow_source = tuple(self.vertex_index[a[1]] for a in arrows)
        self.arrow_target = tuple(self.vertex_index[a[2]] for a in arrows)
        self._interned = {}
        self._uid = 0
        self._trivial = tuple(
            self._new((), i, i, key=("v", i)) for i in range(len(self.vertices)))
        self._arrows = tuple(
            self._intern((i,)) for i in range(len(self.arrow_ids)))

    # -- path construction ---------------------------------------------------

    def _new(self, word, source, target, key):
        p = Path(self, word, source, target, self._uid)
        self._uid += 1
        self._interned[key] = p
        return p

    def _intern(self, word):
        """Intern a nonempty arrow-index word, assumed composable."""
        p = self._interned.get(word)
        if p is None:
            p = self._new(word, self.arrow_source[word[-1]],
                          self.arrow_target[word[0]], key=word)
        return p

    def trivial(self, v):
        if isinstance(v, str):
            v = self.vertex_index[v]
        return self._trivial[v]

    def arrow(self, name):
        return self._arrows[self.arrow_index[name]]

    def path(self, arrow_names):
        """Build a path from arrow names in written (left-to-right) order."""
        word = tuple(self.arrow_index[a] for a in arrow_names)
        for i in range(len(word) - 1):
            if self.arrow_source[word[i]] != self.arrow_target[word[i + 1]]:
                raise InputError(
                    f"arrows {arrow_names[i]!r}·{arrow_names[i+1]!r} do not compose")
        if not word:
            raise InputError("use trivial(v) for length-0 paths")
        return self._intern(word)

    # -- text form -----------------------------------------------------------

    def parse_path(self, text):
        """Parse 'e:<vertex>' or concatenated arrow ids (greedy longest match)."""
        if text.startswith("e:"):
            v = text[2:]
            if v not in self.vertex_index:
                raise ParseError(f"unknown vertex {v!r}")
            return self.trivial(v)
        names = []
        pos = 0
        by_len = sorted(self.arrow_ids, key=len, reverse=True)
        while pos < len(text):
            for a in by_len:
                if text.startswith(a, pos):
                    names.append(a)
                    pos += len(a)
                    break
            else:
                raise ParseError(f"cannot read arrow id at {text[pos:]!r}")
        if not names:
            raise ParseError("empty path literal")
        return self.path(names)

    def path_str(self, p):
        if p.is_trivial:
            return f"e:{self.vertices[p.source]}"
        return "".join(self.arrow_ids[i] for i in p.word)


def concat(a, b):
    """Written juxtaposition a·b; None encodes the zero of kQ."""
    if a.source != b.target:
        return None
    if not a.word:
        return b
    if not b.word:
        return a
    return a.quiver._intern(a.word + b.word)


def divisors(p, q):
    """All (a, c) with q = a·p·c, scanning occurrences left to right."""
    out = []
    lp, lq = len(p.word), len(q.word)
    if p.is_trivial:
        for i in range(lq + 1):
            if q.vertex_at(i) == p.source:
                out.append((q.sub(0, i), q.sub(i, lq)))
        return out
    for i in range(lq - lp + 1):
        if q.word[i:i + lp] == p.word:
            out.append((q.sub(0, i), q.sub(i + lp, lq)))
    return out


class PathPoly:
    """Finite linear combination of pairwise parallel paths.

    The zero element has source = target = None and an empty term dict.
    """

    __slots__ = ("field", "source", "target", "terms")

    def __init__(self, field, source, target, terms):
        self.field = field
        self.source = source
        self.target = target
        self.terms = terms

    @classmethod
    def zero(cls, field):
        return cls(field, None, None, {})

    @classmethod
    def monomial(cls, field, path, coef=None):
        if path is None:
            return cls.zero(field)
        if coef is None:
            coef = field.one
        if coef.is_zero():
            return cls.zero(field)
        return cls(field, path.source, path.target, {path: coef})

    @classmethod
    def from_terms(cls, field, pairs):
        terms = {}
        source = target = None
        for path, coef in pairs:
            if path is None or coef.is_zero():
                continue
            if source is None:
                source, target = path.source, path.target
            elif (path.source, path.target) != (source, target):
                raise ParallelismError(
                    "all paths of a PathPoly must be parallel")
            c = terms.get(path)
            c = coef if c is None else c + coef
            if c.is_zero():
                terms.pop(path, None)
            else:
                terms[path] = c
        if not terms:
            return cls.zero(field)
        return cls(field, source, target, terms)

    # -- structure -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def support(self):
        return sorted(self.terms, key=lambda p: p.skey)

    def items_sorted(self):
        return [(p, self.terms[p]) for p in self.support()]

    def coeff(self, path):
        return self.terms.get(path, self.field.zero)

    def __eq__(self, other):
        if not isinstance(other, PathPoly):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[p] for p, c in self.terms.items())

    __hash__ = None

    # -- arithmetic ----------------------------------------------------------

    def _merged(self, other, negate):
        if other.is_zero():
            return self
        if self.is_zero():
            return -other if negate else other
        if (self.source, self.target) != (other.source, other.target):
            raise ParallelismError("sum of non-parallel PathPolys")
        terms = dict(self.terms)
        for p, c in other.terms.items():
            if negate:
                c = -c
            s = terms.get(p)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(p, None)
            else:
                terms[p] = s
        if not terms:
            return PathPoly.zero(self.field)
        return PathPoly(self.field, self.source, self.target, terms)

    def __add__(self, other):
        return self._merged(other, False)

    def __sub__(self, other):
        return self._merged(other, True)

    def __neg__(self):
        return PathPoly(self.field, self.source, self.target,
                        {p: -c for p, c in self.terms.items()})

    def scale(self, coef):
        if coef.is_zero() or self.is_zero():
            return PathPoly.zero(self.field)
        return PathPoly(self.field, self.source, self.target,
                        {p: c * coef for p, c in self.terms.items()})

    def __mul__(self, other):
        """Bilinear extension of concat; non-composable products vanish."""
        if not isinstance(other, PathPoly):
            return NotImplemented
        out = []
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                pq = concat(p, q)
                if pq is not None:
                    out.append((pq, c * d))
        return PathPoly.from_terms(self.field, out)

    def __repr__(self):
        if self.is_zero():
            return "PathPoly(0)"
        body = " + ".join(
            f"({self.field.to_text(c)})·{p.quiver.path_str(p)}"
            for p, c in self.items_sorted())
        return f"PathPoly({body})"


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def poly_scale(a, c):
    return a.scale(c)
