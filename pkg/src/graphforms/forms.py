"""Sparse exact-rational tensors and alternating forms on a clique complex."""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import CapacityError, DomainError, ParseError
from .permutations import sort_with_sign

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def parse_rational(text):
    """Parse 'p' or 'p/q' into a Fraction; anything else is a ParseError."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ParseError(f"not a rational literal: {text!r}")
    s = text.strip()
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den)) if den else Fraction(int(num))


def format_rational(q):
    """Canonical 'p' or 'p/q' string of a Fraction (reduced, denominator > 0)."""
    return str(Fraction(q))


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"coefficients must be exact rationals, got {type(value).__name__}")


class Form:
    """Alternating degree-k tensor, stored sparsely on canonical cliques.

    Coefficients are Fractions keyed by strictly ascending (k+1)-cliques of
    one fixed complex; zero coefficients are never stored. Evaluation at an
    arbitrary vertex tuple applies the sign of the sorting permutation;
    tuples with repeats, or whose set is not a clique, evaluate to zero.

    The zero form of any degree exists on any complex: operations whose
    input is zero return zero without needing deeper clique levels, since
    no nonzero value could be truncated.
    """

    __slots__ = ("_complex", "_degree", "_coeffs")

    def __init__(self, complex, degree, coeffs=None):
        if not isinstance(degree, int) or degree < 0:
            raise DomainError(f"form degree must be a non-negative integer, got {degree!r}")
        self._complex = complex
        self._degree = degree
        clean = {}
        for key, raw in (coeffs or {}).items():
            value = _as_fraction(raw)
            if not value:
                continue
            key = tuple(key)
            if len(key) != degree + 1:
                raise DomainError(f"key {key!r} has wrong arity for a degree-{degree} form")
            if complex.index_of(key) is None:
                raise DomainError(f"key {key!r} is not a clique of the complex")
            clean[key] = value
        self._coeffs = clean

    @classmethod
    def zero(cls, complex, degree):
        return cls(complex, degree)

    @classmethod
    def unit(cls, complex, clique):
        """Basis form: coefficient 1 on one canonical clique."""
        c = tuple(clique)
        return cls(complex, len(c) - 1, {c: 1})

    @property
    def complex(self):
        return self._complex

    @property
    def degree(self):
        return self._degree

    def evaluate(self, vertices):
        t = tuple(vertices)
        if len(t) != self._degree + 1:
            raise DomainError(
                f"degree-{self._degree} form takes {self._degree + 1} vertices, got {len(t)}"
            )
        n = self._complex.graph.n
        for v in t:
            if not isinstance(v, int) or not 0 <= v < n:
                raise DomainError(f"vertex id {v!r} out of range")
        key, sign = sort_with_sign(t)
        if key is None:
            return Fraction(0)
        value = self._coeffs.get(key)
        if value is None:
            return Fraction(0)
        return value if sign > 0 else -value

    def __call__(self, *vertices):
        return self.evaluate(vertices)

    def coeff(self, clique):
        """Stored coefficient at a canonical clique (0 when absent)."""
        key = tuple(clique)
        if any(key[i] >= key[i + 1] for i in range(len(key) - 1)):
            raise DomainError(f"coeff() expects a strictly ascending clique, got {key!r}")
        return self._coeffs.get(key, Fraction(0))

    def entries(self):
        """Coefficient items sorted in canonical (lexicographic) clique order."""
        return sorted(self._coeffs.items())

    def support(self):
        return sorted(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def _compatible(self, other):
        if not isinstance(other, Form):
            raise DomainError(f"expected a Form, got {type(other).__name__}")
        if other._complex is not self._complex:
            raise DomainError("forms are bound to different complexes")
        if other._degree != self._degree:
            raise DomainError(
                f"degree mismatch: {self._degree} vs {other._degree}"
            )

    def __add__(self, other):
        self._compatible(other)
        merged = dict(self._coeffs)
        for key, value in other._coeffs.items():
            total = merged.get(key, 0) + value
            if total:
                merged[key] = total
            else:
                merged.pop(key, None)
        return Form(self._complex, self._degree, merged)

    def __neg__(self):
        return Form(self._complex, self._degree, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Form):
            raise DomainError("use wedge() for products of forms")
        q = _as_fraction(scalar)
        if not q:
            return Form(self._complex, self._degree)
        return Form(self._complex, self._degree, {k: v * q for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self._complex is other._complex
            and self._degree == other._degree
            and self._coeffs == other._coeffs
        )

    __hash__ = None

    def __repr__(self):
        return f"<Form degree={self._degree} entries={len(self._coeffs)}>"

    # -- JSON format --------------------------------------------------------

    def to_json(self):
        """Canonical dict: entries sorted by clique, values as 'p/q' strings."""
        label = self._complex.graph.label
        return {
            "degree": self._degree,
            "entries": [
                {"clique": [label(v) for v in key], "value": format_rational(value)}
                for key, value in self.entries()
            ],
        }

    @classmethod
    def from_json(cls, complex, obj):
        """Parse the form format; unsorted cliques are accepted and the
        sorting sign is applied to the value."""
        if not isinstance(obj, dict):
            raise ParseError("form JSON must be an object")
        degree = obj.get("degree")
        if not isinstance(degree, int) or degree < 0:
            raise ParseError(f"form JSON needs a non-negative integer 'degree', got {degree!r}")
        entries = obj.get("entries", [])
        if not isinstance(entries, list):
            raise ParseError("form JSON 'entries' must be a list")
        graph = complex.graph
        coeffs = {}
        for ent in entries:
            if not isinstance(ent, dict) or "clique" not in ent or "value" not in ent:
                raise ParseError(f"form entry must have 'clique' and 'value', got {ent!r}")
            labs = ent["clique"]
            if not isinstance(labs, list):
                raise ParseError(f"entry clique must be a list of labels, got {labs!r}")
            try:
                ids = tuple(graph.id_of(lab) for lab in labs)
            except DomainError as e:
                raise ParseError(str(e)) from None
            key, sign = sort_with_sign(ids)
            if key is None:
                raise ParseError(f"repeated vertex in clique {labs!r}")
            if key in coeffs:
                raise ParseError(f"duplicate entry for clique {labs!r}")
            coeffs[key] = parse_rational(ent["value"]) * sign
        try:
            return cls(complex, degree, coeffs)
        except CapacityError:
            raise
        except DomainError as e:
            raise ParseError(str(e)) from None


class Tensor:
    """General (not necessarily alternating) degree-k tensor.

    Keys are ordered tuples of distinct vertices whose underlying set is a
    clique; every ordering is an independent entry. Evaluation anywhere
    else, including tuples with repeats, gives zero.
    """

    __slots__ = ("_complex", "_degree", "_coeffs")

    def __init__(self, complex, degree, coeffs=None):
        if not isinstance(degree, int) or degree < 0:
            raise DomainError(f"tensor degree must be a non-negative integer, got {degree!r}")
        self._complex = complex
        self._degree = degree
        clean = {}
        for key, raw in (coeffs or {}).items():
            value = _as_fraction(raw)
            if not value:
                continue
            key = tuple(key)
            if len(key) != degree + 1:
                raise DomainError(f"key {key!r} has wrong arity for a degree-{degree} tensor")
            sorted_key, sign = sort_with_sign(key)
            if sorted_key is None:
                raise DomainError(f"tensor key {key!r} has repeated vertices")
            if complex.index_of(sorted_key) is None:
                raise DomainError(f"key {key!r} does not lie on a clique of the complex")
            clean[key] = value
        self._coeffs = clean

    @property
    def complex(self):
        return self._complex

    @property
    def degree(self):
        return self._degree

    def evaluate(self, vertices):
        t = tuple(vertices)
        if len(t) != self._degree + 1:
            raise DomainError(
                f"degree-{self._degree} tensor takes {self._degree + 1} vertices, got {len(t)}"
            )
        n = self._complex.graph.n
        for v in t:
            if not isinstance(v, int) or not 0 <= v < n:
                raise DomainError(f"vertex id {v!r} out of range")
        return self._coeffs.get(t, Fraction(0))

    def __call__(self, *vertices):
        return self.evaluate(vertices)

    def entries(self):
        return sorted(self._coeffs.items())

    def is_zero(self):
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (
            self._complex is other._complex
            and self._degree == other._degree
            and self._coeffs == other._coeffs
        )

    __hash__ = None

    def __repr__(self):
        return f"<Tensor degree={self._degree} entries={len(self._coeffs)}>"


def chi(complex, v):
    """Characteristic 0-form of a vertex: 1 at v, 0 elsewhere."""
    complex.graph._check_vertex(v)
    return Form(complex, 0, {(v,): 1})


def constant(complex, value=1):
    """0-form taking the same value at every vertex."""
    q = _as_fraction(value)
    if not q:
        return Form(complex, 0)
    return Form(complex, 0, {(v,): q for v in range(complex.graph.n)})


def random_form(complex, degree, rng, density=0.7, magnitude=9):
    """Seeded random form: each clique of the level independently gets a
    small random rational coefficient (or none)."""
    coeffs = {}
    for c in complex.level(degree + 1):
        if rng.random() < density:
            num = rng.randint(-magnitude, magnitude)
            den = rng.randint(1, magnitude)
            if num:
                coeffs[c] = Fraction(num, den)
    return Form(complex, degree, coeffs)
