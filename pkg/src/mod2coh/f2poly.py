"""Graded-commutative quotient polynomial algebras over GF(2).

A ring is presented by generators ``g`` of positive degree, each either
truncated (``g^t = 0``) or free up to a global degree cap.  Elements are
stored sparsely: a frozenset of exponent tuples, one tuple entry per
generator in presentation order.  Addition is symmetric difference.

Canonical text form (used by the DSL and every report)::

    0
    1
    1 + x^2 + x^1*y^3

Every factor carries its exponent, even ``^1``.  The parser also accepts
bare names (``x``) and repeated factors (``x*x``).
"""

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidPresentation, ParseError, PresentationMismatch, RequiresHomogeneous

__all__ = [
    "Generator",
    "RingPresentation",
    "GradedElement",
    "normalize",
    "add",
    "mul",
    "degree_part",
    "tensor",
    "cross",
    "lift_left",
    "lift_right",
    "parse_element",
    "point_ring",
]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*'*\Z")
_FACTOR_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*'*)(?:\^(\d+))?\Z")


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    truncation: int | None = None  # None means polynomial (bounded by the ring's cap)

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise InvalidPresentation(f"bad generator name {self.name!r}")
        if self.degree < 1:
            raise InvalidPresentation(f"generator {self.name}: degree must be >= 1")
        if self.truncation is not None and self.truncation < 2:
            raise InvalidPresentation(f"generator {self.name}: truncation must be >= 2")


class RingPresentation:
    """Presentation of a truncated graded polynomial ring with Steenrod data.

    ``sq_rules`` maps generator names to the total square ``Sq(g)``, given as
    canonical text, a :class:`GradedElement`, or an iterable of exponent
    tuples.  Degree-1 generators default to ``g + g^2``; higher generators
    must be given a rule.  ``cap`` bounds total degree and is required as
    soon as one generator is untruncated.
    """

    __slots__ = (
        "generators",
        "caps",
        "_names",
        "_index",
        "_degrees",
        "_bounds",
        "_sq",
        "_key",
        "_hash",
        "_basis",
    )

    def __init__(self, generators, sq_rules=None, cap=None, *, _caps=None):
        self.generators = tuple(generators)
        self._names = tuple(g.name for g in self.generators)
        if len(set(self._names)) != len(self._names):
            raise InvalidPresentation(f"duplicate generator names in {self._names}")
        self._index = {n: i for i, n in enumerate(self._names)}
        self._degrees = tuple(g.degree for g in self.generators)
        n = len(self.generators)

        if _caps is not None:
            self.caps = tuple(_caps)
        elif any(g.truncation is None for g in self.generators):
            if cap is None or cap < 0:
                raise InvalidPresentation("an untruncated generator requires a degree cap")
            self.caps = ((0, n, cap),)
        else:
            self.caps = ()

        bounds = []
        for i, g in enumerate(self.generators):
            if g.truncation is not None:
                bounds.append(g.truncation - 1)
                continue
            block = [c for (lo, hi, c) in self.caps if lo <= i < hi]
            if not block:
                raise InvalidPresentation(f"generator {g.name} is untruncated but uncapped")
            bounds.append(block[0] // g.degree)
        self._bounds = tuple(bounds)
        self._basis = None

        sq_rules = dict(sq_rules or {})
        unknown = set(sq_rules) - set(self._names)
        if unknown:
            raise PresentationMismatch(f"sq-rule for unknown generator(s) {sorted(unknown)}")
        self._sq = ()
        rules = []
        for i, g in enumerate(self.generators):
            rule = sq_rules.get(g.name)
            if rule is None:
                if g.degree != 1:
                    raise InvalidPresentation(f"generator {g.name} of degree {g.degree} needs an sq-rule")
                e = [0] * n
                e[i] = 1
                e2 = list(e)
                e2[i] = 2
                rule = [tuple(e), tuple(e2)]
            rules.append(self._coerce_terms(rule))
        self._sq = tuple(rules)
        self._key = (self.generators, self.caps, self._sq)
        self._hash = hash(self._key)
        self._validate_sq()

    # -- identity -------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        gens = " ".join(
            f"{g.name}:{g.degree}:{'inf' if g.truncation is None else g.truncation}"
            for g in self.generators
        )
        return f"RingPresentation({gens}; caps={self.caps})"

    # -- monomials ------------------------------------------------------

    @property
    def names(self):
        return self._names

    @property
    def ngens(self):
        return len(self.generators)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise PresentationMismatch(f"unknown generator {name!r}; ring has {list(self._names)}") from None

    def mono_degree(self, mono):
        return sum(e * d for e, d in zip(mono, self._degrees))

    def sort_key(self, mono):
        # graded lex: degree, then larger exponents of earlier generators first
        return (self.mono_degree(mono), tuple(-e for e in mono))

    def reduce_monomial(self, mono):
        """Return ``mono`` if it is a nonzero normal-form monomial, else None."""
        for e, b in zip(mono, self._bounds):
            if e > b:
                return None
        for lo, hi, c in self.caps:
            if sum(mono[i] * self._degrees[i] for i in range(lo, hi)) > c:
                return None
        return mono

    def mono_mul(self, m1, m2):
        return self.reduce_monomial(tuple(a + b for a, b in zip(m1, m2)))

    @property
    def unit_monomial(self):
        return (0,) * len(self.generators)

    def basis(self, max_degree=None):
        """Normal-form monomials in canonical order, optionally up to ``max_degree``."""
        if self._basis is None:
            monos = []
            for mono in itertools.product(*(range(b + 1) for b in self._bounds)):
                if self.reduce_monomial(mono) is not None:
                    monos.append(mono)
            monos.sort(key=self.sort_key)
            self._basis = tuple(monos)
        if max_degree is None:
            return self._basis
        return tuple(m for m in self._basis if self.mono_degree(m) <= max_degree)

    def basis_in_degree(self, d):
        return tuple(m for m in self.basis() if self.mono_degree(m) == d)

    def basis_elements(self, max_degree=None):
        return [GradedElement(self, frozenset([m])) for m in self.basis(max_degree)]

    @property
    def dimension(self):
        return len(self.basis())

    @property
    def top_degree(self):
        return max(self.mono_degree(m) for m in self.basis())

    # -- elements -------------------------------------------------------

    def zero(self):
        return GradedElement(self, frozenset())

    def one(self):
        return GradedElement(self, frozenset([self.unit_monomial]))

    def gen(self, name):
        e = [0] * len(self.generators)
        e[self.index(name)] = 1
        return normalize([tuple(e)], self)

    def element(self, value):
        """Coerce text, an element of this ring, or exponent tuples into an element."""
        if isinstance(value, GradedElement):
            if value.ring != self:
                raise PresentationMismatch("element belongs to a different ring")
            return value
        if isinstance(value, str):
            return parse_element(value, self)
        if value == 0:
            return self.zero()
        if value == 1:
            return self.one()
        return normalize(value, self)

    def sq_rule(self, name):
        return GradedElement(self, self._sq[self.index(name)])

    def _coerce_terms(self, rule):
        if isinstance(rule, GradedElement):
            if rule.ring._key[:2] != (self.generators, self.caps):
                raise PresentationMismatch("sq-rule lives in a different ring")
            return rule.terms
        if isinstance(rule, str):
            return _parse_terms(rule, self)
        return _normalize_terms(rule, self)

    def _validate_sq(self):
        for i, g in enumerate(self.generators):
            rule = self.sq_rule(g.name)
            e = [0] * len(self.generators)
            e[i] = 1
            me = self.reduce_monomial(tuple(e))
            for m in rule.terms:
                d = self.mono_degree(m)
                if d < g.degree:
                    raise InvalidPresentation(f"Sq({g.name}) has a term below degree {g.degree}")
                if d > 2 * g.degree:
                    raise InvalidPresentation(f"Sq({g.name}) violates instability (term of degree {d})")
            bottom = rule.degree_part(g.degree).terms
            if bottom != (frozenset([me]) if me is not None else frozenset()):
                raise InvalidPresentation(f"Sq^0({g.name}) must equal {g.name}")
            if g.truncation is not None and not (rule ** g.truncation).is_zero():
                raise InvalidPresentation(
                    f"Sq({g.name})^{g.truncation} must vanish for the rule to respect {g.name}^{g.truncation} = 0"
                )


class GradedElement:
    """A mod-2 class: a set of normal-form monomials in ``ring``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _check(self, other):
        if not isinstance(other, GradedElement):
            if other == 0 or other == 1:
                return self.ring.element(other)
            raise TypeError(f"cannot combine GradedElement with {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise PresentationMismatch("operands live in different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        return GradedElement(self.ring, self.terms ^ other.terms)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        other = self._check(other)
        return GradedElement(self.ring, _mul_terms(self.ring, self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, GradedElement):
            return self.terms == other.terms and self.ring == other.ring
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms, key=self.ring.sort_key)

    def degrees(self):
        return sorted({self.ring.mono_degree(m) for m in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        """Degree of a homogeneous nonzero element; None for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise RequiresHomogeneous(f"{self} is not homogeneous")
        return degs[0]

    def degree_part(self, d):
        return GradedElement(self.ring, frozenset(m for m in self.terms if self.ring.mono_degree(m) == d))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(_format_monomial(m, self.ring) for m in self.sorted_terms())

    def __repr__(self):
        return f"GradedElement({str(self)!r})"


# -- module-level operations -----------------------------------------------


def _normalize_terms(raw, ring):
    counts = Counter()
    n = ring.ngens
    for mono in raw:
        if isinstance(mono, dict):
            e = [0] * n
            for name, k in mono.items():
                e[ring.index(name)] += k
            mono = tuple(e)
        else:
            mono = tuple(mono)
            if len(mono) != n:
                raise PresentationMismatch(f"monomial {mono} has {len(mono)} exponents, ring has {n} generators")
        if any(k < 0 for k in mono):
            raise ValueError(f"negative exponent in {mono}")
        counts[mono] += 1
    return frozenset(m for m, c in counts.items() if c % 2 and ring.reduce_monomial(m) is not None)


def normalize(raw, ring):
    """Build an element from a multiset of monomials (exponent tuples or name->exponent dicts)."""
    return GradedElement(ring, _normalize_terms(raw, ring))


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def degree_part(a, d):
    return a.degree_part(d)


def _mul_terms(ring, A, B):
    if not A or not B:
        return frozenset()
    out = set()
    mono_mul = ring.mono_mul
    for m1 in A:
        for m2 in B:
            m = mono_mul(m1, m2)
            if m is not None:
                if m in out:
                    out.remove(m)
                else:
                    out.add(m)
    return frozenset(out)


def _format_monomial(mono, ring):
    factors = [f"{ring.names[i]}^{e}" for i, e in enumerate(mono) if e]
    return "*".join(factors) if factors else "1"


def _parse_terms(text, ring):
    text = text.strip()
    if not text:
        raise ParseError("empty element literal")
    raw = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if chunk == "0":
            continue
        if chunk == "1":
            raw.append(ring.unit_monomial)
            continue
        if not chunk:
            raise ParseError(f"empty term in {text!r}")
        e = [0] * ring.ngens
        for factor in chunk.split("*"):
            factor = factor.strip()
            if factor == "1":
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            e[ring.index(m.group(1))] += int(m.group(2) or 1)
        raw.append(tuple(e))
    return _normalize_terms(raw, ring)


def parse_element(text, ring):
    """Parse canonical (or loosely written) element text in ``ring``."""
    return GradedElement(ring, _parse_terms(text, ring))


def point_ring():
    """H^*(point) = GF(2)."""
    return RingPresentation(())


@lru_cache(maxsize=None)
def tensor(r1, r2):
    """Künneth product ring; clashing names of the second factor get a "'" suffix."""
    left = set(r1.names)
    right = set(r2.names)
    assigned = set()
    gens = list(r1.generators)
    for g in r2.generators:
        name = g.name
        if name in left:
            while name in left or name in right or name in assigned:
                name += "'"
        assigned.add(name)
        gens.append(Generator(name, g.degree, g.truncation))
    n1, n2 = r1.ngens, r2.ngens
    pad1 = (0,) * n2
    pad2 = (0,) * n1
    rules = {}
    for i, g in enumerate(gens):
        if i < n1:
            rules[g.name] = [m + pad1 for m in r1._sq[i]]
        else:
            rules[g.name] = [pad2 + m for m in r2._sq[i - n1]]
    caps = r1.caps + tuple((lo + n1, hi + n1, c) for lo, hi, c in r2.caps)
    return RingPresentation(gens, rules, _caps=caps)


def cross(a, b):
    """Exterior product a x b in the Künneth ring ``tensor(a.ring, b.ring)``."""
    ring = tensor(a.ring, b.ring)
    return GradedElement(ring, frozenset(m1 + m2 for m1 in a.terms for m2 in b.terms))


def lift_left(a, other):
    """a x 1 in tensor(a.ring, other)."""
    return cross(a, other.one())


def lift_right(other, b):
    """1 x b in tensor(other, b.ring)."""
    return cross(other.one(), b)
