"""Steenrod squares on presented rings.

The total square ``Sq = Sq^0 + Sq^1 + ...`` is the ring endomorphism
determined by each generator's sq-rule (Cartan formula); ``Sq^i`` is its
degree ``|a| + i`` component.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import RequiresHomogeneous
from .f2poly import GradedElement
from .report import Verdict

__all__ = [
    "SteenrodOp",
    "binom_mod2",
    "adem_expansion",
    "sq_total",
    "sq",
    "sq_compose",
    "check_axioms",
    "check_cartan",
    "check_adem",
]


@dataclass(frozen=True)
class SteenrodOp:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("Steenrod square index must be >= 0")

    def __call__(self, a):
        return sq(self.index, a)

    def __str__(self):
        return f"Sq^{self.index}"


def binom_mod2(n, k):
    """C(n, k) mod 2 by Lucas' theorem: odd iff the bits of k are a subset of those of n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return 1 if (k & ~n) == 0 else 0


def adem_expansion(a, b):
    """Right-hand side of the Adem relation for Sq^a Sq^b (a < 2b) as a list of (i, j) for Sq^i Sq^j."""
    if not a < 2 * b:
        raise ValueError(f"Adem relation needs a < 2b, got a={a}, b={b}")
    return [(a + b - c, c) for c in range(a // 2 + 1) if binom_mod2(b - 1 - c, a - 2 * c)]


@lru_cache(maxsize=None)
def _gen_power(ring, i, e):
    if e == 0:
        return ring.one().terms
    if e == 1:
        return ring._sq[i]
    half = GradedElement(ring, _gen_power(ring, i, e // 2))
    sq_half = half * half
    if e % 2:
        sq_half = sq_half * GradedElement(ring, ring._sq[i])
    return sq_half.terms


@lru_cache(maxsize=None)
def _sq_monomial(ring, mono):
    result = ring.one()
    for i, e in enumerate(mono):
        if e:
            result = result * GradedElement(ring, _gen_power(ring, i, e))
    return result.terms


def sq_total(a):
    """Total Steenrod square of ``a`` (any degrees)."""
    ring = a.ring
    out = frozenset()
    for m in a.terms:
        out = out ^ _sq_monomial(ring, m)
    return GradedElement(ring, out)


def sq(i, a):
    """``Sq^i a`` for homogeneous ``a``; mixed elements must go through :func:`sq_total`."""
    if isinstance(i, SteenrodOp):
        i = i.index
    if i < 0:
        raise ValueError("Steenrod square index must be >= 0")
    if a.is_zero():
        return a
    degs = a.degrees()
    if len(degs) != 1:
        raise RequiresHomogeneous(f"Sq^{i} needs a homogeneous class, got degrees {degs}")
    return sq_total(a).degree_part(degs[0] + i)


def sq_compose(ops, a):
    """Apply ``Sq^{ops[0]} Sq^{ops[1]} ...`` to ``a`` (rightmost first)."""
    for i in reversed(ops):
        a = sq(i, a)
    return a


def check_axioms(ring, max_degree):
    """Sq^0 = id, Sq^{|a|} a = a^2 and instability on basis elements up to ``max_degree``, then Cartan."""
    for a in ring.basis_elements(max_degree):
        k = a.degree
        if sq(0, a) != a:
            return Verdict.fail(f"Sq^0 on {a}", sq(0, a), a)
        if sq(k, a) != a * a:
            return Verdict.fail(f"Sq^{k} on {a}", sq(k, a), a * a)
        for i in range(k + 1, 2 * k + 2):
            if not sq(i, a).is_zero():
                return Verdict.fail(f"Sq^{i} on {a}", sq(i, a), ring.zero())
    return check_cartan(ring, max_degree)


def check_cartan(ring, max_degree):
    """Sq(ab) = Sq(a) Sq(b) for basis pairs with |a| + |b| <= ``max_degree``."""
    basis = ring.basis_elements(max_degree)
    for x, a in enumerate(basis):
        for b in basis[x:]:
            if a.degree + b.degree > max_degree:
                continue
            lhs = sq_total(a * b)
            rhs = sq_total(a) * sq_total(b)
            if lhs != rhs:
                return Verdict.fail(f"Sq({a} * {b})", lhs, rhs)
    return Verdict.ok()


def check_adem(ring, a, b, max_degree):
    """Sq^a Sq^b against its Adem expansion on every basis element of degree <= ``max_degree``."""
    terms = adem_expansion(a, b)
    for x in ring.basis_elements(max_degree):
        lhs = sq_compose((a, b), x)
        rhs = ring.zero()
        for i, j in terms:
            rhs = rhs + sq_compose((i, j), x)
        if lhs != rhs:
            return Verdict.fail(f"Sq^{a}Sq^{b} on {x}", lhs, rhs)
    return Verdict.ok()
