"""Formal (virtual) bundles known through rank and total Stiefel-Whitney class."""

from dataclasses import dataclass

from .errors import DegreeError, InvalidPresentation, PresentationMismatch
from .f2poly import Generator, GradedElement, RingPresentation, lift_right

__all__ = [
    "VirtualBundle",
    "trivial_bundle",
    "line_bundle",
    "whitney_sum",
    "sw",
    "euler_class",
    "twist_top_class",
    "twist_top_oracle",
    "decompose_symmetric",
]


@dataclass(frozen=True)
class VirtualBundle:
    base: RingPresentation
    rank: int
    total: GradedElement
    genuine: bool = True

    def __post_init__(self):
        if self.total.ring != self.base:
            raise PresentationMismatch("total Stiefel-Whitney class lives over a different ring")
        if self.total.degree_part(0) != self.base.one():
            raise InvalidPresentation(f"w_0 must be 1, total class is {self.total}")
        if self.genuine:
            if self.rank < 0:
                raise InvalidPresentation("a genuine bundle has rank >= 0")
            high = [d for d in self.total.degrees() if d > self.rank]
            if high:
                raise InvalidPresentation(f"rank {self.rank} bundle has w_{high[0]} != 0")

    def pullback(self, fn):
        """Pull back along a ring map ``fn`` (a callable on elements)."""
        total = fn(self.total)
        return VirtualBundle(total.ring, self.rank, total, self.genuine)

    def lift_over(self, factor):
        """Künneth-lift to the product ``factor x base`` (pullback along the projection)."""
        total = lift_right(factor, self.total)
        return VirtualBundle(total.ring, self.rank, total, self.genuine)

    def __str__(self):
        return f"rank {self.rank}, w = {self.total}"


def trivial_bundle(ring, rank=0):
    return VirtualBundle(ring, rank, ring.one())


def line_bundle(w1):
    """Line bundle with first Stiefel-Whitney class ``w1``."""
    if not w1.is_zero() and w1.degrees() != [1]:
        raise DegreeError(f"w_1 must have degree 1, got {w1}")
    return VirtualBundle(w1.ring, 1, w1.ring.one() + w1)


def whitney_sum(xi, eta):
    if xi.base != eta.base:
        raise PresentationMismatch("Whitney sum of bundles over different bases")
    return VirtualBundle(xi.base, xi.rank + eta.rank, xi.total * eta.total, xi.genuine and eta.genuine)


def sw(i, xi):
    if i < 0:
        raise ValueError("Stiefel-Whitney index must be >= 0")
    return xi.total.degree_part(i)


def euler_class(xi):
    """Mod-2 Euler class: the top Stiefel-Whitney class."""
    return sw(xi.rank, xi)


def twist_top_class(mu, xi):
    """w_k(L (x) xi) = sum_i mu^{k-i} w_i(xi), where w_1(L) = mu and k = rank(xi)."""
    if mu.ring != xi.base:
        raise PresentationMismatch("mu and the bundle live over different rings")
    if not mu.is_zero() and mu.degrees() != [1]:
        raise DegreeError(f"mu must have degree 1, got {mu}")
    k = xi.rank
    out = xi.base.zero()
    for i in range(k + 1):
        out = out + (mu ** (k - i)) * sw(i, xi)
    return out


def _root_ring(k):
    # m stands for mu, t1..tk are formal Chern roots; only degree <= k matters.
    gens = [Generator("m", 1)] + [Generator(f"t{j}", 1) for j in range(1, k + 1)]
    return RingPresentation(gens, cap=k)


def _elementary(ring, k):
    """Elementary symmetric polynomials e_0..e_k in t1..tk (as elements of ``ring``)."""
    t = [ring.gen(f"t{j}") for j in range(1, k + 1)]
    es = [ring.one()] + [ring.zero()] * k
    for tj in t:
        for i in range(k, 0, -1):
            es[i] = es[i] + es[i - 1] * tj
    return es


def decompose_symmetric(p, k):
    """Write a symmetric polynomial in t1..tk (m-free) as a GF(2) sum of monomials in e_1..e_k.

    Returns a set of exponent vectors ``b`` meaning ``prod_j e_j^{b_j}``.  Classical
    leading-term reduction: the lex-largest monomial t^a of a symmetric
    polynomial has a_1 >= ... >= a_k and equals the leading term of
    prod_j e_j^{a_j - a_{j+1}}.
    """
    ring = p.ring
    es = _elementary(ring, k)
    out = set()
    while not p.is_zero():
        lead = max(p.terms, key=lambda m: m[1:])
        if lead[0]:
            raise ValueError(f"{p} still involves m")
        a = lead[1:]
        if any(a[j] < a[j + 1] for j in range(k - 1)):
            raise ValueError(f"{p} is not symmetric")
        b = tuple(a[j] - (a[j + 1] if j + 1 < k else 0) for j in range(k))
        q = ring.one()
        for j, bj in enumerate(b):
            q = q * es[j + 1] ** bj
        p = p + q
        out ^= {b}
    return out


def twist_top_oracle(mu, k, w):
    """Splitting-principle evaluation of w_k(L (x) xi) for a rank-k bundle with total class ``w``.

    Expands prod_j (1 + m + t_j) in formal roots, keeps degree k, rewrites each
    coefficient of m^{k-i} in elementary symmetric polynomials, then
    substitutes m -> mu and e_i -> w_i.
    """
    if mu.ring != w.ring:
        raise PresentationMismatch("mu and w live over different rings")
    S = _root_ring(k)
    m = S.gen("m") if k else S.zero()
    prod = S.one()
    for j in range(1, k + 1):
        prod = prod * (S.one() + m + S.gen(f"t{j}"))
    top = prod.degree_part(k)

    base = w.ring
    ws = [w.degree_part(i) for i in range(k + 1)]
    out = base.zero()
    for i in range(k + 1):
        # coefficient of m^{k-i}: terms with m-exponent k-i, with m stripped
        coeff = S.element([(0,) + mono[1:] for mono in top.terms if mono[0] == k - i])
        for b in decompose_symmetric(coeff, k):
            term = mu ** (k - i)
            for j, bj in enumerate(b):
                term = term * ws[j + 1] ** bj
            out = out + term
    return out
