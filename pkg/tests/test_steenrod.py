import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mod2coh.errors import RequiresHomogeneous
from mod2coh.f2poly import Generator, RingPresentation, tensor
from mod2coh.steenrod import (
    SteenrodOp,
    adem_expansion,
    binom_mod2,
    check_adem,
    check_axioms,
    check_cartan,
    sq,
    sq_compose,
    sq_total,
)
from mod2coh.topology import projective_space, rp_infinity

from .conftest import elements

RPINF = rp_infinity(24).ring
RP8 = projective_space(8).ring


def expand_power_oracle(j, cap):
    """Exponents of (x + x^2)^j over GF(2) by enumerating all 2^j factor choices."""
    counts = {}
    for choice in itertools.product((1, 2), repeat=j):
        e = sum(choice)
        counts[e] = counts.get(e, 0) + 1
    return sorted(e for e, c in counts.items() if c % 2 and e <= cap)


# frozen from expand_power_oracle
FROZEN_POWERS = {1: [1, 2], 2: [2, 4], 3: [3, 4, 5, 6], 5: [5, 6, 9, 10], 6: [6, 8, 10, 12]}


def test_frozen_powers_match_oracle():
    for j, expected in FROZEN_POWERS.items():
        assert expand_power_oracle(j, 24) == expected


@pytest.mark.parametrize("j", sorted(FROZEN_POWERS))
def test_sq_total_on_powers(j):
    x = RPINF.gen("x")
    got = sq_total(x**j)
    assert sorted(RPINF.mono_degree(m) for m in got.terms) == FROZEN_POWERS[j]


def test_sq_total_examples():
    x = RPINF.gen("x")
    assert str(sq_total(x)) == "x^1 + x^2"
    assert str(sq_total(x**2)) == "x^2 + x^4"
    assert sq(1, x**2).is_zero()
    assert sq(2, x**2) == x**4
    assert str(sq_total(x**3)) == "x^3 + x^4 + x^5 + x^6"


def test_binom_mod2_against_math_comb():
    for n in range(64):
        for k in range(-2, 66):
            expected = math.comb(n, k) % 2 if 0 <= k <= n else 0
            assert binom_mod2(n, k) == expected


def test_sq_on_powers_matches_lucas_oracle():
    x = RPINF.gen("x")
    for j in range(25):
        for i in range(j + 1):
            expected = x ** (i + j) if math.comb(j, i) % 2 else RPINF.zero()
            assert sq(i, x**j) == expected, (i, j)


def test_sq_requires_homogeneous():
    x = RPINF.gen("x")
    with pytest.raises(RequiresHomogeneous):
        sq(1, x + x**2)
    assert sq_total(x + x**2) == sq_total(x) + sq_total(x**2)


def test_steenrod_op_object():
    x = RPINF.gen("x")
    assert SteenrodOp(1)(x**3) == x**4
    assert str(SteenrodOp(2)) == "Sq^2"
    with pytest.raises(ValueError):
        SteenrodOp(-1)


def test_sq_of_zero():
    assert sq(3, RP8.zero()).is_zero()


CATALOG_RINGS = [
    projective_space(n).ring for n in range(9)
] + [
    RPINF,
    RingPresentation([Generator("y", 2, 5)], {"y": "y^1 + y^2"}),
    tensor(projective_space(2).ring, projective_space(3).ring),
]


@pytest.mark.parametrize("ring", CATALOG_RINGS, ids=repr)
def test_axioms_on_every_basis_element(ring):
    for a in ring.basis_elements():
        k = a.degree
        assert sq(0, a) == a
        assert sq(k, a) == a * a
        for i in range(k + 1, 2 * k + 3):
            assert sq(i, a).is_zero()


def test_check_axioms_and_cartan_pass():
    assert check_cartan(RP8, 8).passed
    assert check_axioms(RPINF, 24).passed


def test_cartan_with_unit_pairs_is_trivial():
    for ring in CATALOG_RINGS:
        for a in ring.basis_elements():
            assert sq_total(ring.one() * a) == sq_total(ring.one()) * sq_total(a)


def test_corrupted_rule_is_caught_by_axioms():
    bad = RingPresentation([Generator("x", 1, 9)], {"x": "x^1"})
    v = check_axioms(bad, 8)
    assert v.status == "fail"
    assert (v.at, v.lhs, v.rhs) == ("Sq^1 on x^1", "0", "x^2")
    # the corrupted rule is still a ring endomorphism, so Cartan alone cannot see it
    assert check_cartan(bad, 8).passed


@given(st.data())
def test_sq_total_is_a_ring_map(data):
    ring = data.draw(st.sampled_from(CATALOG_RINGS))
    a = data.draw(elements(ring))
    b = data.draw(elements(ring))
    assert sq_total(a + b) == sq_total(a) + sq_total(b)
    assert sq_total(a * b) == sq_total(a) * sq_total(b)


# -- Adem ---------------------------------------------------------------------


def test_adem_expansions():
    assert adem_expansion(1, 1) == []
    assert adem_expansion(1, 2) == [(3, 0)]
    assert adem_expansion(2, 2) == [(3, 1)]
    # c=0: C(1, 3) = 0; c=1: C(0, 1) = 0, so Sq^3 Sq^2 = 0
    assert adem_expansion(3, 2) == []
    with pytest.raises(ValueError):
        adem_expansion(4, 2)


def _coeff(i, j):
    return math.comb(j, i) % 2


def test_adem_examples_with_comb_oracle():
    x = RP8.gen("x")
    for j in range(9):
        a = x**j
        assert sq_compose((1, 1), a).is_zero()
        # Sq^1 Sq^2 x^j = C(j,2) C(j+2,1) x^{j+3} and Sq^3 x^j = C(j,3) x^{j+3}
        assert _coeff(2, j) * _coeff(1, j + 2) == _coeff(3, j)
        assert sq_compose((1, 2), a) == sq(3, a)
        if j + 3 <= 8:
            assert sq(3, a) == (x ** (j + 3) if _coeff(3, j) else RP8.zero())
        # Sq^2 Sq^2 x^j = C(j,2) C(j+2,2) x^{j+4} and Sq^3 Sq^1 x^j = C(j,1) C(j+1,3) x^{j+4}
        assert _coeff(2, j) * _coeff(2, j + 2) == _coeff(1, j) * _coeff(3, j + 1)
        assert sq_compose((2, 2), a) == sq_compose((3, 1), a)


@pytest.mark.parametrize("ring", CATALOG_RINGS, ids=repr)
def test_all_adem_relations(ring):
    for b in range(1, 7):
        for a in range(1, 2 * b):
            assert check_adem(ring, a, b, 12).passed, (a, b)
