from types import SimpleNamespace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mod2coh.charclass import VirtualBundle, sw
from mod2coh.f2poly import tensor
from mod2coh.steenrod import sq
from mod2coh.topology import MapData, identity_map, inclusion, projective_space
from mod2coh.verify import (
    VerificationTask,
    check_equivariant,
    check_internal_op,
    check_thom,
    check_whitney_mod2,
    equivariant_sides,
    internal_op,
    restrict_to_fibre,
    run_suite,
    run_task,
    thom_expansion,
)

from .conftest import elements


def test_thom_hand_cases(rp):
    # RP^1 in RP^2: Sq^1 x = x^2 = f_*(x)
    f = inclusion(rp[1], rp[2])
    X = rp[2].ring.gen("x")
    assert sq(1, f.push(rp[1].ring.one())) == X**2 == f.push(sw(1, f.normal))
    # RP^2 in RP^4: nu = 1 + x^2, Sq^2 x^2 = x^4 = f_*(x^2)
    g = inclusion(rp[2], rp[4])
    assert str(g.normal.total) == "1 + x^2"
    assert sq(2, g.push(rp[2].ring.one())) == rp[4].ring.gen("x") ** 4
    for m in range(8):
        for n in range(m + 1, 9):
            assert check_thom(inclusion(rp[m], rp[n])).passed


def test_thom_witness_for_wrong_normal_bundle(rp):
    R = rp[2].ring
    f = MapData("bad", rp[2], rp[3], 1, {"x": "x"}, VirtualBundle(R, 1, R.one()), fundamental="x")
    v = check_thom(f)
    assert (v.status, v.at, v.lhs, v.rhs) == ("fail", "i=1", "x^2", "0")


def test_thom_rank_mismatch_is_error(rp):
    R = rp[2].ring
    f = MapData("bad", rp[2], rp[3], 1, {"x": "x"}, VirtualBundle(R, 2, R.one()), fundamental="x")
    task = VerificationTask("t", "thom", "bad")
    v = run_task(task, SimpleNamespace(maps={"bad": f}, spaces={}))
    assert v.status == "error" and "rank" in v.message


def test_whitney_hand_cases(rp):
    # RP^1 in RP^3: f_*(1)^2 = x^4 = 0 and e(nu) = 0
    assert check_whitney_mod2(inclusion(rp[1], rp[3])).passed
    # RP^2 in RP^4: x^4 = f_*(x^2)
    assert check_whitney_mod2(inclusion(rp[2], rp[4])).passed


def test_whitney_equals_top_thom_clause(catalog):
    for f in catalog.maps.values():
        alpha = f.push(f.source.ring.one())
        clause = sq(f.codim, alpha) == f.push(sw(f.codim, f.normal))
        assert check_whitney_mod2(f).passed == clause, f.name


# -- internal operation ----------------------------------------------------------


def test_internal_op_examples(rp):
    x = rp[3].ring.gen("x")
    assert str(internal_op(x, 3)) == "mu^1*x^1 + x^2"
    assert str(internal_op(x**2, 3)) == "mu^2*x^2"
    assert str(internal_op(x, 1)) == "mu^1*x^1 + x^2"
    assert internal_op(rp[3].ring.zero(), 2).is_zero()
    assert internal_op(rp[3].ring.one(), 2) == tensor(projective_space(2, gen="mu").ring, rp[3].ring).one()
    with pytest.raises(ValueError):
        internal_op(x, 0)


def test_restriction_to_fibre_gives_square(catalog):
    for name in ("RP8", "RPinf", "CP4", "RP2xRP3", "S1"):
        ring = catalog.spaces[name].ring
        for ell in (1, 2, 5, 8):
            assert check_internal_op(ring, ell, min(ring.top_degree, 12)).passed


RINGS = [projective_space(6).ring, tensor(projective_space(2).ring, projective_space(3).ring)]


@given(st.data())
def test_internal_op_multiplicative_and_linear(data):
    ring = data.draw(st.sampled_from(RINGS))
    ell = data.draw(st.integers(1, 8))
    d1, d2 = data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))
    a = data.draw(elements(ring)).degree_part(d1)
    b = data.draw(elements(ring)).degree_part(d2)
    c = data.draw(elements(ring)).degree_part(d1)
    assert internal_op(a * b, ell) == internal_op(a, ell) * internal_op(b, ell)
    assert internal_op(a + c, ell) == internal_op(a, ell) + internal_op(c, ell)
    assert restrict_to_fibre(internal_op(a, ell), ring) == a * a


# -- equivariant formula ---------------------------------------------------------


def test_equivariant_hand_cases(rp):
    lhs, rhs, _ = equivariant_sides(inclusion(rp[1], rp[2]), 1)
    assert str(lhs) == str(rhs) == "mu^1*x^1 + x^2"
    # RP^2 in RP^4, l = 2: (1 x f)_*(mu^2 + w_2) = mu^2 x^2 + x^4
    lhs, rhs, _ = equivariant_sides(inclusion(rp[2], rp[4]), 2)
    assert str(lhs) == str(rhs) == "mu^2*x^2 + x^4"


def test_equivariant_worked_examples(rp):
    # RP^2 in RP^3, l = 4: both sides mu x + x^2
    lhs, rhs, _ = equivariant_sides(inclusion(rp[2], rp[3]), 4)
    assert str(lhs) == str(rhs) == "mu^1*x^1 + x^2"
    # RP^1 in RP^3, l = 4: Sq^2 x^2 = x^4 = 0 in RP^3 and w_2 = x^2 = 0 over RP^1
    lhs, rhs, _ = equivariant_sides(inclusion(rp[1], rp[3]), 4)
    assert str(lhs) == str(rhs) == "mu^2*x^2"
    # identity: both sides are the unit
    for ell in range(1, 9):
        lhs, rhs, _ = equivariant_sides(identity_map(rp[3]), ell)
        assert lhs == rhs == lhs.ring.one()


def test_consistency_triangle(catalog):
    """Internal operation, Thom expansion and the twisted Umkehr side agree."""
    for f in catalog.maps.values():
        for ell in (1, 3, 8):
            lhs, rhs, _ = equivariant_sides(f, ell)
            assert lhs == thom_expansion(f, ell) == rhs, (f.name, ell)


def test_equivariant_detects_wrong_normal_bundle(rp):
    R = rp[2].ring
    f = MapData("bad", rp[2], rp[3], 1, {"x": "x"}, VirtualBundle(R, 1, R.one()), fundamental="x")
    v = check_equivariant(f, 2)
    assert v.status == "fail" and v.at == "ell=2"


# -- suite runner ------------------------------------------------------------------


def test_run_suite_empty(catalog):
    assert run_suite([], catalog) == []


def test_run_suite_sorted_and_tagged(catalog):
    tasks = [t for t in catalog.tasks if t.id.startswith(("thom.i1", "equiv.i2_3", "adem.RP3."))]
    verdicts = run_suite(tasks, catalog)
    assert [v.task.id for v in verdicts] == sorted(t.id for t in tasks)
    assert all(v.passed for v in verdicts)


def test_unknown_catalog_entry_is_error(catalog):
    v = run_task(VerificationTask("x", "thom", "nope"), catalog)
    assert v.status == "error" and "nope" in v.message


def test_task_kind_validation():
    with pytest.raises(ValueError):
        VerificationTask("x", "bogus", "f")
    t = VerificationTask("x", "adem", "RP3", a=1, b=2, degree=3)
    assert t.parameter == "a=1 b=2 upto=3"


def test_max_degree_clamps_sweeps(catalog):
    t = VerificationTask("ax", "axioms", "RPinf", degree=24)
    assert run_task(t, catalog, max_degree=4).passed
