import itertools

import pytest

from mod2coh.charclass import VirtualBundle, trivial_bundle
from mod2coh.errors import ConfigurationError
from mod2coh.f2poly import GradedElement, cross
from mod2coh.topology import (
    MapData,
    check_functoriality,
    check_product_rule,
    check_projection_formula,
    circle,
    complex_projective_space,
    compose,
    double_cover_pushpull,
    identity_map,
    inclusion,
    product_space,
    product_with_space,
    projective_space,
    pullback,
    umkehr,
)

from .conftest import top_coefficient


def test_inclusion_pullback_and_umkehr(rp):
    f = inclusion(rp[2], rp[5])
    S, T = rp[2].ring, rp[5].ring
    x, X = S.gen("x"), T.gen("x")
    assert pullback(f, X**3).is_zero()
    assert pullback(f, X**2) == x**2
    assert umkehr(f, S.one()) == X**3
    assert umkehr(f, x) == X**4
    assert umkehr(f, x**2) == X**5
    assert f.mode == "fundamental"


def test_point_inclusion(rp):
    f = inclusion(rp[0], rp[3])
    assert umkehr(f, rp[0].ring.one()) == rp[3].ring.gen("x") ** 3
    assert pullback(f, rp[3].ring.gen("x")).is_zero()
    assert f.normal.rank == 3 and f.normal.total == rp[0].ring.one()


def test_compose_example(rp):
    h = compose(inclusion(rp[2], rp[3]), inclusion(rp[1], rp[2]))
    assert h.codim == 2
    assert umkehr(h, rp[1].ring.one()) == rp[3].ring.gen("x") ** 2
    assert h.normal.total == inclusion(rp[1], rp[3]).normal.total
    assert check_functoriality(inclusion(rp[2], rp[3]), inclusion(rp[1], rp[2]), inclusion(rp[1], rp[3])).passed


def test_compose_rejects_mismatch(rp):
    with pytest.raises(ConfigurationError):
        compose(inclusion(rp[2], rp[3]), inclusion(rp[1], rp[4]))


def test_product_example(rp):
    F = product_with_space(rp[1], inclusion(rp[1], rp[2]))
    S, T = F.source.ring, F.target.ring
    assert T.names == ("x", "x'")
    assert umkehr(F, S.one()) == T.gen("x'")
    assert umkehr(F, S.gen("x") * S.gen("x'")) == T.gen("x") * T.gen("x'") ** 2
    G = product_with_space(rp[1], inclusion(rp[1], rp[2]), mode="fundamental")
    assert G.umkehr_table() == F.umkehr_table()


def test_identity_map(rp):
    f = identity_map(rp[4])
    for b in rp[4].ring.basis_elements():
        assert umkehr(f, b) == b and pullback(f, b) == b


# -- independent oracle: Poincaré duality ----------------------------------------


def duality_umkehr(f, b):
    """The class c of degree |b| + codim with <a c, [X]> = <f^*(a) b, [M]> for all a.

    Brute force over all classes of that degree; the answer must be unique.
    """
    S, T = f.source.ring, f.target.ring
    d = b.degree + f.codim
    cands = T.basis_in_degree(d) if d <= T.top_degree else []
    duals = T.basis_elements()
    want = [top_coefficient(f.pull(a) * b) if S.top_degree >= 0 else 0 for a in duals]
    hits = []
    for r in range(len(cands) + 1):
        for combo in itertools.combinations(cands, r):
            c = T.element(list(combo))
            if [top_coefficient(a * c) for a in duals] == want:
                hits.append(c)
    assert len(hits) == 1, (f, b, hits)
    return hits[0]


def test_umkehr_matches_duality_oracle(catalog):
    for f in catalog.maps.values():
        for b in f.source.ring.basis_elements():
            assert umkehr(f, b) == duality_umkehr(f, b), (f.name, str(b))


def test_umkehr_of_top_class_is_top_class(catalog):
    for f in catalog.maps.values():
        S, T = f.source.ring, f.target.ring
        if f.codim == 0 or S.top_degree + f.codim != T.top_degree:
            continue
        (top,) = S.basis_in_degree(S.top_degree)
        assert top_coefficient(umkehr(f, GradedElement(S, frozenset([top])))) == 1


# -- axioms over the whole catalog ---------------------------------------------


def test_projection_formula_on_catalog(catalog):
    for f in catalog.maps.values():
        assert check_projection_formula(f).passed, f.name


def test_functoriality_on_all_triples(rp):
    for a, b, c in itertools.combinations(range(9), 3):
        outer, inner = inclusion(rp[b], rp[c]), inclusion(rp[a], rp[b])
        assert check_functoriality(outer, inner, inclusion(rp[a], rp[c])).passed
        assert check_functoriality(outer, inner, compose(outer, inner)).passed


def test_functoriality_detects_wrong_direct_map(rp):
    outer, inner = inclusion(rp[2], rp[4]), inclusion(rp[1], rp[2])
    nu = inclusion(rp[1], rp[4]).normal
    wrong = MapData("w", rp[1], rp[4], 3, {"x": "x"}, nu, fundamental="0")
    v = check_functoriality(outer, inner, wrong)
    assert v.status == "fail" and v.at == "Umkehr of 1"


def test_product_rule_examples(rp):
    for a in range(1, 4):
        for m, n in [(0, 1), (1, 3), (2, 5)]:
            assert check_product_rule(rp[a], inclusion(rp[m], rp[n])).passed
            F = product_with_space(rp[a], inclusion(rp[m], rp[n]))
            assert check_product_rule(rp[a], inclusion(rp[m], rp[n]), F).passed


def test_covers():
    S1 = circle()
    R = S1.ring
    u = R.gen("u")
    triv = trivial_bundle(R)
    dbl = MapData("dbl", S1, S1, 0, {"u": "0"}, triv, table={(0,): "0", (1,): "u"})
    tri = MapData("tri", S1, S1, 0, {"u": "u"}, triv, table={(0,): "1", (1,): "u"})
    assert double_cover_pushpull(dbl, 2).passed
    assert double_cover_pushpull(tri, 3).passed
    assert double_cover_pushpull(identity_map(S1), 1).passed
    v = double_cover_pushpull(dbl, 1)
    assert v.status == "fail" and v.lhs == "0" and v.rhs == "1"
    assert umkehr(dbl, u) == u
    assert double_cover_pushpull(inclusion(projective_space(1), projective_space(2)), 2).status == "error"


def test_cp_inclusion():
    cp2, cp4 = complex_projective_space(2), complex_projective_space(4)
    y = cp2.ring.gen("y")
    nu = VirtualBundle(cp2.ring, 4, (cp2.ring.one() + y) ** 2)
    j = MapData("j", cp2, cp4, 4, {"y": "y"}, nu, fundamental="y^2")
    assert umkehr(j, y**2) == cp4.ring.gen("y") ** 4
    assert check_projection_formula(j).passed


# -- configuration errors ------------------------------------------------------


def test_configuration_errors(rp):
    R1, R2 = rp[1].ring, rp[2].ring
    triv1 = trivial_bundle(R1, 1)
    with pytest.raises(ConfigurationError, match="exactly one"):
        MapData("f", rp[1], rp[2], 1, {"x": "x"}, triv1)
    with pytest.raises(ConfigurationError, match="exactly one"):
        MapData("f", rp[1], rp[2], 1, {"x": "x"}, triv1, fundamental="x", table={})
    with pytest.raises(ConfigurationError, match="target generators"):
        MapData("f", rp[1], rp[2], 1, {}, triv1, fundamental="x")
    with pytest.raises(ConfigurationError, match="degree"):
        MapData("f", rp[1], rp[2], 1, {"x": "1"}, triv1, fundamental="x")
    with pytest.raises(ConfigurationError, match="must have degree"):
        MapData("f", rp[1], rp[2], 1, {"x": "x"}, triv1, fundamental="x^2")
    with pytest.raises(ConfigurationError, match="must live over"):
        MapData("f", rp[1], rp[2], 1, {"x": "x"}, trivial_bundle(R2, 1), fundamental="x")
    with pytest.raises(ConfigurationError, match="codim"):
        MapData("f", rp[1], rp[2], -1, {"x": "x"}, triv1, fundamental="x")
    # x^2 = 0 in H^*(RP^1) but f^*(x)^2 = x^2 is nonzero in H^*(RP^2)
    with pytest.raises(ConfigurationError):
        MapData("g", rp[2], rp[1], 0, {"x": "x"}, trivial_bundle(R2), fundamental="1")
    # f_*(1) mode needs f^* onto
    S1 = circle()
    with pytest.raises(ConfigurationError):
        MapData("dbl", S1, S1, 0, {"u": "0"}, trivial_bundle(S1.ring), fundamental="0")
    with pytest.raises(ConfigurationError, match="misses"):
        MapData("t", S1, S1, 0, {"u": "u"}, trivial_bundle(S1.ring), table={(0,): "1"})
    with pytest.raises(ConfigurationError, match="wrong degree"):
        MapData("t", S1, S1, 0, {"u": "u"}, trivial_bundle(S1.ring), table={(0,): "u", (1,): "u"})


def test_product_space_names(rp):
    P = product_space(rp[2], rp[3])
    assert P.name == "RP2xRP3"
    assert P.ring.dimension == 12
    assert cross(rp[2].ring.gen("x"), rp[3].ring.one()) == P.ring.gen("x")
