"""The built-in catalog of spaces, immersions and verification tasks.

The catalog is generated here as task-file source and parsed like any user
file; ``data/builtin.dsl`` is the same text exported to disk.
"""

from functools import lru_cache
from importlib import resources
from itertools import combinations

from .charclass import VirtualBundle, whitney_sum
from .dsl import parse
from .topology import complex_projective_space, inclusion, projective_space

__all__ = [
    "MAX_N",
    "RPINF_CAP",
    "MAX_ELL",
    "ADEM_BOUND",
    "PRODUCT_MAPS",
    "builtin_source",
    "builtin_catalog",
    "exported_source",
    "inclusion_name",
]

MAX_N = 8
RPINF_CAP = 24
MAX_ELL = 8
ADEM_BOUND = 12  # relations with a < 2b <= ADEM_BOUND, checked up to this degree

# (factor dimension a, (m, n)): the map RP^a x (RP^m in RP^n)
PRODUCT_MAPS = (
    (1, (0, 1)),
    (1, (1, 2)),
    (1, (1, 3)),
    (1, (2, 4)),
    (2, (0, 2)),
    (2, (1, 3)),
    (2, (2, 3)),
    (2, (3, 5)),
    (3, (1, 2)),
    (3, (2, 4)),
)


def inclusion_name(m, n):
    return f"i{m}_{n}"


def _space_line(name, gens, cap, sq=""):
    return f"space {name} gens {gens} cap {cap}{sq}".replace("gens  cap", "gens cap")


def builtin_source():
    rp = {n: projective_space(n) for n in range(MAX_N + 1)}
    out = ["# Built-in catalog: real projective spaces, their linear inclusions, compositions and products."]

    out.append("")
    out.append("# spaces")
    for n in range(MAX_N + 1):
        gens = f"(x:1:{n + 1})" if n else ""
        out.append(_space_line(f"RP{n}", gens, n))
    out.append(_space_line("RPinf", "(x:1:inf)", RPINF_CAP))
    out.append(_space_line("S1", "(u:1:2)", 1))
    out.append(_space_line("CP2", "(y:2:3)", 4, ' sq (y = "y^1 + y^2")'))
    out.append(_space_line("CP4", "(y:2:5)", 8, ' sq (y = "y^1 + y^2")'))
    product_spaces = []
    for a, (m, n) in PRODUCT_MAPS:
        for k in (m, n):
            if (a, k) not in product_spaces:
                product_spaces.append((a, k))
    for a, k in product_spaces:
        out.append(f"space RP{a}xRP{k} product RP{a} RP{k}")

    out.append("")
    out.append("# normal bundles: RP^m in RP^n has n-m copies of the tautological line bundle")
    for m, n in combinations(range(MAX_N + 1), 2):
        nu = inclusion(rp[m], rp[n]).normal
        out.append(f'bundle nu{m}_{n} over RP{m} rank {nu.rank} sw "{nu.total}"')
    for n in range(MAX_N + 1):
        out.append(f'bundle triv{n} over RP{n} rank 0 sw "1"')
    out.append('bundle trivS1 over S1 rank 0 sw "1"')
    cp2 = complex_projective_space(2).ring
    hopf = VirtualBundle(cp2, 2, cp2.one() + cp2.gen("y"))
    cp_nu = whitney_sum(hopf, hopf)
    out.append(f'bundle nuCP2_CP4 over CP2 rank 4 sw "{cp_nu.total}"')

    out.append("")
    out.append("# maps")
    maps = []
    for m, n in combinations(range(MAX_N + 1), 2):
        name = inclusion_name(m, n)
        pull = '(x = "x")' if m else '(x = "0")'
        out.append(f'map {name} : RP{m} -> RP{n} codim {n - m} pullback {pull} umkehr1 "x^{n - m}" normal nu{m}_{n}')
        maps.append(name)
    for n in range(MAX_N + 1):
        pull = ' (x = "x")' if n else ""
        out.append(f'map id{n} : RP{n} -> RP{n} codim 0 pullback{pull} umkehr1 "1" normal triv{n}')
        maps.append(f"id{n}")
    compositions = []
    for a, b, c in combinations(range(MAX_N + 1), 3):
        name = f"c{a}_{b}_{c}"
        out.append(f"map {name} compose {inclusion_name(b, c)} {inclusion_name(a, b)}")
        compositions.append((name, a, b, c))
        maps.append(name)
    for a, (m, n) in PRODUCT_MAPS:
        name = f"RP{a}x{inclusion_name(m, n)}"
        out.append(f"map {name} product RP{a} {inclusion_name(m, n)}")
        maps.append(name)
    # CP^2 in CP^4: the normal bundle is two copies of the complex tautological line
    out.append('map j2_4 : CP2 -> CP4 codim 4 pullback (y = "y") umkehr1 "y^2" normal nuCP2_CP4')
    maps.append("j2_4")
    out.append('map dbl : S1 -> S1 codim 0 pullback (u = "0") table (1 -> "0") (u -> "u") normal trivS1')
    out.append('map tri : S1 -> S1 codim 0 pullback (u = "u") table (1 -> "1") (u -> "u") normal trivS1')
    out.append('map idS1 : S1 -> S1 codim 0 pullback (u = "u") umkehr1 "1" normal trivS1')

    out.append("")
    out.append("# tasks")
    for name in maps:
        out.append(f"task thom.{name} thom {name}")
        out.append(f"task whitney.{name} whitney {name}")
        out.append(f"task proj.{name} projection {name}")
        for ell in range(1, MAX_ELL + 1):
            out.append(f"task equiv.{name}.l{ell} equivariant {name} ell {ell}")
    for name, a, b, c in compositions:
        out.append(f"task functor.{name} functor {inclusion_name(a, c)} {inclusion_name(b, c)} {inclusion_name(a, b)}")
    for a, (m, n) in PRODUCT_MAPS:
        name = f"RP{a}x{inclusion_name(m, n)}"
        out.append(f"task prod.{name} product-rule {name} RP{a} {inclusion_name(m, n)}")
    for name, sheets in (("dbl", 2), ("tri", 3), ("idS1", 1)):
        out.append(f"task cover.{name} cover {name} sheets {sheets}")
        out.append(f"task proj.{name} projection {name}")

    spaces = [(f"RP{n}", n) for n in range(MAX_N + 1)]
    spaces += [("RPinf", RPINF_CAP), ("S1", 1), ("CP2", 4), ("CP4", 8)]
    spaces += [(f"RP{a}xRP{k}", a + k) for a, k in product_spaces]
    for sname, top in spaces:
        out.append(f"task axioms.{sname} axioms on {sname} upto {top}")
        out.append(f"task iop.{sname} internal-op on {sname} ell {MAX_ELL} upto {min(top, ADEM_BOUND)}")
        for b in range(1, ADEM_BOUND // 2 + 1):
            for a in range(1, 2 * b):
                out.append(f"task adem.{sname}.{a}.{b} adem {a} {b} on {sname} upto {min(top, ADEM_BOUND)}")
    return "\n".join(out) + "\n"


@lru_cache(maxsize=1)
def builtin_catalog():
    return parse(builtin_source())


def exported_source():
    """Contents of the shipped ``data/builtin.dsl``."""
    return resources.files("mod2coh").joinpath("data/builtin.dsl").read_text(encoding="utf-8")
