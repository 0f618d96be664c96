"""Spaces and proper immersions known through their cohomology data.

A :class:`MapData` ``f: M -> X`` carries the ring map ``f^*`` (images of
the target generators), an Umkehr map ``f_*`` and the normal bundle over
``M``.  The Umkehr map is given either by the class ``f_*(1)`` (valid when
``f^*`` is onto, extended through the projection formula) or by an
explicit table on the source monomial basis.
"""

from dataclasses import dataclass

from .charclass import VirtualBundle, trivial_bundle, whitney_sum
from .errors import ConfigurationError, PresentationMismatch
from .f2poly import Generator, GradedElement, RingPresentation, cross, point_ring, tensor
from .report import Verdict

__all__ = [
    "Space",
    "MapData",
    "projective_space",
    "rp_infinity",
    "complex_projective_space",
    "circle",
    "product_space",
    "pullback",
    "umkehr",
    "identity_map",
    "inclusion",
    "product_with_space",
    "compose",
    "check_projection_formula",
    "check_functoriality",
    "check_product_rule",
    "double_cover_pushpull",
]


@dataclass(frozen=True)
class Space:
    name: str
    ring: RingPresentation

    def __str__(self):
        return self.name


def projective_space(n, gen="x", name=None):
    """RP^n with H^* = GF(2)[x]/(x^{n+1})."""
    ring = point_ring() if n == 0 else RingPresentation([Generator(gen, 1, n + 1)])
    return Space(name or f"RP{n}", ring)


def rp_infinity(cap=24, gen="x", name="RPinf"):
    return Space(name, RingPresentation([Generator(gen, 1, None)], cap=cap))


def complex_projective_space(n, gen="y", name=None):
    ring = RingPresentation([Generator(gen, 2, n + 1)], {gen: f"{gen}^1 + {gen}^2"})
    return Space(name or f"CP{n}", ring)


def circle(gen="u", name="S1"):
    return Space(name, RingPresentation([Generator(gen, 1, 2)]))


def product_space(a, b, name=None):
    return Space(name or f"{a.name}x{b.name}", tensor(a.ring, b.ring))


def _gf2_solver(images):
    """Reduced echelon form of bitmask vectors; returns solve(v) -> combination mask or None."""
    pivots = []  # (bit, vec, comb)
    for idx, v in enumerate(images):
        c = 1 << idx
        for bit, pv, pc in pivots:
            if v & bit:
                v ^= pv
                c ^= pc
        if not v:
            continue
        bit = v & -v
        reduced = []
        for pbit, pv, pc in pivots:
            if pv & bit:
                pv ^= v
                pc ^= c
            reduced.append((pbit, pv, pc))
        pivots = reduced + [(bit, v, c)]

    def solve(v):
        c = 0
        for bit, pv, pc in pivots:
            if v & bit:
                v ^= pv
                c ^= pc
        return None if v else c

    return solve


class MapData:
    """A catalog map ``source -> target`` with pullback, Umkehr and normal-bundle data."""

    def __init__(self, name, source, target, codim, pullback, normal, *, fundamental=None, table=None):
        if (fundamental is None) == (table is None):
            raise ConfigurationError(f"map {name}: give exactly one of f_*(1) or an Umkehr table")
        if codim < 0:
            raise ConfigurationError(f"map {name}: codim must be >= 0")
        self.name = name
        self.source = source
        self.target = target
        self.codim = codim
        S, T = source.ring, target.ring

        missing = set(T.names) - set(pullback)
        extra = set(pullback) - set(T.names)
        if missing or extra:
            raise ConfigurationError(f"map {name}: pullback must name exactly the target generators {list(T.names)}")
        images = []
        for g in T.generators:
            img = S.element(pullback[g.name])
            if not img.is_zero() and img.degrees() != [g.degree]:
                raise ConfigurationError(f"map {name}: pullback of {g.name} has degree {img.degrees()}, expected {g.degree}")
            images.append(img)
        self.images = tuple(images)
        self._pull_cache = {}
        self._check_relations()

        if normal.base != S:
            raise ConfigurationError(f"map {name}: normal bundle must live over {source.name}")
        self.normal = normal

        self.fundamental = None
        self.table = None
        self._section = None
        if fundamental is not None:
            f1 = T.element(fundamental)
            if not f1.is_zero() and f1.degrees() != [codim]:
                raise ConfigurationError(f"map {name}: f_*(1) = {f1} must have degree {codim}")
            self.fundamental = f1
            self._build_section()
        else:
            tab = {}
            for m, v in table.items():
                m = tuple(m)
                if S.reduce_monomial(m) is None or len(m) != S.ngens:
                    raise ConfigurationError(f"map {name}: table key {m} is not a source basis monomial")
                v = T.element(v)
                if not v.is_zero() and v.degrees() != [S.mono_degree(m) + codim]:
                    raise ConfigurationError(f"map {name}: Umkehr of {GradedElement(S, frozenset([m]))} has wrong degree")
                tab[m] = v
            absent = [m for m in S.basis() if m not in tab]
            if absent:
                raise ConfigurationError(
                    f"map {name}: Umkehr table misses {GradedElement(S, frozenset([absent[0]]))}"
                )
            self.table = tab

    def __repr__(self):
        return f"MapData({self.name}: {self.source.name} -> {self.target.name}, codim {self.codim})"

    @property
    def mode(self):
        return "fundamental" if self.fundamental is not None else "table"

    def pullback_of(self, name):
        return self.images[self.target.ring.index(name)]

    def _pull_mono(self, mono):
        hit = self._pull_cache.get(mono)
        if hit is None:
            hit = self.source.ring.one()
            for img, e in zip(self.images, mono):
                if e:
                    hit = hit * img**e
            self._pull_cache[mono] = hit
        return hit

    def _check_relations(self):
        T = self.target.ring
        for img, g in zip(self.images, T.generators):
            if g.truncation is not None and not (img**g.truncation).is_zero():
                raise ConfigurationError(f"map {self.name}: pullback does not respect {g.name}^{g.truncation} = 0")
        for lo, hi, cap in T.caps:
            for b in T.basis():
                if any(b[i] for i in range(T.ngens) if not lo <= i < hi):
                    continue
                for i in range(lo, hi):
                    m = list(b)
                    m[i] += 1
                    m = tuple(m)
                    g = T.generators[i]
                    if g.truncation is not None and m[i] >= g.truncation:
                        continue
                    if T.reduce_monomial(m) is None and not self._pull_mono(m).is_zero():
                        raise ConfigurationError(f"map {self.name}: pullback does not respect the degree cap")

    def _build_section(self):
        """Choose a preimage under f^* of every source basis monomial (needs f^* onto)."""
        S, T = self.source.ring, self.target.ring
        section = {}
        for d in sorted({S.mono_degree(m) for m in S.basis()}):
            src = S.basis_in_degree(d)
            pos = {m: j for j, m in enumerate(src)}
            tgt = T.basis_in_degree(d)
            vecs = []
            for t in tgt:
                v = 0
                for m in self._pull_mono(t).terms:
                    v |= 1 << pos[m]
                vecs.append(v)
            solve = _gf2_solver(vecs)
            for j, m in enumerate(src):
                c = solve(1 << j)
                if c is None:
                    raise ConfigurationError(
                        f"map {self.name}: pullback is not onto (misses {GradedElement(S, frozenset([m]))}); "
                        "give an explicit Umkehr table"
                    )
                section[m] = GradedElement(T, frozenset(tgt[i] for i in range(len(tgt)) if c >> i & 1))
        self._section = section

    def pull(self, a):
        if a.ring != self.target.ring:
            raise PresentationMismatch(f"map {self.name}: pullback input must live in {self.target.name}")
        out = self.source.ring.zero()
        for m in a.terms:
            out = out + self._pull_mono(m)
        return out

    def push(self, b):
        if b.ring != self.source.ring:
            raise PresentationMismatch(f"map {self.name}: Umkehr input must live in {self.source.name}")
        T = self.target.ring
        out = T.zero()
        if self.table is not None:
            for m in b.terms:
                out = out + self.table[m]
            return out
        pre = T.zero()
        for m in b.terms:
            pre = pre + self._section[m]
        return pre * self.fundamental

    def umkehr_table(self):
        """The Umkehr map on the full source basis (computed in fundamental mode)."""
        if self.table is not None:
            return dict(self.table)
        S = self.source.ring
        return {m: self.push(GradedElement(S, frozenset([m]))) for m in S.basis()}


def pullback(f, a):
    return f.pull(a)


def umkehr(f, b):
    return f.push(b)


def identity_map(space, name=None):
    ring = space.ring
    return MapData(
        name or f"id_{space.name}",
        space,
        space,
        0,
        {g: ring.gen(g) for g in ring.names},
        trivial_bundle(ring),
        fundamental=ring.one(),
    )


def inclusion(sub, ambient, name=None):
    """Linear inclusion RP^m in RP^n: x -> x, f_*(1) = x^{n-m}, normal bundle (n-m) copies of the tautological line."""
    S, T = sub.ring, ambient.ring
    k = T.top_degree - S.top_degree
    images = {g: (S.gen(S.names[0]) if S.ngens else S.zero()) for g in T.names}
    gamma = S.one() + (S.gen(S.names[0]) if S.ngens else S.zero())
    nu = VirtualBundle(S, 0, S.one())
    for _ in range(k):
        nu = whitney_sum(nu, VirtualBundle(S, 1, gamma))
    x = T.gen(T.names[0])
    return MapData(name or f"i{sub.name}_{ambient.name}", sub, ambient, k, images, nu, fundamental=x**k)


def product_with_space(P, f, name=None, mode="table"):
    """The map 1 x f : P x M -> P x X.

    ``mode="table"`` tabulates (1 x f)_*(a x b) = a x f_*(b); ``mode="fundamental"``
    uses 1 x f_*(1) and the projection formula instead (needs f^* onto).
    """
    src = product_space(P, f.source)
    tgt = product_space(P, f.target)
    S, T = src.ring, tgt.ring
    nP = P.ring.ngens
    images = {}
    for i, gname in enumerate(T.names):
        if i < nP:
            images[gname] = S.gen(gname)
        else:
            images[gname] = cross(P.ring.one(), f.images[i - nP])
    normal = f.normal.lift_over(P.ring)
    label = name or f"{P.name}x{f.name}"
    if mode == "fundamental":
        if f.fundamental is None:
            raise ConfigurationError(f"map {f.name} has no f_*(1) datum")
        return MapData(label, src, tgt, f.codim, images, normal, fundamental=cross(P.ring.one(), f.fundamental))
    table = {}
    for m in S.basis():
        alpha = GradedElement(P.ring, frozenset([m[:nP]]))
        beta = GradedElement(f.source.ring, frozenset([m[nP:]]))
        table[m] = cross(alpha, f.push(beta))
    return MapData(label, src, tgt, f.codim, images, normal, table=table)


def compose(f, g, name=None):
    """f o g for g: N -> M and f: M -> X; Umkehr tabulated as f_* g_*, normal bundle nu_g + g^* nu_f."""
    if g.target.ring != f.source.ring:
        raise ConfigurationError(f"cannot compose {f.name} after {g.name}: {g.target.name} != {f.source.name}")
    N = g.source.ring
    images = {gname: g.pull(img) for gname, img in zip(f.target.ring.names, f.images)}
    table = {m: f.push(g.push(GradedElement(N, frozenset([m])))) for m in N.basis()}
    normal = whitney_sum(g.normal, f.normal.pullback(g.pull))
    return MapData(name or f"{f.name}o{g.name}", g.source, f.target, f.codim + g.codim, images, normal, table=table)


# -- Umkehr axioms ---------------------------------------------------------


def check_projection_formula(f):
    """f_*(f^*(a) b) = a f_*(b) on basis pairs, degree bookkeeping, and top-class duality when meaningful."""
    S, T = f.source.ring, f.target.ring
    src = S.basis_elements()
    for b in src:
        fb = f.push(b)
        if not fb.is_zero() and fb.degrees() != [b.degree + f.codim]:
            return Verdict.fail(f"degree of f_*({b})", fb.degrees(), [b.degree + f.codim])
    for a in T.basis_elements():
        fa = f.pull(a)
        for b in src:
            lhs = f.push(fa * b)
            rhs = a * f.push(b)
            if lhs != rhs:
                return Verdict.fail(f"a={a}, b={b}", lhs, rhs)
    s_top, t_top = S.basis_in_degree(S.top_degree), T.basis_in_degree(T.top_degree)
    if len(s_top) == 1 and len(t_top) == 1 and S.top_degree + f.codim == T.top_degree and f.codim > 0:
        lhs = f.push(GradedElement(S, frozenset(s_top)))
        rhs = GradedElement(T, frozenset(t_top))
        if lhs != rhs:
            return Verdict.fail("f_* of the source top class", lhs, rhs)
    return Verdict.ok()


def check_functoriality(f, g, direct):
    """Compare ``direct`` against f o g: pullbacks, Umkehr maps (f o g)_* = f_* g_*, codim and normal bundle."""
    N, X = g.source.ring, f.target.ring
    if direct.source.ring != N or direct.target.ring != X:
        return Verdict.error(f"{direct.name} is not a map {g.source.name} -> {f.target.name}")
    if direct.codim != f.codim + g.codim:
        return Verdict.fail("codim", direct.codim, f.codim + g.codim)
    for a in X.basis_elements():
        lhs = direct.pull(a)
        rhs = g.pull(f.pull(a))
        if lhs != rhs:
            return Verdict.fail(f"pullback of {a}", lhs, rhs)
    for b in N.basis_elements():
        lhs = direct.push(b)
        rhs = f.push(g.push(b))
        if lhs != rhs:
            return Verdict.fail(f"Umkehr of {b}", lhs, rhs)
    expected = whitney_sum(g.normal, f.normal.pullback(g.pull))
    if direct.normal.total != expected.total or direct.normal.rank != expected.rank:
        return Verdict.fail("normal bundle", direct.normal, expected)
    return Verdict.ok()


def check_product_rule(P, f, F=None):
    """(1 x f)_*(a x b) = a x f_*(b) for every basis pair; ``F`` defaults to the f_*(1)-based product map."""
    if F is None:
        F = product_with_space(P, f, mode="fundamental")
    for a in P.ring.basis_elements():
        for b in f.source.ring.basis_elements():
            lhs = F.push(cross(a, b))
            rhs = cross(a, f.push(b))
            if lhs != rhs:
                return Verdict.fail(f"a={a}, b={b}", lhs, rhs)
    return Verdict.ok()


def double_cover_pushpull(p, sheets):
    """p_* p^* = sheets * id (mod 2) on every basis element of the target."""
    if p.codim != 0:
        return Verdict.error(f"{p.name} has codim {p.codim}; a covering has codim 0")
    T = p.target.ring
    for a in T.basis_elements():
        lhs = p.push(p.pull(a))
        rhs = a if sheets % 2 else T.zero()
        if lhs != rhs:
            return Verdict.fail(f"p_* p^* on {a}", lhs, rhs)
    return Verdict.ok()
