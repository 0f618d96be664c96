"""Checkers for the immersion formulas and the suite runner.

For a proper self-transverse immersion f: M -> X of codimension k:

* Thom:         Sq^i f_*(1) = f_* w_i(nu_f) for every i;
* equivariant:  P_l(f_*(1)) = (1 x f)_* w_k(gamma_l (x) nu_f) in H^*(RP^l x X),
  where P_l(a) = sum_i mu^{k-i} x Sq^i(a);
* Whitney:      f_*(1)^2 = f_* w_k(nu_f), the mod-2 shadow of the double-point formula.

The double-point term of the equivariant formula vanishes mod 2 and is not
computed.
"""

from dataclasses import dataclass

from . import steenrod
from .charclass import sw, twist_top_class
from .errors import ConfigurationError, Mod2CohError
from .f2poly import GradedElement, cross, tensor
from .report import Verdict
from .steenrod import sq
from .topology import (
    check_functoriality,
    check_product_rule,
    check_projection_formula,
    double_cover_pushpull,
    product_with_space,
    projective_space,
)

__all__ = [
    "VerificationTask",
    "KINDS",
    "check_thom",
    "check_whitney_mod2",
    "internal_op",
    "restrict_to_fibre",
    "check_internal_op",
    "equivariant_sides",
    "check_equivariant",
    "thom_expansion",
    "run_task",
    "run_suite",
]

KINDS = (
    "thom",
    "equivariant",
    "whitney",
    "internal-op",
    "axioms",
    "adem",
    "cover",
    "projection",
    "functor",
    "product-rule",
)

MU = "mu"


@dataclass(frozen=True)
class VerificationTask:
    id: str
    kind: str
    target: str  # map or space name
    ell: int | None = None
    degree: int | None = None
    a: int | None = None
    b: int | None = None
    sheets: int | None = None
    others: tuple = ()  # extra map/space names (functor, product-rule)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown task kind {self.kind!r}")

    @property
    def parameter(self):
        parts = []
        if self.kind == "adem":
            parts.append(f"a={self.a} b={self.b}")
        if self.ell is not None:
            parts.append(f"ell={self.ell}")
        if self.degree is not None:
            parts.append(f"upto={self.degree}")
        if self.sheets is not None:
            parts.append(f"sheets={self.sheets}")
        if self.others:
            parts.append("with=" + ",".join(self.others))
        return " ".join(parts)


def _require_rank(f):
    if f.normal.rank != f.codim:
        raise ConfigurationError(f"map {f.name}: normal bundle rank {f.normal.rank} != codim {f.codim}")


def check_thom(f):
    """Sq^i f_*(1) = f_* w_i(nu_f) for 0 <= i <= k, and Sq^i f_*(1) = 0 above k."""
    _require_rank(f)
    k = f.codim
    alpha = f.push(f.source.ring.one())
    for i in range(k + 1):
        lhs = sq(i, alpha)
        rhs = f.push(sw(i, f.normal))
        if lhs != rhs:
            return Verdict.fail(f"i={i}", lhs, rhs)
    zero = f.target.ring.zero()
    for i in range(k + 1, 2 * k + 2):
        lhs = sq(i, alpha)
        if lhs != zero:
            return Verdict.fail(f"i={i}", lhs, zero)
    return Verdict.ok()


def check_whitney_mod2(f):
    """f_*(1) cup f_*(1) = f_* e(nu_f) with e the top Stiefel-Whitney class."""
    _require_rank(f)
    alpha = f.push(f.source.ring.one())
    lhs = alpha * alpha
    rhs = f.push(sw(f.codim, f.normal))
    if lhs != rhs:
        return Verdict.fail(f"i={f.codim}", lhs, rhs)
    return Verdict.ok()


def _fibre_space(ell):
    return projective_space(ell, gen=MU)


def internal_op(alpha, ell):
    """P_l(alpha) = sum_i mu^{k-i} x Sq^i(alpha) in H^*(RP^l x X), k = |alpha|."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    P = _fibre_space(ell).ring
    ring = tensor(P, alpha.ring)
    if alpha.is_zero():
        return ring.zero()
    k = alpha.degree  # raises on mixed degrees
    mu = P.gen(MU)
    out = ring.zero()
    for i in range(k + 1):
        out = out + cross(mu ** (k - i), sq(i, alpha))
    return out


def restrict_to_fibre(c, base_ring):
    """Restrict a class on RP^l x X to X by mu -> 0 (keeps the mu-free part)."""
    n = c.ring.ngens - base_ring.ngens
    return GradedElement(base_ring, frozenset(m[n:] for m in c.terms if not any(m[:n])))


def check_internal_op(ring, ell, max_degree):
    """The restriction of P_l(a) along X -> RP^l x X is a cup a, for basis a up to ``max_degree``."""
    for a in ring.basis_elements(max_degree):
        lhs = restrict_to_fibre(internal_op(a, ell), ring)
        rhs = a * a
        if lhs != rhs:
            return Verdict.fail(f"a={a}", lhs, rhs)
    return Verdict.ok()


def equivariant_sides(f, ell):
    """Both sides of P_l(f_*(1)) = (1 x f)_* w_k(gamma_l (x) nu_f), plus the product map used."""
    _require_rank(f)
    P = _fibre_space(ell)
    F = product_with_space(P, f)
    lhs = internal_op(f.push(f.source.ring.one()), ell)
    mu = cross(P.ring.gen(MU), f.source.ring.one())
    rhs = F.push(twist_top_class(mu, F.normal))
    return lhs, rhs, F


def check_equivariant(f, ell):
    lhs, rhs, F = equivariant_sides(f, ell)
    if lhs.ring != rhs.ring:
        return Verdict.error(f"sides live in different rings for {f.name}")
    if lhs != rhs:
        return Verdict.fail(f"ell={ell}", lhs, rhs)
    return Verdict.ok()


def thom_expansion(f, ell):
    """sum_i mu^{k-i} x f_* w_i(nu_f): the termwise Thom identities assembled over RP^l."""
    P = _fibre_space(ell).ring
    mu = P.gen(MU)
    out = tensor(P, f.target.ring).zero()
    for i in range(f.codim + 1):
        out = out + cross(mu ** (f.codim - i), f.push(sw(i, f.normal)))
    return out


def _clamp(d, max_degree):
    if max_degree is None:
        return d
    return min(d, max_degree)


def run_task(task, catalog, max_degree=None):
    """Evaluate one task against ``catalog`` (an object with ``spaces`` and ``maps`` dicts)."""
    try:
        kind = task.kind
        if kind in ("axioms", "adem", "internal-op"):
            space = catalog.spaces[task.target]
            d = _clamp(task.degree, max_degree)
            if kind == "axioms":
                v = steenrod.check_axioms(space.ring, d)
            elif kind == "adem":
                v = steenrod.check_adem(space.ring, task.a, task.b, d)
            else:
                v = check_internal_op(space.ring, task.ell, d)
        else:
            f = catalog.maps[task.target]
            if kind == "thom":
                v = check_thom(f)
            elif kind == "whitney":
                v = check_whitney_mod2(f)
            elif kind == "equivariant":
                v = check_equivariant(f, task.ell)
            elif kind == "cover":
                v = double_cover_pushpull(f, task.sheets)
            elif kind == "projection":
                v = check_projection_formula(f)
            elif kind == "functor":
                outer, inner = (catalog.maps[n] for n in task.others)
                v = check_functoriality(outer, inner, f)
            elif kind == "product-rule":
                P = catalog.spaces[task.others[0]]
                base = catalog.maps[task.others[1]]
                v = check_product_rule(P, base, f)
                if v.passed:
                    v = check_product_rule(P, base)
            else:  # pragma: no cover - guarded by VerificationTask
                raise ValueError(kind)
    except KeyError as exc:
        v = Verdict.error(f"unknown catalog entry {exc.args[0]!r}")
    except Mod2CohError as exc:
        v = Verdict.error(str(exc))
    except Exception as exc:  # noqa: BLE001 - a task must never abort the suite
        v = Verdict.error(f"{type(exc).__name__}: {exc}")
    return v.for_task(task)


def run_suite(tasks, catalog, max_degree=None):
    """Run every task; verdicts come back ordered by task id."""
    verdicts = [run_task(t, catalog, max_degree) for t in tasks]
    return sorted(verdicts, key=lambda v: v.task.id)
