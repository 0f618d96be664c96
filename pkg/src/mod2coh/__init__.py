"""Exact mod-2 cohomology for immersions of projective spaces and their products."""

from .charclass import (
    VirtualBundle,
    euler_class,
    line_bundle,
    sw,
    trivial_bundle,
    twist_top_class,
    twist_top_oracle,
    whitney_sum,
)
from .dsl import TaskFile, load, parse, serialize
from .errors import (
    ConfigurationError,
    DegreeError,
    InvalidPresentation,
    Mod2CohError,
    ParseError,
    PresentationMismatch,
    RequiresHomogeneous,
)
from .f2poly import Generator, GradedElement, RingPresentation, cross, parse_element, tensor
from .report import Verdict, render_json, render_tsv
from .steenrod import SteenrodOp, adem_expansion, check_adem, check_axioms, check_cartan, sq, sq_compose, sq_total
from .topology import (
    MapData,
    Space,
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
    rp_infinity,
    umkehr,
)
from .verify import (
    VerificationTask,
    check_equivariant,
    check_internal_op,
    check_thom,
    check_whitney_mod2,
    internal_op,
    run_suite,
    run_task,
)

__version__ = "0.1.0"

__all__ = [
    "VirtualBundle",
    "euler_class",
    "line_bundle",
    "sw",
    "trivial_bundle",
    "twist_top_class",
    "twist_top_oracle",
    "whitney_sum",
    "TaskFile",
    "load",
    "parse",
    "serialize",
    "ConfigurationError",
    "DegreeError",
    "InvalidPresentation",
    "Mod2CohError",
    "ParseError",
    "PresentationMismatch",
    "RequiresHomogeneous",
    "Generator",
    "GradedElement",
    "RingPresentation",
    "cross",
    "parse_element",
    "tensor",
    "Verdict",
    "render_json",
    "render_tsv",
    "SteenrodOp",
    "adem_expansion",
    "check_adem",
    "check_axioms",
    "check_cartan",
    "sq",
    "sq_compose",
    "sq_total",
    "MapData",
    "Space",
    "check_functoriality",
    "check_product_rule",
    "check_projection_formula",
    "circle",
    "complex_projective_space",
    "compose",
    "double_cover_pushpull",
    "identity_map",
    "inclusion",
    "product_space",
    "product_with_space",
    "projective_space",
    "pullback",
    "rp_infinity",
    "umkehr",
    "VerificationTask",
    "check_equivariant",
    "check_internal_op",
    "check_thom",
    "check_whitney_mod2",
    "internal_op",
    "run_suite",
    "run_task",
    "__version__",
]
