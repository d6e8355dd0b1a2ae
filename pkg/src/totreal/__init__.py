"""Characteristic-class calculator for totally real immersions and independent maps."""

from .catalog import (
    CharNumbers4,
    ManifoldDescriptor,
    chern_complexified,
    connected_sum,
    dual_sw_total,
    primitive,
    product,
    sw_total,
)
from .dim4 import Classify4Report, TriState, classify4, dual_pontryagin_vanishes, pontryagin_vanishes
from .dsl import manifold, parse_manifold_expr, render_expr
from .errors import CalcError, ParseError, SemanticError, UnsupportedQuery
from .obstruction import (
    NRange,
    ObstructionReport,
    QueryKind,
    existence_threshold,
    min_complement_rank,
    min_kernel_rank,
    obstruction_report,
    transversality_check,
)
from .ring import (
    GradedElement,
    Generator,
    Mode,
    RingPresentation,
    add,
    component,
    invert_unit,
    make_presentation,
    mul,
    pair_fundamental,
    reduce_mod2,
    top_nonzero_degree,
)

__version__ = "0.1.0"
