"""powker: exact mod-p kernels of the total power operation on F_p[t, x],
Hom-dimension tables along the flag filtration, and torsion rank bounds."""

from ._version import __version__
from .errors import ConsistencyError
from .ffpoly import (
    BiPoly,
    FpScalar,
    PrimeModulus,
    TriPoly,
    binom_mod,
    divmod_x,
    homogeneous_component,
    is_divisible,
    parse_poly,
    poly_add,
    poly_mul,
    poly_pow,
)
from .steenrod import Parameters, SplitPoly, h_poly, parameters, q_of_split, total_power
from .reps import Representation, chern_classes, f_of, filtration_rep, r_poly
from .homspace import (
    FpMatrix,
    HomProblem,
    HomSpace,
    contains,
    div_r_shift,
    family_element,
    hom_space,
    ma_space,
    mul_r_shift,
    verify_k_lemma,
    verify_qr_identity,
    verify_substitution_identity,
)
from .bounds import (
    ORDER_STATEMENT,
    FiltrationRow,
    FiltrationTable,
    RankReport,
    SweepReport,
    SweepRow,
    filtration_table,
    pre_filtration_dims,
    rank_report,
    sweep,
)

__all__ = [
    "__version__",
    "ConsistencyError",
    "PrimeModulus",
    "FpScalar",
    "BiPoly",
    "TriPoly",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "divmod_x",
    "homogeneous_component",
    "is_divisible",
    "binom_mod",
    "parse_poly",
    "total_power",
    "Parameters",
    "parameters",
    "h_poly",
    "SplitPoly",
    "q_of_split",
    "Representation",
    "f_of",
    "r_poly",
    "chern_classes",
    "filtration_rep",
    "HomProblem",
    "HomSpace",
    "FpMatrix",
    "hom_space",
    "ma_space",
    "family_element",
    "contains",
    "mul_r_shift",
    "div_r_shift",
    "verify_qr_identity",
    "verify_substitution_identity",
    "verify_k_lemma",
    "FiltrationRow",
    "FiltrationTable",
    "RankReport",
    "SweepRow",
    "SweepReport",
    "filtration_table",
    "pre_filtration_dims",
    "rank_report",
    "sweep",
    "ORDER_STATEMENT",
]
