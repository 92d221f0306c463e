"""Concatenated completely regular codes: constructions and exhaustive verification."""

from .analysis import (
    check_estesos,
    design_lambda_i,
    predicted_c3,
    predicted_dual_weights,
    predicted_ia,
    predicted_ia_extended_II,
    verify_design,
)
from .code import (
    LinearCode,
    WeightDistribution,
    code_from_parity,
    dual,
    extend_code,
    external_distance,
    macwilliams,
    min_distance,
    weight_distribution,
)
from .constructions import (
    construction_I,
    construction_II,
    cyclic_hamming,
    cyclic_shift,
    shift_columns,
    sporadic_code,
)
from .cosets import (
    CRReport,
    IntersectionArray,
    analyze_cosets,
    coset_weight_slice,
    uniformly_packed_params,
    verify_completely_regular,
    verify_cr_bruteforce,
)
from .gfq import FieldSpec, field_new
from .matgf import GFMatrix, GFVector, null_space, row_space_equal, rref

__version__ = "0.1.0"
