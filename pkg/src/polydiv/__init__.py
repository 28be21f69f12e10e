"""Exact univariate polynomial division, three independent ways.

Long division is the oracle; recurrent sequences and determinant
formulas reproduce it coefficient for coefficient, and the verify
machinery holds all routes to exact agreement.
"""
from .closedform import (
    RecurrentSequence,
    S_MONIC,
    T_GENERAL,
    divide_closed,
    quotient_closed,
    remainder_closed,
    s_sequence,
    t_sequence,
)
from .detengine import (
    DEFAULT_MAX_ORDER,
    DeltaMixedSpec,
    DeltaPureSpec,
    ExactMatrix,
    IndexOutOfRange,
    MatrixTooLarge,
    anti_identity_sign,
    build_anti_identity,
    build_bordered,
    build_hankel,
    build_hessenberg,
    build_permuted,
    delta_mixed,
    delta_pure_closed,
    delta_pure_direct,
    det_W_at,
    det_oracle,
    divide_det_formula,
    divide_det_ratio,
    hankel_det_closed,
    hessenberg_det_expansion,
    mixed_delta_matrix,
    pure_delta_matrix,
    quotient_from_dets,
    quotient_ratio,
)
from .polycore import (
    DegreeTooSmall,
    DivisionResult,
    DivisorViews,
    PolyDivError,
    Polynomial,
    Rational,
    ZeroDivisor,
    add,
    divisor_views,
    evaluate,
    long_divide,
    monic_reduction,
    mul,
    normalize,
    scale,
)

__all__ = [
    "DEFAULT_MAX_ORDER",
    "DegreeTooSmall",
    "DeltaMixedSpec",
    "DeltaPureSpec",
    "DivisionResult",
    "DivisorViews",
    "ExactMatrix",
    "IndexOutOfRange",
    "MatrixTooLarge",
    "PolyDivError",
    "Polynomial",
    "Rational",
    "RecurrentSequence",
    "S_MONIC",
    "T_GENERAL",
    "ZeroDivisor",
    "add",
    "anti_identity_sign",
    "build_anti_identity",
    "build_bordered",
    "build_hankel",
    "build_hessenberg",
    "build_permuted",
    "delta_mixed",
    "delta_pure_closed",
    "delta_pure_direct",
    "det_W_at",
    "det_oracle",
    "divide_closed",
    "divide_det_formula",
    "divide_det_ratio",
    "divisor_views",
    "evaluate",
    "hankel_det_closed",
    "hessenberg_det_expansion",
    "long_divide",
    "mixed_delta_matrix",
    "monic_reduction",
    "mul",
    "normalize",
    "pure_delta_matrix",
    "quotient_closed",
    "quotient_from_dets",
    "quotient_ratio",
    "remainder_closed",
    "s_sequence",
    "scale",
    "t_sequence",
]
