"""Exact truncated (g,K)-modules of SU(2,1) and their unitary dual.

Everything is computed in exact rational (or Gaussian rational)
arithmetic: module construction, brute-force verification of all algebra
relations, the product-sign unitarity criterion, and the classification of
parameters into the irreducible unitary families.
"""

from .algebra import AlgebraElement, Generator, bracket, real_form_basis
from .builder import BasisIndex, TruncatedModule, build, support_of
from .classify import (
    ClassificationRecord,
    c_special,
    c_threshold,
    classify,
    embed_W,
    enumerate_dual,
    parse_label,
)
from .coefficients import (
    ConeParams,
    EdgeProducts,
    GaugeQuad,
    TransitionCoeffs,
    VertexParams,
    gauge_quad,
    products,
    solve_vertex_products,
    transition_coeffs,
    w_vertex_products,
)
from .errors import (
    DegenerateInput,
    EmptyTruncation,
    InconsistentGauge,
    InvalidBasisIndex,
    InvalidParameter,
    Su21Error,
    UnderdeterminedVertex,
)
from .lattice import ConeCoord, KType, Region, from_ktype, neighbors, to_ktype
from .scalars import (
    GaussianRational,
    Rational,
    SignClass,
    parse_rational,
    parse_scalar,
    render_rational,
    render_scalar,
    sign_class,
)
from .sl2 import (
    Parity,
    Sl2Classification,
    Sl2Kind,
    Sl2Params,
    sl2_classify,
    sl2_coeffs,
    su2_finite_action,
)
from .unitarity import (
    NormTable,
    UnitarityVerdict,
    build_norms,
    check_adjoint,
    is_unitary,
    su2_norms,
)
from .verify import VerificationReport, check_coefficient_relations, check_commutators

__all__ = [
    "AlgebraElement",
    "BasisIndex",
    "ClassificationRecord",
    "ConeCoord",
    "ConeParams",
    "DegenerateInput",
    "EdgeProducts",
    "EmptyTruncation",
    "GaugeQuad",
    "GaussianRational",
    "Generator",
    "InconsistentGauge",
    "InvalidBasisIndex",
    "InvalidParameter",
    "KType",
    "NormTable",
    "Parity",
    "Rational",
    "Region",
    "SignClass",
    "Sl2Classification",
    "Sl2Kind",
    "Sl2Params",
    "Su21Error",
    "TransitionCoeffs",
    "TruncatedModule",
    "UnderdeterminedVertex",
    "UnitarityVerdict",
    "VerificationReport",
    "VertexParams",
    "bracket",
    "build",
    "build_norms",
    "c_special",
    "c_threshold",
    "check_adjoint",
    "check_coefficient_relations",
    "check_commutators",
    "classify",
    "embed_W",
    "enumerate_dual",
    "from_ktype",
    "gauge_quad",
    "is_unitary",
    "neighbors",
    "parse_label",
    "parse_rational",
    "parse_scalar",
    "products",
    "real_form_basis",
    "render_rational",
    "render_scalar",
    "sign_class",
    "sl2_classify",
    "sl2_coeffs",
    "solve_vertex_products",
    "su2_finite_action",
    "su2_norms",
    "support_of",
    "to_ktype",
    "transition_coeffs",
    "w_vertex_products",
]
