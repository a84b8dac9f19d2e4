"""Exact algebra of characteristic-one semirings: staircases, Newton polygons,
Frobenius correspondences, topos points as supernatural numbers, and a
desk-scale numerical check of the explicit formula (``charone.zeta``)."""
from .correspondences import (
    DeformedCorrespondence,
    ExponentVec,
    GermExponent,
    Presentation,
    ReducedCorrespondence,
    compose,
    dedekind_cut,
    dedekind_cut_bounded,
    germ_add,
    germ_mul,
    identity_eps,
    make_correspondence,
    presentation,
    recover_pair,
    span_reduce,
)
from .errors import (
    CharoneError,
    ConfigError,
    DepthExceeded,
    DivergenceError,
    HullMismatch,
    NotInSubgroup,
    NotRecoverable,
    ParseError,
    SupportError,
    UnsupportedComposition,
    UnsupportedSlopeProduct,
)
from .exact import Surd
from .points import (
    GENERIC,
    RankOneElem,
    Supernatural,
    global_sections_check,
    partial_fractions,
    points_isomorphic,
    stalk_ops,
    subgroup_contains,
    theta_image,
)
from .polygon import (
    NewtonPolygon,
    ReducedElement,
    cancellation_witness,
    gamma,
    poly_add,
    poly_mul,
    reduced_equal,
    sigma,
)
from .slopes import (
    ContinuedFractionSlope,
    RationalSlope,
    Slope,
    SurdSlope,
    make_slope,
    parse_slope,
    slope_from_json,
    sqrt_slope,
)
from .square import (
    Staircase,
    canonicalize,
    mu_frobenius,
    sq_add,
    sq_congruent,
    sq_evaluate,
    sq_frobenius,
    sq_mu,
    sq_mul,
)
from .tropical import INF, Bool, Rmax, Zmin, zmin_add, zmin_frobenius, zmin_mul

__version__ = "0.1.0"
