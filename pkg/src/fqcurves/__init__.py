"""Exact computations over finite fields: vanishing ideals of projective
point sets and plane curves with many rational points."""

from .census import CensusReport, CensusSpec, census, census_partition, figure_csv, figure_data, max_and_second
from .constructions import (
    FcParams,
    QPlusOneParams,
    build_fc,
    build_qplus1,
    build_remark_curve,
    search_line_free_c,
    verify_construction,
)
from .curves import (
    CurveReport,
    PlaneCurve,
    count_points,
    curve_report,
    line_components,
    missing_points,
    singular_points_ext,
    sziklai_classify,
)
from .gf import FieldSpec, FqElem, extension, field_make, parse_field
from .ideals import (
    gens_affine,
    gens_complement,
    gens_full_projective,
    minimal_degree_scan,
    verify_ideal_equals_vanishing,
    zero_locus,
)
from .linalg import FqMatrix, nullspace, rank, rref, solve
from .mpoly import Poly, divides_linear, parse_poly, restrict_to_line
from .projspace import PointSet, ProjPoint, enumerate_proj, linear_subspace_points, theta

__version__ = "0.1.0"
