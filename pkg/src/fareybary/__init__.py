"""Exact arithmetic for the Farey-Bary map, a planar analogue of Minkowski's question-mark function."""

from __future__ import annotations

from .algebraic import (
    CubicResult,
    NotDominant,
    PeriodicSpec,
    char_poly,
    isolate_dominant_root,
    periodic_to_cubic,
    periodic_to_rational,
)
from .bary import (
    BaryState,
    bary_area,
    bary_expand,
    bary_partition,
    bary_replay,
    bary_step_matrix,
    bary_subdivide,
    periodic_fixed_point,
)
from .delta import ConvergenceError, DeltaResult, delta, delta_inverse, delta_n
from .exact import (
    BASE_MATRIX,
    BASE_TRIANGLE,
    DegenerateError,
    DomainError,
    LatticeVec,
    PlanePoint,
    TriangleState,
    barycentric_coords,
    farey_sum,
    minkowski_q,
    normalize,
    point_to_vec,
    shoelace_area,
    triangle_area,
    vec_to_point,
)
from .farey import (
    CaseTag,
    CompressedStep,
    ExpansionSequence,
    Termination,
    codec_compress,
    codec_expand,
    expand,
    locate,
    parse_sequence,
    partition,
    replay,
    step_matrix,
    subdivide,
)
from .numberfield import AlgebraicNumber, AlgebraicPoint, IntPolynomial, NumberField
from .render import render_partition
from .singularity import (
    RatioRecord,
    StatSummary,
    build_TL,
    lemma_inequality_check,
    monte_carlo,
    ratio_series,
)

__version__ = "0.1.0"
