"""Spherical and simplicial data depth in the plane and beyond."""

from .geometry import (
    DegenerateAngleError,
    InsufficientDataError,
    InvalidInputError,
    PolarPoint,
    SphereArea,
    contains_in_sphere,
    is_wide_angle,
    orientation,
    point_in_triangle,
    to_polar,
)
from .reduction import (
    ReductionSet,
    build_reduction_set,
    check_uniqueness,
    decide_uniqueness,
    reduction_count,
    reduction_count_exact,
)
from .simplicial import (
    SimplicialResult,
    bin_sin_counts,
    simplicial_depth,
    simplicial_depth_fast2d,
    simplicial_depth_naive,
)
from .spherical import (
    DataSet,
    DepthResult,
    SortedAngles,
    build_sorted_angles,
    count_opposite_arc,
    spherical_depth,
    spherical_depth_fast2d,
    spherical_depth_naive,
)

__version__ = "0.1.0"
