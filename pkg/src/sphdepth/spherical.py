"""Spherical depth: fraction of pairwise diameter balls containing a query.

Two routes are provided. :func:`spherical_depth_naive` scans all pairs in any
dimension. :func:`spherical_depth_fast2d` works in the plane: it translates
the data so the query is the origin, sorts by polar angle and, for every
point, counts the partners whose angular separation lies in [pi/2, 3pi/2]
with binary searches. A pair ``(x_i, x_j)`` spans a ball containing the
origin exactly when the angle ``x_i 0 x_j`` is at least a right angle, so
half the sum of those per-point counts is the number of containing pairs.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .geometry import (
    TWO_PI,
    InsufficientDataError,
    InvalidInputError,
    as_point,
    normalize_angles,
)

# Angular tolerance (radians), inclusive on both ends of the opposite arc.
ANGLE_TOL = 1e-9

HALF_PI = 0.5 * math.pi
THREE_HALF_PI = 1.5 * math.pi

# rows per block in the naive pair scan
_NAIVE_BLOCK = 64


@dataclass(frozen=True, eq=False)
class DataSet:
    """Immutable ``(n, d)`` array of points sharing one dimension."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64, copy=True)
        if pts.ndim == 1 and pts.size == 0:
            pts = pts.reshape(0, 0)
        if pts.ndim != 2:
            raise InvalidInputError(f"points must form a 2-d array, got shape {pts.shape}")
        if pts.shape[0] and pts.shape[1] < 1:
            raise InvalidInputError("points need at least one coordinate")
        if not np.isfinite(pts).all():
            raise InvalidInputError("non-finite coordinate in data set")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, data: "DataSet | Iterable[Sequence[float]] | np.ndarray") -> "DataSet":
        if isinstance(data, DataSet):
            return data
        if not isinstance(data, np.ndarray):
            data = list(data)
            if not data:
                return cls(np.empty((0, 0)))
        return cls(data)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, DataSet) and np.array_equal(self.points, other.points)

    def __hash__(self):
        return hash(self.points.tobytes())


@dataclass(frozen=True)
class DepthResult:
    count: int
    total: int

    @property
    def depth(self) -> float:
        return self.count / self.total if self.total else 0.0


@dataclass(frozen=True, eq=False)
class SortedAngles:
    """Sorted polar angles of the translated data, minus points at the origin."""

    thetas: np.ndarray
    zero_count: int

    @property
    def n(self) -> int:
        return len(self.thetas) + self.zero_count


def _prepare(q, data, *, planar: bool, min_n: int) -> tuple[tuple[float, ...], DataSet]:
    s = DataSet.of(data)
    q = as_point(q, 2 if planar else None)
    if s.n < min_n:
        raise InsufficientDataError(f"need at least {min_n} data points, got {s.n}")
    if s.dim != len(q):
        raise InvalidInputError(f"query has dimension {len(q)}, data has {s.dim}")
    return q, s


def spherical_depth_naive(q: Sequence[float], data) -> DepthResult:
    """Count pairs ``i < j`` whose closed diameter ball contains ``q``.

    Works in any dimension, O(d n^2). Uses the same arithmetic as
    :func:`~sphdepth.geometry.contains_in_sphere`.
    """
    q, s = _prepare(q, data, planar=False, min_n=2)
    x = s.points
    n = s.n
    qv = np.asarray(q)
    count = 0
    for i0 in range(0, n - 1, _NAIVE_BLOCK):
        i1 = min(i0 + _NAIVE_BLOCK, n - 1)
        rows = x[i0:i1]
        cols = x[i0 + 1 :]
        d_ab = np.zeros((i1 - i0, n - i0 - 1))
        d_qc = np.zeros_like(d_ab)
        for k in range(s.dim):
            a = rows[:, k, None]
            b = cols[None, :, k]
            t = a - b
            d_ab += t * t
            t = qv[k] - (a + b) * 0.5
            d_qc += t * t
        hit = d_ab >= 4.0 * d_qc
        # keep only column index > row index
        hit &= np.triu(np.ones(hit.shape, dtype=bool))
        count += int(np.count_nonzero(hit))
    return DepthResult(count, math.comb(n, 2))


def build_sorted_angles(q: Sequence[float], data) -> SortedAngles:
    s = DataSet.of(data)
    q = as_point(q, 2)
    if s.n == 0:
        return SortedAngles(np.empty(0), 0)
    if s.dim != 2:
        raise InvalidInputError(f"planar algorithm needs dimension 2, got {s.dim}")
    shifted = s.points - np.asarray(q)
    zero = (shifted[:, 0] == 0.0) & (shifted[:, 1] == 0.0)
    shifted = shifted[~zero]
    thetas = normalize_angles(np.arctan2(shifted[:, 1], shifted[:, 0]))
    thetas.sort()
    thetas.flags.writeable = False
    return SortedAngles(thetas, int(zero.sum()))


def count_opposite_arc(angles: SortedAngles, theta: float, tol: float = ANGLE_TOL) -> int:
    """Number of stored angles ``t`` with ``pi/2 <= |theta - t| <= 3pi/2`` (widened by ``tol``).

    The qualifying angles form at most two contiguous runs of the sorted
    list: those above ``theta`` and those below it.
    """
    t = angles.thetas
    above = bisect_right(t, theta + THREE_HALF_PI + tol) - bisect_left(t, theta + HALF_PI - tol)
    below = bisect_right(t, theta - HALF_PI + tol) - bisect_left(t, theta - THREE_HALF_PI - tol)
    return above + below


def opposite_arc_sizes(thetas: np.ndarray, tol: float = ANGLE_TOL) -> np.ndarray:
    """Vectorized :func:`count_opposite_arc` for every entry of sorted ``thetas``."""
    above = np.searchsorted(thetas, thetas + THREE_HALF_PI + tol, side="right") - np.searchsorted(
        thetas, thetas + HALF_PI - tol, side="left"
    )
    below = np.searchsorted(thetas, thetas - HALF_PI + tol, side="right") - np.searchsorted(
        thetas, thetas - THREE_HALF_PI - tol, side="left"
    )
    return above + below


def count_from_angles(angles: SortedAngles, tol: float = ANGLE_TOL) -> int:
    """Containing-pair count from sorted angles, including origin coincidences."""
    z = angles.zero_count
    m = len(angles.thetas)
    arc_sum = int(opposite_arc_sizes(np.asarray(angles.thetas), tol).sum())
    # a data point at the query puts the query on the boundary of every ball it spans
    return arc_sum // 2 + z * m + math.comb(z, 2)


def spherical_depth_fast2d(q: Sequence[float], data, tol: float = ANGLE_TOL) -> DepthResult:
    """Planar spherical depth in O(n log n)."""
    q, s = _prepare(q, data, planar=True, min_n=2)
    angles = build_sorted_angles(q, s)
    return DepthResult(count_from_angles(angles, tol), math.comb(s.n, 2))


def spherical_depth(q: Sequence[float], data) -> DepthResult:
    """Fast planar route for 2-d data, pair scan otherwise."""
    s = DataSet.of(data)
    if s.dim == 2:
        return spherical_depth_fast2d(q, s)
    return spherical_depth_naive(q, s)


def angular_margin(q: Sequence[float], data) -> float:
    """Smallest distance of any pairwise angular separation from pi/2 or 3pi/2.

    Pairs involving a point at ``q`` are ignored. Used to keep oracle
    comparisons away from the tolerance band, O(n^2).
    """
    angles = build_sorted_angles(q, data)
    t = np.asarray(angles.thetas)
    if len(t) < 2:
        return math.inf
    diff = np.abs(t[:, None] - t[None, :])
    iu = np.triu_indices(len(t), 1)
    d = diff[iu]
    return float(np.minimum(np.abs(d - HALF_PI), np.abs(d - THREE_HALF_PI)).min())
