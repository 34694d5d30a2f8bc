"""Element Uniqueness decided through a planar spherical depth count.

Each value ``a`` of a same-sign multiset becomes four points of radius
``sqrt(1 + a^2)`` at angles ``atan(1/a) + k*pi/2`` for k = 0..3. With the
query at the origin, every point has exactly ``2m + 1`` partners at an angle
of at least pi/2 when the values are distinct, and a repeated value adds one
more partner to each of the eight points it generates. The containing-pair
count is therefore ``4m^2 + 2m`` exactly when the values are distinct.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .geometry import InvalidInputError, PolarPoint, normalize_angle
from .spherical import ANGLE_TOL, SortedAngles, count_from_angles

QUARTER_TURN = 0.5 * math.pi


@dataclass(frozen=True)
class ReductionSet:
    """The 4m polar points built from m same-sign values.

    Point ``k*m + i`` is value ``i`` rotated by ``k`` quarter turns.
    """

    values: tuple[float, ...]
    points: tuple[PolarPoint, ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.values)

    def cartesian(self) -> np.ndarray:
        return np.array([p.to_cartesian() for p in self.points])


def _check_values(values: Iterable[float]) -> tuple[float, ...]:
    vals = tuple(float(v) for v in values)
    if not all(math.isfinite(v) for v in vals):
        raise InvalidInputError("values must be finite")
    return vals


def build_reduction_set(values: Sequence[float]) -> ReductionSet:
    vals = _check_values(values)
    if any(v == 0.0 for v in vals):
        raise InvalidInputError("zero has no construction angle; handle zeros before building")
    if not (all(v > 0 for v in vals) or all(v < 0 for v in vals)):
        raise InvalidInputError("values must all share one sign; partition first")
    base = [math.atan(1.0 / v) for v in vals]
    points = []
    for k in range(4):
        for v, b in zip(vals, base):
            # k quarter turns added as repeated sums of one constant
            theta = b
            for _ in range(k):
                theta += QUARTER_TURN
            points.append(PolarPoint(math.sqrt(1.0 + v * v), normalize_angle(theta)))
    return ReductionSet(vals, tuple(points))


def reduction_count(r: ReductionSet, tol: float = ANGLE_TOL) -> int:
    """Containing-pair count for the origin, via the planar arc counter.

    The polar angles go straight into the sorted arc count, so pairs a
    quarter turn apart sit inside the tolerance band and count as containing.
    """
    thetas = np.sort(np.array([p.theta for p in r.points]))
    return count_from_angles(SortedAngles(thetas, 0), tol)


def reduction_count_exact(r: ReductionSet) -> int:
    """Same count as :func:`reduction_count` without floating-point angles.

    Base angles within one partition lie in an open quarter-turn interval and
    decrease with the value, so "partner at least a quarter turn ahead" only
    needs the quadrant offset and an exact comparison of the values. For a
    point from value ``a``, the closed opposite arc holds every point one half
    turn away, the next-quadrant points with value ``<= a`` and the
    previous-quadrant points with value ``>= a``.
    """
    vals = sorted(r.values)
    m = len(vals)
    per_value = sum(bisect_right(vals, a) + (m - bisect_left(vals, a)) for a in r.values)
    # four quadrants, each adds m opposite points per value; pairs were seen twice
    return (4 * (per_value + m * m)) // 2


def expected_unique_count(m: int) -> int:
    return 4 * m * m + 2 * m


@dataclass(frozen=True)
class PartitionVerdict:
    sign: str
    m: int
    count: int
    expected: int

    @property
    def unique(self) -> bool:
        return self.count == self.expected


@dataclass(frozen=True)
class UniquenessVerdict:
    unique: bool
    partitions: tuple[PartitionVerdict, ...]
    zero_count: int = 0

    def to_dict(self) -> dict:
        return {
            "unique": self.unique,
            "partitions": [
                {"sign": p.sign, "m": p.m, "count": p.count, "expected": p.expected}
                for p in self.partitions
            ],
        }


def check_uniqueness(values: Iterable[float], exact: bool = True) -> UniquenessVerdict:
    """Run the reduction on each sign partition and report the counts.

    ``exact=False`` uses the floating-point arc counter, which treats values
    whose construction angles differ by less than the angular tolerance as
    equal.
    """
    vals = _check_values(values)
    zeros = sum(1 for v in vals if v == 0.0)
    parts = []
    for sign, part in (("+", [v for v in vals if v > 0]), ("-", [v for v in vals if v < 0])):
        m = len(part)
        if m < 2:
            continue
        r = build_reduction_set(part)
        count = reduction_count_exact(r) if exact else reduction_count(r)
        parts.append(PartitionVerdict(sign, m, count, expected_unique_count(m)))
    unique = zeros < 2 and all(p.unique for p in parts)
    return UniquenessVerdict(unique, tuple(parts), zeros)


def decide_uniqueness(values: Iterable[float]) -> bool:
    """True iff all values are pairwise distinct."""
    return check_uniqueness(values).unique
