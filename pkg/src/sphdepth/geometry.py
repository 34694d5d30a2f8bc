"""Planar and d-dimensional predicates shared by the depth computations.

All predicates treat boundaries as inside: closed balls, closed triangles and
angles of exactly a right angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

TWO_PI = 2.0 * math.pi


class InvalidInputError(ValueError):
    pass


class InsufficientDataError(ValueError):
    pass


class DegenerateAngleError(ValueError):
    pass


def as_point(p: Sequence[float], dim: int | None = None) -> tuple[float, ...]:
    """Coerce ``p`` to a tuple of finite floats, optionally checking its dimension."""
    try:
        coords = tuple(float(c) for c in p)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"not a point: {p!r}") from exc
    if not coords:
        raise InvalidInputError("point must have at least one coordinate")
    if not all(math.isfinite(c) for c in coords):
        raise InvalidInputError(f"non-finite coordinate in {coords}")
    if dim is not None and len(coords) != dim:
        raise InvalidInputError(f"expected dimension {dim}, got {len(coords)}")
    return coords


@dataclass(frozen=True)
class PolarPoint:
    r: float
    theta: float

    def to_cartesian(self) -> tuple[float, float]:
        return (self.r * math.cos(self.theta), self.r * math.sin(self.theta))


@dataclass(frozen=True)
class SphereArea:
    """Closed ball whose diameter is the segment between two points."""

    center: tuple[float, ...]
    radius: float

    @classmethod
    def from_pair(cls, a: Sequence[float], b: Sequence[float]) -> "SphereArea":
        a = as_point(a)
        b = as_point(b, len(a))
        center = tuple((x + y) * 0.5 for x, y in zip(a, b))
        return cls(center, 0.5 * math.dist(a, b))

    def contains(self, q: Sequence[float]) -> bool:
        # Uses the stored radius, so it can differ from contains_in_sphere on
        # the boundary by rounding. Use contains_in_sphere for counting.
        q = as_point(q, len(self.center))
        return math.dist(q, self.center) <= self.radius


def normalize_angle(theta: float) -> float:
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    # fmod of a tiny negative angle plus 2*pi can round up to exactly 2*pi
    if t >= TWO_PI:
        t = 0.0
    return t


def normalize_angles(thetas: np.ndarray) -> np.ndarray:
    t = np.mod(thetas, TWO_PI)
    t[t >= TWO_PI] = 0.0
    return t


def to_polar(p: Sequence[float]) -> PolarPoint:
    x, y = as_point(p, 2)
    r = math.hypot(x, y)
    if r == 0.0:
        return PolarPoint(0.0, 0.0)
    return PolarPoint(r, normalize_angle(math.atan2(y, x)))


def contains_in_sphere(q: Sequence[float], a: Sequence[float], b: Sequence[float]) -> bool:
    """True iff ``q`` lies in the closed ball with diameter ``ab``.

    Compares ``|a-b|^2 >= 4 |q-c|^2`` with ``c`` the midpoint, so no square
    roots are taken.
    """
    q = as_point(q)
    a = as_point(a, len(q))
    b = as_point(b, len(q))
    d_ab = 0.0
    d_qc = 0.0
    for qi, ai, bi in zip(q, a, b):
        d_ab += (ai - bi) * (ai - bi)
        t = qi - (ai + bi) * 0.5
        d_qc += t * t
    return d_ab >= 4.0 * d_qc


def is_wide_angle(q: Sequence[float], a: Sequence[float], b: Sequence[float]) -> bool:
    """True iff the angle a-q-b is at least a right angle."""
    qx, qy = as_point(q, 2)
    ax, ay = as_point(a, 2)
    bx, by = as_point(b, 2)
    ux, uy = ax - qx, ay - qy
    vx, vy = bx - qx, by - qy
    if (ux == 0.0 and uy == 0.0) or (vx == 0.0 and vy == 0.0):
        raise DegenerateAngleError("angle is undefined when a or b coincides with q")
    return ux * vx + uy * vy <= 0.0


def _orient_value(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def orientation(a: Sequence[float], b: Sequence[float], c: Sequence[float]) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 ccw, -1 cw, 0 collinear."""
    ax, ay = as_point(a, 2)
    bx, by = as_point(b, 2)
    cx, cy = as_point(c, 2)
    v = _orient_value(ax, ay, bx, by, cx, cy)
    return (v > 0.0) - (v < 0.0)


def point_in_triangle(
    q: Sequence[float], a: Sequence[float], b: Sequence[float], c: Sequence[float]
) -> bool:
    """Closed triangle membership.

    For collinear ``a, b, c`` the triangle is the segment they span.
    """
    qx, qy = as_point(q, 2)
    ax, ay = as_point(a, 2)
    bx, by = as_point(b, 2)
    cx, cy = as_point(c, 2)
    o1 = _orient_value(ax, ay, bx, by, qx, qy)
    o2 = _orient_value(bx, by, cx, cy, qx, qy)
    o3 = _orient_value(cx, cy, ax, ay, qx, qy)
    if o1 == 0.0 and o2 == 0.0 and o3 == 0.0:
        # q is on the common line of a degenerate triangle
        return (
            min(ax, bx, cx) <= qx <= max(ax, bx, cx)
            and min(ay, by, cy) <= qy <= max(ay, by, cy)
        )
    return (o1 >= 0.0 and o2 >= 0.0 and o3 >= 0.0) or (
        o1 <= 0.0 and o2 <= 0.0 and o3 <= 0.0
    )


def points_in_triangles(q, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Vectorized :func:`point_in_triangle` over rows of ``(k, 2)`` vertex arrays.

    Performs the same floating-point operations as the scalar version.
    """
    qx, qy = float(q[0]), float(q[1])
    ax, ay = a[:, 0], a[:, 1]
    bx, by = b[:, 0], b[:, 1]
    cx, cy = c[:, 0], c[:, 1]
    o1 = _orient_value(ax, ay, bx, by, qx, qy)
    o2 = _orient_value(bx, by, cx, cy, qx, qy)
    o3 = _orient_value(cx, cy, ax, ay, qx, qy)
    inside = ((o1 >= 0) & (o2 >= 0) & (o3 >= 0)) | ((o1 <= 0) & (o2 <= 0) & (o3 <= 0))
    flat = (o1 == 0) & (o2 == 0) & (o3 == 0)
    if flat.any():
        xs = np.stack([ax[flat], bx[flat], cx[flat]])
        ys = np.stack([ay[flat], by[flat], cy[flat]])
        inside[flat] = (
            (xs.min(axis=0) <= qx) & (qx <= xs.max(axis=0))
            & (ys.min(axis=0) <= qy) & (qy <= ys.max(axis=0))
        )
    return inside
