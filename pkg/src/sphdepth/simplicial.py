"""Simplicial depth over closed triangles in the plane.

The fast route counts the complement: a triangle misses ``q`` exactly when
its three vertices fit strictly inside an open half-plane through ``q``. If
the angles about ``q`` are sorted, each such triple is counted once from its
first vertex in counterclockwise order, so

    count = C(n, 3) - sum_i C(h_i, 2)

with ``h_i`` the number of points strictly ahead of point ``i`` by less than
pi. Ties and exact antipodes make that identity fragile under rounding,
so those inputs are reported as non-generic and resolved against the closed
triangle predicate instead.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .geometry import TWO_PI, InsufficientDataError, as_point, normalize_angles, points_in_triangles
from .spherical import ANGLE_TOL, DataSet, DepthResult, _prepare, spherical_depth_naive

# Non-generic inputs up to this size are resolved by the full naive scan.
NAIVE_FALLBACK_MAX = 120


class SimplicialResult(DepthResult):
    pass


def _orient_signs(x: np.ndarray, q) -> np.ndarray:
    """``P[i, j]`` = sign of orientation(x_i, x_j, q), as computed by point_in_triangle."""
    qx, qy = float(q[0]), float(q[1])
    ax, ay = x[:, 0, None], x[:, 1, None]
    bx, by = x[None, :, 0], x[None, :, 1]
    v = (bx - ax) * (qy - ay) - (by - ay) * (qx - ax)
    return np.sign(v).astype(np.int8)


def simplicial_depth_naive(q: Sequence[float], data) -> SimplicialResult:
    """Count closed triangles ``i < j < k`` containing ``q``. O(n^3)."""
    q, s = _prepare(q, data, planar=True, min_n=3)
    x = s.points
    n = s.n
    p = _orient_signs(x, q)
    count = 0
    for i in range(n - 2):
        o1 = p[i, i + 1 :, None]          # (a=i, b=j)
        o2 = p[i + 1 :, i + 1 :]          # (b=j, c=k)
        o3 = p[None, i + 1 :, i]          # (c=k, a=i)
        pos = (o1 >= 0) & (o2 >= 0) & (o3 >= 0)
        neg = (o1 <= 0) & (o2 <= 0) & (o3 <= 0)
        hit = np.triu(pos | neg, 1)
        flat = np.triu((o1 == 0) & (o2 == 0) & (o3 == 0), 1)
        count += int(np.count_nonzero(hit))
        if flat.any():
            # all three orientations vanish: decide on the spanned segment
            jj, kk = np.nonzero(flat)
            jj += i + 1
            kk += i + 1
            ii = np.full_like(jj, i)
            ok = points_in_triangles(q, x[ii], x[jj], x[kk])
            count -= int(np.count_nonzero(~ok))
    return SimplicialResult(count, math.comb(n, 3))


def _sorted_nonzero_angles(q, x: np.ndarray):
    shifted = x - np.asarray(q)
    nz = ~((shifted[:, 0] == 0.0) & (shifted[:, 1] == 0.0))
    idx = np.flatnonzero(nz)
    thetas = normalize_angles(np.arctan2(shifted[nz, 1], shifted[nz, 0]))
    order = np.argsort(thetas, kind="stable")
    return thetas[order], idx[order], int((~nz).sum())


def _ahead_counts(thetas: np.ndarray) -> np.ndarray:
    """Points strictly ahead of each sorted position within an open half-turn.

    Equal angles count as ahead when they come later in the sorted order.
    """
    ext = np.concatenate([thetas, thetas + TWO_PI])
    hi = thetas + math.pi
    open_arc = np.searchsorted(ext, hi, side="left") - np.searchsorted(ext, thetas, side="right")
    ties = np.searchsorted(thetas, thetas, side="right") - np.arange(len(thetas)) - 1
    return open_arc + ties


def _near_pairs(thetas: np.ndarray, tol: float) -> np.ndarray:
    """Sorted-position pairs whose angles agree modulo pi within ``tol``."""
    m = len(thetas)
    if m < 2:
        return np.empty((0, 2), dtype=np.intp)
    phi = np.mod(thetas, math.pi)
    order = np.argsort(phi, kind="stable")
    ph = phi[order]
    ext = np.concatenate([ph, ph + math.pi])
    upper = np.searchsorted(ext, ph + tol, side="right")
    upper = np.minimum(upper, np.arange(m) + m)  # never wrap back onto itself
    span = upper - np.arange(m) - 1
    if not span.any():
        return np.empty((0, 2), dtype=np.intp)
    starts = np.repeat(np.arange(m), span)
    offsets = np.arange(span.sum()) - np.repeat(np.cumsum(span) - span, span) + 1
    partners = (starts + offsets) % m
    pairs = np.stack([order[starts], order[partners]], axis=1)
    pairs.sort(axis=1)
    return np.unique(pairs, axis=0)


def is_generic(q: Sequence[float], data, tol: float = ANGLE_TOL) -> bool:
    s = DataSet.of(data)
    thetas, _, zeros = _sorted_nonzero_angles(as_point(q, 2), s.points)
    return zeros == 0 and len(_near_pairs(thetas, tol)) == 0


def simplicial_depth_fast2d(q: Sequence[float], data, tol: float = ANGLE_TOL) -> SimplicialResult | None:
    """Angular-counting simplicial depth, or ``None`` if the input is not generic.

    Generic means no data point equals ``q`` and no two angles about ``q``
    are equal or antipodal within ``tol``.
    """
    q, s = _prepare(q, data, planar=True, min_n=3)
    thetas, _, zeros = _sorted_nonzero_angles(q, s.points)
    if zeros or len(_near_pairs(thetas, tol)):
        return None
    h = _ahead_counts(thetas)
    missing = int((h * (h - 1) // 2).sum())
    return SimplicialResult(math.comb(s.n, 3) - missing, math.comb(s.n, 3))


def simplicial_depth_repaired(q: Sequence[float], data, tol: float = ANGLE_TOL) -> SimplicialResult:
    """Angular counting with the ambiguous triples re-decided by the closed predicate.

    Every triple containing a near-tie or near-antipodal pair is checked with
    :func:`~sphdepth.geometry.point_in_triangle` and the counting identity is
    corrected by the difference. Triples using a point equal to ``q`` always
    contain it. Cost is O(n log n + k n) for ``k`` flagged pairs.
    """
    q, s = _prepare(q, data, planar=True, min_n=3)
    x = s.points
    thetas, orig, zeros = _sorted_nonzero_angles(q, x)
    m = len(thetas)
    h = _ahead_counts(thetas)
    missing = int((h * (h - 1) // 2).sum())

    pairs = _near_pairs(thetas, tol)
    if len(pairs):
        # every triple (pair + third point), deduplicated, in sorted-position space
        third = np.arange(m)
        a = np.repeat(pairs[:, 0], m)
        b = np.repeat(pairs[:, 1], m)
        c = np.tile(third, len(pairs))
        keep = (c != a) & (c != b)
        tri = np.sort(np.stack([a[keep], b[keep], c[keep]], axis=1), axis=1)
        tri = np.unique(tri, axis=0)

        # multiplicity with which the identity counted each triple as missing q
        ext = thetas + TWO_PI
        hi = thetas + math.pi

        def ahead(u, v):
            tu, tv = thetas[u], thetas[v]
            open_arc = ((tu < tv) & (tv < hi[u])) | ((tu < ext[v]) & (ext[v] < hi[u]))
            return open_arc | ((tv == tu) & (v > u))

        u, v, w = tri[:, 0], tri[:, 1], tri[:, 2]
        mult = (
            (ahead(u, v) & ahead(u, w)).astype(int)
            + (ahead(v, u) & ahead(v, w))
            + (ahead(w, u) & ahead(w, v))
        )
        # closed predicate with vertices in data-set order, as the naive scan does
        verts = np.sort(orig[tri], axis=1)
        inside = points_in_triangles(q, x[verts[:, 0]], x[verts[:, 1]], x[verts[:, 2]])
        missing -= int(mult.sum()) - int(np.count_nonzero(~inside))

    total = math.comb(s.n, 3)
    return SimplicialResult(total - missing, total)


def simplicial_depth(q: Sequence[float], data) -> tuple[SimplicialResult, str]:
    """Fast route when generic, otherwise a closed-predicate fallback.

    Returns the result and the method that produced it (``"fast2d"`` or
    ``"naive"``).
    """
    s = DataSet.of(data)
    res = simplicial_depth_fast2d(q, s)
    if res is not None:
        return res, "fast2d"
    if s.n <= NAIVE_FALLBACK_MAX:
        return simplicial_depth_naive(q, s), "naive"
    return simplicial_depth_repaired(q, s), "naive"


def bin_sin_counts(q: Sequence[float], data) -> tuple[int, int]:
    """Numbers of containing sphere areas and containing closed triangles."""
    s = DataSet.of(data)
    if s.n < 3:
        raise InsufficientDataError(f"need at least 3 data points, got {s.n}")
    return spherical_depth_naive(q, s).count, simplicial_depth(q, s)[0].count
