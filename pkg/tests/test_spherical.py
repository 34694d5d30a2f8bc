import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphdepth.geometry import InsufficientDataError, InvalidInputError, contains_in_sphere
from sphdepth.spherical import (
    ANGLE_TOL,
    DataSet,
    SortedAngles,
    angular_margin,
    build_sorted_angles,
    count_opposite_arc,
    opposite_arc_sizes,
    spherical_depth,
    spherical_depth_fast2d,
    spherical_depth_naive,
)


def brute_count(q, pts):
    return sum(contains_in_sphere(q, a, b) for a, b in combinations(pts, 2))


def brute_arc(thetas, theta, tol=ANGLE_TOL):
    out = 0
    for t in thetas:
        d = (t - theta) % (2 * math.pi)
        out += math.pi / 2 - tol <= d <= 1.5 * math.pi + tol
    return out


def test_dataset_basics():
    s = DataSet.of([(1, 2), (3, 4)])
    assert (s.n, s.dim, len(s)) == (2, 2, 2)
    assert s == DataSet.of(np.array([[1.0, 2.0], [3.0, 4.0]]))
    with pytest.raises(ValueError):
        s.points[0, 0] = 5
    assert DataSet.of([]).n == 0
    with pytest.raises(InvalidInputError):
        DataSet.of([(1, 2), (3, math.inf)])
    with pytest.raises(ValueError):
        DataSet.of([(1, 2), (3,)])


@pytest.mark.parametrize(
    "q,pts,count,depth",
    [
        ((0, 0), [(1, 0), (0, 1), (-1, 0)], 3, 1.0),
        ((10, 10), [(0, 0), (1, 0), (0, 1)], 0, 0.0),
        ((0.5, 0), [(0, 0), (1, 0)], 1, 1.0),
    ],
)
def test_naive_examples(q, pts, count, depth):
    res = spherical_depth_naive(q, pts)
    assert res.count == count == brute_count(q, pts)
    assert res.depth == depth


def test_naive_errors():
    with pytest.raises(InsufficientDataError):
        spherical_depth_naive((0, 0), [(1, 1)])
    with pytest.raises(InvalidInputError):
        spherical_depth_naive((0, 0, 0), [(1, 1), (2, 2)])


def test_naive_matches_brute_force_any_dimension(rng):
    for d in (1, 2, 3, 5):
        for _ in range(20):
            n = int(rng.integers(2, 150))
            pts = rng.uniform(-10, 10, (n, d))
            q = rng.uniform(-5, 5, d)
            assert spherical_depth_naive(q, pts).count == brute_count(q, pts)


def test_build_sorted_angles_examples():
    a = build_sorted_angles((0, 0), [(1, 0), (0, 1), (-1, 0)])
    assert a.zero_count == 0
    np.testing.assert_allclose(a.thetas, [0, math.pi / 2, math.pi])
    a = build_sorted_angles((1, 0), [(1, 0), (2, 0)])
    assert a.zero_count == 1 and a.thetas.tolist() == [0.0]
    a = build_sorted_angles((0, 0), [])
    assert a.zero_count == 0 and len(a.thetas) == 0


@pytest.mark.parametrize(
    "thetas,theta,expected",
    [
        ([0, math.pi / 2, math.pi], 0.0, 2),
        ([0, 0.1, 0.2], 0.0, 0),
        ([0, math.pi], 0.0, 1),
    ],
)
def test_count_opposite_arc_examples(thetas, theta, expected):
    a = SortedAngles(np.array(thetas, dtype=float), 0)
    assert count_opposite_arc(a, theta) == expected


@settings(max_examples=200)
@given(st.lists(st.floats(0, 2 * math.pi, exclude_max=True), max_size=40), st.floats(0, 2 * math.pi, exclude_max=True))
def test_count_opposite_arc_matches_enumeration(thetas, theta):
    t = np.sort(np.array(thetas, dtype=float))
    # stay off the band edges where the two formulations round differently
    d = (t - theta) % (2 * math.pi)
    edges = np.array([math.pi / 2 - ANGLE_TOL, 1.5 * math.pi + ANGLE_TOL])
    if len(d) and np.abs(d[:, None] - edges).min() < 1e-12:
        return
    got = count_opposite_arc(SortedAngles(t, 0), theta)
    assert got == brute_arc(t, theta)
    if len(t):
        idx = int(np.searchsorted(t, theta))
        assert opposite_arc_sizes(np.insert(t, idx, theta))[idx] == got


@pytest.mark.parametrize(
    "q,pts,count",
    [
        ((0, 0), [(1, 0), (0, 1), (-1, 0)], 3),
        ((0, 0), [(1, 0), (2, 0), (3, 0)], 0),
        ((1, 0), [(1, 0), (5, 5)], 1),
    ],
)
def test_fast_examples(q, pts, count):
    assert spherical_depth_fast2d(q, pts).count == count == spherical_depth_naive(q, pts).count


def test_fast_coincidence_and_duplicates():
    # two points at q, one duplicated pair away from q
    pts = [(0, 0), (0, 0), (3, 1), (3, 1), (-1, 2)]
    assert spherical_depth_fast2d((0, 0), pts).count == brute_count((0, 0), pts)
    with pytest.raises(InsufficientDataError):
        spherical_depth_fast2d((0, 0), [(1, 1)])
    with pytest.raises(InvalidInputError):
        spherical_depth_fast2d((0, 0), [(1, 1, 1), (2, 2, 2)])


def test_dispatch():
    assert spherical_depth((0, 0, 0), [(1, 0, 0), (-1, 0, 0)]).count == 1
    assert spherical_depth((0, 0), [(1, 0), (-1, 0)]).count == 1


def random_instance(rng, n):
    pts = rng.uniform(-10, 10, (n, 2))
    q = rng.uniform(-10, 10, 2)
    return q, pts


def test_fast_matches_naive_random(rng):
    checked = 0
    while checked < 200:
        q, pts = random_instance(rng, int(rng.integers(2, 200)))
        if angular_margin(q, pts) <= ANGLE_TOL:
            continue
        assert spherical_depth_fast2d(q, pts).count == spherical_depth_naive(q, pts).count
        checked += 1


def test_fast_matches_naive_on_lattice(rng):
    # exact right angles and antipodes land on the closed boundary for both routes
    for _ in range(200):
        n = int(rng.integers(2, 60))
        pts = rng.integers(-4, 5, (n, 2)).astype(float)
        q = rng.integers(-3, 4, 2).astype(float)
        assert spherical_depth_fast2d(q, pts).count == spherical_depth_naive(q, pts).count


def test_depth_range_and_integrality(rng):
    for _ in range(100):
        q, pts = random_instance(rng, int(rng.integers(2, 100)))
        res = spherical_depth_fast2d(q, pts)
        assert 0 <= res.count <= res.total == math.comb(len(pts), 2)
        assert 0.0 <= res.depth <= 1.0
        assert res.depth * res.total == pytest.approx(res.count)


def test_isometry_invariance(rng):
    for _ in range(100):
        q, pts = random_instance(rng, int(rng.integers(2, 100)))
        a = rng.uniform(0, 2 * math.pi)
        rot = np.array([[math.cos(a), -math.sin(a)], [math.sin(a), math.cos(a)]])
        shift = rng.uniform(-50, 50, 2)
        q2, pts2 = rot @ q + shift, pts @ rot.T + shift
        if min(angular_margin(q, pts), angular_margin(q2, pts2)) < 1e-6:
            continue
        assert spherical_depth_fast2d(q, pts).count == spherical_depth_fast2d(q2, pts2).count


def test_reflection_symmetry(rng):
    for _ in range(100):
        q, pts = random_instance(rng, int(rng.integers(2, 100)))
        assert spherical_depth_naive(q, pts) == spherical_depth_naive(-q, -pts)
        if angular_margin(q, pts) > 1e-6:
            assert spherical_depth_fast2d(q, pts) == spherical_depth_fast2d(-q, -pts)


def test_hull_points_are_covered(rng):
    for _ in range(300):
        n = int(rng.integers(3, 40))
        pts = rng.uniform(-10, 10, (n, 2))
        w = rng.dirichlet(np.ones(n))
        q = w @ pts
        assert spherical_depth_naive(q, pts).count >= 1
        assert spherical_depth_fast2d(q, pts).count >= 1


def test_duplication_never_decreases(rng):
    for _ in range(100):
        q, pts = random_instance(rng, int(rng.integers(2, 60)))
        base = spherical_depth_naive(q, pts).count
        more = np.vstack([pts, pts[rng.integers(len(pts))]])
        assert spherical_depth_naive(q, more).count >= base
        assert spherical_depth_fast2d(q, more).count >= spherical_depth_fast2d(q, pts).count
