"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they check: membership by
LP instead of facets, point counts by exhaustive scan, determinants by
permutation expansion.
"""

import itertools

import pytest

from latmink import LatticePolytope, PointSet, lp


def brute_force_integer_points(poly: LatticePolytope, n: int) -> PointSet:
    """Scan the bounding box and decide each point by LP membership."""
    d = poly.dim
    if n == 0:
        return PointSet([(0,) * d], d)
    scaled = [tuple(n * x for x in v) for v in poly.vertices]
    los = [min(v[i] for v in scaled) for i in range(d)]
    his = [max(v[i] for v in scaled) for i in range(d)]
    pts = [
        p
        for p in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(los, his)))
        if lp.point_in_convex_hull(scaled, p)
    ]
    return PointSet(pts, d)


def is_n_fold_sum(omega: PointSet, n: int, target) -> bool:
    """Dynamic program: can target be written as a sum of n points of omega?"""
    reachable = {(0,) * omega.dim}
    for _ in range(n):
        reachable = {
            tuple(a + b for a, b in zip(p, q)) for p in reachable for q in omega.points
        }
    return tuple(target) in reachable


@pytest.fixture
def unit_square():
    return LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def unit_triangle():
    return LatticePolytope([(0, 0), (1, 0), (0, 1)])
