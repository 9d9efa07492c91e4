"""n-fold Minkowski sums of lattice point sets and the dilation-equality test.

For a lattice polytope P with integer points Omega, the n-fold Minkowski sum
n*Omega is always contained in the integer points of the dilation nP; this
module decides whether the two sets coincide, produces the lex-least missing
point as a witness when they do not, and constructively decomposes integer
points of nP into n summands from Omega via a primitive triangulation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .geometry import DEFAULT_BOX_CAP, LatticePolytope, Point, PointSet, as_point
from .triangulation import Triangulation


def minkowski_sum(a: PointSet, b: PointSet) -> PointSet:
    """{x + y : x in a, y in b}, deduplicated and canonically ordered."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    sums = {tuple(x + y for x, y in zip(p, q)) for p in a.points for q in b.points}
    return PointSet(sums, a.dim)


def minkowski_power(s: PointSet, n: int) -> PointSet:
    """The n-fold Minkowski sum of s with itself; n == 0 gives {0}.

    Folds with deduplication after every round, so the intermediate sets are
    exactly the word balls of the additive group generated by s.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return PointSet([(0,) * s.dim], s.dim)
    acc = s
    for _ in range(n - 1):
        acc = minkowski_sum(acc, s)
    return acc


@dataclass(frozen=True)
class EqualityReport:
    """Outcome of check_equality at one dilation factor.

    When holds is False, witness is the lexicographically smallest integer
    point of the dilation that is not an n-fold sum.
    """

    n: int
    holds: bool
    witness: Point | None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing report needs a witness")


def check_equality(poly: LatticePolytope, n: int, cap: int = DEFAULT_BOX_CAP) -> EqualityReport:
    """Does the n-fold Minkowski sum of the integer points fill the dilation?"""
    if n < 1:
        raise ValueError("n must be >= 1")
    omega = poly.integer_points(1, cap=cap)
    ball = minkowski_power(omega, n)
    full = poly.integer_points(n, cap=cap)
    if not ball.issubset(full):
        raise RuntimeError("internal inconsistency: sums escaped the dilation")
    missing = full.difference(ball)
    if len(missing) == 0:
        return EqualityReport(n, True, None)
    return EqualityReport(n, False, missing.points[0])


@dataclass(frozen=True)
class Decomposition:
    """target written as the sum of exactly n points, multiset-sorted."""

    target: Point
    summands: tuple[Point, ...]

    def __post_init__(self):
        total = tuple(sum(c) for c in zip(*self.summands))
        if total != self.target:
            raise ValueError("summands do not add up to the target")


def decompose(
    poly: LatticePolytope, tri: Triangulation, n: int, x
) -> Decomposition:
    """Write x, an integer point of the n-fold dilation, as n summands.

    Requires tri to be a primitive triangulation of poly. The simplex of the
    triangulation containing x/n (lowest index on ties) yields exact
    barycentric coordinates whose n-multiples are the summand multiplicities;
    unimodularity forces them to be integers.
    """
    x = as_point(x)
    if n < 1:
        raise ValueError("n must be >= 1")
    if tri.polytope != poly:
        raise ValueError("triangulation belongs to a different polytope")
    if len(x) != poly.dim:
        raise ValueError("dimension mismatch")
    p = tuple(Fraction(c, n) for c in x)
    if not poly.contains(p):
        raise ValueError(f"{x} is not in the {n}-fold dilation")
    for simplex in tri.simplices:
        coords = simplex.barycentric(p)
        if all(c >= 0 for c in coords):
            break
    else:
        raise ValueError("no simplex of the triangulation contains the point; invalid triangulation")
    if simplex.normalized_volume != 1:
        raise ValueError("triangulation is not primitive")
    summands: list[Point] = []
    for coeff, vertex in zip(coords, simplex.vertices):
        beta = n * coeff
        if beta.denominator != 1:
            raise RuntimeError("internal inconsistency: non-integer multiplicity on a unit simplex")
        beta = int(beta)
        if not 0 <= beta <= n:
            raise RuntimeError("internal inconsistency: multiplicity out of range")
        summands.extend([vertex] * beta)
    if len(summands) != n:
        raise RuntimeError("internal inconsistency: multiplicities do not sum to n")
    return Decomposition(x, tuple(sorted(summands)))


def generates_zd(s: PointSet) -> bool:
    """Does the symmetric set s (with 0) generate the full integer lattice?

    Decided by the Hermite normal form of the matrix of elements: the group
    generated is all of Z^d exactly when the form is the identity. Requires
    0 in s and -p in s for every p; without symmetry, group and semigroup
    generation differ and this test would be wrong.
    """
    origin = (0,) * s.dim
    if origin not in s:
        raise ValueError("the set must contain the origin")
    asymmetric = [p for p in s.points if tuple(-c for c in p) not in s]
    if asymmetric:
        raise ValueError(f"the set is not symmetric: missing negatives of {asymmetric}")
    rows = [list(p) for p in s.points if p != origin]
    if not rows:
        return False
    return linalg.is_identity(linalg.hermite_normal_form(rows), s.dim)
