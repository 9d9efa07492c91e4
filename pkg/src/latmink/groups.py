"""Word balls and boundary notions in finitely generated groups.

Two concrete group kinds are supported: the additive group Z^d (elements are
integer tuples) and GL(2, Z) (elements are 2x2 integer matrices of
determinant +-1, stored as nested tuples). The generating set must contain
the identity, so the ball of radius n equals the set of words of length
exactly n. All interior/boundary notions use left multiplication.

Whether a given generating set actually generates the whole group as a
semigroup is not verified (undecidable at this level of machinery for matrix
groups); callers are trusted on that point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .geometry import LatticePolytope, ResourceLimitError, as_point

KIND_ZD = "zd"
KIND_GL2Z = "gl2z"

DEFAULT_BALL_CAP = 10**6

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

GL2Z_IDENTITY: Matrix2 = ((1, 0), (0, 1))


class ElementSet:
    """Deduplicated finite set of group elements in canonical sorted order."""

    __slots__ = ("elements", "_members")

    def __init__(self, elements: Iterable):
        items = sorted(set(elements))
        self.elements = tuple(items)
        self._members = frozenset(items)

    def __contains__(self, x) -> bool:
        return x in self._members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, ElementSet) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"ElementSet({len(self.elements)} elements)"

    def difference(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(x for x in self.elements if x not in other._members)

    def issubset(self, other: "ElementSet") -> bool:
        return self._members <= other._members


def as_gl2z(matrix) -> Matrix2:
    """Validate a 2x2 integer matrix with determinant +-1."""
    rows = tuple(tuple(r) for r in matrix)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("expected a 2x2 matrix")
    for row in rows:
        for x in row:
            if type(x) is not int:
                raise ValueError(f"matrix entries must be plain ints, got {x!r}")
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if det not in (1, -1):
        raise ValueError(f"matrix determinant is {det}, must be +1 or -1")
    return rows


class GroupPresentation:
    """A group given by concrete element arithmetic plus a finite generating set."""

    __slots__ = ("kind", "dim", "generators", "identity")

    def __init__(self, kind: str, generators: Iterable, dim: int | None = None):
        if kind == KIND_ZD:
            if dim is None or dim < 1:
                raise ValueError("zd presentations need a dimension >= 1")
            gens = [as_point(g) for g in generators]
            if any(len(g) != dim for g in gens):
                raise ValueError("generator dimension mismatch")
            self.identity = (0,) * dim
        elif kind == KIND_GL2Z:
            gens = [as_gl2z(g) for g in generators]
            dim = None
            self.identity = GL2Z_IDENTITY
        else:
            raise ValueError(f"unknown group kind {kind!r}")
        self.kind = kind
        self.dim = dim
        self.generators = ElementSet(gens)
        if self.identity not in self.generators:
            raise ValueError("the generating set must contain the identity element")

    @classmethod
    def zd(cls, dim: int, generators: Iterable) -> "GroupPresentation":
        return cls(KIND_ZD, generators, dim=dim)

    @classmethod
    def gl2z(cls, generators: Iterable) -> "GroupPresentation":
        return cls(KIND_GL2Z, generators)

    def mul(self, a, b):
        """Group product a * b."""
        if self.kind == KIND_ZD:
            return tuple(x + y for x, y in zip(a, b))
        return (
            (
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ),
            (
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ),
        )

    def __repr__(self) -> str:
        where = f"Z^{self.dim}" if self.kind == KIND_ZD else "GL(2,Z)"
        return f"GroupPresentation({where}, {len(self.generators)} generators)"


def word_ball(group: GroupPresentation, n: int, cap: int = DEFAULT_BALL_CAP) -> ElementSet:
    """All products of at most n generators (the radius-n word-metric ball).

    Computed as n rounds of left multiplication by the generating set; the
    identity generator makes the balls increasing, so length "at most n" and
    "exactly n" coincide.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    ball = {group.identity}
    for _ in range(n):
        ball = {group.mul(w, a) for w in group.generators.elements for a in ball}
        if len(ball) > cap:
            raise ResourceLimitError(f"word ball exceeded {cap} elements")
    return ElementSet(ball)


def omega_interior(group: GroupPresentation, subset: ElementSet) -> ElementSet:
    """Elements a of the subset with every left translate w*a in the subset."""
    gens = group.generators.elements
    return ElementSet(
        a for a in subset.elements if all(group.mul(w, a) in subset for w in gens)
    )


def omega_boundary(group: GroupPresentation, subset: ElementSet) -> ElementSet:
    """The subset minus its interior; by definition a part of the subset."""
    return subset.difference(omega_interior(group, subset))


@dataclass(frozen=True)
class BoundaryReport:
    """Comparison of the boundary layer of a ball with the fresh layer.

    lhs is the boundary of the radius-n ball, rhs is ball(n) minus
    ball(n-1). lhs_minus_rhs is empty whenever the implementation is sound;
    rhs_minus_lhs carries the interesting counterexamples.
    """

    n: int
    holds: bool
    lhs_minus_rhs: ElementSet
    rhs_minus_lhs: ElementSet


def check_boundary_equality(
    group: GroupPresentation, n: int, cap: int = DEFAULT_BALL_CAP
) -> BoundaryReport:
    """Does the boundary of the radius-n ball equal its fresh layer?"""
    if n < 1:
        raise ValueError("n must be >= 1")
    smaller = word_ball(group, n - 1, cap=cap)
    ball = word_ball(group, n, cap=cap)
    lhs = omega_boundary(group, ball)
    rhs = ball.difference(smaller)
    lhs_minus_rhs = lhs.difference(rhs)
    if len(lhs_minus_rhs) != 0:
        raise RuntimeError(
            "internal inconsistency: boundary escaped the fresh layer"
        )
    rhs_minus_lhs = rhs.difference(lhs)
    return BoundaryReport(n, len(rhs_minus_lhs) == 0, lhs_minus_rhs, rhs_minus_lhs)


def zd_presentation_from_polytope(poly: LatticePolytope) -> GroupPresentation:
    """The Z^d presentation generated by the polytope's integer points.

    The polytope must contain the origin so that the generating set contains
    the identity.
    """
    omega = poly.integer_points(1)
    origin = (0,) * poly.dim
    if origin not in omega:
        raise ValueError("the polytope does not contain the origin")
    return GroupPresentation.zd(poly.dim, omega.points)


def gl2z_swap_shear_generators() -> tuple[Matrix2, ...]:
    """Six-element generating set of GL(2, Z): identity, the swap, the shear,
    its inverse, and their two products with the swap.

    Right multiplication by the swap permutes this set, which makes the swap
    an interior point of the radius-1 ball and breaks the boundary-equality
    identity already at n = 1.
    """
    w0 = GL2Z_IDENTITY
    w1 = ((0, 1), (1, 0))
    w2 = ((1, 1), (0, 1))
    w3 = ((1, 1), (1, 0))
    w4 = ((1, -1), (0, 1))
    w5 = ((-1, 1), (1, 0))
    return (w0, w1, w2, w3, w4, w5)
