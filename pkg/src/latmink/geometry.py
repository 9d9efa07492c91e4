"""Lattice polytopes with exact predicates.

A lattice polytope is stored by its irredundant integer vertex list; facets
are derived on demand by brute force over vertex subsets, which is entirely
adequate at desk scale (d <= 6, a handful of vertices). All queries --
membership, integer point enumeration, volume -- are exact: coordinates are
Python ints and derived scalars are fractions.Fraction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

from . import linalg, lp

Point = tuple[int, ...]
RationalPoint = tuple[Fraction, ...]

DEFAULT_BOX_CAP = 10**8


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured size cap."""


def as_point(coords: Iterable) -> Point:
    """Validate and normalize one integer point (bools are rejected)."""
    pt = tuple(coords)
    if not pt:
        raise ValueError("points must have dimension >= 1")
    for c in pt:
        if type(c) is not int:
            raise ValueError(f"lattice coordinates must be plain ints, got {c!r}")
    return pt


def as_rational_point(coords: Iterable) -> RationalPoint:
    pt = tuple(Fraction(c) for c in coords)
    if not pt:
        raise ValueError("points must have dimension >= 1")
    return pt


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def affine_dim(points: Sequence[Point]) -> int:
    """Dimension of the affine hull of the given points."""
    if not points:
        raise ValueError("no points")
    base = points[0]
    rows = [[p[i] - base[i] for i in range(len(base))] for p in points[1:]]
    return linalg.rank(rows)


@dataclass(frozen=True)
class Halfspace:
    """The halfspace {y : <normal, y> <= offset}, normal a primitive integer vector."""

    normal: Point
    offset: int

    def slack(self, point: Sequence):
        """offset - <normal, point>; nonnegative inside the halfspace."""
        return self.offset - dot(self.normal, point)


class PointSet:
    """Deduplicated finite subset of Z^d in canonical lexicographic order."""

    __slots__ = ("dim", "points", "_members")

    def __init__(self, points: Iterable, dim: int | None = None):
        pts = sorted({as_point(p) for p in points})
        if pts:
            d = len(pts[0])
            if any(len(p) != d for p in pts):
                raise ValueError("mixed dimensions in point set")
            if dim is not None and dim != d:
                raise ValueError(f"points have dimension {d}, expected {dim}")
            dim = d
        elif dim is None:
            raise ValueError("empty point set needs an explicit dimension")
        self.dim = dim
        self.points = tuple(pts)
        self._members = frozenset(pts)

    def __contains__(self, point) -> bool:
        return tuple(point) in self._members

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PointSet)
            and self.dim == other.dim
            and self.points == other.points
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.points))

    def __repr__(self) -> str:
        return f"PointSet(dim={self.dim}, {len(self.points)} points)"

    def union(self, other: "PointSet") -> "PointSet":
        self._check_dim(other)
        return PointSet(self.points + other.points, self.dim)

    def difference(self, other: "PointSet") -> "PointSet":
        self._check_dim(other)
        return PointSet((p for p in self.points if p not in other._members), self.dim)

    def issubset(self, other: "PointSet") -> bool:
        self._check_dim(other)
        return self._members <= other._members

    def _check_dim(self, other: "PointSet") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")


class LatticePolytope:
    """Convex hull of finitely many integer points, stored by its vertices.

    Construction canonicalizes: duplicates and non-vertex points are dropped
    (each candidate is tested against the hull of the others by exact LP),
    and the surviving vertices are kept in lexicographic order.
    """

    def __init__(self, points: Iterable):
        pts = sorted({as_point(p) for p in points})
        if not pts:
            raise ValueError("a polytope needs at least one point")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise ValueError("mixed dimensions in point list")
        self.dim = d
        self.affine_dim = affine_dim(pts)
        if len(pts) == 1:
            self.vertices: tuple[Point, ...] = tuple(pts)
        else:
            verts = []
            for i, p in enumerate(pts):
                others = pts[:i] + pts[i + 1 :]
                if not lp.point_in_convex_hull(others, p):
                    verts.append(p)
            self.vertices = tuple(verts)

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    @cached_property
    def facets(self) -> tuple[Halfspace, ...]:
        """Irredundant facet halfspaces (full-dimensional polytopes only).

        Brute force: every d-subset of vertices proposes a hyperplane, kept
        when all vertices lie weakly on one side; normals are primitive and
        point outward.
        """
        if not self.is_full_dimensional:
            raise ValueError("facet enumeration requires a full-dimensional polytope")
        d = self.dim
        found: dict[tuple[Point, int], Halfspace] = {}
        for subset in itertools.combinations(self.vertices, d):
            base = subset[0]
            rows = [[q[i] - base[i] for i in range(d)] for q in subset[1:]]
            normal = linalg.cofactor_normal(rows, d)
            if not any(normal):
                continue  # affinely dependent subset
            normal = linalg.primitive_vector(normal)
            offset = dot(normal, base)
            values = [dot(normal, v) - offset for v in self.vertices]
            if any(v > 0 for v in values):
                if any(v < 0 for v in values):
                    continue  # hyperplane cuts the polytope
                normal = tuple(-x for x in normal)
                offset = -offset
            key = (normal, offset)
            if key not in found:
                found[key] = Halfspace(normal, offset)
        return tuple(sorted(found.values(), key=lambda h: (h.normal, h.offset)))

    def contains(self, point: Iterable, strict: bool = False) -> bool:
        """Exact membership of a rational point.

        Full-dimensional polytopes use the facet inequalities; lower
        dimensional ones fall back to LP feasibility. With strict=True this
        tests membership in the topological interior.
        """
        q = as_rational_point(point)
        if len(q) != self.dim:
            raise ValueError(f"point has dimension {len(q)}, expected {self.dim}")
        if self.is_full_dimensional:
            if strict:
                return all(h.slack(q) > 0 for h in self.facets)
            return all(h.slack(q) >= 0 for h in self.facets)
        if strict:
            return False  # empty interior
        return self.contains_lp(q)

    def contains_lp(self, point: Iterable) -> bool:
        """Membership decided by LP feasibility; independent of the facet path."""
        q = as_rational_point(point)
        if len(q) != self.dim:
            raise ValueError(f"point has dimension {len(q)}, expected {self.dim}")
        return lp.point_in_convex_hull(self.vertices, q)

    def integer_points(self, n: int, cap: int = DEFAULT_BOX_CAP) -> PointSet:
        """All integer points of the n-fold dilation, canonically ordered.

        Scans the integer bounding box of the dilation against the dilated
        facet inequalities (LP membership for lower-dimensional polytopes).
        n == 0 yields {0} by convention. Boxes larger than cap raise
        ResourceLimitError.
        """
        if n < 0:
            raise ValueError("dilation factor must be >= 0")
        d = self.dim
        if n == 0:
            return PointSet([(0,) * d], d)
        los = [min(n * v[i] for v in self.vertices) for i in range(d)]
        his = [max(n * v[i] for v in self.vertices) for i in range(d)]
        count = 1
        for lo, hi in zip(los, his):
            count *= hi - lo + 1
        if count > cap:
            raise ResourceLimitError(
                f"bounding box has {count} candidate points, cap is {cap}"
            )
        ranges = [range(lo, hi + 1) for lo, hi in zip(los, his)]
        if self.is_full_dimensional:
            dilated = [(h.normal, n * h.offset) for h in self.facets]
            pts = [
                p
                for p in itertools.product(*ranges)
                if all(dot(a, p) <= b for a, b in dilated)
            ]
        else:
            scaled = [tuple(n * x for x in v) for v in self.vertices]
            pts = [
                p
                for p in itertools.product(*ranges)
                if lp.point_in_convex_hull(scaled, p)
            ]
        return PointSet(pts, d)

    def dilate(self, n: int) -> "LatticePolytope":
        """The polytope with every vertex scaled by n (n >= 0)."""
        if n < 0:
            raise ValueError("dilation factor must be >= 0")
        return LatticePolytope([tuple(n * x for x in v) for v in self.vertices])

    def fan_simplices(self) -> tuple[tuple[Point, ...], ...]:
        """Triangulation by recursive fans from the lex-least vertex.

        Each returned tuple is the vertex list of a full-dimensional simplex;
        together they cover the polytope with disjoint interiors.
        """
        if not self.is_full_dimensional:
            raise ValueError("triangulation requires a full-dimensional polytope")
        d = self.dim
        verts = self.vertices
        if len(verts) == d + 1:
            return (verts,)
        if d == 1:
            return ((verts[0], verts[-1]),)
        apex = verts[0]
        simplices = []
        for h in self.facets:
            if dot(h.normal, apex) == h.offset:
                continue  # apex lies on this facet
            on_facet = [v for v in verts if dot(h.normal, v) == h.offset]
            drop = next(i for i in range(d) if h.normal[i] != 0)
            back = {}
            for v in on_facet:
                proj = tuple(v[i] for i in range(d) if i != drop)
                back[proj] = v
            sub = LatticePolytope(back.keys())
            for s in sub.fan_simplices():
                simplices.append((apex,) + tuple(back[p] for p in s))
        return tuple(simplices)

    def volume(self) -> Fraction:
        """Exact Euclidean d-volume (full-dimensional polytopes only)."""
        d = self.dim
        total = 0
        for simplex in self.fan_simplices():
            base = simplex[0]
            rows = [[v[i] - base[i] for i in range(d)] for v in simplex[1:]]
            total += abs(linalg.det_int(rows))
        return Fraction(total, factorial(d))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LatticePolytope)
            and self.dim == other.dim
            and self.vertices == other.vertices
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.vertices))

    def __repr__(self) -> str:
        return f"LatticePolytope(dim={self.dim}, vertices={list(self.vertices)})"


def hull(points: Iterable) -> LatticePolytope:
    """Convex hull of integer points as a canonical LatticePolytope."""
    return LatticePolytope(points)


def cube(dim: int, low: int = 0, high: int = 1) -> LatticePolytope:
    """The box [low, high]^dim."""
    if dim < 1 or low >= high:
        raise ValueError("need dim >= 1 and low < high")
    return LatticePolytope(itertools.product((low, high), repeat=dim))


def cross_polytope(dim: int) -> LatticePolytope:
    """conv{+-e_1, ..., +-e_dim}."""
    if dim < 1:
        raise ValueError("need dim >= 1")
    pts = []
    for i in range(dim):
        for s in (1, -1):
            pts.append(tuple(s if j == i else 0 for j in range(dim)))
    return LatticePolytope(pts)
