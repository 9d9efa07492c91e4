"""Lattice simplices, unimodularity tests, and primitive triangulations.

A lattice simplex is elementary when its only integer points are its
vertices, and primitive (unimodular) when its edge matrix has determinant
+-1; primitive implies elementary. A triangulation is a face-to-face cover
of a polytope by full-dimensional lattice simplices, and is elementary or
primitive when all of its simplices are. This module classifies simplices,
validates triangulations exactly, and searches for primitive triangulations
by deterministic backtracking at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from . import linalg, lp
from .geometry import (
    Halfspace,
    LatticePolytope,
    Point,
    PointSet,
    ResourceLimitError,
    as_point,
    as_rational_point,
    dot,
)

DEFAULT_SEARCH_BUDGET = 200_000
DEFAULT_POINT_CAP = 14


class LatticeSimplex:
    """Full-dimensional lattice simplex: d+1 affinely independent points of Z^d.

    Vertices are stored sorted; degenerate input is a construction error.
    """

    __slots__ = ("vertices", "dim", "normalized_volume", "_facets")

    def __init__(self, vertices: Iterable):
        pts = sorted({as_point(v) for v in vertices})
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise ValueError("mixed dimensions in simplex")
        if len(pts) != d + 1:
            raise ValueError(f"a simplex in Z^{d} needs {d + 1} distinct vertices, got {len(pts)}")
        det = linalg.det_int(self._edge_rows(pts))
        if det == 0:
            raise ValueError("degenerate simplex: vertices are affinely dependent")
        self.vertices: tuple[Point, ...] = tuple(pts)
        self.dim = d
        self.normalized_volume = abs(det)
        self._facets: tuple[Halfspace, ...] | None = None

    @staticmethod
    def _edge_rows(pts: Sequence[Point]) -> list[list[int]]:
        base = pts[0]
        return [[p[i] - base[i] for i in range(len(base))] for p in pts[1:]]

    def volume(self) -> Fraction:
        return Fraction(self.normalized_volume, factorial(self.dim))

    def barycentric(self, point: Iterable) -> tuple[Fraction, ...]:
        """Unique barycentric coordinates of a rational point."""
        q = as_rational_point(point)
        if len(q) != self.dim:
            raise ValueError("dimension mismatch")
        matrix = [[v[i] for v in self.vertices] for i in range(self.dim)]
        matrix.append([1] * (self.dim + 1))
        rhs = list(q) + [Fraction(1)]
        coords = linalg.solve_exact(matrix, rhs)
        assert coords is not None  # nondegenerate by construction
        return coords

    def contains(self, point: Iterable) -> bool:
        return all(c >= 0 for c in self.barycentric(point))

    @property
    def facets(self) -> tuple[Halfspace, ...]:
        """The d+1 facet halfspaces, oriented to contain the simplex."""
        if self._facets is None:
            out = []
            d = self.dim
            for omit in range(d + 1):
                rest = [v for i, v in enumerate(self.vertices) if i != omit]
                base = rest[0]
                rows = [[q[i] - base[i] for i in range(d)] for q in rest[1:]]
                normal = linalg.primitive_vector(linalg.cofactor_normal(rows, d))
                offset = dot(normal, base)
                if dot(normal, self.vertices[omit]) > offset:
                    normal = tuple(-x for x in normal)
                    offset = -offset
                out.append(Halfspace(normal, offset))
            self._facets = tuple(out)
        return self._facets

    def facet_vertex_sets(self) -> tuple[tuple[Point, ...], ...]:
        """Vertex tuples of the d+1 facets, each sorted."""
        return tuple(
            tuple(v for i, v in enumerate(self.vertices) if i != omit)
            for omit in range(self.dim + 1)
        )

    def bounding_box(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (min(v[i] for v in self.vertices), max(v[i] for v in self.vertices))
            for i in range(self.dim)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, LatticeSimplex) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"LatticeSimplex({list(self.vertices)})"


@dataclass(frozen=True)
class SimplexClass:
    """Classification record for one lattice simplex."""

    normalized_volume: int
    non_vertex_points: PointSet
    is_elementary: bool
    is_primitive: bool


def classify_simplex(simplex: LatticeSimplex) -> SimplexClass:
    """Elementary/primitive flags plus the witnessing non-vertex points."""
    poly = LatticePolytope(simplex.vertices)
    inside = poly.integer_points(1)
    non_vertex = inside.difference(PointSet(simplex.vertices, simplex.dim))
    elementary = len(non_vertex) == 0
    primitive = simplex.normalized_volume == 1
    if primitive and not elementary:
        raise RuntimeError("internal inconsistency: unit simplex with extra points")
    return SimplexClass(simplex.normalized_volume, non_vertex, elementary, primitive)


def is_elementary_polytope(poly: LatticePolytope, cap: int | None = None) -> bool:
    """True when the polytope's only integer points are its vertices."""
    kwargs = {} if cap is None else {"cap": cap}
    return poly.integer_points(1, **kwargs) == PointSet(poly.vertices, poly.dim)


def is_unimodular(matrix: Sequence[Sequence[int]]) -> bool:
    """True iff the square integer matrix has determinant +-1."""
    return abs(linalg.det_int(matrix)) == 1


@dataclass(frozen=True)
class UnimodularCriteria:
    """Independent evaluations of the standard unimodularity conditions.

    For a nonsingular integer matrix the first five flags agree; the corner
    simplex flag is implied by them and is equivalent only in dimensions one
    and two.
    """

    singular: bool
    lattice_onto: bool  # columns generate all of Z^d
    inverse_integral: bool  # exact inverse has integer entries
    det_unit: bool  # determinant is +1 or -1
    parallelotope_unit_volume: bool  # image of the unit cube has volume 1
    parallelotope_elementary: bool  # cube image has no integer points beyond corners
    corner_simplex_elementary: bool  # conv{0, columns} has no extra integer points

    def first_five(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.lattice_onto,
            self.inverse_integral,
            self.det_unit,
            self.parallelotope_unit_volume,
            self.parallelotope_elementary,
        )


def unimodular_criteria(matrix: Sequence[Sequence[int]], max_dim: int = 4) -> UnimodularCriteria:
    """Evaluate each unimodularity condition by its own method.

    Semi-exhaustive checks (lattice image, cube enumeration) bound the
    dimension; raise above max_dim.
    """
    d = len(matrix)
    rows = [list(map(int, r)) for r in matrix]
    if any(len(r) != d for r in rows):
        raise ValueError("matrix is not square")
    if d > max_dim:
        raise ValueError(f"dimension {d} exceeds the semi-exhaustive bound {max_dim}")
    det = linalg.det_int(rows)
    if det == 0:
        return UnimodularCriteria(True, False, False, False, False, False, False)

    cols = linalg.matrix_columns(rows)
    lattice_onto = linalg.is_identity(linalg.hermite_normal_form(cols), d)

    inverse = linalg.inverse_exact(rows)
    inverse_integral = inverse is not None and all(
        x.denominator == 1 for row in inverse for x in row
    )

    det_unit = abs(det) == 1

    corners = [
        tuple(sum(c[i] for c in chosen) for i in range(d))
        for k in range(d + 1)
        for chosen in itertools.combinations(cols, k)
    ]
    parallelotope = LatticePolytope(corners)
    parallelotope_unit_volume = parallelotope.volume() == 1
    parallelotope_elementary = parallelotope.integer_points(1) == PointSet(corners, d)

    simplex = LatticeSimplex([(0,) * d] + cols)
    corner_simplex_elementary = classify_simplex(simplex).is_elementary

    return UnimodularCriteria(
        False,
        lattice_onto,
        inverse_integral,
        det_unit,
        parallelotope_unit_volume,
        parallelotope_elementary,
        corner_simplex_elementary,
    )


def sigma(d: int, m: int) -> LatticeSimplex:
    """conv{0, e_1, ..., e_{d-1}, (-1, ..., -1, m)}; normalized volume m."""
    return _corner_simplex(d, m, -1)


def sigma_prime(d: int, m: int) -> LatticeSimplex:
    """conv{0, e_1, ..., e_{d-1}, (1, ..., 1, m)}; elementary for every m."""
    return _corner_simplex(d, m, 1)


def _corner_simplex(d: int, m: int, sign: int) -> LatticeSimplex:
    if d < 1 or m < 1:
        raise ValueError("need d >= 1 and m >= 1")
    pts = [(0,) * d]
    for i in range(d - 1):
        pts.append(tuple(1 if j == i else 0 for j in range(d)))
    pts.append(tuple([sign] * (d - 1) + [m]))
    return LatticeSimplex(pts)


@dataclass(frozen=True)
class Triangulation:
    """An ordered list of simplices intended to triangulate a polytope."""

    polytope: LatticePolytope
    simplices: tuple[LatticeSimplex, ...]

    def __post_init__(self):
        if not self.simplices:
            raise ValueError("a triangulation needs at least one simplex")
        if any(s.dim != self.polytope.dim for s in self.simplices):
            raise ValueError("simplex dimension does not match the polytope")


@dataclass(frozen=True)
class TriangulationReport:
    """Outcome of validate_triangulation; problems lists every failed check."""

    valid: bool
    is_elementary: bool
    is_primitive: bool
    covered_volume: Fraction
    problems: tuple[str, ...]


def relative_interiors_intersect(a: LatticeSimplex, b: LatticeSimplex) -> bool:
    """Exact LP test: do the open simplices share a point?

    Maximizes the least barycentric coordinate across both simplices subject
    to describing a common point; a positive optimum is an interior witness.
    """
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    d = a.dim
    k = d + 1
    # variables: t, s_0..s_d (lambda_i = t + s_i), u_0..u_d (mu_j = t + u_j)
    nvars = 1 + 2 * k
    a_eq = []
    b_eq = []
    row = [Fraction(k)] + [Fraction(1)] * k + [Fraction(0)] * k
    a_eq.append(row)
    b_eq.append(Fraction(1))
    row = [Fraction(k)] + [Fraction(0)] * k + [Fraction(1)] * k
    a_eq.append(row)
    b_eq.append(Fraction(1))
    for i in range(d):
        coeff = [Fraction(sum(v[i] for v in a.vertices) - sum(w[i] for w in b.vertices))]
        coeff += [Fraction(v[i]) for v in a.vertices]
        coeff += [Fraction(-w[i]) for w in b.vertices]
        a_eq.append(coeff)
        b_eq.append(Fraction(0))
    objective = [1] + [0] * (2 * k)
    result = lp.maximize(objective, a_eq, b_eq)
    if result is None:
        return False
    return result[0] > 0


def _intersection_vertices(a: LatticeSimplex, b: LatticeSimplex) -> set:
    """Vertices of the intersection polytope, by exhausting d-subsets of facets."""
    halfspaces = list(dict.fromkeys(a.facets + b.facets))
    d = a.dim
    found = set()
    for subset in itertools.combinations(halfspaces, d):
        point = linalg.solve_exact([h.normal for h in subset], [h.offset for h in subset])
        if point is None:
            continue
        if all(h.slack(point) >= 0 for h in halfspaces):
            found.add(point)
    return found


def _boxes_disjoint(a: LatticeSimplex, b: LatticeSimplex) -> bool:
    for (alo, ahi), (blo, bhi) in zip(a.bounding_box(), b.bounding_box()):
        if ahi < blo or bhi < alo:
            return True
    return False


def simplices_face_to_face(a: LatticeSimplex, b: LatticeSimplex) -> bool:
    """Is the intersection of the two simplices a common face of both?

    Every vertex subset of a simplex spans a face, so this reduces to
    checking that the intersection equals the hull of the shared vertices:
    each vertex of the intersection must have barycentric support inside
    the shared vertex set.
    """
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    if a.vertices == b.vertices:
        return True
    if _boxes_disjoint(a, b):
        return True
    common = set(a.vertices) & set(b.vertices)
    if len(common) == a.dim:
        # shared facet: face-to-face iff the two apexes lie strictly on
        # opposite sides of its hyperplane
        shared = sorted(common)
        base = shared[0]
        d = a.dim
        rows = [[q[i] - base[i] for i in range(d)] for q in shared[1:]]
        normal = linalg.cofactor_normal(rows, d)
        offset = dot(normal, base)
        apex_a = next(v for v in a.vertices if v not in common)
        apex_b = next(v for v in b.vertices if v not in common)
        va = dot(normal, apex_a) - offset
        vb = dot(normal, apex_b) - offset
        return (va > 0) != (vb > 0)
    for x in _intersection_vertices(a, b):
        coords = a.barycentric(x)
        for coeff, vertex in zip(coords, a.vertices):
            if coeff != 0 and vertex not in common:
                return False
    return True


def spans_face(simplex: LatticeSimplex, subset: Iterable[Point]) -> bool:
    """Supporting-hyperplane check that a vertex subset spans a face.

    The vertices lying on every simplex facet that contains the subset must
    be exactly the subset; for genuine simplices this always holds.
    """
    wanted = set(as_point(p) for p in subset)
    if not wanted <= set(simplex.vertices):
        return False
    if not wanted:
        return True
    carried = set(simplex.vertices)
    for h in simplex.facets:
        if all(h.slack(p) == 0 for p in wanted):
            carried &= {v for v in simplex.vertices if h.slack(v) == 0}
    return carried == wanted


def validate_triangulation(tri: Triangulation) -> TriangulationReport:
    """Exhaustive exact validation of a claimed triangulation.

    Checks: every simplex inside the polytope; deduplicated volumes summing
    to the polytope volume; pairwise disjoint relative interiors; pairwise
    face-to-face intersections with the shared vertices spanning a face of
    each. All failures are reported, none raise.
    """
    problems: list[str] = []
    poly = tri.polytope
    simplices = tri.simplices

    if not poly.is_full_dimensional:
        problems.append("polytope is not full-dimensional")
        return TriangulationReport(False, False, False, Fraction(0), tuple(problems))

    for idx, s in enumerate(simplices):
        for v in s.vertices:
            if not poly.contains(v):
                problems.append(f"simplex {idx} has vertex {v} outside the polytope")
                break

    seen: dict[tuple[Point, ...], int] = {}
    distinct: list[LatticeSimplex] = []
    for idx, s in enumerate(simplices):
        if s.vertices in seen:
            problems.append(f"simplex {idx} duplicates simplex {seen[s.vertices]}")
        else:
            seen[s.vertices] = idx
            distinct.append(s)

    covered = sum((s.volume() for s in distinct), Fraction(0))
    target = poly.volume()
    if covered != target:
        problems.append(f"covered volume {covered} != polytope volume {target}")

    for i, j in itertools.combinations(range(len(simplices)), 2):
        a, b = simplices[i], simplices[j]
        if _boxes_disjoint(a, b):
            continue
        if a.vertices == b.vertices or relative_interiors_intersect(a, b):
            problems.append(f"simplices {i} and {j} have intersecting interiors")
            continue
        if not simplices_face_to_face(a, b):
            problems.append(f"simplices {i} and {j} do not meet face-to-face")
            continue
        shared = set(a.vertices) & set(b.vertices)
        if shared and not (spans_face(a, shared) and spans_face(b, shared)):
            problems.append(f"shared vertices of simplices {i} and {j} span no common face")

    classes = [classify_simplex(s) for s in simplices]
    return TriangulationReport(
        valid=not problems,
        is_elementary=all(c.is_elementary for c in classes),
        is_primitive=all(c.is_primitive for c in classes),
        covered_volume=covered,
        problems=tuple(problems),
    )


@dataclass(frozen=True)
class SearchResult:
    """Result of a primitive-triangulation search.

    triangulation is None when none was found; exhausted distinguishes a
    proof of non-existence (candidate space fully explored) from running
    out of budget.
    """

    triangulation: Triangulation | None
    exhausted: bool
    nodes: int


class _Budget(Exception):
    pass


def search_primitive_triangulation(
    poly: LatticePolytope,
    budget: int = DEFAULT_SEARCH_BUDGET,
    point_cap: int = DEFAULT_POINT_CAP,
) -> SearchResult:
    """Backtracking search for a primitive triangulation on the lattice points.

    Candidate simplices are all (d+1)-subsets of the polytope's integer
    points with determinant +-1. The search seeds on candidates containing
    the lex-least vertex and grows a face-to-face complex, always branching
    on the lex-least unmatched interior facet, until the volume is
    exhausted. Deterministic; exhaustion of the candidate space proves that
    no primitive triangulation exists.
    """
    if not poly.is_full_dimensional:
        raise ValueError("search requires a full-dimensional polytope")
    points = poly.integer_points(1).points
    if len(points) > point_cap:
        raise ResourceLimitError(
            f"polytope has {len(points)} lattice points, point cap is {point_cap}"
        )
    d = poly.dim
    target_volume = poly.volume() * factorial(d)
    if target_volume.denominator != 1:
        raise RuntimeError("normalized volume must be an integer")
    target = int(target_volume)

    candidates: list[LatticeSimplex] = []
    for comb in itertools.combinations(points, d + 1):
        base = comb[0]
        rows = [[q[i] - base[i] for i in range(d)] for q in comb[1:]]
        if abs(linalg.det_int(rows)) == 1:
            candidates.append(LatticeSimplex(comb))
    if not candidates:
        return SearchResult(None, True, 0)
    candidates.sort(key=lambda s: s.vertices)

    # hyperplane through each facet vertex set, plus each candidate's side
    hyperplanes: dict[tuple[Point, ...], tuple[Point, int]] = {}

    def facet_plane(fkey: tuple[Point, ...]) -> tuple[Point, int]:
        plane = hyperplanes.get(fkey)
        if plane is None:
            base = fkey[0]
            rows = [[q[i] - base[i] for i in range(d)] for q in fkey[1:]]
            normal = linalg.primitive_vector(linalg.cofactor_normal(rows, d))
            for x in normal:
                if x:
                    if x < 0:
                        normal = tuple(-y for y in normal)
                    break
            plane = (normal, dot(normal, base))
            hyperplanes[fkey] = plane
        return plane

    cand_facets: list[list[tuple[tuple[Point, ...], int]]] = []
    by_facet: dict[tuple[Point, ...], list[tuple[int, int]]] = {}
    for idx, cand in enumerate(candidates):
        entry = []
        for omit, fkey in enumerate(cand.facet_vertex_sets()):
            normal, offset = facet_plane(fkey)
            side = 1 if dot(normal, cand.vertices[omit]) > offset else -1
            entry.append((fkey, side))
            by_facet.setdefault(fkey, []).append((idx, side))
        cand_facets.append(entry)

    boundary_cache: dict[tuple[Point, ...], bool] = {}
    poly_facets = poly.facets

    def on_boundary(fkey: tuple[Point, ...]) -> bool:
        res = boundary_cache.get(fkey)
        if res is None:
            res = any(all(h.slack(p) == 0 for p in fkey) for h in poly_facets)
            boundary_cache[fkey] = res
        return res

    compat_cache: dict[tuple[int, int], bool] = {}

    def compatible(i: int, j: int) -> bool:
        key = (i, j) if i < j else (j, i)
        res = compat_cache.get(key)
        if res is None:
            res = simplices_face_to_face(candidates[i], candidates[j])
            compat_cache[key] = res
        return res

    nodes = 0
    budget_hit = False
    chosen: list[int] = []
    chosen_set: set[int] = set()
    facet_load: dict[tuple[Point, ...], list[int]] = {}

    def place(idx: int) -> None:
        chosen.append(idx)
        chosen_set.add(idx)
        for fkey, _ in cand_facets[idx]:
            facet_load.setdefault(fkey, []).append(idx)

    def unplace(idx: int) -> None:
        chosen.pop()
        chosen_set.discard(idx)
        for fkey, _ in cand_facets[idx]:
            lst = facet_load[fkey]
            lst.pop()
            if not lst:
                del facet_load[fkey]

    def extend() -> Triangulation | None:
        nonlocal nodes
        if len(chosen) == target:
            return Triangulation(poly, tuple(candidates[i] for i in chosen))
        open_facets = [
            fkey
            for fkey, owners in facet_load.items()
            if len(owners) == 1 and not on_boundary(fkey)
        ]
        if not open_facets:
            return None  # closed complex below target volume: dead end
        fkey = min(open_facets)
        owner = facet_load[fkey][0]
        owner_side = next(s for fk, s in cand_facets[owner] if fk == fkey)
        for idx, side in by_facet[fkey]:
            if side == owner_side or idx in chosen_set:
                continue
            nodes += 1
            if nodes > budget:
                raise _Budget
            if all(compatible(idx, k) for k in chosen):
                place(idx)
                result = extend()
                if result is not None:
                    return result
                unplace(idx)
        return None

    v0 = poly.vertices[0]
    seeds = [i for i, c in enumerate(candidates) if v0 in c.vertices]
    try:
        for seed in seeds:
            nodes += 1
            if nodes > budget:
                raise _Budget
            place(seed)
            result = extend()
            if result is not None:
                report = validate_triangulation(result)
                if not (report.valid and report.is_primitive):
                    raise RuntimeError(
                        f"search produced an invalid triangulation: {report.problems}"
                    )
                return SearchResult(result, False, nodes)
            unplace(seed)
    except _Budget:
        budget_hit = True
    return SearchResult(None, not budget_hit, nodes)
