import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latmink import (
    LatticePolytope,
    LatticeSimplex,
    PointSet,
    Triangulation,
    check_equality,
    cross_polytope,
    cube,
    decompose,
    generates_zd,
    hull,
    minkowski_power,
    minkowski_sum,
    sigma,
)
from latmink.verify import orthant_fan, symmetric_example_polytope

from conftest import is_n_fold_sum

small_sets_1d = st.lists(st.integers(-4, 4), min_size=1, max_size=5).map(
    lambda xs: PointSet([(x,) for x in xs])
)
small_sets_2d = st.lists(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5
).map(PointSet)


class TestMinkowskiSum:
    def test_segments(self):
        a = PointSet([(0,), (1,)])
        assert minkowski_sum(a, a).points == ((0,), (1,), (2,))

    def test_zero_is_neutral(self):
        a = PointSet([(2, 1), (-1, 3)])
        zero = PointSet([(0, 0)])
        assert minkowski_sum(a, zero) == a

    def test_sigma_3_2_vertex_sum_misses_e3(self):
        verts = PointSet(sigma(3, 2).vertices, 3)
        total = minkowski_sum(verts, verts)
        assert len(total) == 10
        assert (0, 0, 1) not in total

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            minkowski_sum(PointSet([(0,)]), PointSet([(0, 0)]))

    @given(small_sets_2d, small_sets_2d)
    @settings(max_examples=80, deadline=None)
    def test_matches_pairwise_enumeration(self, a, b):
        expected = sorted(
            {(p[0] + q[0], p[1] + q[1]) for p in a.points for q in b.points}
        )
        assert list(minkowski_sum(a, b).points) == expected


class TestMinkowskiPower:
    def test_symmetric_segment(self):
        s = PointSet([(-1,), (0,), (1,)])
        assert minkowski_power(s, 3).points == tuple((k,) for k in range(-3, 4))

    def test_zero_power_is_origin(self):
        s = PointSet([(5, 5)])
        assert minkowski_power(s, 0).points == ((0, 0),)

    def test_symmetric_example_misses_witness(self):
        omega = symmetric_example_polytope().integer_points(1)
        assert len(omega) == 9
        assert (-1, -1, 1) not in minkowski_power(omega, 2)

    def test_unit_simplex_fills_dilations(self):
        # vertex sums against the independent dilation enumeration
        for d in (1, 2, 3):
            simplex = hull([(0,) * d] + [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)])
            verts = PointSet(simplex.vertices, d)
            for n in range(1, 5):
                assert minkowski_power(verts, n) == simplex.integer_points(n)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            minkowski_power(PointSet([(0,)]), -1)

    @given(small_sets_2d, st.integers(1, 3))
    @settings(max_examples=60, deadline=None)
    def test_scaled_copies_are_contained(self, s, n):
        power = minkowski_power(s, n)
        for p in s.points:
            assert tuple(n * c for c in p) in power

    @given(small_sets_2d, st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_contained_in_dilation(self, s, n):
        poly = hull(s.points)
        assert minkowski_power(s, n).issubset(poly.integer_points(n))

    @given(small_sets_2d, st.integers(1, 3))
    @settings(max_examples=60, deadline=None)
    def test_monotone_when_zero_present(self, s, n):
        with_zero = PointSet(list(s.points) + [(0, 0)])
        assert minkowski_power(with_zero, n).issubset(minkowski_power(with_zero, n + 1))


class TestCheckEquality:
    def test_sigma_3_2(self):
        p = LatticePolytope(sigma(3, 2).vertices)
        assert check_equality(p, 1).holds
        report = check_equality(p, 2)
        assert not report.holds
        assert report.witness == (0, 0, 1)

    def test_sigma_5_2_delayed(self):
        p = LatticePolytope(sigma(5, 2).vertices)
        assert [check_equality(p, n).holds for n in (1, 2, 3)] == [True, True, False]

    def test_witness_is_lex_least(self):
        p = LatticePolytope(sigma(3, 2).vertices)
        report = check_equality(p, 2)
        full = p.integer_points(2)
        ball = minkowski_power(p.integer_points(1), 2)
        missing = sorted(set(full.points) - set(ball.points))
        assert report.witness == missing[0]

    def test_small_polygons_always_hold(self):
        for pts in [
            [(0, 0), (2, 0), (0, 3)],
            [(-1, -1), (2, 0), (0, 2), (1, -1)],
            [(0, 0), (3, 1), (1, 3)],
        ]:
            p = hull(pts)
            for n in range(1, 6):
                assert check_equality(p, n).holds

    def test_rejects_n_zero(self, unit_square):
        with pytest.raises(ValueError):
            check_equality(unit_square, 0)


class TestDecompose:
    def test_square_diagonal_example(self, unit_square):
        tri = Triangulation(
            unit_square,
            (
                LatticeSimplex([(0, 0), (1, 0), (1, 1)]),
                LatticeSimplex([(0, 0), (0, 1), (1, 1)]),
            ),
        )
        dec = decompose(unit_square, tri, 2, (1, 2))
        assert dec.summands == ((0, 1), (1, 1))

    def test_one_dimensional(self):
        seg = LatticePolytope([(0,), (1,)])
        tri = Triangulation(seg, (LatticeSimplex([(0,), (1,)]),))
        assert decompose(seg, tri, 3, (2,)).summands == ((0,), (1,), (1,))

    def test_cross_polytope_example(self):
        poly = cross_polytope(2)
        dec = decompose(poly, orthant_fan(2), 2, (1, -1))
        assert dec.summands == ((0, -1), (1, 0))

    def test_point_outside_dilation(self, unit_square):
        tri = Triangulation(
            unit_square,
            (
                LatticeSimplex([(0, 0), (1, 0), (1, 1)]),
                LatticeSimplex([(0, 0), (0, 1), (1, 1)]),
            ),
        )
        with pytest.raises(ValueError):
            decompose(unit_square, tri, 2, (3, 0))

    def test_non_primitive_triangulation_rejected(self):
        p = LatticePolytope(sigma(3, 2).vertices)
        tri = Triangulation(p, (LatticeSimplex(p.vertices),))
        with pytest.raises(ValueError):
            decompose(p, tri, 1, (1, 0, 0))

    def test_every_point_of_small_dilations_decomposes(self):
        for poly, tri in [
            (cross_polytope(2), orthant_fan(2)),
            (cross_polytope(3), orthant_fan(3)),
        ]:
            omega = poly.integer_points(1)
            for n in (1, 2, 3):
                for x in poly.integer_points(n):
                    dec = decompose(poly, tri, n, x)
                    assert len(dec.summands) == n
                    assert all(s in omega for s in dec.summands)
                    assert tuple(map(sum, zip(*dec.summands))) == x
                    # independent check that x really is an n-fold sum
                    assert is_n_fold_sum(omega, n, x)


class TestGeneratesZd:
    def test_standard_cross(self):
        assert generates_zd(PointSet([(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]))

    def test_index_two_sublattice(self):
        s = PointSet([(0, 0), (2, 0), (-2, 0), (0, 1), (0, -1)])
        assert not generates_zd(s)

    def test_symmetric_example(self):
        omega = symmetric_example_polytope().integer_points(1)
        assert generates_zd(omega)

    def test_requires_origin(self):
        with pytest.raises(ValueError, match="origin"):
            generates_zd(PointSet([(1, 0), (-1, 0)]))

    def test_requires_symmetry(self):
        with pytest.raises(ValueError, match="symmetric"):
            generates_zd(PointSet([(0, 0), (1, 0), (0, 1), (0, -1)]))

    def test_origin_alone_generates_nothing(self):
        assert not generates_zd(PointSet([(0, 0)]))


class TestPrimitiveTriangulationImpliesEquality:
    def test_found_triangulation_forces_equality(self):
        # polytopes where the search certifies a primitive triangulation
        # must satisfy the dilation equality at every tested n
        from latmink import search_primitive_triangulation, validate_triangulation

        cases = [
            cube(3),
            cube(2, -1, 1),
            cross_polytope(2),
            cross_polytope(3),
            LatticePolytope(sigma(3, 3).vertices),
            hull([(0, 0), (3, 1), (1, 3)]),
        ]
        for poly in cases:
            found = search_primitive_triangulation(poly)
            assert found.triangulation is not None, poly
            assert validate_triangulation(found.triangulation).is_primitive
            for n in range(1, 6):
                assert check_equality(poly, n).holds, (poly, n)


class TestRemarkCrossChecks:
    def test_equality_plus_interior_origin_gives_coverage(self):
        # with equality for n <= N and 0 interior, the n-fold sums fill boxes
        for poly in (cube(2, -1, 1), cross_polytope(2), cross_polytope(3)):
            omega = poly.integer_points(1)
            assert generates_zd(omega)
            d = poly.dim
            box = list(itertools.product(range(-2, 3), repeat=d))
            for n in range(1, 13):
                ball = minkowski_power(omega, n)
                if all(p in ball for p in box):
                    break
            else:
                pytest.fail(f"radius-2 box never covered for {poly}")
