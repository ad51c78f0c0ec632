"""Tests for slice simplices, Ehrhart counts, and reflexivity checks."""

from fractions import Fraction

import pytest

from lapcomp import (
    BudgetExceededError,
    LatticeSimplex,
    build_slice_simplex,
    dilate_count,
    dilate_points,
    h_star,
    interior_count,
    interior_point,
    normality_probe,
    reflexivity_by_halfspaces,
    reflexivity_by_interior_counts,
)
from lapcomp.ehrhart_reflexive import _is_unimodal

# hull of (-1,-1), (1,0), (0,1): the origin is its only interior point
REFLEXIVE_TRIANGLE = LatticeSimplex(2, [(-1, -1), (1, 0), (0, 1)])
UNIT_TRIANGLE = LatticeSimplex(2, [(0, 0), (1, 0), (0, 1)])


class TestLatticeSimplex:
    def test_validation(self):
        with pytest.raises(ValueError):
            LatticeSimplex(0, [()])
        with pytest.raises(ValueError):
            LatticeSimplex(2, [(0, 0), (1, 0)])
        with pytest.raises(ValueError):
            LatticeSimplex(2, [(0, 0), (1, 0), (0, 1, 1)])
        with pytest.raises(ValueError):
            LatticeSimplex(2, [(0, 0), (1, 0), (0, True)])
        with pytest.raises(ValueError):
            LatticeSimplex(2, [(0, 0), (1, 1), (2, 2)])

    def test_edge_matrix_and_volume(self):
        assert REFLEXIVE_TRIANGLE.edge_matrix().to_lists() == [
            [2, 1],
            [1, 2],
        ]
        assert REFLEXIVE_TRIANGLE.normalized_volume() == 3
        assert UNIT_TRIANGLE.normalized_volume() == 1

    def test_generic_simplex_has_no_source(self):
        assert UNIT_TRIANGLE.source_n is None
        assert UNIT_TRIANGLE.slice_height is None


class TestSliceSimplex:
    def test_three(self):
        s = build_slice_simplex(3)
        assert s.dimension == 2
        assert s.vertices == ((3, 3), (5, 4), (4, 5))
        assert s.source_n == 3 and s.slice_height == 3
        assert s.normalized_volume() == 3

    @pytest.mark.parametrize("n", range(3, 8))
    def test_volume_counts_spanning_trees(self, n):
        # the leafed n-cycle has n spanning trees per extra cycle vertex:
        # normalized volume is n**(n-2)
        assert build_slice_simplex(n).normalized_volume() == n ** (n - 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            build_slice_simplex(2)


class TestInteriorPoint:
    def test_odd_is_integral(self):
        assert interior_point(3) == (3, 4, 4)
        assert interior_point(5) == (5, 7, 8, 8, 7)
        assert interior_point(7) == (7, 10, 12, 13, 13, 12, 10)

    def test_even_is_fractional(self):
        u = interior_point(4)
        assert any(isinstance(e, Fraction) for e in u)
        assert u[0] == 4

    def test_first_coordinate_is_n(self):
        for n in range(3, 9):
            assert interior_point(n)[0] == n


class TestHalfspaceReflexivity:
    def test_three_certified(self):
        rep = reflexivity_by_halfspaces(3)
        assert rep.reflexive
        assert rep.reason == "certified"
        assert rep.translation == (4, 4)
        assert rep.rhs == (-1, -1, -1)
        assert rep.translated_vertices == ((-1, -1), (1, 0), (0, 1))

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_odd_primes_certified(self, n):
        assert reflexivity_by_halfspaces(n).reflexive

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_even_refuted_by_fractional_point(self, n):
        rep = reflexivity_by_halfspaces(n)
        assert not rep.reflexive
        assert rep.reason == "canonical interior point is not integral"
        assert rep.reduced_matrix is None

    def test_json_round_trip_types(self):
        data = reflexivity_by_halfspaces(3).to_json_dict()
        assert data["reflexive"] is True
        assert data["translation"] == ["4", "4"]
        assert data["rhs"] == ["-1", "-1", "-1"]


class TestDilateCounting:
    def test_three_counts(self):
        s = build_slice_simplex(3)
        assert [dilate_count(s, t) for t in range(5)] == [1, 4, 10, 19, 31]
        assert [interior_count(s, t) for t in range(5)] == [0, 1, 4, 10, 19]

    @pytest.mark.parametrize("n", [3, 4])
    def test_digit_formula_matches_box_scan(self, n):
        s = build_slice_simplex(n)
        generic = LatticeSimplex(s.dimension, s.vertices)  # no source tag
        for t in range(4):
            assert dilate_count(s, t) == dilate_count(generic, t)
            assert interior_count(s, t) == interior_count(generic, t)

    def test_unit_triangle_closed_forms(self):
        for t in range(6):
            assert dilate_count(UNIT_TRIANGLE, t) == (t + 1) * (t + 2) // 2
        assert [interior_count(UNIT_TRIANGLE, t) for t in range(6)] == [
            0, 0, 0, 1, 3, 6,
        ]

    def test_dilate_points_zero_and_negative(self):
        assert dilate_points(UNIT_TRIANGLE, 0) == [(0, 0)]
        with pytest.raises(ValueError):
            dilate_points(UNIT_TRIANGLE, -1)
        with pytest.raises(ValueError):
            dilate_count(UNIT_TRIANGLE, -2)
        with pytest.raises(ValueError):
            interior_count(UNIT_TRIANGLE, -1)

    def test_box_scan_budget(self):
        with pytest.raises(BudgetExceededError) as err:
            dilate_points(REFLEXIVE_TRIANGLE, 10, budget=3)
        assert err.value.required == 21 * 21

    def test_points_are_actually_inside(self):
        pts = dilate_points(REFLEXIVE_TRIANGLE, 2)
        assert (0, 0) in pts and (2, 2) not in pts
        assert len(pts) == dilate_count(REFLEXIVE_TRIANGLE, 2)


class TestHStar:
    def test_unimodal_helper(self):
        assert _is_unimodal([1, 2, 2, 1])
        assert _is_unimodal([1, 1])
        assert not _is_unimodal([1, 2, 1, 2])
        assert not _is_unimodal([2, 1, 1, 3])

    def test_slice_three(self):
        data = h_star(build_slice_simplex(3))
        assert data.h_star == (1, 1, 1)
        assert data.dilate_counts == (1, 4, 10)
        assert data.palindromic and data.unimodal
        assert data.reflexive_certificate is True

    def test_slice_four(self):
        data = h_star(build_slice_simplex(4))
        assert data.h_star == (1, 6, 9, 0)
        assert not data.palindromic and data.unimodal
        assert data.reflexive_certificate is False

    def test_slice_five(self):
        data = h_star(build_slice_simplex(5))
        assert data.h_star == (1, 21, 81, 21, 1)
        assert data.palindromic and data.unimodal
        assert data.reflexive_certificate is True

    @pytest.mark.parametrize("n", range(3, 7))
    def test_sum_is_normalized_volume(self, n):
        s = build_slice_simplex(n)
        assert sum(h_star(s).h_star) == s.normalized_volume()

    def test_generic_simplexes(self):
        assert h_star(UNIT_TRIANGLE).h_star == (1, 0, 0)
        data = h_star(REFLEXIVE_TRIANGLE)
        assert data.h_star == (1, 1, 1)
        assert data.reflexive_certificate is None

    def test_json_types(self):
        data = h_star(build_slice_simplex(3)).to_json_dict()
        assert data["h_star"] == ["1", "1", "1"]
        assert data["palindromic"] is True


class TestInteriorCountReflexivity:
    def test_slice_three_passes(self):
        assert reflexivity_by_interior_counts(build_slice_simplex(3), 3)

    def test_slice_four_fails(self):
        assert not reflexivity_by_interior_counts(build_slice_simplex(4), 3)

    def test_generic_reflexive_triangle(self):
        assert reflexivity_by_interior_counts(REFLEXIVE_TRIANGLE, 2)
        assert not reflexivity_by_interior_counts(UNIT_TRIANGLE, 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            reflexivity_by_interior_counts(UNIT_TRIANGLE, 0)


class TestNormalityProbe:
    def test_slice_three(self):
        report = normality_probe(build_slice_simplex(3), m_max=3)
        assert report.results == (True, True, True)
        assert report.normal_up_to == 3
        assert report.counterexample is None

    def test_unit_triangle(self):
        report = normality_probe(UNIT_TRIANGLE, m_max=4)
        assert report.normal_up_to == 4

    def test_validation(self):
        with pytest.raises(ValueError):
            normality_probe(UNIT_TRIANGLE, m_max=0)

    def test_json_types(self):
        data = normality_probe(build_slice_simplex(3)).to_json_dict()
        assert data["m_max"] == "2"
        assert data["normal_up_to"] == "2"
        assert data["counterexample"] is None
