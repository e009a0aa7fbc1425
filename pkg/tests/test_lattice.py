# dpz — exact arithmetic for del Pezzo surfaces and elliptic algebras
# Copyright (C) 2024-2026 Dr Horst Herb
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Tests for dpz.lattice."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from dpz.errors import DomainError, UnsupportedCaseError
from dpz.lattice import (
    LatticeVector,
    RationalVector,
    affine_marks,
    alcove_point,
    alcove_vertex,
    closest_vectors,
    fundamental_weights,
    get_lattice,
    highest_roots,
    inner_product,
    is_positive,
    parse_vector,
    positive_roots,
    reduce_to_alcove,
    replay,
    roots_of_Qperp,
    simple_coordinates,
    smith_invariants,
    solve_integer,
    subsystem_analyze,
    vectors_within,
)


def _perp_basis(degree: int) -> list[LatticeVector]:
    return [LatticeVector(degree, b) for b in get_lattice(degree).perp_basis]


def _random_target(rng: random.Random, degree: int = 1, max_den: int = 6) -> RationalVector:
    x = LatticeVector.zero(degree).to_rational()
    for b in _perp_basis(degree):
        x = x + b * Fraction(rng.randint(-6, 6), rng.randint(1, max_den))
    return x


# ---------------------------------------------------------------------------
# Forms and vectors
# ---------------------------------------------------------------------------

class TestInnerProduct:
    def test_defining_form(self):
        h = LatticeVector.named(1, h=1)
        e1 = LatticeVector.named(1, e1=1)
        assert inner_product(h, h) == 1
        assert inner_product(e1, e1) == -1
        assert inner_product(h, e1) == 0

    def test_positive_form_is_negation(self):
        e1 = LatticeVector.named(1, e1=1)
        assert inner_product(e1, e1, positive=True) == 1

    @pytest.mark.parametrize("degree", range(1, 10))
    def test_anticanonical_square_is_degree(self, degree):
        q = LatticeVector.anticanonical(degree)
        assert q.square() == degree

    def test_even_component(self):
        q = LatticeVector.anticanonical(8, even=True)
        assert q.square() == 8

    def test_degree_mismatch(self):
        with pytest.raises(DomainError, match="degree mismatch"):
            inner_product(LatticeVector.zero(1), LatticeVector.zero(2))

    def test_rational_values_are_exact(self):
        x = LatticeVector.named(1, e1=1, e2=-1) / 3
        assert x.norm() == Fraction(2, 9)


class TestVectors:
    def test_serialize_and_parse(self):
        q = LatticeVector.anticanonical(1)
        text = q.serialize()
        assert text == "d=1:[3,-1,-1,-1,-1,-1,-1,-1,-1]"
        assert parse_vector(text) == q

    def test_parse_rational(self):
        v = parse_vector("d=7:[0,1/2,-1/2]")
        assert isinstance(v, RationalVector)
        assert v.coeffs[1] == Fraction(1, 2)

    def test_parse_rejects_garbage(self):
        with pytest.raises(DomainError, match="cannot parse"):
            parse_vector("[1,2,3]")

    def test_wrong_length(self):
        with pytest.raises(DomainError, match="coefficients"):
            LatticeVector(1, (1, 2))

    def test_unknown_label(self):
        with pytest.raises(DomainError, match="Unknown basis label"):
            LatticeVector.named(1, e9=1)

    def test_integer_arithmetic_stays_integral(self):
        a = LatticeVector.named(1, h=1)
        assert isinstance(a + a * 2, LatticeVector)
        assert isinstance(a / 2, RationalVector)

    def test_dict_roundtrip(self):
        v = LatticeVector.named(1, h=2, e3=-1)
        assert LatticeVector.from_dict(v.to_dict()) == v


# ---------------------------------------------------------------------------
# Roots
# ---------------------------------------------------------------------------

class TestRoots:
    @pytest.mark.parametrize(
        "degree,count", [(1, 240), (2, 126), (3, 72), (4, 40), (5, 20), (6, 8), (7, 2),
                         (8, 0), (9, 0)],
    )
    def test_counts(self, degree, count):
        assert len(roots_of_Qperp(degree)) == count

    def test_even_component(self):
        roots = roots_of_Qperp(8, even=True)
        assert {r.coeffs for r in roots} == {(1, -1), (-1, 1)}

    @pytest.mark.parametrize("degree", range(1, 8))
    def test_defining_conditions(self, degree):
        for r in roots_of_Qperp(degree):
            assert r.square() == -2
            assert r.dot_q() == 0

    def test_unsupported_degree(self):
        with pytest.raises(DomainError, match="1..9"):
            roots_of_Qperp(0)

    def test_order_is_canonical(self):
        roots = roots_of_Qperp(2)
        assert list(roots) == sorted(roots, key=lambda r: r.coeffs, reverse=True)

    @pytest.mark.parametrize("degree", range(1, 8))
    def test_half_the_roots_are_positive(self, degree):
        roots = roots_of_Qperp(degree)
        positives = positive_roots(degree)
        assert 2 * len(positives) == len(roots)
        for r in positives:
            assert all(c >= 0 and c.denominator == 1 for c in simple_coordinates(r))
            assert not is_positive(-r)

    def test_e8_highest_root_and_marks(self):
        theta = highest_roots(1)[0]
        q = LatticeVector.anticanonical(1)
        assert theta == q - LatticeVector.named(1, e8=1)
        assert affine_marks(1) == (3, 2, 4, 6, 5, 4, 3, 2)

    def test_reflection_preserves_form(self):
        rng = random.Random(11)
        roots = roots_of_Qperp(1)
        for _ in range(200):
            u = LatticeVector(1, tuple(rng.randint(-5, 5) for _ in range(9)))
            v = LatticeVector(1, tuple(rng.randint(-5, 5) for _ in range(9)))
            alpha = rng.choice(roots)
            assert u.reflect(alpha).dot(v.reflect(alpha)) == u.dot(v)


# ---------------------------------------------------------------------------
# Alcove reduction
# ---------------------------------------------------------------------------

class TestAlcove:
    def test_origin_is_a_vertex(self):
        point, log = reduce_to_alcove(LatticeVector.zero(1), mode="affine")
        assert point.simple == (0,) * 8
        assert point.affine == (1,)
        assert log == ()

    @pytest.mark.parametrize("degree", [1, 2, 3])
    def test_every_root_reduces_to_highest_root(self, degree):
        theta = highest_roots(degree)[0].to_rational()
        for r in roots_of_Qperp(degree):
            dominant, log = reduce_to_alcove(r, mode="finite")
            assert dominant == theta
            assert replay(r, log) == dominant

    @pytest.mark.parametrize("degree", [1, 3, 6])
    def test_random_targets_land_in_alcove(self, degree):
        rng = random.Random(degree)
        for _ in range(60):
            x = _random_target(rng, degree)
            point, log = reduce_to_alcove(x, mode="affine")
            assert point.is_valid()
            assert replay(x, log) == point.representative

    def test_idempotent(self):
        rng = random.Random(5)
        for _ in range(30):
            point, _ = reduce_to_alcove(_random_target(rng), mode="affine")
            again, log = reduce_to_alcove(point.representative, mode="affine")
            assert log == ()
            assert again.coords == point.coords

    def test_reducible_system_has_one_affine_coordinate_per_component(self):
        point, _ = reduce_to_alcove(LatticeVector.zero(6), mode="affine")
        assert point.affine == (1, 1)

    def test_not_orthogonal(self):
        with pytest.raises(DomainError, match="orthogonal"):
            reduce_to_alcove(LatticeVector.named(1, h=1))

    def test_affine_needs_spanning_roots(self):
        with pytest.raises(UnsupportedCaseError):
            reduce_to_alcove(LatticeVector.zero(7), mode="affine")

    def test_unknown_mode(self):
        with pytest.raises(DomainError, match="Unknown reduction mode"):
            reduce_to_alcove(LatticeVector.zero(1), mode="sideways")

    def test_vertices_lie_on_the_affine_wall(self):
        for i in range(8):
            point = alcove_point(alcove_vertex(1, i))
            assert point.is_valid()
            assert point.affine == (0,)

    def test_scaled_coords(self):
        omega = fundamental_weights(1)[1]
        point, _ = reduce_to_alcove(omega / 2, mode="affine")
        assert point.scaled_coords(2) == (0, 1, 0, 0, 0, 0, 0, 0)
        assert point.scaled_coords(2, include_affine=True)[-1] == 0


# ---------------------------------------------------------------------------
# Closest vectors
# ---------------------------------------------------------------------------

class TestClosestVectors:
    def test_origin(self):
        dist, vecs = closest_vectors(LatticeVector.zero(1))
        assert dist == 0
        assert vecs == (LatticeVector.zero(1),)

    def test_midpoint_of_root(self):
        root = LatticeVector.named(1, e1=1, e2=-1)
        dist, vecs = closest_vectors(root / 2)
        assert dist == Fraction(1, 2)
        assert set(vecs) == {LatticeVector.zero(1), root}

    def test_voronoi_bound(self):
        rng = random.Random(2024)
        for _ in range(250):
            dist, _ = closest_vectors(_random_target(rng))
            assert dist <= 1

    def test_deep_hole(self):
        weights = fundamental_weights(1)
        omega = weights[1]
        assert omega.norm() == 4
        dist, vecs = closest_vectors(omega / 2)
        assert dist == 1
        assert LatticeVector.zero(1) in vecs

    @pytest.mark.parametrize("degree", [1, 4, 7])
    def test_agrees_with_exhaustive_search(self, degree):
        rng = random.Random(100 + degree)
        for _ in range(25):
            target = _random_target(rng, degree, max_den=4)
            dist, vecs = closest_vectors(target)
            near = vectors_within(target, dist + 2)
            assert near[0][0] == dist
            assert {v for d, v in near if d == dist} == set(vecs)

    def test_not_orthogonal(self):
        with pytest.raises(DomainError):
            closest_vectors(LatticeVector.named(1, h=1))


# ---------------------------------------------------------------------------
# Subsystems
# ---------------------------------------------------------------------------

class TestSubsystems:
    def test_single_root_in_e8(self):
        report = subsystem_analyze([LatticeVector.named(1, e7=1, e8=-1)])
        assert report.type_string == "A1"
        assert report.orthogonal_string == "E7"
        assert report.orthogonal_type[0].affine_marks == (1, 1, 2, 2, 2, 3, 3, 4)
        assert report.rank_deficit == 0

    def test_single_root_in_e6(self):
        report = subsystem_analyze([LatticeVector.named(3, e1=1, e2=-1)])
        assert report.orthogonal_string == "A5"

    def test_empty_input(self):
        report = subsystem_analyze([], degree=1)
        assert report.orthogonal_string == "E8"
        assert report.orthogonal_type[0].affine_marks == (1, 2, 2, 3, 3, 4, 4, 5, 6)
        assert report.rank_deficit == 0

    def test_empty_input_needs_degree(self):
        with pytest.raises(DomainError, match="degree is required"):
            subsystem_analyze([])

    @pytest.mark.parametrize(
        "degree,expected",
        [(1, "E8"), (2, "E7"), (3, "E6"), (4, "D5"), (5, "A4"), (6, "A2A1")],
    )
    def test_full_root_system(self, degree, expected):
        report = subsystem_analyze(roots_of_Qperp(degree))
        assert report.type_string == expected
        assert report.rank_deficit == 0

    def test_non_root_rejected(self):
        with pytest.raises(DomainError, match="not a root"):
            subsystem_analyze([LatticeVector.named(1, h=1, e1=-1)])

    def test_a7_without_orthogonal_roots_has_deficit(self):
        chain = [LatticeVector.named(1, **{f"e{i}": 1, f"e{i + 1}": -1}) for i in range(1, 8)]
        report = subsystem_analyze(chain)
        assert report.type_string == "A7"
        assert report.orthogonal_string == "0"
        assert report.rank_deficit == 1


class TestSmith:
    def test_identity(self):
        assert smith_invariants([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == (3, (1, 1, 1))

    def test_single_entry(self):
        assert smith_invariants([[2]]) == (1, (2,))

    def test_rank_deficient(self):
        assert smith_invariants([[2, 4], [6, 8]]) == (2, (2, 4))
        assert smith_invariants([[1, 2], [2, 4]]) == (1, (1,))

    def test_empty(self):
        assert smith_invariants([]) == (0, ())

    def test_solve_integer(self):
        assert solve_integer([[2, 0], [0, 3]], [4, 9]) == (2, 3)
        assert solve_integer([[2, 0], [0, 3]], [1, 0]) is None
