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

"""Tests for dpz.surface."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from dpz.elliptic import DetClass, EllipticClass
from dpz.errors import DomainError
from dpz.lattice import LatticeVector, get_lattice
from dpz.surface import (
    SurfaceClass,
    dual,
    euler_pairing,
    line_bundle,
    line_twist_max,
    normalize_sign,
    parse_surface_class,
    phi_star,
    point_class,
    rational_curve_bundle,
    restrict_to_elliptic,
    section_class,
    serre_twist,
    structure_sheaf,
    twist,
    twist_center,
    twist_constant,
    validate_collection,
)


def _vector(rng: random.Random, degree: int, bound: int = 3) -> LatticeVector:
    dim = get_lattice(degree).dim
    return LatticeVector(degree, tuple(rng.randint(-bound, bound) for _ in range(dim)))


def _perp_vector(rng: random.Random, degree: int, bound: int = 2) -> LatticeVector:
    v = LatticeVector.zero(degree)
    for b in get_lattice(degree).perp_basis:
        v = v + LatticeVector(degree, b) * rng.randint(-bound, bound)
    return v


def _random_class(rng: random.Random, degree: int, positive: bool = False) -> SurfaceClass:
    rank = rng.randint(1, 5) if positive else rng.randint(-4, 4)
    return SurfaceClass(rank, _vector(rng, degree), rng.randint(-5, 5))


# ---------------------------------------------------------------------------
# Euler pairing and twists
# ---------------------------------------------------------------------------

class TestEulerPairing:
    def test_structure_sheaf(self):
        o = structure_sheaf(1)
        assert euler_pairing(o, o) == 1

    def test_exceptional_curve_sheaf(self):
        c = SurfaceClass(0, LatticeVector.named(1, e1=1), 0)
        assert euler_pairing(c, c) == 1

    def test_rational_curve_line_bundle(self):
        d = LatticeVector.named(1, h=1, e1=-1)
        assert euler_pairing(structure_sheaf(1), line_bundle(-d)) == 0

    def test_point(self):
        assert euler_pairing(structure_sheaf(3), point_class(3)) == 1

    def test_degree_mismatch(self):
        with pytest.raises(DomainError, match="degree mismatch"):
            euler_pairing(structure_sheaf(1), structure_sheaf(2))

    @pytest.mark.parametrize("degree", [1, 3, 5])
    def test_bilinear(self, degree):
        rng = random.Random(degree)
        for _ in range(100):
            a, b, c = (_random_class(rng, degree) for _ in range(3))
            assert euler_pairing(a + b, c) == euler_pairing(a, c) + euler_pairing(b, c)
            assert euler_pairing(a, b + c) == euler_pairing(a, b) + euler_pairing(a, c)

    @pytest.mark.parametrize("degree", [1, 2, 6])
    def test_serre_duality(self, degree):
        rng = random.Random(10 + degree)
        for _ in range(100):
            m, n = _random_class(rng, degree), _random_class(rng, degree)
            assert euler_pairing(m, n) == euler_pairing(n, serre_twist(m))


class TestTwist:
    def test_trivial_twist(self):
        o = structure_sheaf(1)
        assert twist(o, LatticeVector.zero(1)) == o

    def test_twist_by_line(self):
        assert twist(structure_sheaf(1), LatticeVector.named(1, h=1)) == SurfaceClass(
            1, LatticeVector.named(1, h=1), 3
        )

    def test_serre_twist_of_structure_sheaf(self):
        q = LatticeVector.anticanonical(1)
        assert serre_twist(structure_sheaf(1)) == SurfaceClass(1, -q, 1)

    @pytest.mark.parametrize("degree", [1, 4])
    def test_invariance(self, degree):
        rng = random.Random(20 + degree)
        for _ in range(200):
            m, n = _random_class(rng, degree), _random_class(rng, degree)
            d = _vector(rng, degree)
            assert euler_pairing(twist(m, d), twist(n, d)) == euler_pairing(m, n)
            assert twist(twist(m, d), -d) == m

    def test_slope_shift_and_restriction(self):
        rng = random.Random(3)
        for _ in range(100):
            m = _random_class(rng, 1, positive=True)
            d = _vector(rng, 1)
            assert twist(m, d).slope == m.slope + d.dot_q()
            before = restrict_to_elliptic(m, 2).deg
            assert restrict_to_elliptic(twist(m, d), 2).deg == before + d.dot_q() * m.rank

    def test_dual(self):
        d = LatticeVector.named(2, h=2, e1=-1, e5=3)
        assert dual(line_bundle(d)) == line_bundle(-d)
        m = SurfaceClass(3, d, -4)
        assert dual(dual(m)) == m


class TestRestriction:
    def test_examples(self):
        assert restrict_to_elliptic(structure_sheaf(1), 0) == EllipticClass(1, 0)
        curve = SurfaceClass(0, LatticeVector.named(1, e1=1), 0)
        assert restrict_to_elliptic(curve, 0) == EllipticClass(0, 1)
        assert restrict_to_elliptic(point_class(1), 5) == EllipticClass(0, 0)

    def test_delta(self):
        assert restrict_to_elliptic(structure_sheaf(1), 3) == EllipticClass(1, 3)

    def test_additive(self):
        rng = random.Random(4)
        for _ in range(50):
            a, b = _random_class(rng, 2), _random_class(rng, 2)
            ra, rb = restrict_to_elliptic(a, 1), restrict_to_elliptic(b, 1)
            total = restrict_to_elliptic(a + b, 1)
            assert (total.rank, total.deg) == (ra.rank + rb.rank, ra.deg + rb.deg)


# ---------------------------------------------------------------------------
# Transforms
# ---------------------------------------------------------------------------

class TestPhiStar:
    def test_structure_sheaf_to_section(self):
        out = phi_star(structure_sheaf(0), mode="general")
        assert out == SurfaceClass(0, section_class(), 0)

    def test_general_involution(self):
        rng = random.Random(5)
        for _ in range(200):
            m = _random_class(rng, 0)
            assert phi_star(phi_star(m)) == m

    def test_anticanonical_rational_curve(self):
        d = LatticeVector.named(1, h=1, e1=-1)
        out, shifts = normalize_sign(phi_star(line_bundle(-d), mode="anticanonical"))
        assert shifts == 1
        assert out == SurfaceClass(2, LatticeVector(1, (2, 0, -1, -1, -1, -1, -1, -1, -1)), 0)
        assert euler_pairing(out, out) == 1

    def test_anticanonical_involution(self):
        rng = random.Random(6)
        o = structure_sheaf(1)
        count = 0
        while count < 100:
            m = _random_class(rng, 1)
            if euler_pairing(o, m) != 0:
                continue
            count += 1
            once = phi_star(m, mode="anticanonical")
            assert phi_star(once, mode="anticanonical") == m

    def test_context(self):
        with pytest.raises(DomainError, match="elliptic surface"):
            phi_star(structure_sheaf(1), mode="general")
        with pytest.raises(DomainError, match="degree-1"):
            phi_star(structure_sheaf(2), mode="anticanonical")
        with pytest.raises(DomainError, match="Unknown phi_star mode"):
            phi_star(structure_sheaf(0), mode="other")


class TestRationalCurveBundle:
    def test_ruling(self):
        e = rational_curve_bundle(LatticeVector.named(1, h=1, e1=-1))
        assert e == SurfaceClass(2, LatticeVector(1, (2, 0, -1, -1, -1, -1, -1, -1, -1)), 0)
        assert e.slope == Fraction(-1, 2)

    def test_line(self):
        e = rational_curve_bundle(LatticeVector.named(1, h=1))
        assert e.rank == 3
        assert e.slope == Fraction(-1, 3)
        assert e.is_exceptional()

    def test_exceptional_curve_rejected(self):
        with pytest.raises(DomainError, match="rational-curve"):
            rational_curve_bundle(LatticeVector.named(1, e1=1))

    @pytest.mark.parametrize("degree", [2, 3, 5])
    def test_higher_degree_rejected(self, degree):
        ruling = LatticeVector.named(degree, h=1, e1=-1)
        assert ruling.dot_q() == 2
        with pytest.raises(DomainError, match="degree-1 surface"):
            rational_curve_bundle(ruling)

    def test_pairings_with_structure_sheaf(self):
        o = structure_sheaf(1)
        for d in (
            LatticeVector.named(1, h=1, e1=-1),
            LatticeVector.named(1, h=1),
            LatticeVector.named(1, h=2, e1=-1, e2=-1, e3=-1),
            LatticeVector.named(1, h=2),
        ):
            e = rational_curve_bundle(d)
            assert e.is_exceptional()
            assert e.slope == Fraction(-1, d.dot_q())
            assert euler_pairing(o, e) == 0
            # χ(E, O) = −c1(E)·Q = 1 on a degree-1 surface
            assert euler_pairing(e, o) == 1


# ---------------------------------------------------------------------------
# Necessary conditions
# ---------------------------------------------------------------------------

class TestLineTwistMax:
    def test_structure_sheaf(self):
        o = structure_sheaf(1)
        value, maximizers = line_twist_max(o, o)
        assert value == 1
        assert maximizers == (LatticeVector.zero(1),)

    def test_rank_zero_rejected(self):
        with pytest.raises(DomainError, match="positive ranks"):
            line_twist_max(point_class(1), structure_sheaf(1))

    def test_constant_along_twists(self):
        rng = random.Random(12)
        for _ in range(40):
            e = _random_class(rng, 1, positive=True)
            ep = _random_class(rng, 1, positive=True)
            const = twist_constant(e, ep)
            center = twist_center(e, ep)
            half = Fraction(e.rank * ep.rank, 2)
            for _ in range(5):
                d = _perp_vector(rng, 1)
                value = euler_pairing(twist(ep, -d), e)
                assert value - half * (d.to_rational() - center).square() == const

    def test_maximum_dominates_samples(self):
        rng = random.Random(13)
        for _ in range(20):
            e = _random_class(rng, 1, positive=True)
            ep = _random_class(rng, 1, positive=True)
            best, maximizers = line_twist_max(e, ep)
            for d in maximizers:
                assert euler_pairing(twist(ep, -d), e) == best
            for _ in range(10):
                d = _perp_vector(rng, 1)
                assert euler_pairing(twist(ep, -d), e) <= best


class TestValidateCollection:
    alpha = LatticeVector.named(1, e7=1, e8=-1)

    def test_single(self):
        assert validate_collection([structure_sheaf(1)]).ok

    def test_root_ordered_pair(self):
        pair = [line_bundle(-self.alpha), structure_sheaf(1)]
        assert validate_collection(pair).ok

    def test_reversed_pair(self):
        pair = [structure_sheaf(1), line_bundle(-self.alpha)]
        report = validate_collection(pair)
        assert not report.ok
        assert report.root_violations == [(0, 1)]
        assert report.nonzero_pairings == []

    def test_determinant_refinement(self):
        pair = [structure_sheaf(1), line_bundle(-self.alpha)]
        distinct = [DetClass.zero(), DetClass.parse("p")]
        assert validate_collection(pair, determinants=distinct).ok
        same = [DetClass.zero(), DetClass.zero()]
        assert not validate_collection(pair, determinants=same).ok

    def test_not_exceptional(self):
        bad = SurfaceClass(2, LatticeVector.zero(1), 1)
        report = validate_collection([bad])
        assert report.not_exceptional == [0]
        assert not report.ok

    def test_slope_window(self):
        pair = [structure_sheaf(1), line_bundle(LatticeVector.named(1, h=1))]
        report = validate_collection(pair)
        assert report.slope_violations == [(0, 1)]

    def test_identical_classes_are_treated_identically(self):
        e = rational_curve_bundle(LatticeVector.named(1, h=1, e1=-1))
        again = parse_surface_class(e.serialize())
        assert validate_collection([e, structure_sheaf(1)]).to_dict() == validate_collection(
            [again, structure_sheaf(1)]
        ).to_dict()


class TestSerialization:
    def test_roundtrip(self):
        e = rational_curve_bundle(LatticeVector.named(1, h=1, e1=-1))
        text = e.serialize()
        assert text == "(2; d=1:[2,0,-1,-1,-1,-1,-1,-1,-1]; 0)"
        assert parse_surface_class(text) == e
        assert SurfaceClass.from_dict(e.to_dict()) == e

    def test_bad_text(self):
        with pytest.raises(DomainError, match="cannot parse class"):
            parse_surface_class("(2, 0)")
