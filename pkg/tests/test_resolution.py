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

"""Tests for dpz.resolution."""

from __future__ import annotations

import pytest

from dpz.elliptic import Autoequivalence, DetClass, DivisorialBundle, EllipticClass, RelationSet
from dpz.errors import DomainError, UnsupportedCaseError
from dpz.resolution import (
    ResolutionShape,
    SequenceSpec,
    alternating_sum,
    free_shape,
    minimality_report,
)


def _line_shape(dL: int, depth: int = 4) -> tuple[SequenceSpec, ResolutionShape]:  # noqa: N803
    seq = SequenceSpec.line_bundles(Autoequivalence(dL))
    return seq, free_shape(seq, 0, depth)


class TestFreeShape:
    def test_degree_one(self):
        _, shape = _line_shape(1)
        assert shape.indices(0) == [0]
        assert shape.indices(1) == [-3, -2, -1]
        assert shape.indices(2) == [-6, -5, -4, -3]
        assert shape.indices(3) == [-9, -8, -7, -6]
        assert shape.bracket().endswith("[-6,-5,-4,-3] -> [-3,-2,-1] -> [0]")

    def test_degree_two(self):
        _, shape = _line_shape(2)
        assert shape.indices(1) == [-2, -1, -1]
        assert shape.indices(2) == [-4, -3, -3, -2]
        assert shape.bracket().endswith("[-4,-3,-3,-2] -> [-2,-1,-1] -> [0]")

    def test_degree_three(self):
        _, shape = _line_shape(3)
        assert shape.indices(1) == [-1, -1, -1]
        assert shape.indices(2) == [-3, -2, -2, -2]
        assert shape.bracket().endswith("[-3,-2,-2,-2] -> [-1,-1,-1] -> [0]")

    @pytest.mark.parametrize("dL,period", [(1, 3), (2, 2)])
    def test_periodic(self, dL, period):  # noqa: N803
        _, shape = _line_shape(dL, depth=7)
        for k in range(2, 6):
            assert shape.indices(k + 1) == [j - period for j in shape.indices(k)]

    def test_indices_in_at_most_two_consecutive_degrees(self):
        for dL in (1, 2, 3):
            _, shape = _line_shape(dL, depth=6)
            seen: dict[int, list[int]] = {}
            for k in shape.degrees():
                for j, _ in shape.terms[k]:
                    seen.setdefault(j, []).append(k)
            for degrees in seen.values():
                assert len(degrees) <= 2
                if len(degrees) == 2:
                    assert degrees[1] == degrees[0] + 1

    def test_stable_rank_two(self):
        psi = Autoequivalence(1)
        seq = SequenceSpec.from_bundle(DivisorialBundle.single(EllipticClass(2, 1)), psi)
        shape = free_shape(seq, 0, 4)
        assert shape.terms[1] == ((-1, 4),)
        assert shape.terms[2] == ((-2, 8),)
        assert shape.terms[3] == ((-3, 12),)
        assert shape.markers == ()

    def test_markers(self):
        _, shape = _line_shape(1)
        first = shape.markers[0]
        assert (first.index, first.degrees) == (-3, (1, 2))
        assert first.det_difference == DetClass.parse("-2q")

    def test_depth(self):
        seq = SequenceSpec.line_bundles(Autoequivalence(1))
        with pytest.raises(DomainError, match="depth"):
            free_shape(seq, 0, 0)

    def test_explicit_sequence_runs_out(self):
        seq = SequenceSpec.from_classes([EllipticClass(1, -1), EllipticClass(1, 0)], start=-1)
        with pytest.raises(DomainError, match="outside the explicit sequence"):
            free_shape(seq, 0, 3)

    def test_equal_slope_non_stable(self):
        seq = SequenceSpec.from_classes(
            [EllipticClass(2, -2), EllipticClass(2, -1), EllipticClass(1, 0)], start=-2,
        )
        with pytest.raises(UnsupportedCaseError):
            free_shape(seq, 0, 3)

    def test_sequence_must_increase(self):
        with pytest.raises(DomainError, match="strictly increasing"):
            SequenceSpec.from_classes([EllipticClass(1, 1), EllipticClass(1, 0)])

    def test_dict_roundtrip(self):
        _, shape = _line_shape(2)
        assert ResolutionShape.from_dict(shape.to_dict()) == shape


class TestMinimality:
    def test_degree_one_with_order_two_translation(self):
        _, shape = _line_shape(1)
        assert minimality_report(shape, RelationSet.parse("2q")).minimal

    def test_degree_one_generic(self):
        _, shape = _line_shape(1)
        report = minimality_report(shape, RelationSet())
        assert not report.minimal
        assert report.culprits == ((-3, (1, 2)),)

    def test_degree_two(self):
        _, shape = _line_shape(2)
        assert minimality_report(shape, RelationSet.parse("2q")).minimal
        report = minimality_report(shape)
        assert not report.minimal
        assert report.culprits[0] == (-2, (1, 2))

    @pytest.mark.parametrize("relations", ["", "2q", "q", "3q, L"])
    def test_degree_three_always_minimal(self, relations):
        _, shape = _line_shape(3)
        assert shape.markers
        assert minimality_report(shape, RelationSet.parse(relations)).minimal


class TestAlternatingSum:
    @pytest.mark.parametrize("dL", [1, 2, 3])
    def test_simple_module(self, dL):  # noqa: N803
        seq, shape = _line_shape(dL, depth=6)
        for l in range(-3, 2):  # noqa: E741
            expected = 1 if l == 0 else 0
            assert alternating_sum(shape, seq, l) == expected

    def test_stable_rank_two(self):
        psi = Autoequivalence(1)
        seq = SequenceSpec.from_bundle(DivisorialBundle.single(EllipticClass(2, 1)), psi)
        shape = free_shape(seq, 0, 5)
        for l in range(-3, 1):  # noqa: E741
            assert alternating_sum(shape, seq, l) == (1 if l == 0 else 0)
