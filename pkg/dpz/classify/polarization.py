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

"""Restriction of the pulled-back polarization to moduli fibers.

The parameter space ``E^{12−d}`` has coordinates ``u`` (the image of
``[O]``), the Picard coordinates ``h, x_1..x_{9−d}`` (or ``s, f``) and
``q`` (the image of the point class).  A class ``M`` acts on it through
the functional ``(rank, c1, χ − rank)``.  The natural line bundle pulls
back to the form ``−h²/2 + Σx_i²/2 + u·q − δq²/2``.

Usage::

    from dpz.classify import class_functional, polarization_restrict, pullback_form
    from dpz.surface import point_class, structure_sheaf

    form = pullback_form(1)
    polarization_restrict(form, [class_functional(point_class(1))]).definiteness
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from sympy import Matrix, Rational

from dpz.errors import DomainError
from dpz.lattice.basis import get_lattice, to_fraction
from dpz.surface.classes import SurfaceClass

logger = logging.getLogger(__name__)


class Definiteness(str, Enum):
    INDEFINITE = "indefinite"
    SEMIDEFINITE = "positive semidefinite"
    DEFINITE = "positive definite"


@dataclass(frozen=True)
class QuadraticForm:
    """Symmetric rational form on named coordinates."""

    labels: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.matrix)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise DomainError(f"form matrix must be {n}x{n} for labels {list(self.labels)}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise DomainError(
                        f"form is not symmetric at ({self.labels[i]}, {self.labels[j]})"
                    )
        object.__setattr__(self, "matrix", rows)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def value(self, x: Sequence[int | Fraction]) -> Fraction:
        if len(x) != self.dim:
            raise DomainError(f"expected {self.dim} coordinates, got {len(x)}")
        return sum(
            (Fraction(x[i]) * self.matrix[i][j] * x[j]
             for i in range(self.dim) for j in range(self.dim)),
            Fraction(0),
        )

    def to_sympy(self) -> Matrix:
        return Matrix([[Rational(c.numerator, c.denominator) for c in row] for row in self.matrix])

    def to_dict(self) -> dict[str, Any]:
        return {
            "labels": list(self.labels),
            "matrix": [[str(c) for c in row] for row in self.matrix],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> QuadraticForm:
        return cls(
            tuple(data["labels"]),
            tuple(tuple(Fraction(c) for c in row) for row in data["matrix"]),
        )


@dataclass(frozen=True)
class PolarizationVerdict:
    definiteness: Definiteness
    free_dim: int
    kernel: tuple[tuple[Fraction, ...], ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "definiteness": self.definiteness.value,
            "free_dim": self.free_dim,
            "kernel": [[str(c) for c in k] for k in self.kernel],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> PolarizationVerdict:
        return cls(
            Definiteness(data["definiteness"]),
            int(data["free_dim"]),
            tuple(tuple(Fraction(c) for c in k) for k in data.get("kernel", [])),
        )


# ---------------------------------------------------------------------------
# Coordinates
# ---------------------------------------------------------------------------

def parameter_labels(degree: int, even: bool = False) -> tuple[str, ...]:
    return ("u",) + get_lattice(degree, even).labels + ("q",)


def class_functional(m: SurfaceClass) -> tuple[int, ...]:
    """Coordinates of ``φ([M])``: ``(rank, c1, χ − rank)``."""
    return (m.rank,) + m.c1.coeffs + (m.chi - m.rank,)


def pullback_form(degree: int, delta: int = 0, even: bool = False) -> QuadraticForm:
    """``−c1²/2 + u·q − δq²/2`` on :func:`parameter_labels` coordinates."""
    lattice = get_lattice(degree, even)
    labels = parameter_labels(degree, even)
    n = len(labels)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(lattice.dim):
        for j in range(lattice.dim):
            rows[i + 1][j + 1] = Fraction(-lattice.gram[i][j], 2)
    rows[0][n - 1] = rows[n - 1][0] = Fraction(1, 2)
    rows[n - 1][n - 1] = Fraction(-delta, 2)
    return QuadraticForm(labels, tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# Restriction
# ---------------------------------------------------------------------------

def _fractions(column: Matrix) -> tuple[Fraction, ...]:
    return tuple(to_fraction(column[i]) for i in range(column.rows))


def polarization_restrict(
    form: QuadraticForm, constraints: Sequence[Sequence[int]],
) -> PolarizationVerdict:
    """Definiteness of *form* on the common kernel of the *constraints*.

    A positive semidefinite verdict carries a basis of the null directions
    expressed in the full coordinates.

    Raises:
        DomainError: a constraint has the wrong length, or the constraints
            leave no free direction.
    """
    n = form.dim
    for c in constraints:
        if len(c) != n:
            raise DomainError(f"constraint {list(c)} has {len(c)} entries, expected {n}")
    if constraints:
        basis = Matrix([list(c) for c in constraints]).nullspace()
        if not basis:
            raise DomainError("constraints fix every coordinate")
        k = Matrix.hstack(*basis)
    else:
        k = Matrix.eye(n)
    restricted = k.T * form.to_sympy() * k

    if restricted.is_positive_definite:
        verdict = PolarizationVerdict(Definiteness.DEFINITE, k.cols)
    elif restricted.is_positive_semidefinite:
        kernel = tuple(_fractions(k * w) for w in restricted.nullspace())
        verdict = PolarizationVerdict(Definiteness.SEMIDEFINITE, k.cols, kernel)
    else:
        verdict = PolarizationVerdict(Definiteness.INDEFINITE, k.cols)
    logger.debug(
        "Form on %d free directions is %s", k.cols, verdict.definiteness.value
    )
    return verdict
