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

"""Finite and affine Weyl reduction of rational vectors in Q^⊥ ⊗ ℚ.

Finite mode reflects in simple roots until the vector is dominant.
Affine mode additionally reflects in the affine walls
``<x, θ> = 1`` of every irreducible component and returns an
:class:`AlcovePoint` with coordinates ``c_i = <x, α_i>`` and
``c_0 = 1 - <x, θ>``.  Every step is recorded so the reduction can be
replayed on the input.

Usage::

    from dpz.lattice import LatticeVector, reduce_to_alcove

    x = LatticeVector.named(1, e1=1, e2=-1) / 3
    point, log = reduce_to_alcove(x, mode="affine")
    point.coords
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal

from dpz.errors import DomainError, UnsupportedCaseError
from dpz.lattice.basis import get_lattice, parse_degree_key
from dpz.lattice.roots import affine_marks, highest_roots, simple_components, simple_roots
from dpz.lattice.vectors import LatticeVector, RationalVector

logger = logging.getLogger(__name__)

Mode = Literal["finite", "affine"]

REFLECT = "reflect"
AFFINE = "affine"


@dataclass(frozen=True)
class AlcoveStep:
    """One reduction step: a simple reflection or an affine-wall reflection."""

    kind: str
    root: LatticeVector

    def apply(self, x: RationalVector) -> RationalVector:
        c = x.pos(self.root)
        if self.kind == REFLECT:
            return x - self.root * c
        if self.kind == AFFINE:
            return x - self.root * (c - 1)
        raise DomainError(f"unknown alcove step kind {self.kind!r}")

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "root": self.root.to_dict()}


@dataclass(frozen=True)
class AlcovePoint:
    """A point of the closed fundamental alcove.

    ``simple`` holds ``c_1..c_rank`` against the declared simple roots,
    ``affine`` holds one ``c_0`` per irreducible component.
    """

    degree: int
    representative: RationalVector
    simple: tuple[Fraction, ...]
    affine: tuple[Fraction, ...]
    even: bool = False

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return self.affine + self.simple

    def scaled_coords(self, r: int, include_affine: bool = False) -> tuple[int | Fraction, ...]:
        """``r·(c_1, ..., c_rank)`` (then ``r·c_0`` when *include_affine*).

        Integral entries come back as ``int`` so the result compares with
        printed tuples such as ``8^{-1}(0,0,1,0,0,1,0,0)``.
        """
        values = self.simple + (self.affine if include_affine else ())
        out: list[int | Fraction] = []
        for c in values:
            v = c * r
            out.append(v.numerator if v.denominator == 1 else v)
        return tuple(out)

    def is_valid(self) -> bool:
        """All coordinates nonnegative and ``c_0 + Σ a_i c_i = 1`` per component."""
        if any(c < 0 for c in self.coords):
            return False
        marks = affine_marks(self.degree, self.even)
        for c0, comp in zip(self.affine, simple_components(self.degree, self.even)):
            if c0 + sum(marks[i] * self.simple[i] for i in comp) != 1:
                return False
        return self.representative.dot_q() == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "degree": self.representative.key,
            "representative": self.representative.to_dict(),
            "simple": [str(c) for c in self.simple],
            "affine": [str(c) for c in self.affine],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AlcovePoint:
        degree, even = parse_degree_key(str(data["degree"]))
        return cls(
            degree=degree,
            representative=RationalVector.from_dict(data["representative"]),
            simple=tuple(Fraction(c) for c in data["simple"]),
            affine=tuple(Fraction(c) for c in data["affine"]),
            even=even,
        )


def alcove_point(x: RationalVector) -> AlcovePoint:
    """Alcove coordinates of *x* without reducing it."""
    alphas = simple_roots(x.degree, x.even)
    thetas = highest_roots(x.degree, x.even)
    return AlcovePoint(
        degree=x.degree,
        representative=x,
        simple=tuple(Fraction(x.pos(a)) for a in alphas),
        affine=tuple(1 - Fraction(x.pos(t)) for t in thetas),
        even=x.even,
    )


def replay(x: LatticeVector | RationalVector, log: tuple[AlcoveStep, ...]) -> RationalVector:
    """Apply a transform log to *x*."""
    current = x.to_rational()
    for step in log:
        current = step.apply(current)
    return current


def reduce_to_alcove(
    x: LatticeVector | RationalVector,
    mode: Mode = "finite",
) -> tuple[AlcovePoint | RationalVector, tuple[AlcoveStep, ...]]:
    """Reduce *x* to the dominant chamber (finite) or the fundamental alcove (affine).

    Returns the reduced value and the transform log mapping *x* to it.

    Raises:
        DomainError: ``x·Q != 0`` or *mode* is unknown.
        UnsupportedCaseError: affine mode where the roots do not span Q^⊥.
    """
    if mode not in ("finite", "affine"):
        raise DomainError(f"Unknown reduction mode {mode!r}. Available: ['affine', 'finite']")
    current = x.to_rational()
    if current.dot_q() != 0:
        raise DomainError(f"{x.serialize()} is not orthogonal to Q")
    lattice = current.lattice
    if mode == "affine" and not lattice.roots_span_perp:
        raise UnsupportedCaseError(
            f"affine reduction needs roots spanning Q^⊥; d={lattice.key} has root rank "
            f"{len(lattice.simple_roots)} < {lattice.perp_rank}"
        )

    alphas = simple_roots(x.degree, x.even)
    thetas = highest_roots(x.degree, x.even) if mode == "affine" else ()
    log: list[AlcoveStep] = []
    while True:
        step = None
        for alpha in alphas:
            if current.pos(alpha) < 0:
                step = AlcoveStep(REFLECT, alpha)
                break
        if step is None:
            for theta in thetas:
                if current.pos(theta) > 1:
                    step = AlcoveStep(AFFINE, theta)
                    break
        if step is None:
            break
        current = step.apply(current)
        log.append(step)

    logger.debug("Reduced %s in %d steps (%s)", x.serialize(), len(log), mode)
    if mode == "finite":
        return current, tuple(log)
    return alcove_point(current), tuple(log)


def fundamental_weights(degree: int, even: bool = False) -> tuple[RationalVector, ...]:
    """Fundamental weights ``ω_i`` with ``<ω_i, α_j> = δ_ij``."""
    lattice = get_lattice(degree, even)
    return tuple(RationalVector(degree, w, even) for w in lattice.fundamental_weights)


def alcove_vertex(degree: int, index: int, even: bool = False) -> RationalVector:
    """Vertex ``ω_i / a_i`` of the fundamental alcove (``index`` counts from 0)."""
    weights = fundamental_weights(degree, even)
    marks = affine_marks(degree, even)
    if not 0 <= index < len(weights):
        raise DomainError(f"alcove vertex index {index} out of range 0..{len(weights) - 1}")
    return weights[index] / marks[index]
