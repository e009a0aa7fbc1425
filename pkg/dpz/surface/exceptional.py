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

"""Necessary conditions for exceptional classes and collections.

``line_twist_max`` maximizes ``χ(E′(−D), E)`` over ``D ∈ Q^⊥``.  As a
function of ``D`` this is a constant plus ``(r·r′/2)·(D − Δ)²`` in the
intersection form, with ``Δ = D_{E′}/r′ − D_E/r`` and
``D_E = c1(E) − (c1(E)·Q / Q²)·Q``, so the maximizers are the lattice
vectors of ``Q^⊥`` closest to ``Δ``.  A positive maximum against an
exceptional ``E′`` in the slope window shows that ``E`` is not the
class of an exceptional sheaf.

``validate_collection`` checks the numerical conditions under which a
sequence of exceptional sheaves forms an exceptional collection.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple

from dpz.elliptic.determinants import DetClass, RelationSet
from dpz.errors import DomainError
from dpz.lattice.cvp import closest_vectors
from dpz.lattice.roots import is_positive, is_root
from dpz.lattice.vectors import LatticeVector, RationalVector
from dpz.surface.classes import SurfaceClass, euler_pairing, twist

logger = logging.getLogger(__name__)


class LineTwistMax(NamedTuple):
    value: int
    maximizers: tuple[LatticeVector, ...]


def perp_part(m: SurfaceClass) -> RationalVector:
    """``D_M = c1(M) − (c1(M)·Q / Q²)·Q``, the projection of c1 to ``Q^⊥ ⊗ ℚ``."""
    q = LatticeVector.anticanonical(m.degree, m.even)
    q2 = q.square()
    if q2 == 0:
        raise DomainError("Q² = 0: no orthogonal projection on the elliptic surface")
    return m.c1.to_rational() - q * Fraction(m.c1_dot_q, q2)


def twist_center(e: SurfaceClass, eprime: SurfaceClass) -> RationalVector:
    """``Δ = D_{E′}/r′ − D_E/r``."""
    return perp_part(eprime) / eprime.rank - perp_part(e) / e.rank


def line_twist_max(e: SurfaceClass, eprime: SurfaceClass) -> LineTwistMax:
    """Maximum of ``χ(E′(−D), E)`` over ``D ∈ Q^⊥`` and every maximizing ``D``.

    Raises:
        DomainError: either class has rank <= 0, or they live on different surfaces.
    """
    if e.rank <= 0 or eprime.rank <= 0:
        raise DomainError(
            f"line_twist_max needs positive ranks, got {e.rank} and {eprime.rank}"
        )
    e._check(eprime)
    center = twist_center(e, eprime)
    _, candidates = closest_vectors(center)
    values = [(euler_pairing(twist(eprime, -d), e), d) for d in candidates]
    best = max(v for v, _ in values)
    maximizers = tuple(d for v, d in values if v == best)
    logger.debug("line_twist_max(%s, %s) = %d", e, eprime, best)
    return LineTwistMax(best, maximizers)


def twist_constant(e: SurfaceClass, eprime: SurfaceClass) -> Fraction:
    """The D-independent value ``χ(E′(−D), E) − (r·r′/2)·(D − Δ)²``.

    The square is taken in the intersection form.
    """
    center = twist_center(e, eprime)
    zero = LatticeVector.zero(e.degree, e.even)
    diff = zero.to_rational() - center
    return euler_pairing(eprime, e) - Fraction(e.rank * eprime.rank, 2) * diff.square()


# ---------------------------------------------------------------------------
# Collections
# ---------------------------------------------------------------------------

@dataclass
class CollectionReport:
    """Diagnostics for a candidate exceptional collection (indices are 0-based)."""

    not_exceptional: list[int] = field(default_factory=list)
    slope_violations: list[tuple[int, int]] = field(default_factory=list)
    nonzero_pairings: list[tuple[int, int, int]] = field(default_factory=list)
    root_violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.not_exceptional
            or self.slope_violations
            or self.nonzero_pairings
            or self.root_violations
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "not_exceptional": list(self.not_exceptional),
            "slope_violations": [list(p) for p in self.slope_violations],
            "nonzero_pairings": [list(p) for p in self.nonzero_pairings],
            "root_violations": [list(p) for p in self.root_violations],
        }


def _positive_root(v: LatticeVector) -> bool:
    return is_root(v) and is_positive(v)


def validate_collection(
    classes: Sequence[SurfaceClass],
    determinants: Sequence[DetClass] | None = None,
    relations: RelationSet | None = None,
) -> CollectionReport:
    """Check the numerical exceptional-collection conditions.

    * every class has positive rank and ``χ(E, E) = 1``;
    * ``μ(E_1) <= ... <= μ(E_n) < μ(E_1) + Q²``;
    * ``χ(E_j, E_i) = 0`` for ``i < j``;
    * for equal slopes ``i < j`` there is no sheaf of class ``[E_i] − [E_j]``.

    The last condition holds when ``c1(E_j) − c1(E_i)`` is a positive root.
    With *determinants* (the determinants of the restrictions to ``Q``)
    it is refined: a sheaf of class ``[E_i] − [E_j]`` exists only when
    ``c1(E_i) − c1(E_j)`` is a positive root and the restrictions agree
    modulo *relations*.
    """
    classes = list(classes)
    report = CollectionReport()
    if not classes:
        return report
    first = classes[0]
    for c in classes[1:]:
        first._check(c)
    if first.degree < 1:
        raise DomainError("exceptional collections are checked on surfaces of degree 1..9")
    if determinants is not None and len(determinants) != len(classes):
        raise DomainError(
            f"{len(determinants)} determinants given for {len(classes)} classes"
        )
    relations = relations or RelationSet()
    q2 = LatticeVector.anticanonical(first.degree, first.even).square()

    for i, c in enumerate(classes):
        if c.rank <= 0 or euler_pairing(c, c) != 1:
            report.not_exceptional.append(i)
    if report.not_exceptional:
        return report

    slopes = [c.slope for c in classes]
    for i in range(len(classes) - 1):
        if slopes[i] > slopes[i + 1]:
            report.slope_violations.append((i, i + 1))
    if slopes[-1] >= slopes[0] + q2:
        report.slope_violations.append((0, len(classes) - 1))

    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            value = euler_pairing(classes[j], classes[i])
            if value:
                report.nonzero_pairings.append((i, j, value))
            if slopes[i] != slopes[j]:
                continue
            if _positive_root(classes[j].c1 - classes[i].c1):
                continue
            if determinants is not None:
                effective = _positive_root(classes[i].c1 - classes[j].c1) and relations.equal(
                    determinants[i], determinants[j]
                )
                if not effective:
                    continue
            report.root_violations.append((i, j))
    logger.debug("Collection of %d classes: ok=%s", len(classes), report.ok)
    return report
