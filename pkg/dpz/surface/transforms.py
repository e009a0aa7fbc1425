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

"""The Φ* transform and exceptional bundles attached to rational curves.

``phi_star`` is the action on numerical classes of the derived
equivalence of the elliptic surface ``X̃`` (degree-0 context, basis
``h, e1..e9``, section class ``e = e9``).  The anticanonical mode is its
simplification on classes of the degree-1 surface ``X`` with
``RΓ(M) = 0``.

Usage::

    from dpz.lattice import LatticeVector
    from dpz.surface import rational_curve_bundle

    e = rational_curve_bundle(LatticeVector.named(1, h=1, e1=-1))
    e.rank, e.chi        # (2, 0)
"""

from __future__ import annotations

import logging
from typing import Literal

from dpz.errors import DomainError
from dpz.lattice.vectors import LatticeVector
from dpz.surface.classes import SurfaceClass, euler_pairing, structure_sheaf

logger = logging.getLogger(__name__)

PhiMode = Literal["general", "anticanonical"]

ELLIPTIC_DEGREE = 0
SECTION_LABEL = "e9"


def section_class() -> LatticeVector:
    """The class ``e`` of the zero section on the elliptic surface."""
    return LatticeVector.named(ELLIPTIC_DEGREE, **{SECTION_LABEL: 1})


def phi_star(m: SurfaceClass, mode: PhiMode = "general") -> SurfaceClass:
    """Apply ``Φ*`` to a class.

    ``general`` (elliptic surface)::

        rank = c1·Q,  c1 = −c1 + (c1·Q + rank)(Q + e) + (c1·e − χ)Q,  χ = −c1·e

    ``anticanonical`` (degree 1)::

        rank = c1·Q,  c1 = −c1 + (c1·Q + rank)Q,  χ = 0

    The anticanonical formula assumes ``χ(O, M) = 0``; other inputs are
    logged, not rejected.

    Raises:
        DomainError: the class does not live on the surface the mode needs,
            or *mode* is unknown.
    """
    if mode == "general":
        if m.degree != ELLIPTIC_DEGREE:
            raise DomainError(
                f"general phi_star acts on the elliptic surface (d=0), got d={m.c1.key}"
            )
        q = LatticeVector.anticanonical(ELLIPTIC_DEGREE)
        e = section_class()
        cq = m.c1_dot_q
        ce = m.c1.dot(e)
        c1 = -m.c1 + (q + e) * (cq + m.rank) + q * (ce - m.chi)
        return SurfaceClass(cq, c1, -ce)
    if mode == "anticanonical":
        if m.degree != 1 or m.even:
            raise DomainError(
                f"anticanonical phi_star acts on degree-1 classes, got d={m.c1.key}"
            )
        if euler_pairing(structure_sheaf(1), m) != 0:
            logger.warning("phi_star(anticanonical) applied to %s with RΓ != 0", m)
        q = LatticeVector.anticanonical(1)
        cq = m.c1_dot_q
        return SurfaceClass(cq, -m.c1 + q * (cq + m.rank), 0)
    raise DomainError(f"Unknown phi_star mode {mode!r}. Available: ['anticanonical', 'general']")


def normalize_sign(m: SurfaceClass) -> tuple[SurfaceClass, int]:
    """Negate a class with negative rank (or rank 0 and ``c1·Q < 0``).

    Returns the class and the number of shifts applied (0 or 1).
    """
    if m.rank < 0 or (m.rank == 0 and m.c1_dot_q < 0):
        return -m, 1
    return m, 0


def is_rational_curve(d: LatticeVector) -> bool:
    """``D·D = D·Q − 2`` and ``D·Q >= 2``."""
    dq = d.dot_q()
    return dq >= 2 and d.dot(d) == dq - 2


def rational_curve_bundle(d: LatticeVector) -> SurfaceClass:
    """Exceptional class of slope ``−1/(D·Q)`` attached to a rational curve class.

    ``rank = D·Q``, ``c1 = −D + (D·Q − 1)Q``, ``χ = 0``; equivalently
    ``Φ*(O(−D))`` shifted into positive rank.

    The formula gives an exceptional class only on the degree-one surface.

    Raises:
        DomainError: *d* is not on the degree-1 surface or is not a
            rational-curve class.
    """
    if d.degree != 1:
        raise DomainError(
            f"rational-curve bundles are defined on the degree-1 surface, got d={d.key}"
        )
    if not is_rational_curve(d):
        raise DomainError(
            f"{d.serialize()} is not a rational-curve class "
            f"(D·D = {d.dot(d)}, D·Q = {d.dot_q()}; need D·D = D·Q - 2 and D·Q >= 2)"
        )
    dq = d.dot_q()
    q = LatticeVector.anticanonical(d.degree, d.even)
    return SurfaceClass(dq, -d + q * (dq - 1), 0)
