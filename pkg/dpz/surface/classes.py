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

"""Numerical classes on a del Pezzo surface and the Euler pairing.

A class ``[M]`` in the numerical Grothendieck group is determined by its
rank, first Chern class and Euler characteristic ``χ(M) = χ(O, M)``.
With ``Q = −K`` the anticanonical class, Riemann-Roch gives::

    χ(M, N) = −r_M·r_N + r_M·χ_N + χ_M·r_N − c1(M)·(c1(N) + r_N·Q)

Classes print as ``(<rank>; <c1>; <chi>)`` with the c1 in the lattice
vector format, e.g. ``(2; d=1:[2,0,-1,-1,-1,-1,-1,-1,-1]; 0)``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any

from dpz.elliptic.classes import EllipticClass
from dpz.errors import DomainError
from dpz.lattice.vectors import LatticeVector, parse_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurfaceClass:
    rank: int
    c1: LatticeVector
    chi: int

    def __post_init__(self) -> None:
        if not isinstance(self.c1, LatticeVector):
            raise DomainError(f"c1 must be a lattice vector, got {type(self.c1).__name__}")
        object.__setattr__(self, "rank", int(self.rank))
        object.__setattr__(self, "chi", int(self.chi))

    # -- context -----------------------------------------------------------

    @property
    def degree(self) -> int:
        return self.c1.degree

    @property
    def even(self) -> bool:
        return self.c1.even

    def _check(self, other: SurfaceClass) -> None:
        if (self.degree, self.even) != (other.degree, other.even):
            raise DomainError(
                f"degree mismatch: d={self.c1.key} vs d={other.c1.key}"
            )

    # -- invariants --------------------------------------------------------

    @property
    def c1_dot_q(self) -> int:
        return self.c1.dot_q()

    @property
    def slope(self) -> Fraction:
        """``μ_Q = c1·Q / rank``."""
        if self.rank == 0:
            raise DomainError(f"{self.serialize()} has rank 0 and no slope")
        return Fraction(self.c1_dot_q, self.rank)

    def is_exceptional(self) -> bool:
        """Numerically exceptional: positive rank and ``χ(E, E) = 1``."""
        return self.rank > 0 and euler_pairing(self, self) == 1

    def is_primitive(self) -> bool:
        """``gcd(rank, c1·Q) = 1``."""
        return gcd(self.rank, self.c1_dot_q) == 1

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: SurfaceClass) -> SurfaceClass:
        self._check(other)
        return SurfaceClass(self.rank + other.rank, self.c1 + other.c1, self.chi + other.chi)

    def __neg__(self) -> SurfaceClass:
        return SurfaceClass(-self.rank, -self.c1, -self.chi)

    def __sub__(self, other: SurfaceClass) -> SurfaceClass:
        return self + (-other)

    def __mul__(self, k: int) -> SurfaceClass:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return SurfaceClass(self.rank * k, self.c1 * k, self.chi * k)

    __rmul__ = __mul__

    # -- serialisation -----------------------------------------------------

    def serialize(self) -> str:
        return f"({self.rank}; {self.c1.serialize()}; {self.chi})"

    def __str__(self) -> str:
        return self.serialize()

    def to_dict(self) -> dict[str, Any]:
        return {"rank": self.rank, "c1": self.c1.to_dict(), "chi": self.chi}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SurfaceClass:
        return cls(int(data["rank"]), LatticeVector.from_dict(data["c1"]), int(data["chi"]))


_CLASS_RE = re.compile(r"^\s*\(\s*(-?\d+)\s*;\s*(d=[^;]*)\s*;\s*(-?\d+)\s*\)\s*$")


def parse_surface_class(text: str) -> SurfaceClass:
    """Parse ``(<rank>; d=<d>:[...]; <chi>)``."""
    match = _CLASS_RE.match(text)
    if match is None:
        raise DomainError(f"cannot parse class {text!r}; expected (<rank>; d=<d>:[...]; <chi>)")
    c1 = parse_vector(match.group(2))
    if not isinstance(c1, LatticeVector):
        raise DomainError(f"c1 of {text!r} is not integral")
    return SurfaceClass(int(match.group(1)), c1, int(match.group(3)))


# ---------------------------------------------------------------------------
# Named classes
# ---------------------------------------------------------------------------

def structure_sheaf(degree: int, even: bool = False) -> SurfaceClass:
    return SurfaceClass(1, LatticeVector.zero(degree, even), 1)


def point_class(degree: int, even: bool = False) -> SurfaceClass:
    return SurfaceClass(0, LatticeVector.zero(degree, even), 1)


def line_bundle(d: LatticeVector) -> SurfaceClass:
    """``[O(D)]`` with ``χ = 1 + (D·D + D·Q)/2``."""
    return twist(structure_sheaf(d.degree, d.even), d)


def curve_sheaf(d: LatticeVector, chi: int) -> SurfaceClass:
    """Rank-0 class supported on a curve of class *d* with Euler characteristic *chi*."""
    return SurfaceClass(0, d, chi)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def euler_pairing(m: SurfaceClass, n: SurfaceClass) -> int:
    """``χ(M, N)`` by Riemann-Roch.

    Raises:
        DomainError: the classes live on different surfaces.
    """
    m._check(n)
    q = LatticeVector.anticanonical(m.degree, m.even)
    return (
        -m.rank * n.rank
        + m.rank * n.chi
        + m.chi * n.rank
        - m.c1.dot(n.c1 + q * n.rank)
    )


def twist(m: SurfaceClass, d: LatticeVector) -> SurfaceClass:
    """``[M ⊗ O(D)]``."""
    if (d.degree, d.even) != (m.degree, m.even):
        raise DomainError(f"degree mismatch: d={m.c1.key} vs d={d.key}")
    dd = d.dot(d) + d.dot_q()
    # D·(D + Q) is even on every Picard lattice here
    assert dd % 2 == 0
    return SurfaceClass(m.rank, m.c1 + d * m.rank, m.chi + m.c1.dot(d) + m.rank * dd // 2)


def serre_twist(m: SurfaceClass) -> SurfaceClass:
    """Numerical Serre functor: twist by ``−Q``."""
    return twist(m, -LatticeVector.anticanonical(m.degree, m.even))


def dual(m: SurfaceClass) -> SurfaceClass:
    """Derived dual ``[RHom(M, O)]``: ``(r, −c1, χ − c1·Q)``."""
    return SurfaceClass(m.rank, -m.c1, m.chi - m.c1_dot_q)


def restrict_to_elliptic(m: SurfaceClass, delta: int = 0) -> EllipticClass:
    """Rank and degree of the restriction to the anticanonical curve.

    ``deg = c1·Q + δ·rank`` where ``δ`` is the degree of the image of ``[O]``.
    """
    return EllipticClass(m.rank, m.c1_dot_q + int(delta) * m.rank)
