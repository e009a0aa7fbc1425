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

"""Numerical classes on the elliptic curve.

An :class:`EllipticClass` is ``(rank, deg, det)`` together with a shift
counter recording how often the class was negated during normalization
(a cohomological shift by one changes the sign of a K-class).  The
pairing is ``χ(M, N) = rank(M)·deg(N) − deg(M)·rank(N)``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Any

from dpz.elliptic.determinants import DetClass
from dpz.errors import DomainError

logger = logging.getLogger(__name__)


@total_ordering
@dataclass(frozen=True)
class Slope:
    """``deg / rank``, with ``value=None`` standing for +∞ (torsion classes)."""

    value: Fraction | None

    @classmethod
    def of(cls, rank: int, deg: int) -> Slope:
        if rank == 0:
            if deg <= 0:
                raise DomainError(f"class ({rank}, {deg}) has no slope")
            return cls(None)
        return cls(Fraction(deg, rank))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other: Slope) -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


@dataclass(frozen=True)
class EllipticClass:
    """Class in the numerical Grothendieck group of the curve, with determinant."""

    rank: int
    deg: int
    det: DetClass = field(default_factory=DetClass)
    shift: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "rank", int(self.rank))
        object.__setattr__(self, "deg", int(self.deg))

    # -- invariants --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.rank == 0 and self.deg == 0

    def is_normalized(self) -> bool:
        return self.rank > 0 or (self.rank == 0 and self.deg > 0)

    @property
    def gcd(self) -> int:
        """Number ``m`` of stable constituents of the divisorial sheaf of this class."""
        return gcd(self.rank, self.deg)

    def is_stable(self) -> bool:
        return self.is_normalized() and self.gcd == 1

    @property
    def slope(self) -> Slope:
        if not self.is_normalized():
            raise DomainError(f"slope of an unnormalized class {self}")
        return Slope.of(self.rank, self.deg)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: EllipticClass) -> EllipticClass:
        return EllipticClass(
            self.rank + other.rank, self.deg + other.deg, self.det + other.det, self.shift
        )

    def __neg__(self) -> EllipticClass:
        return EllipticClass(-self.rank, -self.deg, -self.det, self.shift)

    def __sub__(self, other: EllipticClass) -> EllipticClass:
        return self + (-other)

    def __mul__(self, k: int) -> EllipticClass:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return EllipticClass(self.rank * k, self.deg * k, self.det * k, self.shift)

    __rmul__ = __mul__

    def normalized(self) -> EllipticClass:
        """Negate (and count one shift) unless ``rank > 0`` or ``rank = 0 < deg``.

        Raises:
            DomainError: the zero class has no normalization.
        """
        if self.is_zero():
            raise DomainError("the zero class cannot be normalized")
        if self.is_normalized():
            return self
        return EllipticClass(-self.rank, -self.deg, -self.det, self.shift + 1)

    def unshifted(self) -> EllipticClass:
        return replace(self, shift=0)

    def same_class(self, other: EllipticClass) -> bool:
        """Equality of ``(rank, deg, det)`` ignoring the shift counter."""
        return (self.rank, self.deg, self.det) == (other.rank, other.deg, other.det)

    # -- serialisation -----------------------------------------------------

    def __str__(self) -> str:
        text = f"({self.rank},{self.deg}"
        if not self.det.is_zero():
            text += f";{self.det}"
        text += ")"
        if self.shift:
            text += f"[{self.shift}]"
        return text

    def to_dict(self) -> dict[str, Any]:
        return {
            "rank": self.rank,
            "deg": self.deg,
            "det": self.det.to_dict(),
            "shift": self.shift,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> EllipticClass:
        return cls(
            rank=int(data["rank"]),
            deg=int(data["deg"]),
            det=DetClass.from_dict(data.get("det", {})),
            shift=int(data.get("shift", 0)),
        )


_CLASS_RE = re.compile(r"^\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:[;,]\s*([^)]*?))?\s*\)?\s*$")


def parse_elliptic_class(text: str) -> EllipticClass:
    """Parse ``"2,1"``, ``"(1,0)"`` or ``"(1,-3;-3L-6q)"``."""
    match = _CLASS_RE.match(text)
    if match is None:
        raise DomainError(f"cannot parse elliptic class {text!r}; expected rank,deg[;det]")
    rank, deg, det = match.groups()
    return EllipticClass(int(rank), int(deg), DetClass.parse(det) if det else DetClass())


def chi_e(m: EllipticClass, n: EllipticClass) -> int:
    """Euler pairing ``rank(M)·deg(N) − deg(M)·rank(N)``."""
    return m.rank * n.deg - m.deg * n.rank
