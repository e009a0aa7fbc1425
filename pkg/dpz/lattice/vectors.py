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

"""Typed lattice vectors with exact arithmetic.

:class:`LatticeVector` holds integer coefficients, :class:`RationalVector`
holds :class:`fractions.Fraction` coefficients.  Arithmetic between two
lattice vectors with integer scalars stays integral; anything else
produces a rational vector.

Vectors serialise as ``d=<d>:[c_h,c_1,...]``::

    from dpz.lattice import LatticeVector, parse_vector

    q = LatticeVector.anticanonical(1)
    q.serialize()                 # 'd=1:[3,-1,-1,-1,-1,-1,-1,-1,-1]'
    parse_vector("d=1:[1/2,0,0,0,0,0,0,0,-1/2]")
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from dpz.errors import DomainError
from dpz.lattice.basis import DelPezzoLattice, get_lattice, parse_degree_key

logger = logging.getLogger(__name__)


class _VectorOps:
    """Arithmetic shared by both vector types."""

    degree: int
    coeffs: tuple
    even: bool

    @property
    def lattice(self) -> DelPezzoLattice:
        return get_lattice(self.degree, self.even)

    @property
    def key(self) -> str:
        return self.lattice.key

    def _check(self, other: _VectorOps) -> None:
        if not isinstance(other, _VectorOps):
            raise TypeError(f"expected a lattice vector, got {type(other).__name__}")
        if self.degree != other.degree or self.even != other.even:
            raise DomainError(f"degree mismatch: d={self.key} vs d={other.key}")

    # -- forms -------------------------------------------------------------

    def dot(self, other: _VectorOps):
        """Intersection form."""
        self._check(other)
        return self.lattice.dot(self.coeffs, other.coeffs)

    def pos(self, other: _VectorOps):
        """Positive form ``<x, y> = -x·y`` (positive definite on Q^⊥)."""
        return -self.dot(other)

    def square(self):
        return self.dot(self)

    def norm(self):
        """Squared length in the positive form."""
        return -self.dot(self)

    def dot_q(self):
        """Intersection with the anticanonical class."""
        lat = self.lattice
        return lat.dot(self.coeffs, lat.anticanonical)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: _VectorOps):
        self._check(other)
        coeffs = tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        if isinstance(self, LatticeVector) and isinstance(other, LatticeVector):
            return LatticeVector(self.degree, coeffs, self.even)
        return RationalVector(self.degree, coeffs, self.even)

    def __sub__(self, other: _VectorOps):
        return self + (-other)

    def __neg__(self):
        return type(self)(self.degree, tuple(-a for a in self.coeffs), self.even)

    def __mul__(self, k):
        if isinstance(k, bool) or not isinstance(k, (int, Fraction)):
            return NotImplemented
        coeffs = tuple(a * k for a in self.coeffs)
        if isinstance(self, LatticeVector) and isinstance(k, int):
            return LatticeVector(self.degree, coeffs, self.even)
        return RationalVector(self.degree, coeffs, self.even)

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, bool) or not isinstance(k, (int, Fraction)):
            return NotImplemented
        if k == 0:
            raise ZeroDivisionError("division of a lattice vector by zero")
        return RationalVector(self.degree, tuple(Fraction(a) / k for a in self.coeffs), self.even)

    def reflect(self, root: _VectorOps):
        """Reflection ``s_α(x) = x + (x·α)α`` in a root (``α·α = -2``)."""
        return self + root * self.dot(root)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- serialisation -----------------------------------------------------

    def serialize(self) -> str:
        return f"d={self.key}:[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __str__(self) -> str:
        return self.serialize()

    def to_dict(self) -> dict[str, Any]:
        return {"degree": self.key, "coeffs": [str(c) for c in self.coeffs]}


@dataclass(frozen=True)
class LatticeVector(_VectorOps):
    """Integer vector in the Picard lattice of a degree-*d* surface."""

    degree: int
    coeffs: tuple[int, ...]
    even: bool = False

    def __post_init__(self) -> None:
        lattice = get_lattice(self.degree, self.even)
        coeffs = tuple(self.coeffs)
        if len(coeffs) != lattice.dim:
            raise DomainError(
                f"d={lattice.key} vectors have {lattice.dim} coefficients, got {len(coeffs)}"
            )
        ints = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise DomainError(f"non-integral coefficient {c} in a lattice vector")
                c = c.numerator
            ints.append(int(c))
        object.__setattr__(self, "coeffs", tuple(ints))

    @classmethod
    def zero(cls, degree: int, even: bool = False) -> LatticeVector:
        return cls(degree, (0,) * get_lattice(degree, even).dim, even)

    @classmethod
    def anticanonical(cls, degree: int, even: bool = False) -> LatticeVector:
        return cls(degree, get_lattice(degree, even).anticanonical, even)

    @classmethod
    def named(cls, degree: int, even: bool = False, **coeffs: int) -> LatticeVector:
        """Build from basis labels, e.g. ``LatticeVector.named(1, h=1, e1=-1)``."""
        lattice = get_lattice(degree, even)
        values = [0] * lattice.dim
        for label, value in coeffs.items():
            if label not in lattice.labels:
                raise DomainError(
                    f"Unknown basis label {label!r}. Available: {list(lattice.labels)}"
                )
            values[lattice.labels.index(label)] = value
        return cls(degree, tuple(values), even)

    def to_rational(self) -> RationalVector:
        return RationalVector(self.degree, self.coeffs, self.even)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> LatticeVector:
        degree, even = parse_degree_key(str(data["degree"]))
        return cls(degree, tuple(int(c) for c in data["coeffs"]), even)


@dataclass(frozen=True)
class RationalVector(_VectorOps):
    """Vector of ``Pic ⊗ ℚ`` with reduced fractional coefficients."""

    degree: int
    coeffs: tuple[Fraction, ...]
    even: bool = False

    def __post_init__(self) -> None:
        lattice = get_lattice(self.degree, self.even)
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != lattice.dim:
            raise DomainError(
                f"d={lattice.key} vectors have {lattice.dim} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_lattice(self) -> LatticeVector:
        if not self.is_integral():
            raise DomainError(f"{self.serialize()} is not a lattice vector")
        return LatticeVector(self.degree, tuple(c.numerator for c in self.coeffs), self.even)

    def to_rational(self) -> RationalVector:
        return self

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RationalVector:
        degree, even = parse_degree_key(str(data["degree"]))
        return cls(degree, tuple(Fraction(c) for c in data["coeffs"]), even)


Vector = LatticeVector | RationalVector


def inner_product(u: Vector, v: Vector, positive: bool = False):
    """Intersection form of *u* and *v*, or its negation when *positive*."""
    value = u.dot(v)
    return -value if positive else value


_VECTOR_RE = re.compile(r"^\s*d=(?P<key>\d+(?:F0)?)\s*:\s*\[(?P<body>[^\]]*)\]\s*$")


def parse_vector(text: str) -> Vector:
    """Parse ``d=<d>:[...]``; integral input yields a :class:`LatticeVector`."""
    match = _VECTOR_RE.match(text)
    if not match:
        raise DomainError(f"cannot parse vector {text!r}; expected d=<d>:[c_h,c_1,...]")
    degree, even = parse_degree_key(match["key"])
    body = match["body"].strip()
    try:
        coeffs = tuple(Fraction(part.strip()) for part in body.split(",")) if body else ()
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"invalid coefficient in {text!r}") from None
    vec = RationalVector(degree, coeffs, even)
    return vec.to_lattice() if vec.is_integral() else vec
