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

"""Picard lattices of del Pezzo surfaces and the root data of Q^⊥.

A degree-*d* surface (``1 <= d <= 9``) is described in the basis
``h, e1, ..., e(9-d)`` with the diagonal form ``h·h = 1``, ``ei·ei = -1``.
The even degree-8 component (P¹×P¹) uses the basis ``s, f`` with
``s·s = f·f = 0`` and ``s·f = 1``.  Degree 0 is the elliptic-surface
context (nine blow-ups, ``Q·Q = 0``) and carries no root data.

Usage::

    from dpz.lattice import get_lattice

    lat = get_lattice(1)
    lat.anticanonical      # (3, -1, -1, -1, -1, -1, -1, -1, -1)
    lat.simple_roots[0]    # (1, -1, -1, -1, 0, 0, 0, 0, 0)
    lat.perp_rank          # 8
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import Matrix

from dpz.errors import DomainError

logger = logging.getLogger(__name__)

MIN_DEGREE = 0
MAX_DEGREE = 9
EVEN_COMPONENT = "F0"


def to_fraction(value) -> Fraction:
    """Convert a sympy Rational (or int) to :class:`fractions.Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(int(value.p), int(value.q))


# ---------------------------------------------------------------------------
# Lattice
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DelPezzoLattice:
    """Picard lattice with its anticanonical class and declared simple roots.

    Vectors are plain integer tuples here; :mod:`dpz.lattice.vectors`
    wraps them into typed values.
    """

    degree: int
    even: bool
    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    anticanonical: tuple[int, ...]
    simple_roots: tuple[tuple[int, ...], ...]
    perp_basis: tuple[tuple[int, ...], ...]

    @property
    def key(self) -> str:
        return f"{self.degree}{EVEN_COMPONENT}" if self.even else str(self.degree)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def perp_rank(self) -> int:
        return len(self.perp_basis)

    @property
    def roots_span_perp(self) -> bool:
        """True when the declared simple roots form a basis of Q^⊥ ⊗ ℚ."""
        return len(self.simple_roots) == self.perp_rank

    def dot(self, u, v):
        """Intersection form on coefficient tuples."""
        g = self.gram
        total = 0
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = g[i]
            for j, vj in enumerate(v):
                if row[j] and vj:
                    total += ui * row[j] * vj
        return total

    def pos(self, u, v):
        """Positive form on Q^⊥: the negated intersection form."""
        return -self.dot(u, v)

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        roots = self.simple_roots
        return tuple(tuple(self.pos(a, b) for b in roots) for a in roots)

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        if not self.simple_roots:
            return ()
        inv = Matrix(self.cartan_matrix).inv()
        n = len(self.simple_roots)
        return tuple(tuple(to_fraction(inv[i, j]) for j in range(n)) for i in range(n))

    @cached_property
    def perp_gram(self) -> tuple[tuple[int, ...], ...]:
        basis = self.perp_basis
        return tuple(tuple(self.pos(a, b) for b in basis) for a in basis)

    @cached_property
    def fundamental_weights(self) -> tuple[tuple[Fraction, ...], ...]:
        """Dual basis to the simple roots inside their rational span."""
        weights = []
        for row in self.cartan_inverse:
            coeffs = [Fraction(0)] * self.dim
            for c, root in zip(row, self.simple_roots):
                for k, r in enumerate(root):
                    coeffs[k] += c * r
            weights.append(tuple(coeffs))
        return tuple(weights)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _unit(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def _build_blowup(degree: int) -> DelPezzoLattice:
    n = 9 - degree
    dim = n + 1
    labels = ("h",) + tuple(f"e{i}" for i in range(1, n + 1))
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(dim)) for i in range(dim)
    )
    anticanonical = (3,) + (-1,) * n

    simple: list[tuple[int, ...]] = []
    if degree >= 1:
        if n >= 3:
            simple.append(tuple([1, -1, -1, -1] + [0] * (n - 3)))
        for i in range(1, n):
            v = [0] * dim
            v[i], v[i + 1] = 1, -1
            simple.append(tuple(v))

    if degree == 0:
        perp: list[tuple[int, ...]] = []
    elif degree <= 6:
        perp = list(simple)
    else:
        # h - 3e_n completes {e_i - e_(i+1)} to a basis of Q^⊥
        perp = [r for r in simple]
        if n >= 1:
            last = _unit(dim, 0)
            last[n] = -3
            perp.append(tuple(last))
    return DelPezzoLattice(
        degree=degree,
        even=False,
        labels=labels,
        gram=gram,
        anticanonical=anticanonical,
        simple_roots=tuple(simple),
        perp_basis=tuple(perp),
    )


def _build_even() -> DelPezzoLattice:
    return DelPezzoLattice(
        degree=8,
        even=True,
        labels=("s", "f"),
        gram=((0, 1), (1, 0)),
        anticanonical=(2, 2),
        simple_roots=((1, -1),),
        perp_basis=((1, -1),),
    )


_LATTICES: dict[str, DelPezzoLattice] = {}
_lock = threading.Lock()


def get_lattice(degree: int, even: bool = False) -> DelPezzoLattice:
    """Return the (cached) lattice for *degree*.

    Raises:
        DomainError: *degree* is outside ``0..9`` or *even* is requested
            for a degree other than 8.
    """
    if not isinstance(degree, int) or not MIN_DEGREE <= degree <= MAX_DEGREE:
        raise DomainError(
            f"degree must be an integer in {MIN_DEGREE}..{MAX_DEGREE}, got {degree!r}"
        )
    if even and degree != 8:
        raise DomainError(f"the even component exists only in degree 8, got {degree}")
    key = f"{degree}{EVEN_COMPONENT}" if even else str(degree)
    with _lock:
        lattice = _LATTICES.get(key)
        if lattice is None:
            lattice = _build_even() if even else _build_blowup(degree)
            _LATTICES[key] = lattice
            logger.debug("Built Picard lattice d=%s (rank %d)", key, lattice.dim)
        return lattice


def parse_degree_key(text: str) -> tuple[int, bool]:
    """Parse ``"1"`` or ``"8F0"`` into ``(degree, even)``."""
    text = text.strip()
    even = text.endswith(EVEN_COMPONENT)
    core = text[: -len(EVEN_COMPONENT)] if even else text
    try:
        degree = int(core)
    except ValueError:
        raise DomainError(f"invalid degree {text!r}") from None
    get_lattice(degree, even)
    return degree, even
