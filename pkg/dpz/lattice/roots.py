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

"""Roots of Q^⊥ and the declared simple system.

The roots of a degree-*d* surface are the classes ``ρ`` with ``ρ·ρ = -2``
and ``ρ·Q = 0``.  In the ``h, e_i`` basis their ``h`` coefficient is
bounded by 3 in absolute value, so a bounded enumeration is exhaustive.

A root is positive when its coordinates in the declared simple roots
``h-e1-e2-e3, e1-e2, ..., e(n-1)-en`` are nonnegative.

Usage::

    from dpz.lattice import roots_of_Qperp, highest_roots

    len(roots_of_Qperp(1))       # 240
    highest_roots(1)[0].coeffs   # (3, -1, -1, -1, -1, -1, -1, -1, -2)
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Iterator
from fractions import Fraction
from math import isqrt

from dpz.errors import DomainError
from dpz.lattice.basis import get_lattice
from dpz.lattice.vectors import LatticeVector, RationalVector

logger = logging.getLogger(__name__)

H_BOUND = 3

_ROOTS: dict[str, tuple[LatticeVector, ...]] = {}
_lock = threading.Lock()


def _sum_square_tuples(n: int, squares: int, total: int) -> Iterator[tuple[int, ...]]:
    """Integer n-tuples with prescribed sum of squares and sum."""
    if n == 0:
        if squares == 0 and total == 0:
            yield ()
        return
    bound = isqrt(squares)
    for x in range(-bound, bound + 1):
        rest_sq = squares - x * x
        rest_total = total - x
        # Cauchy-Schwarz on the remaining n-1 coordinates
        if rest_total * rest_total > (n - 1) * rest_sq:
            continue
        for tail in _sum_square_tuples(n - 1, rest_sq, rest_total):
            yield (x,) + tail


def _enumerate(degree: int, even: bool) -> list[tuple[int, ...]]:
    lattice = get_lattice(degree, even)
    found: list[tuple[int, ...]] = []
    if even:
        for a in range(-H_BOUND, H_BOUND + 1):
            for b in range(-H_BOUND, H_BOUND + 1):
                found.append((a, b))
    else:
        n = 9 - degree
        for a in range(-H_BOUND, H_BOUND + 1):
            # a^2 - Σb^2 = -2 and 3a + Σb = 0
            for tail in _sum_square_tuples(n, a * a + 2, -3 * a):
                found.append((a,) + tail)
    q = lattice.anticanonical
    return [v for v in found if lattice.dot(v, v) == -2 and lattice.dot(v, q) == 0]


def roots_of_Qperp(degree: int, even: bool = False) -> tuple[LatticeVector, ...]:  # noqa: N802
    """All roots of Q^⊥ in canonical (lexicographically descending) order.

    Raises:
        DomainError: *degree* is not one of ``1..9`` (``8`` with *even*).
    """
    if degree == 0 or not isinstance(degree, int) or not 1 <= degree <= 9:
        raise DomainError(f"root systems are supported for degrees 1..9 (and 8F0), got {degree!r}")
    lattice = get_lattice(degree, even)
    with _lock:
        cached = _ROOTS.get(lattice.key)
    if cached is not None:
        return cached
    coeffs = sorted(_enumerate(degree, even), reverse=True)
    roots = tuple(LatticeVector(degree, c, even) for c in coeffs)
    logger.debug("Enumerated %d roots for d=%s", len(roots), lattice.key)
    with _lock:
        _ROOTS[lattice.key] = roots
    return roots


def is_root(vector: LatticeVector | RationalVector) -> bool:
    if isinstance(vector, RationalVector):
        if not vector.is_integral():
            return False
        vector = vector.to_lattice()
    return vector.square() == -2 and vector.dot_q() == 0


def simple_roots(degree: int, even: bool = False) -> tuple[LatticeVector, ...]:
    lattice = get_lattice(degree, even)
    return tuple(LatticeVector(degree, r, even) for r in lattice.simple_roots)


def simple_coordinates(vector: LatticeVector | RationalVector) -> tuple[Fraction, ...]:
    """Coordinates of *vector* in the declared simple roots.

    Only meaningful for vectors in the span of the simple roots; the
    result is checked by reconstruction.
    """
    lattice = vector.lattice
    alphas = lattice.simple_roots
    pairings = [-lattice.dot(vector.coeffs, a) for a in alphas]
    coords = tuple(
        sum((c * p for c, p in zip(row, pairings)), Fraction(0)) for row in lattice.cartan_inverse
    )
    rebuilt = [Fraction(0)] * lattice.dim
    for c, a in zip(coords, alphas):
        for k, x in enumerate(a):
            rebuilt[k] += c * x
    if tuple(rebuilt) != tuple(Fraction(x) for x in vector.coeffs):
        raise DomainError(f"{vector.serialize()} is not in the span of the simple roots")
    return coords


def is_positive(root: LatticeVector) -> bool:
    coords = simple_coordinates(root)
    return all(c >= 0 for c in coords)


def positive_roots(degree: int, even: bool = False) -> tuple[LatticeVector, ...]:
    return tuple(r for r in roots_of_Qperp(degree, even) if is_positive(r))


# ---------------------------------------------------------------------------
# Components, highest roots and marks
# ---------------------------------------------------------------------------

def simple_components(degree: int, even: bool = False) -> tuple[tuple[int, ...], ...]:
    """Indices of the declared simple roots grouped by irreducible component."""
    cartan = get_lattice(degree, even).cartan_matrix
    n = len(cartan)
    seen: set[int] = set()
    components = []
    for start in range(n):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        components.append(tuple(sorted(comp)))
    return tuple(components)


def highest_roots(degree: int, even: bool = False) -> tuple[LatticeVector, ...]:
    """Highest root of each irreducible component (in component order)."""
    result = []
    positives = [(r, simple_coordinates(r)) for r in positive_roots(degree, even)]
    for comp in simple_components(degree, even):
        support = set(comp)
        best, best_height = None, -1
        for root, coords in positives:
            if any(c and i not in support for i, c in enumerate(coords)):
                continue
            height = sum(coords)
            if height > best_height:
                best, best_height = root, height
        result.append(best)
    return tuple(result)


def affine_marks(degree: int, even: bool = False) -> tuple[int, ...]:
    """Marks ``a_i`` of the declared simple roots (coefficients of the highest roots)."""
    marks = [0] * len(get_lattice(degree, even).simple_roots)
    for theta in highest_roots(degree, even):
        for i, c in enumerate(simple_coordinates(theta)):
            if c:
                marks[i] = int(c)
    return tuple(marks)
