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

"""Exact closest-vector search in Q^⊥.

Distances are measured in the positive form.  The Gram matrix of the
Q^⊥ basis is factored as ``G = L·D·Lᵀ`` over ℚ (sympy), a nearest-plane
rounding supplies the first radius, and a depth-first enumeration
collects every lattice vector at the minimal distance.  No floating
point is involved.

Usage::

    from dpz.lattice import LatticeVector, closest_vectors

    root = LatticeVector.named(1, e1=1, e2=-1)
    dist, nearest = closest_vectors(root / 2)   # dist == 1/2, two vectors
"""

from __future__ import annotations

import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from sympy import Matrix

from dpz.errors import DomainError
from dpz.lattice.basis import DelPezzoLattice, to_fraction
from dpz.lattice.vectors import LatticeVector, RationalVector

logger = logging.getLogger(__name__)


class ClosestVectors(NamedTuple):
    distance: Fraction
    vectors: tuple[LatticeVector, ...]


@dataclass(frozen=True)
class _Decoder:
    lattice: DelPezzoLattice
    gram_inverse: tuple[tuple[Fraction, ...], ...]
    lower: tuple[tuple[Fraction, ...], ...]
    diagonal: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return self.lattice.perp_rank

    def coordinates(self, target: RationalVector) -> list[Fraction]:
        basis = self.lattice.perp_basis
        pairings = [Fraction(self.lattice.pos(target.coeffs, b)) for b in basis]
        return [
            sum((g * p for g, p in zip(row, pairings)), Fraction(0)) for row in self.gram_inverse
        ]

    def to_vector(self, z: tuple[int, ...]) -> LatticeVector:
        lat = self.lattice
        coeffs = [0] * lat.dim
        for zi, b in zip(z, lat.perp_basis):
            if zi:
                for k, x in enumerate(b):
                    coeffs[k] += zi * x
        return LatticeVector(lat.degree, tuple(coeffs), lat.even)

    def _center(self, level: int, z: list[int], y: list[Fraction]) -> Fraction:
        c = y[level]
        for j in range(level + 1, self.rank):
            c -= self.lower[j][level] * (z[j] - y[j])
        return c

    def babai(self, y: list[Fraction]) -> tuple[Fraction, tuple[int, ...]]:
        n = self.rank
        z = [0] * n
        total = Fraction(0)
        for level in range(n - 1, -1, -1):
            c = self._center(level, z, y)
            z[level] = round(c)
            total += self.diagonal[level] * (z[level] - c) ** 2
        return total, tuple(z)

    def enumerate(
        self, y: list[Fraction], budget: Fraction, shrink: bool,
    ) -> tuple[Fraction, list[tuple[Fraction, tuple[int, ...]]]]:
        """Depth-first search of all ``z`` with ``q(z - y) <= budget``.

        With *shrink* the budget tightens to the best value found and only
        minimizers are kept.
        """
        n = self.rank
        z = [0] * n
        found: list[tuple[Fraction, tuple[int, ...]]] = []
        best = budget

        def candidates(c: Fraction, room: Fraction, d: Fraction) -> list[int]:
            out = []
            base = math.floor(c)
            t = base
            while d * (t - c) ** 2 <= room:
                out.append(t)
                t += 1
            t = base - 1
            while d * (t - c) ** 2 <= room:
                out.append(t)
                t -= 1
            out.sort(key=lambda v: (v - c) ** 2)
            return out

        def visit(level: int, partial: Fraction) -> None:
            nonlocal best, found
            c = self._center(level, z, y)
            d = self.diagonal[level]
            for t in candidates(c, best - partial, d):
                value = partial + d * (t - c) ** 2
                if value > best:
                    break
                z[level] = t
                if level == 0:
                    if shrink and value < best:
                        best = value
                        found = [(value, tuple(z))]
                    else:
                        found.append((value, tuple(z)))
                else:
                    visit(level - 1, value)
            z[level] = 0

        if n:
            visit(n - 1, Fraction(0))
        else:
            found = [(Fraction(0), ())]
            best = Fraction(0)
        return best, found


_DECODERS: dict[str, _Decoder] = {}
_lock = threading.Lock()


def _decoder(lattice: DelPezzoLattice) -> _Decoder:
    with _lock:
        dec = _DECODERS.get(lattice.key)
        if dec is not None:
            return dec
    n = lattice.perp_rank
    if n:
        gram = Matrix(lattice.perp_gram)
        inv = gram.inv()
        lower, diag = gram.LDLdecomposition()
        dec = _Decoder(
            lattice=lattice,
            gram_inverse=tuple(
                tuple(to_fraction(inv[i, j]) for j in range(n)) for i in range(n)
            ),
            lower=tuple(tuple(to_fraction(lower[i, j]) for j in range(n)) for i in range(n)),
            diagonal=tuple(to_fraction(diag[i, i]) for i in range(n)),
        )
    else:
        dec = _Decoder(lattice=lattice, gram_inverse=(), lower=(), diagonal=())
    with _lock:
        _DECODERS[lattice.key] = dec
    return dec


def _prepare(target: LatticeVector | RationalVector) -> tuple[_Decoder, RationalVector]:
    target = target.to_rational()
    if target.dot_q() != 0:
        raise DomainError(f"{target.serialize()} is not orthogonal to Q")
    if target.degree == 0:
        raise DomainError("closest-vector search needs a surface of degree 1..9")
    return _decoder(target.lattice), target


def _distance(target: RationalVector, vec: LatticeVector) -> Fraction:
    diff = target - vec
    return Fraction(diff.norm())


def closest_vectors(target: LatticeVector | RationalVector) -> ClosestVectors:
    """Minimal squared distance from *target* to Q^⊥ and every minimizer.

    Raises:
        DomainError: ``target·Q != 0``.
    """
    dec, target = _prepare(target)
    y = dec.coordinates(target)
    if dec.rank == 0:
        return ClosestVectors(Fraction(target.norm()), (dec.to_vector(()),))
    start, _ = dec.babai(y)
    best, found = dec.enumerate(y, start, shrink=True)
    vectors = tuple(sorted((dec.to_vector(z) for _, z in found), key=lambda v: v.coeffs))
    logger.debug("CVP for %s: distance %s, %d minimizers", target.serialize(), best, len(vectors))
    return ClosestVectors(best, vectors)


def vectors_within(
    target: LatticeVector | RationalVector, radius2: Fraction | int,
) -> list[tuple[Fraction, LatticeVector]]:
    """All lattice vectors of Q^⊥ within squared distance *radius2* of *target*.

    Exhaustive (no pruning beyond the radius); used as a cross-check for
    :func:`closest_vectors`.
    """
    dec, target = _prepare(target)
    y = dec.coordinates(target)
    _, found = dec.enumerate(y, Fraction(radius2), shrink=False)
    out = [(_distance(target, dec.to_vector(z)), dec.to_vector(z)) for _, z in found]
    out = [(d, v) for d, v in out if d <= radius2]
    out.sort(key=lambda item: (item[0], item[1].coeffs))
    return out
