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

"""Smith normal form invariants and integer linear solving.

Thin wrappers over :mod:`sympy.polys.matrices.normalforms` working on
plain lists of Python integers.

Usage::

    from dpz.lattice import smith_invariants

    smith_invariants([[2, 4], [6, 8]])   # (2, (2, 4))
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp, smith_normal_form

logger = logging.getLogger(__name__)


def _domain_matrix(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    m = len(rows)
    n = len(rows[0]) if m else 0
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (m, n), ZZ)


def smith_invariants(matrix: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Rank and nonzero elementary divisors (in divisibility order) of *matrix*."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0, ()
    snf = smith_normal_form(_domain_matrix(rows)).to_Matrix()
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    divisors = tuple(sorted(d for d in diag if d))
    return len(divisors), divisors


def torsion_factors(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Elementary divisors greater than 1: the torsion of ``ℤ^n / rowspace``."""
    return tuple(d for d in smith_invariants(matrix)[1] if d > 1)


def solve_integer(
    matrix: Sequence[Sequence[int]], rhs: Sequence[int],
) -> tuple[int, ...] | None:
    """An integer solution ``y`` of ``matrix · y = rhs``, or ``None``.

    Uses the Smith decomposition ``S·A·T = D``: with ``y = T·z`` the system
    becomes ``D·z = S·rhs``.
    """
    rows = [list(r) for r in matrix]
    m = len(rows)
    if m == 0:
        return None
    n = len(rows[0])
    snf, s, t = smith_normal_decomp(_domain_matrix(rows))
    d = snf.to_Matrix()
    s_m = s.to_Matrix()
    t_m = t.to_Matrix()
    b = [sum(int(s_m[i, k]) * int(rhs[k]) for k in range(m)) for i in range(m)]
    z = [0] * n
    for i in range(m):
        dii = int(d[i, i]) if i < n else 0
        if dii == 0:
            if b[i] != 0:
                return None
            continue
        if b[i] % dii:
            return None
        z[i] = b[i] // dii
    return tuple(sum(int(t_m[j, k]) * z[k] for k in range(n)) for j in range(n))
