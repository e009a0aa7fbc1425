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

"""ADE typing of root subsystems of Q^⊥.

:func:`subsystem_analyze` closes the input roots under reflection,
extracts a simple system (lexicographic positivity), reads off the ADE
type of every connected component from its Dynkin graph and repeats the
same for the roots orthogonal to the input.  The saturation torsion of
the input span comes from the Smith form of the inclusion matrix.

Usage::

    from dpz.lattice import LatticeVector, subsystem_analyze

    report = subsystem_analyze([LatticeVector.named(1, e7=1, e8=-1)])
    report.type_string             # 'A1'
    report.orthogonal_string       # 'E7'
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from sympy import Matrix

from dpz.errors import DomainError
from dpz.lattice.basis import DelPezzoLattice, get_lattice, to_fraction
from dpz.lattice.roots import roots_of_Qperp
from dpz.lattice.smith import smith_invariants
from dpz.lattice.vectors import LatticeVector

logger = logging.getLogger(__name__)

Coeffs = tuple[int, ...]

_LETTER_ORDER = {"E": 0, "D": 1, "A": 2}


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CartanFactor:
    """One irreducible ADE factor with its simple roots and marks."""

    letter: str
    rank: int
    simple_roots: tuple[LatticeVector, ...]
    marks: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"

    @property
    def affine_marks(self) -> tuple[int, ...]:
        """Labels of the affine diagram: the affine node's 1 followed by the marks."""
        return tuple(sorted((1,) + self.marks))

    def to_dict(self) -> dict[str, Any]:
        return {"type": str(self), "marks": list(self.marks)}


def format_type(factors: Sequence[CartanFactor]) -> str:
    return "".join(str(f) for f in factors) if factors else "0"


@dataclass(frozen=True)
class SubsystemReport:
    roots: tuple[LatticeVector, ...]
    cartan_type: tuple[CartanFactor, ...]
    orthogonal_type: tuple[CartanFactor, ...]
    rank_deficit: int
    torsion: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.cartan_type)

    @property
    def orthogonal_rank(self) -> int:
        return sum(f.rank for f in self.orthogonal_type)

    @property
    def type_string(self) -> str:
        return format_type(self.cartan_type)

    @property
    def orthogonal_string(self) -> str:
        return format_type(self.orthogonal_type)

    def to_dict(self) -> dict[str, Any]:
        return {
            "roots": [r.to_dict() for r in self.roots],
            "type": self.type_string,
            "orthogonal_type": self.orthogonal_string,
            "rank_deficit": self.rank_deficit,
            "torsion": list(self.torsion),
        }


# ---------------------------------------------------------------------------
# Root-system helpers on coefficient tuples
# ---------------------------------------------------------------------------

def reflection_closure(lattice: DelPezzoLattice, roots: Iterable[Coeffs]) -> set[Coeffs]:
    """Smallest reflection-closed set of roots containing *roots*."""
    closed: set[Coeffs] = set()
    frontier = []
    for r in roots:
        for x in (tuple(r), tuple(-c for c in r)):
            if x not in closed:
                closed.add(x)
                frontier.append(x)
    while frontier:
        new = []
        members = list(closed)
        for a in frontier:
            for b in members:
                c = lattice.dot(b, a)
                if c:
                    image = tuple(x + c * y for x, y in zip(b, a))
                    if image not in closed:
                        closed.add(image)
                        new.append(image)
        frontier = new
    return closed


def _lex_positive(v: Coeffs) -> bool:
    for c in v:
        if c:
            return c > 0
    return False


def extract_simple_system(roots: set[Coeffs]) -> list[Coeffs]:
    """Simple roots for the lexicographic positive system of *roots*."""
    positive = [r for r in roots if _lex_positive(r)]
    pos_set = set(positive)
    simple = []
    for r in positive:
        decomposable = False
        for a in positive:
            diff = tuple(x - y for x, y in zip(r, a))
            if diff in pos_set:
                decomposable = True
                break
        if not decomposable:
            simple.append(r)
    return sorted(simple, reverse=True)


def _components(cartan: list[list[int]]) -> list[list[int]]:
    n = len(cartan)
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j]:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _arm_length(adj: dict[int, list[int]], start: int, centre: int) -> int:
    length, prev, node = 1, centre, start
    while True:
        nxt = [x for x in adj[node] if x != prev]
        if not nxt:
            return length
        prev, node = node, nxt[0]
        length += 1


_EXPECTED_DET = {"A": lambda n: n + 1, "D": lambda n: 4, "E": lambda n: 9 - n}


def classify_component(cartan: list[list[int]]) -> tuple[str, int]:
    """ADE letter and rank of a connected simply-laced Cartan matrix.

    Raises:
        DomainError: the matrix is not of ADE type.
    """
    n = len(cartan)
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    edges = 0
    for i in range(n):
        if cartan[i][i] != 2:
            raise DomainError("Cartan matrix diagonal must be 2")
        for j in range(i + 1, n):
            if cartan[i][j] != cartan[j][i] or cartan[i][j] not in (0, -1):
                raise DomainError("not a simply-laced Cartan matrix")
            if cartan[i][j]:
                adj[i].append(j)
                adj[j].append(i)
                edges += 1
    if edges != n - 1:
        raise DomainError("Dynkin graph is not a tree")
    branch = [i for i in range(n) if len(adj[i]) > 2]
    if not branch:
        letter, rank = "A", n
    elif len(branch) == 1 and len(adj[branch[0]]) == 3:
        centre = branch[0]
        arms = sorted(_arm_length(adj, s, centre) for s in adj[centre])
        if arms[0] == 1 and arms[1] == 1:
            letter, rank = "D", n
        elif arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            letter, rank = "E", n
        else:
            raise DomainError(f"non-ADE Dynkin graph with arms {arms}")
    else:
        raise DomainError("non-ADE Dynkin graph")
    if Matrix(cartan).det() != _EXPECTED_DET[letter](rank):
        raise DomainError(f"Cartan determinant does not match {letter}{rank}")
    return letter, rank


def factorize(
    lattice: DelPezzoLattice, roots: set[Coeffs],
) -> tuple[CartanFactor, ...]:
    """Split a reflection-closed root set into typed irreducible factors."""
    if not roots:
        return ()
    simple = extract_simple_system(roots)
    cartan = [[lattice.pos(a, b) for b in simple] for a in simple]
    factors = []
    positive = [r for r in roots if _lex_positive(r)]
    for comp in _components(cartan):
        sub = [[cartan[i][j] for j in comp] for i in comp]
        letter, rank = classify_component(sub)
        comp_roots = [simple[i] for i in comp]
        marks = _marks(lattice, comp_roots, sub, positive)
        factors.append(
            CartanFactor(
                letter=letter,
                rank=rank,
                simple_roots=tuple(
                    LatticeVector(lattice.degree, r, lattice.even) for r in comp_roots
                ),
                marks=marks,
            )
        )
    factors.sort(key=lambda f: (-f.rank, _LETTER_ORDER[f.letter], str(f.simple_roots)))
    return tuple(factors)


def _marks(
    lattice: DelPezzoLattice,
    simple: list[Coeffs],
    cartan: list[list[int]],
    positive: list[Coeffs],
) -> tuple[int, ...]:
    """Simple coordinates of the highest root of one component."""
    inv = Matrix(cartan).inv()
    n = len(simple)
    inv_f = [[to_fraction(inv[i, j]) for j in range(n)] for i in range(n)]
    best: tuple[Fraction, ...] | None = None
    for r in positive:
        pairings = [lattice.pos(r, a) for a in simple]
        coords = tuple(sum((inv_f[i][j] * pairings[j] for j in range(n)), Fraction(0))
                       for i in range(n))
        if any(c.denominator != 1 or c < 0 for c in coords):
            continue
        rebuilt = [sum(int(c) * a[k] for c, a in zip(coords, simple)) for k in range(len(r))]
        if tuple(rebuilt) != r:
            continue
        if best is None or sum(coords) > sum(best):
            best = coords
    return tuple(int(c) for c in best) if best else ()


# ---------------------------------------------------------------------------
# Public operation
# ---------------------------------------------------------------------------

def orthogonal_roots(
    roots: Sequence[LatticeVector], degree: int, even: bool = False,
) -> set[Coeffs]:
    """Roots of Q^⊥ orthogonal to every vector in *roots*."""
    lattice = get_lattice(degree, even)
    return {
        r.coeffs
        for r in roots_of_Qperp(degree, even)
        if all(lattice.dot(r.coeffs, a.coeffs) == 0 for a in roots)
    }


def subsystem_analyze(
    roots: Sequence[LatticeVector], degree: int | None = None, even: bool = False,
) -> SubsystemReport:
    """Type the subsystem generated by *roots* and its orthogonal subsystem.

    *degree* is only needed for an empty input.

    Raises:
        DomainError: an input is not a root of Q^⊥ or degrees differ.
    """
    roots = tuple(roots)
    if roots:
        degree, even = roots[0].degree, roots[0].even
    elif degree is None:
        raise DomainError("degree is required when no roots are given")
    lattice = get_lattice(degree, even)
    for r in roots:
        if r.degree != degree or r.even != even:
            raise DomainError(f"degree mismatch: d={r.key} vs d={lattice.key}")
        if r.square() != -2 or r.dot_q() != 0:
            raise DomainError(f"{r.serialize()} is not a root of Q^⊥")

    closure = reflection_closure(lattice, (r.coeffs for r in roots))
    cartan_type = factorize(lattice, closure)
    orth = orthogonal_roots(roots, degree, even)
    orthogonal_type = factorize(lattice, orth)

    rank = sum(f.rank for f in cartan_type)
    orth_rank = sum(f.rank for f in orthogonal_type)
    deficit = lattice.perp_rank - rank - orth_rank

    generators = [list(r.coeffs) for f in cartan_type for r in f.simple_roots]
    torsion = tuple(d for d in smith_invariants(generators)[1] if d > 1) if generators else ()
    report = SubsystemReport(
        roots=roots,
        cartan_type=cartan_type,
        orthogonal_type=orthogonal_type,
        rank_deficit=deficit,
        torsion=torsion,
    )
    logger.debug(
        "Subsystem %s with orthogonal %s (deficit %d) in d=%s",
        report.type_string, report.orthogonal_string, deficit, lattice.key,
    )
    return report
