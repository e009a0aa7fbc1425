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

"""Configuration searches behind the moduli tables.

A configuration is a choice of exceptional classes realizing a bundle
of given slope and multiplicity.  Its moduli fiber is the kernel of the
homomorphism ``E^{12−d} → E^{n+2}`` given by the functionals of the
point class, ``[O_Q]`` and the chosen classes; its dimension and
component group come from the Smith form of that integer matrix.

Integer slope, ``r`` line bundles on a degree-``d`` surface:
``O, O(β_2), ..., O(β_r)`` with roots ``β_j`` pairwise pairing to 1,
so their differences are simple roots of an ``A_{r−1}``.

Slope ``−a/s`` on a degree-``d`` surface, modelled in the degree-one
frame: ``d − 1`` disjoint −1-curves ``Q + ρ_k`` with
``<v, ρ_k> ≡ −a (mod s)``, then ``r − 1`` roots ``β_j`` orthogonal to
every ``ρ_k`` with ``<v, β_j> ≡ −1 (mod s)`` whose classes
``(s; −aQ + v + β_j)`` still pass the alcove filter.  Every class is
twisted by the combination ``Σ m_k (Q + ρ_k)`` that makes it degree
zero on the curves, so it is pulled back from the degree-``d`` surface.

Configurations are enumerated up to the Weyl group fixing ``v`` modulo
``s``, generated by the roots ``γ`` with ``<v, γ> ≡ 0``: each new root
must be dominant for the stabilizer of the roots already chosen, which
picks exactly one tuple per orbit.  Descriptors are sorted, so the
result does not depend on enumeration order or worker count.

Usage::

    from dpz.classify import RankSpec, configuration_search

    for desc in configuration_search(RankSpec(1), d=1):
        print(desc.row())
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from dpz.classify.candidates import (
    CandidateStatus,
    chi_for,
    classify_slope,
    minimal_representative,
    slope_parts,
)
from dpz.classify.polarization import class_functional
from dpz.errors import DomainError, UnsupportedCaseError
from dpz.lattice.basis import get_lattice, parse_degree_key
from dpz.lattice.roots import is_positive, roots_of_Qperp
from dpz.lattice.smith import smith_invariants
from dpz.lattice.subsystems import CartanFactor, factorize, format_type
from dpz.lattice.vectors import LatticeVector
from dpz.surface.classes import (
    SurfaceClass,
    curve_sheaf,
    line_bundle,
    point_class,
    structure_sheaf,
    twist,
)

logger = logging.getLogger(__name__)

# pairwise-1 roots are linearly independent, so E8 holds at most eight
MAX_ROOTS = 8

FLAG_RANK_DEFICIT = "rank_deficit"
FLAG_ELLIPTIC = "elliptic_factor"
FLAG_TORSION = "torsion_factor"

STABILIZER_NOTE = (
    "stabilizer may exceed the Weyl group of the orthogonal subsystem (unresolved)"
)


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RankSpec:
    """``r`` copies of slope *slope*: line bundles for an integer slope."""

    r: int
    slope: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", Fraction(self.slope))
        if self.r < 1:
            raise DomainError(f"multiplicity must be positive, got {self.r}")
        if not self.integer:
            slope_parts(self.slope)

    @property
    def integer(self) -> bool:
        return self.slope.denominator == 1

    def to_dict(self) -> dict[str, Any]:
        return {"r": self.r, "slope": str(self.slope)}


@dataclass(frozen=True)
class ModuliDescriptor:
    """One configuration class with its fiber data.

    ``component`` is the key of the lattice the roots live in: the
    degree-``d`` lattice for integer slopes, the degree-one frame
    otherwise.
    """

    slope: Fraction
    r: int
    d: int
    component: str
    delta: int
    roots: tuple[LatticeVector, ...]
    curves: tuple[LatticeVector, ...]
    representative: LatticeVector | None
    orthogonal_type: tuple[CartanFactor, ...]
    fiber_dim: int
    torsion: tuple[int, ...]
    notes: tuple[str, ...] = ()

    @property
    def orthogonal_rank(self) -> int:
        return sum(f.rank for f in self.orthogonal_type)

    @property
    def type_string(self) -> str:
        return format_type(self.orthogonal_type)

    @property
    def rank_deficit(self) -> int:
        return self.fiber_dim - self.orthogonal_rank

    @property
    def flags(self) -> tuple[str, ...]:
        flags = []
        if self.rank_deficit > 0:
            # directions outside the orthogonal roots form a power of E
            flags.extend((FLAG_RANK_DEFICIT, FLAG_ELLIPTIC))
        if self.torsion:
            flags.append(FLAG_TORSION)
        return tuple(flags)

    @property
    def wps_degrees(self) -> tuple[tuple[int, ...], ...] | None:
        """Affine-diagram labels per orthogonal factor, when the fiber is a product of WPS."""
        if self.rank_deficit or self.torsion:
            return None
        return tuple(f.affine_marks for f in self.orthogonal_type)

    @property
    def degrees_string(self) -> str:
        wps = self.wps_degrees
        if wps is None:
            return ""
        return "×".join(",".join(str(x) for x in f) for f in wps)

    @property
    def status(self) -> str:
        return "wps" if self.wps_degrees is not None else "+".join(self.flags)

    def key(self) -> tuple:
        return (
            self.component, self.type_string, self.fiber_dim,
            self.torsion, self.flags, self.degrees_string,
        )

    def orbit_key(self) -> tuple:
        """Identity of the configuration itself, not just of its fiber data."""
        config = tuple(v.serialize() for v in self.curves + self.roots)
        rep = self.representative.serialize() if self.representative is not None else ""
        return (self.component, rep, config)

    def sort_key(self) -> tuple:
        return self.key() + self.orbit_key()[1:]

    def row(self) -> dict[str, Any]:
        return {
            "slope": str(self.slope),
            "r": self.r,
            "d": self.component if self.slope.denominator == 1 else str(self.d),
            "type": self.type_string,
            "degrees": self.degrees_string,
            "fiber_dim": self.fiber_dim,
            "torsion": ",".join(str(t) for t in self.torsion),
            "status": self.status,
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "slope": str(self.slope),
            "r": self.r,
            "d": self.d,
            "component": self.component,
            "delta": self.delta,
            "roots": [v.to_dict() for v in self.roots],
            "curves": [v.to_dict() for v in self.curves],
            "representative": (
                self.representative.to_dict() if self.representative is not None else None
            ),
            "orthogonal_type": self.type_string,
            "orthogonal_factors": [f.to_dict() for f in self.orthogonal_type],
            "fiber_dim": self.fiber_dim,
            "torsion": list(self.torsion),
            "rank_deficit": self.rank_deficit,
            "wps_degrees": (
                [list(f) for f in self.wps_degrees] if self.wps_degrees is not None else None
            ),
            "flags": list(self.flags),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ModuliDescriptor:
        """Rebuild a descriptor; the orthogonal factors are recomputed from the configuration."""
        slope = Fraction(data["slope"])
        degree, even = parse_degree_key(str(data["component"]))
        roots = tuple(LatticeVector.from_dict(v) for v in data["roots"])
        curves = tuple(LatticeVector.from_dict(v) for v in data["curves"])
        rep = data.get("representative")
        representative = LatticeVector.from_dict(rep) if rep is not None else None
        return cls(
            slope=slope,
            r=int(data["r"]),
            d=int(data["d"]),
            component=str(data["component"]),
            delta=int(data["delta"]),
            roots=roots,
            curves=curves,
            representative=representative,
            orthogonal_type=orthogonal_factors(
                degree, even, slope.denominator, roots, curves, representative
            ),
            fiber_dim=int(data["fiber_dim"]),
            torsion=tuple(int(t) for t in data["torsion"]),
            notes=tuple(data.get("notes", ())),
        )


# ---------------------------------------------------------------------------
# Root tables and the orbit search
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _root_table(
    degree: int, even: bool,
) -> tuple[tuple[LatticeVector, ...], tuple[tuple[int, ...], ...]]:
    """Roots in canonical order with their positive-form Gram table."""
    lattice = get_lattice(degree, even)
    roots = roots_of_Qperp(degree, even)
    images = [
        [sum(lattice.gram[i][j] * r.coeffs[j] for j in range(lattice.dim))
         for i in range(lattice.dim)]
        for r in roots
    ]
    gram = tuple(
        tuple(-sum(a * b for a, b in zip(r.coeffs, img)) for img in images)
        for r in roots
    )
    logger.debug("Root Gram table for d=%s: %d roots", lattice.key, len(roots))
    return roots, gram


@lru_cache(maxsize=None)
def _stabilizer_simple(
    degree: int,
    even: bool,
    representative: tuple[int, ...] | None = None,
    modulus: int = 1,
) -> tuple[int, ...]:
    """Indices of the simple roots of ``{γ : <v, γ> ≡ 0 (mod s)}``.

    Without a representative every root qualifies and these are the
    simple roots of the whole system.  A positive root of the subsystem
    is simple when it is not the sum of two positive roots of the
    subsystem; ``γ − δ`` is a root exactly when ``<γ, δ> = 1``.
    """
    roots, gram = _root_table(degree, even)
    if representative is None:
        inside = list(range(len(roots)))
    else:
        v = LatticeVector(degree, representative, even)
        inside = [i for i, g in enumerate(roots) if v.pos(g) % modulus == 0]
    index = {g.coeffs: i for i, g in enumerate(roots)}
    positive = {i for i in inside if is_positive(roots[i])}
    simple = []
    for i in sorted(positive):
        split = any(
            gram[i][j] == 1 and index.get((roots[i] - roots[j]).coeffs) in positive
            for j in positive if j != i
        )
        if not split:
            simple.append(i)
    return tuple(simple)


State = tuple[tuple[int, ...], tuple[int, ...]]


def _orbit_search(
    gram: Sequence[Sequence[int]],
    start: State,
    allowed: Sequence[int],
    need: int,
    group_start: int = 0,
) -> list[State]:
    """Extend *start* by *need* roots from *allowed*, one per stabilizer orbit.

    A state is the chosen root indices together with the simple roots
    of their stabilizer.  The roots chosen from *group_start* on pair to
    1 with each other.  A new root is kept only when it is dominant for
    the current stabilizer; the stabilizer of the extended tuple is then
    generated by the simple roots orthogonal to it.
    """
    states = [start]
    for _ in range(need):
        extended = []
        for chosen, simple in states:
            group = chosen[group_start:]
            for h in allowed:
                row = gram[h]
                if any(row[g] != 1 for g in group) or any(row[a] < 0 for a in simple):
                    continue
                extended.append((chosen + (h,), tuple(a for a in simple if row[a] == 0)))
        states = extended
    return states


@lru_cache(maxsize=None)
def _coset_chi(coeffs: tuple[int, ...], a: int, s: int) -> int | None:
    """χ at the minimal representative of ``v + sE8``."""
    return chi_for(a, s, minimal_representative(LatticeVector(1, coeffs), s).norm())


def orthogonal_factors(
    degree: int,
    even: bool,
    modulus: int,
    roots: Sequence[LatticeVector],
    curves: Sequence[LatticeVector] = (),
    representative: LatticeVector | None = None,
) -> tuple[CartanFactor, ...]:
    """Type of the roots orthogonal to the configuration.

    With a *representative* ``v`` only roots ``γ`` with ``<v, γ> ≡ 0``
    modulo *modulus* count.
    """
    keep = set()
    for g in roots_of_Qperp(degree, even):
        if any(g.dot(b) for b in roots) or any(g.dot(c) for c in curves):
            continue
        if representative is not None and representative.dot(g) % modulus:
            continue
        keep.add(g.coeffs)
    return factorize(get_lattice(degree, even), keep)


# ---------------------------------------------------------------------------
# Descriptors
# ---------------------------------------------------------------------------

def _describe(
    spec: RankSpec,
    d: int,
    delta: int,
    degree: int,
    even: bool,
    classes: Sequence[SurfaceClass],
    roots: tuple[LatticeVector, ...],
    curves: tuple[LatticeVector, ...] = (),
    representative: LatticeVector | None = None,
) -> ModuliDescriptor:
    rows = [class_functional(c) for c in classes]
    rank, divisors = smith_invariants(rows)
    torsion = tuple(t for t in divisors if t > 1)
    return ModuliDescriptor(
        slope=spec.slope,
        r=spec.r,
        d=d,
        component=get_lattice(degree, even).key,
        delta=delta,
        roots=roots,
        curves=curves,
        representative=representative,
        orthogonal_type=orthogonal_factors(
            degree, even, spec.slope.denominator, roots, curves, representative
        ),
        fiber_dim=(12 - d) - rank,
        torsion=torsion,
        notes=(f"[L] = {d - delta}q + φ([O_Q])", STABILIZER_NOTE),
    )


@dataclass(frozen=True)
class _Task:
    spec: RankSpec
    d: int
    delta: int
    even: bool = False
    first: int | None = None
    representative: tuple[int, ...] | None = None


def _integer_task(task: _Task) -> list[ModuliDescriptor]:
    spec, d = task.spec, task.d
    roots, gram = _root_table(d, task.even)
    simple = _stabilizer_simple(d, task.even)
    if task.first is None:
        states: list[State] = [((), simple)]
    else:
        g = task.first
        start = ((g,), tuple(a for a in simple if gram[g][a] == 0))
        states = _orbit_search(gram, start, range(len(roots)), spec.r - 2)

    q = LatticeVector.anticanonical(d, task.even)
    base = [point_class(d, task.even), curve_sheaf(q, 0), structure_sheaf(d, task.even)]
    out = []
    for choice, _ in states:
        betas = tuple(roots[i] for i in choice)
        classes = base + [line_bundle(b) for b in betas]
        out.append(_describe(spec, d, task.delta, d, task.even, classes, betas))
    return out


def _fractional_task(task: _Task) -> list[ModuliDescriptor]:
    spec, d = task.spec, task.d
    a, s = slope_parts(spec.slope)
    roots, gram = _root_table(1, False)
    everything = range(len(roots))
    v = LatticeVector(1, task.representative)
    pairing = [v.pos(g) for g in roots]
    q = LatticeVector.anticanonical(1)

    start = ((), _stabilizer_simple(1, False, task.representative, s))
    curve_cand = [h for h in everything if (pairing[h] + a) % s == 0]
    out = []
    for curve_state in _orbit_search(gram, start, curve_cand, d - 1):
        curve_choice = curve_state[0]
        curves = tuple(roots[i] for i in curve_choice)
        # c1·(Q + ρ_k) = s·m_k; twisting by Σ m_k(Q + ρ_k) makes it zero on every curve
        shift = LatticeVector.zero(1)
        q_y = q * d
        for i, rho in zip(curve_choice, curves):
            shift = shift + (q + rho) * ((-a - pairing[i]) // s)
            q_y = q_y + rho

        beta_cand = []
        for h in everything:
            if (pairing[h] + 1) % s or any(gram[h][k] for k in curve_choice):
                continue
            chi = _coset_chi((v + roots[h]).coeffs, a, s)
            if chi is not None and chi <= 0:
                beta_cand.append(h)

        base = [point_class(1), curve_sheaf(q_y, 0)]
        beta_states = _orbit_search(
            gram, curve_state, beta_cand, spec.r - 1, group_start=len(curve_choice)
        )
        for chosen, _ in beta_states:
            betas = tuple(roots[i] for i in chosen[len(curve_choice):])
            classes = list(base)
            for w in (v,) + tuple(v + b for b in betas):
                chi = chi_for(a, s, w.norm())
                if chi is None:
                    raise DomainError(f"class with v={w.serialize()} is not exceptional")
                classes.append(twist(SurfaceClass(s, w - q * a, chi), shift))
            out.append(_describe(spec, d, task.delta, 1, False, classes, betas, curves, v))
    return out


def _run_task(task: _Task) -> list[ModuliDescriptor]:
    if task.spec.integer:
        return _integer_task(task)
    return _fractional_task(task)


def _tasks(spec: RankSpec, d: int, delta: int, jobs: int) -> list[_Task]:
    if not spec.integer:
        candidates = classify_slope(spec.slope, r_max=spec.slope.denominator, jobs=jobs)
        return [
            _Task(spec, d, delta, representative=c.v.coeffs)
            for c in candidates
            if c.status is not CandidateStatus.EXCLUDED
        ]
    tasks = []
    for even in ((False, True) if d == 8 else (False,)):
        if spec.r == 1:
            tasks.append(_Task(spec, d, delta, even))
            continue
        roots, gram = _root_table(d, even)
        start = ((), _stabilizer_simple(d, even))
        for (g,), _ in _orbit_search(gram, start, range(len(roots)), 1):
            tasks.append(_Task(spec, d, delta, even, first=g))
    return tasks


def configuration_search(
    spec: RankSpec, d: int, delta: int = 0, jobs: int = 1,
) -> list[ModuliDescriptor]:
    """Moduli descriptors of every configuration class for *spec* on degree *d*.

    Raises:
        DomainError: *d* is outside ``1..9``.
        UnsupportedCaseError: a fractional configuration needs more than
            eight independent roots.
    """
    if not isinstance(d, int) or not 1 <= d <= 9:
        raise DomainError(f"degree must be an integer in 1..9, got {d!r}")
    if not spec.integer and (d - 1) + (spec.r - 1) > MAX_ROOTS:
        raise UnsupportedCaseError(
            f"slope {spec.slope} with r={spec.r}, d={d} needs "
            f"{d + spec.r - 2} independent roots in E8"
        )
    tasks = _tasks(spec, d, delta, jobs)
    found: list[ModuliDescriptor] = []
    if jobs > 1 and len(tasks) > 1:
        results: list[list[ModuliDescriptor]] = [[] for _ in tasks]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futures = {ex.submit(_run_task, t): i for i, t in enumerate(tasks)}
            for fut in as_completed(futures):
                results[futures[fut]] = fut.result()
        for chunk in results:
            found.extend(chunk)
    else:
        for task in tasks:
            found.extend(_run_task(task))

    unique: dict[tuple, ModuliDescriptor] = {}
    for desc in sorted(found, key=ModuliDescriptor.sort_key):
        unique.setdefault(desc.orbit_key(), desc)
    out = list(unique.values())
    logger.info(
        "Moduli search slope=%s r=%d d=%d: %d configurations, %d classes",
        spec.slope, spec.r, d, len(found), len(out),
    )
    return out


# ---------------------------------------------------------------------------
# Decimation
# ---------------------------------------------------------------------------

def decimation_orders(degrees: Iterable[int]) -> list[int]:
    """Orders ``g >= 2`` of orbifold points: some degree divisible by ``g``.

    Raises:
        DomainError: *degrees* is empty or holds a nonpositive entry.
    """
    values = [int(x) for x in degrees]
    if not values:
        raise DomainError("decimation needs a nonempty degree multiset")
    if any(x < 1 for x in values):
        raise DomainError(f"weights must be positive, got {values}")
    return [g for g in range(2, max(values) + 1) if any(x % g == 0 for x in values)]
