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

"""Candidate classes of exceptional sheaves of slope ``−a/r`` in degree one.

An exceptional class of rank ``r`` and slope ``−a/r`` has
``c1 = −a·Q + v`` with ``v ∈ Q^⊥ ≅ E8``, and ``χ(E, E) = 1`` forces

    χ = (1 + r² + a² − r·a − v²) / 2r

with ``v²`` taken in the positive form.  Twisting by ``D ∈ Q^⊥`` moves
``v`` through its coset ``v + rE8``, so the maximum of ``χ`` over the
coset is attained at the minimal representative, i.e. where ``v/r`` lies
in the fundamental alcove.  The alcove points with ``r·x`` integral are
the nonnegative solutions of ``n_0 + Σ a_i n_i = r``.

:func:`classify_slope` runs the necessary conditions in order (alcove
filter, line-twist maximum against ``O``, the d′-partner check) and then
tries to reach a certified base case: slope ``−1/r``, the slope ``−2/r``
rank reduction, or a duality image of either.

Usage::

    from fractions import Fraction
    from dpz.classify import classify_slope

    for cand in classify_slope(Fraction(-3, 8), r_max=8):
        print(cand.status.value, cand.alcove.scaled_coords(8), cand.reason)
"""

from __future__ import annotations

import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any

from dpz.errors import DomainError
from dpz.lattice.alcove import AlcovePoint, alcove_point, fundamental_weights, reduce_to_alcove
from dpz.lattice.basis import get_lattice
from dpz.lattice.roots import affine_marks
from dpz.lattice.vectors import LatticeVector
from dpz.surface.classes import SurfaceClass, structure_sheaf
from dpz.surface.exceptional import line_twist_max

logger = logging.getLogger(__name__)

# candidates live on the degree-one surface, Q^⊥ = E8
DEGREE = 1

DUAL = "dual"
DPRIME = "dprime"


class CandidateStatus(str, Enum):
    REPRESENTABLE = "representable"
    EXCLUDED = "excluded"
    CANDIDATE = "candidate"


# ---------------------------------------------------------------------------
# Slopes
# ---------------------------------------------------------------------------

def slope_parts(slope: Fraction | str | int) -> tuple[int, int]:
    """``(a, r)`` for a slope ``−a/r`` with ``0 < a < r``.

    Raises:
        DomainError: the slope is not in the open interval ``(−1, 0)``.
    """
    try:
        value = Fraction(slope)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"invalid slope {slope!r}") from None
    if not -1 < value < 0:
        raise DomainError(f"slope must lie strictly between -1 and 0, got {value}")
    return -value.numerator, value.denominator


def chi_for(a: int, r: int, norm: int) -> int | None:
    """Euler characteristic of the exceptional class ``(r; −aQ + v)`` with ``v² = norm``."""
    num = 1 + r * r + a * a - r * a - norm
    if num % (2 * r):
        return None
    return num // (2 * r)


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CandidateClass:
    """Numerical class ``(r; −aQ + v; χ)`` with ``v/r`` in the fundamental alcove."""

    slope: Fraction
    v: LatticeVector
    alcove: AlcovePoint
    chi_max: int
    status: CandidateStatus = CandidateStatus.CANDIDATE
    reason: str = ""

    @property
    def rank(self) -> int:
        return self.slope.denominator

    @property
    def a(self) -> int:
        return -self.slope.numerator

    @property
    def norm(self) -> int:
        return self.v.norm()

    @property
    def surface_class(self) -> SurfaceClass:
        q = LatticeVector.anticanonical(DEGREE)
        return SurfaceClass(self.rank, self.v - q * self.a, self.chi_max)

    def with_status(self, status: CandidateStatus, reason: str) -> CandidateClass:
        return replace(self, status=status, reason=reason)

    def to_dict(self) -> dict[str, Any]:
        return {
            "slope": str(self.slope),
            "v": self.v.to_dict(),
            "alcove": self.alcove.to_dict(),
            "scaled_coords": [str(c) for c in self.alcove.scaled_coords(self.rank, True)],
            "norm": self.norm,
            "chi_max": self.chi_max,
            "status": self.status.value,
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CandidateClass:
        return cls(
            slope=Fraction(data["slope"]),
            v=LatticeVector.from_dict(data["v"]),
            alcove=AlcovePoint.from_dict(data["alcove"]),
            chi_max=int(data["chi_max"]),
            status=CandidateStatus(data["status"]),
            reason=data.get("reason", ""),
        )


@dataclass(frozen=True)
class ReductionStep:
    """One step of the slope ``−2/r`` recursion, landing in rank ``rank``."""

    rank: int
    v: LatticeVector
    alcove: AlcovePoint
    norm: int
    valid: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "rank": self.rank,
            "scaled_coords": [str(c) for c in self.alcove.scaled_coords(self.rank, True)],
            "norm": self.norm,
            "valid": self.valid,
        }


# ---------------------------------------------------------------------------
# Alcove points
# ---------------------------------------------------------------------------

def _labels(r: int) -> list[tuple[int, ...]]:
    """Nonnegative ``(n_1..n_8)`` with ``Σ a_i n_i ≤ r`` (``n_0`` takes the rest)."""
    marks = affine_marks(DEGREE)
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], budget: int) -> None:
        i = len(prefix)
        if i == len(marks):
            out.append(tuple(prefix))
            return
        for n in range(budget // marks[i] + 1):
            prefix.append(n)
            extend(prefix, budget - n * marks[i])
            prefix.pop()

    extend([], r)
    return out


@lru_cache(maxsize=64)
def _alcove_table(r: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Every alcove label for rank *r* with the norm of ``v = Σ n_i ω_i``."""
    inv = get_lattice(DEGREE).cartan_inverse
    table = []
    for labels in _labels(r):
        norm = sum(
            labels[i] * labels[j] * inv[i][j]
            for i in range(len(labels)) if labels[i]
            for j in range(len(labels)) if labels[j]
        )
        table.append((labels, int(norm)))
    logger.debug("Rank %d: %d alcove points", r, len(table))
    return tuple(table)


def _weight_vector(labels: tuple[int, ...]) -> LatticeVector:
    v = LatticeVector.zero(DEGREE).to_rational()
    for n, w in zip(labels, fundamental_weights(DEGREE)):
        if n:
            v = v + w * n
    return v.to_lattice()


def alcove_points(r: int) -> tuple[AlcovePoint, ...]:
    """All points ``x`` of the closed alcove with ``r·x`` in E8.

    Raises:
        DomainError: ``r < 1``.
    """
    if r < 1:
        raise DomainError(f"rank must be positive, got {r}")
    return tuple(alcove_point(_weight_vector(labels) / r) for labels, _ in _alcove_table(r))


def _make_candidate(a: int, r: int, v: LatticeVector, chi: int) -> CandidateClass:
    return CandidateClass(Fraction(-a, r), v, alcove_point(v / r), chi)


def alcove_candidates(
    slope: Fraction | str, norm_target: int | None = None,
) -> list[CandidateClass]:
    """Cosets ``v + rE8`` whose maximal Euler characteristic is at most 0.

    With *norm_target* only minimal representatives of that norm are kept.
    The order is by decreasing ``chi_max``, then norm, then alcove labels.

    Raises:
        DomainError: *slope* is not ``−a/r`` with ``0 < a < r``.
    """
    a, r = slope_parts(slope)
    found = []
    for labels, norm in _alcove_table(r):
        if norm_target is not None and norm != norm_target:
            continue
        chi = chi_for(a, r, norm)
        if chi is None or chi > 0:
            continue
        found.append((-chi, norm, labels, chi))
    found.sort()
    out = [_make_candidate(a, r, _weight_vector(labels), chi) for _, _, labels, chi in found]
    logger.debug("Slope -%d/%d: %d alcove candidates", a, r, len(out))
    return out


# ---------------------------------------------------------------------------
# Transforms
# ---------------------------------------------------------------------------

def dprime(a: int, r: int) -> int:
    """``a′ ≡ −a⁻¹ (mod r)``: the slope of the partner bundle, ``v′ = a′v``.

    Raises:
        DomainError: ``gcd(a, r) != 1``.
    """
    try:
        inverse = pow(a, -1, r)
    except ValueError:
        raise DomainError(f"{a} is not invertible modulo {r}") from None
    return (-inverse) % r


def _apply(op: str, a: int, r: int, v: LatticeVector) -> tuple[int, LatticeVector]:
    if op == DUAL:
        return r - a, -v
    if op == DPRIME:
        image = dprime(a, r)
        return image, v * image
    raise DomainError(f"Unknown slope transform {op!r}. Available: {[DPRIME, DUAL]}")


def duality_orbit(a: int, r: int) -> dict[int, tuple[str, ...]]:
    """Orbit of ``a`` under duality and the d′ transform, with a shortest word per image."""
    if r == 1:
        return {a: ()}
    words: dict[int, tuple[str, ...]] = {a: ()}
    queue = deque([a])
    while queue:
        current = queue.popleft()
        for op in (DUAL, DPRIME):
            image = r - current if op == DUAL else dprime(current, r)
            if image not in words:
                words[image] = words[current] + (op,)
                queue.append(image)
    return words


def minimal_representative(v: LatticeVector, r: int) -> LatticeVector:
    """``r·x′`` where ``x′`` is the alcove image of ``v/r``."""
    point, _ = reduce_to_alcove(v / r, mode="affine")
    return (point.representative * r).to_lattice()


def map_candidate(cand: CandidateClass, word: tuple[str, ...]) -> CandidateClass:
    """Image of *cand* under a transform word, re-reduced to the alcove.

    The result keeps ``status`` at ``candidate``; its ``chi_max`` is the
    maximum over the image coset and may be positive.

    Raises:
        DomainError: the image is not numerically exceptional.
    """
    a, r, v = cand.a, cand.rank, cand.v
    for op in word:
        a, v = _apply(op, a, r, v)
    v = minimal_representative(v, r)
    chi = chi_for(a, r, v.norm())
    if chi is None:
        raise DomainError(f"image of {cand.surface_class} under {word} is not exceptional")
    return _make_candidate(a, r, v, chi)


def reduce_rank_two(v: LatticeVector, r: int) -> tuple[ReductionStep, ...]:
    """Run the slope ``−2/r`` recursion from rank *r* down to rank 1.

    Each step reduces ``v/(r−2)`` to the alcove and keeps ``v′ = (r−2)·x′``;
    the step is valid when ``v′² = r′² − 2r′ + 5`` (any ``v′`` at ``r′ = 1``,
    which is a line bundle).  Iteration stops at the first invalid step.

    Raises:
        DomainError: *r* is not an odd integer ``>= 3`` or ``v·Q != 0``.
    """
    if r < 3 or r % 2 == 0:
        raise DomainError(f"the rank-two reduction needs odd r >= 3, got {r}")
    if v.degree != DEGREE or v.dot_q() != 0:
        raise DomainError(f"{v.serialize()} is not in Q^⊥ of the degree-one lattice")
    steps: list[ReductionStep] = []
    rank = r
    while rank > 1:
        rank -= 2
        point, _ = reduce_to_alcove(v / rank, mode="affine")
        v = (point.representative * rank).to_lattice()
        norm = v.norm()
        valid = rank == 1 or norm == rank * rank - 2 * rank + 5
        steps.append(ReductionStep(rank, v, point, norm, valid))
        if not valid:
            break
    return tuple(steps)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

def _base_status(cand: CandidateClass) -> tuple[CandidateStatus, str] | None:
    a, r = cand.a, cand.rank
    if a == 1:
        if cand.chi_max == 0 and cand.norm == r * r - r + 2:
            return CandidateStatus.REPRESENTABLE, f"slope -1/{r} (rational-curve construction)"
        return CandidateStatus.EXCLUDED, f"not a slope -1/{r} class"
    if a == 2 and r % 2:
        if cand.chi_max != 0 or cand.norm != r * r - 2 * r + 5:
            return CandidateStatus.EXCLUDED, f"not a slope -2/{r} class"
        steps = reduce_rank_two(cand.v, r)
        if steps[-1].valid:
            return CandidateStatus.REPRESENTABLE, f"slope -2/{r} reduces to a line bundle"
        return (
            CandidateStatus.EXCLUDED,
            f"slope -2/{r} reduction fails at rank {steps[-1].rank}",
        )
    return None


def _reduce_rank(cand: CandidateClass) -> CandidateClass | None:
    """Evaluate ``(r; −aQ + v)`` at rank ``r − a``; ``None`` when that class is not exceptional.

    ``v′`` is the minimal representative of ``v`` modulo ``r − a``; the
    slope ``−2/r`` recursion is the case ``a = 2``.
    """
    a, r = cand.a, cand.rank
    if cand.chi_max != 0 or 2 * a >= r:
        return None
    v = minimal_representative(cand.v, r - a)
    if chi_for(a, r - a, v.norm()) != 0:
        return None
    return evaluate_candidate(_make_candidate(a, r - a, v, 0))


def evaluate_candidate(cand: CandidateClass) -> CandidateClass:
    """Apply the necessary conditions and base cases to one alcove candidate."""
    o = structure_sheaf(DEGREE)
    if line_twist_max(cand.surface_class, o).value > 0:
        return cand.with_status(
            CandidateStatus.EXCLUDED, "line twist maximum against O is positive"
        )

    a, r = cand.a, cand.rank
    partner = map_candidate(cand, (DPRIME,))
    if line_twist_max(partner.surface_class, o).value > 0:
        return cand.with_status(
            CandidateStatus.EXCLUDED,
            f"d' partner of slope -{partner.a}/{r} violates the line twist condition",
        )

    base = _base_status(cand)
    if base is not None:
        return cand.with_status(*base)

    orbit = duality_orbit(a, r)
    for target in (1, 2):
        if target not in orbit or (target == 2 and r % 2 == 0):
            continue
        word = orbit[target]
        image = _base_status(map_candidate(cand, word))
        if image is not None:
            status, reason = image
            return cand.with_status(status, f"{'∘'.join(word)} image: {reason}")

    for target, word in sorted(orbit.items()):
        if 2 * target >= r:
            continue
        reduced = _reduce_rank(map_candidate(cand, word))
        if reduced is not None and reduced.status is CandidateStatus.REPRESENTABLE:
            prefix = f"{'∘'.join(word)} image: " if word else ""
            return cand.with_status(
                CandidateStatus.REPRESENTABLE,
                f"{prefix}rank reduction to slope -{target}/{r - target}: {reduced.reason}",
            )
    return cand


def classify_slope(
    slope: Fraction | str, r_max: int, jobs: int = 1,
) -> list[CandidateClass]:
    """Alcove candidates of *slope* with final statuses, in candidate order.

    Raises:
        DomainError: the slope denominator exceeds *r_max* or the slope
            is outside ``(−1, 0)``.
    """
    a, r = slope_parts(slope)
    if r > r_max:
        raise DomainError(f"slope denominator {r} exceeds r_max={r_max}")
    candidates = alcove_candidates(Fraction(-a, r))
    if jobs > 1 and len(candidates) > 1:
        results: list[CandidateClass | None] = [None] * len(candidates)
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futures = {ex.submit(evaluate_candidate, c): i for i, c in enumerate(candidates)}
            for fut in as_completed(futures):
                results[futures[fut]] = fut.result()
        out = [c for c in results if c is not None]
    else:
        out = [evaluate_candidate(c) for c in candidates]
    logger.info(
        "Slope -%d/%d: %d candidates, %d representable, %d excluded",
        a, r, len(out),
        sum(c.status is CandidateStatus.REPRESENTABLE for c in out),
        sum(c.status is CandidateStatus.EXCLUDED for c in out),
    )
    return out
