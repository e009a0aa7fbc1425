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

"""Shapes of the free resolutions of simple modules over ``B_{V,Ψ}``.

The objects ``M_i`` are the Ψ-translates of the summands of ``V`` in
slope order.  The simple module ``S_i`` has a free resolution whose
term ``P_j`` (for ``j < i``) appears in the homological degree where
``RHom(M_j, T_j)`` is concentrated, with

    T_j = Φ_{M_{j+1}} ∘ ... ∘ Φ_{M_{i−1}}(M_i)

normalized to a shifted sheaf.  With ``s`` the accumulated shift:

* ``μ(M_j) < μ(T_j)``: ``P_j`` in degree ``1 + s`` with multiplicity ``χ(M_j, T_j)``;
* ``μ(M_j) > μ(T_j)``: ``P_j`` in degree ``s`` with multiplicity ``−χ(M_j, T_j)``;
* equal slopes (both stable): ``P_j`` once in degree ``s`` and once in
  ``s + 1``, joined by a map that vanishes iff the determinants agree.
  Such coincidences are recorded as :class:`CoincidenceMarker`.

Usage::

    from dpz.elliptic import Autoequivalence, EllipticClass
    from dpz.resolution import SequenceSpec, free_shape

    seq = SequenceSpec.line_bundles(Autoequivalence(1))
    free_shape(seq, 0, 3).bracket()
    # '[-6,-5,-4,-3] -> [-3,-2,-1] -> [0]'
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from dpz.elliptic.algebra import DivisorialBundle
from dpz.elliptic.autoequivalences import Autoequivalence, hom_ext_dims, phi_div
from dpz.elliptic.classes import EllipticClass, chi_e
from dpz.elliptic.determinants import DetClass, RelationSet
from dpz.errors import DomainError, UnsupportedCaseError

logger = logging.getLogger(__name__)

# steps allowed per homological degree before the iteration is declared stuck
MAX_STEPS_PER_DEGREE = 256


# ---------------------------------------------------------------------------
# Sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SequenceSpec:
    """Rule producing the objects ``M_i``.

    Either ``generators`` with a :class:`Autoequivalence` (``M_{qk+s} =
    Ψ^q(generators[s])`` for ``k`` generators), or an explicit list of
    classes starting at index ``start``.
    """

    generators: tuple[EllipticClass, ...]
    psi: Autoequivalence | None = None
    start: int = 0

    def __post_init__(self) -> None:
        if not self.generators:
            raise DomainError("a sequence needs at least one object")
        for c in self.generators:
            if not c.is_normalized():
                raise DomainError(f"sequence object {c} is not normalized")
        slopes = [c.slope for c in self.generators]
        for a, b in zip(slopes, slopes[1:]):
            if not a < b:
                raise DomainError("sequence slopes must be strictly increasing")
        if self.psi is not None:
            first, last = self.generators[0], self.generators[-1]
            if last.slope.is_infinite or not last.slope < self.psi.forward(first).slope:
                raise DomainError("generator slopes must fit in a window of length deg L")

    @classmethod
    def from_bundle(cls, v: DivisorialBundle, psi: Autoequivalence) -> SequenceSpec:
        v.check_window(psi.dL)
        return cls(tuple(c for c, _ in v.components), psi)

    @classmethod
    def line_bundles(cls, psi: Autoequivalence) -> SequenceSpec:
        """``M_i = Ψ^i(O)``."""
        return cls((EllipticClass(1, 0),), psi)

    @classmethod
    def from_classes(cls, classes: Sequence[EllipticClass], start: int = 0) -> SequenceSpec:
        return cls(tuple(classes), None, start)

    @property
    def periodic(self) -> bool:
        return self.psi is not None

    def object(self, i: int) -> EllipticClass:
        if self.psi is None:
            k = i - self.start
            if not 0 <= k < len(self.generators):
                raise DomainError(
                    f"M_{i} is outside the explicit sequence "
                    f"[{self.start}, {self.start + len(self.generators) - 1}]"
                )
            return self.generators[k]
        q, s = divmod(i, len(self.generators))
        return self.psi.power(self.generators[s], q)

    def to_dict(self) -> dict[str, Any]:
        return {
            "generators": [c.to_dict() for c in self.generators],
            "psi": None if self.psi is None else self.psi.to_dict(),
            "start": self.start,
        }


# ---------------------------------------------------------------------------
# Shapes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoincidenceMarker:
    """``P_j`` in consecutive degrees; minimal iff ``det_difference`` vanishes."""

    index: int
    degrees: tuple[int, int]
    det_difference: DetClass

    def det_equal(self, relations: RelationSet | None = None) -> bool:
        return (relations or RelationSet()).is_zero(self.det_difference)

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "degrees": list(self.degrees),
            "det_difference": str(self.det_difference),
        }


@dataclass(frozen=True)
class ResolutionShape:
    """Terms of the free resolution of ``S_target`` in degrees ``0..depth-1``."""

    target: int
    depth: int
    terms: tuple[tuple[tuple[int, int], ...], ...]
    markers: tuple[CoincidenceMarker, ...] = ()

    def degrees(self) -> range:
        return range(len(self.terms))

    def indices(self, k: int) -> list[int]:
        """Indices of degree *k*, repeated by multiplicity, ascending."""
        out: list[int] = []
        for j, mult in sorted(self.terms[k]):
            out.extend([j] * mult)
        return out

    def bracket(self) -> str:
        """``[-6,-5,-4,-3] -> [-3,-2,-1] -> [0]``."""
        parts = []
        for k in reversed(self.degrees()):
            parts.append("[" + ",".join(str(j) for j in self.indices(k)) + "]")
        return " -> ".join(parts)

    def __str__(self) -> str:
        return self.bracket()

    def to_dict(self) -> dict[str, Any]:
        return {
            "target": self.target,
            "depth": self.depth,
            "terms": [[[j, m] for j, m in sorted(term)] for term in self.terms],
            "markers": [m.to_dict() for m in self.markers],
            "bracket": self.bracket(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ResolutionShape:
        return cls(
            target=int(data["target"]),
            depth=int(data["depth"]),
            terms=tuple(tuple((int(j), int(m)) for j, m in term) for term in data["terms"]),
            markers=tuple(
                CoincidenceMarker(
                    int(m["index"]),
                    (int(m["degrees"][0]), int(m["degrees"][1])),
                    DetClass.parse(m["det_difference"]),
                )
                for m in data.get("markers", [])
            ),
        )


def free_shape(seq: SequenceSpec, i: int, depth: int) -> ResolutionShape:
    """Shape of the free resolution of ``S_i`` in homological degrees ``< depth``.

    Raises:
        DomainError: *depth* < 1, or an explicit sequence runs out.
        UnsupportedCaseError: equal slopes where either class is not stable.
    """
    if depth < 1:
        raise DomainError(f"depth must be >= 1, got {depth}")
    terms: list[Counter[int]] = [Counter() for _ in range(depth)]
    terms[0][i] = 1
    markers: list[CoincidenceMarker] = []

    t = seq.object(i)
    s = 0
    j = i - 1
    budget = MAX_STEPS_PER_DEGREE * depth
    while s < depth:
        if budget == 0:
            raise DomainError(f"resolution of S_{i} did not reach degree {depth}")
        budget -= 1
        m = seq.object(j)
        k = chi_e(m, t)
        mu_m, mu_t = m.slope, t.slope
        if mu_m < mu_t:
            _record(terms, 1 + s, j, k)
        elif mu_t < mu_m:
            _record(terms, s, j, -k)
        else:
            if m.gcd != 1 or t.gcd != 1:
                raise UnsupportedCaseError(
                    f"equal slopes of M_{j} = {m} and T = {t} with a non-stable class"
                )
            _record(terms, s, j, 1)
            _record(terms, s + 1, j, 1)
            if s + 1 < depth:
                markers.append(CoincidenceMarker(j, (s, s + 1), m.det - t.det))
        t = phi_div(m, t).normalized()
        s = t.shift
        j -= 1

    shape = ResolutionShape(
        target=i,
        depth=depth,
        terms=tuple(tuple(sorted(c.items())) for c in terms),
        markers=tuple(markers),
    )
    logger.debug("free_shape S_%d depth %d: %s", i, depth, shape.bracket())
    return shape


def _record(terms: list[Counter[int]], degree: int, j: int, mult: int) -> None:
    if mult <= 0:
        raise DomainError(f"nonpositive multiplicity {mult} for P_{j}")
    if degree < len(terms):
        terms[degree][j] += mult


# ---------------------------------------------------------------------------
# Minimality and consistency
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinimalityReport:
    minimal: bool
    culprits: tuple[tuple[int, tuple[int, int]], ...] = field(default_factory=tuple)

    def to_dict(self) -> dict[str, Any]:
        return {
            "minimal": self.minimal,
            "culprits": [{"index": j, "degrees": list(d)} for j, d in self.culprits],
        }


def minimality_report(
    shape: ResolutionShape, relations: RelationSet | None = None,
) -> MinimalityReport:
    """The free resolution is minimal iff every coincidence has equal determinants."""
    culprits = tuple(
        (m.index, m.degrees) for m in shape.markers if not m.det_equal(relations)
    )
    return MinimalityReport(not culprits, culprits)


def alternating_sum(
    shape: ResolutionShape,
    seq: SequenceSpec,
    l: int,  # noqa: E741
    relations: RelationSet | None = None,
) -> int:
    """``Σ_k (−1)^k Σ mult · dim Hom(M_l, M_j)``: equals ``δ_{l,target}`` where complete."""
    m_l = seq.object(l)
    total = 0
    for k in shape.degrees():
        sign = -1 if k % 2 else 1
        for j, mult in shape.terms[k]:
            if j < l:
                continue
            hom, _ = hom_ext_dims(m_l, seq.object(j), relations)
            total += sign * mult * hom
    return total
