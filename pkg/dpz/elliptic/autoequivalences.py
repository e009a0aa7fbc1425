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

"""Autoequivalences of the derived category of the curve, on classes.

Four kinds act on :class:`~dpz.elliptic.classes.EllipticClass` values:

``Psi``
    ``N ↦ L ⊗ τ*N``, adding ``deg L`` to the slope:
    ``(r, d, det) ↦ (r, d + dL·r, det + r·λ − d·κ)``.
``PsiInverse``
    The inverse of ``Psi``.
``PhiDiv``
    The twist by a divisorial class ``M`` with ``m = gcd(rank, deg)``
    stable constituents: ``N ↦ N − (χ(M, N)/m)·M`` (determinant included).
``PhiDivInverse``
    ``N ↦ N + (χ(M, N)/m)·M``.

Results are normalized (negated with one more shift when the rank is
negative, or zero with negative degree).  Kinds are looked up by name in a
registry; new kinds can be added at runtime with
:func:`register_autoequivalence`.

Usage::

    from dpz.elliptic import Autoequivalence, EllipticClass, apply_autoequivalence

    psi = Autoequivalence.psi(1)
    apply_autoequivalence("Psi", EllipticClass(1, 0), psi=psi)      # (1,1;L)
    apply_autoequivalence("PhiDiv", EllipticClass(0, 1), m=EllipticClass(1, 0))
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

from dpz.elliptic.classes import EllipticClass, chi_e
from dpz.elliptic.determinants import KAPPA, LAMBDA, DetClass, RelationSet
from dpz.errors import DomainError, UnsupportedCaseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Autoequivalence:
    """``Ψ = L ⊗ τ*(−)`` for an ample line bundle ``L`` of degree ``dL``."""

    dL: int  # noqa: N815
    lam: str = LAMBDA
    kappa: str = KAPPA

    def __post_init__(self) -> None:
        if isinstance(self.dL, bool) or not isinstance(self.dL, int) or self.dL < 1:
            raise DomainError(f"deg L must be a positive integer, got {self.dL!r}")

    @classmethod
    def psi(cls, dL: int) -> Autoequivalence:  # noqa: N803
        return cls(dL)

    @property
    def lambda_det(self) -> DetClass:
        return DetClass.of(**{self.lam: 1})

    @property
    def kappa_det(self) -> DetClass:
        return DetClass.of(**{self.kappa: 1})

    def forward(self, n: EllipticClass) -> EllipticClass:
        det = n.det + self.lambda_det * n.rank - self.kappa_det * n.deg
        return EllipticClass(n.rank, n.deg + self.dL * n.rank, det, n.shift)

    def backward(self, n: EllipticClass) -> EllipticClass:
        deg = n.deg - self.dL * n.rank
        det = n.det - self.lambda_det * n.rank + self.kappa_det * deg
        return EllipticClass(n.rank, deg, det, n.shift)

    def power(self, n: EllipticClass, k: int) -> EllipticClass:
        """``Ψ^k(N)`` for any integer ``k``."""
        step = self.forward if k >= 0 else self.backward
        for _ in range(abs(k)):
            n = step(n)
        return n

    def to_dict(self) -> dict[str, object]:
        return {"dL": self.dL, "lam": self.lam, "kappa": self.kappa}


class AutoequivalenceKind(str, Enum):
    PSI = "Psi"
    PSI_INVERSE = "PsiInverse"
    PHI_DIV = "PhiDiv"
    PHI_DIV_INVERSE = "PhiDivInverse"


@dataclass(frozen=True)
class AutoequivalenceDescriptor:
    kind: str
    description: str
    needs_divisorial: bool


Action = Callable[[EllipticClass, Autoequivalence | None, EllipticClass | None], EllipticClass]

# Registry: kind name -> (descriptor, action on raw classes)
_REGISTRY: dict[str, tuple[AutoequivalenceDescriptor, Action]] = {}


def register_autoequivalence(descriptor: AutoequivalenceDescriptor, action: Action) -> None:
    """Register an action on classes under a kind name."""
    _REGISTRY[descriptor.kind] = (descriptor, action)


def list_autoequivalence_kinds() -> list[AutoequivalenceDescriptor]:
    _ensure_builtins()
    return [desc for desc, _ in _REGISTRY.values()]


def get_autoequivalence_kind(name: str | AutoequivalenceKind) -> tuple[
    AutoequivalenceDescriptor, Action,
]:
    """Return the (descriptor, action) pair for a kind.

    Raises :class:`ValueError` if the kind is not registered.
    """
    _ensure_builtins()
    key = name.value if isinstance(name, AutoequivalenceKind) else name
    entry = _REGISTRY.get(key)
    if entry is None:
        raise ValueError(
            f"Unknown autoequivalence kind {key!r}. Available: {sorted(_REGISTRY.keys())}"
        )
    return entry


# ---------------------------------------------------------------------------
# Actions
# ---------------------------------------------------------------------------

def _require_psi(psi: Autoequivalence | None) -> Autoequivalence:
    if psi is None:
        raise DomainError("Psi needs an Autoequivalence (deg L)")
    return psi


def _require_divisorial(m: EllipticClass | None) -> EllipticClass:
    if m is None:
        raise DomainError("PhiDiv needs a divisorial class M")
    if m.is_zero():
        raise DomainError("PhiDiv is undefined for the zero class")
    return m


def phi_div(m: EllipticClass, n: EllipticClass, inverse: bool = False) -> EllipticClass:
    """Raw (unnormalized) ``Φ_M(N)`` or its inverse."""
    k = chi_e(m, n)
    mm = m.gcd
    if k % mm:
        raise DomainError(f"χ(M, N) = {k} is not divisible by m = {mm}")
    c = k // mm
    return n + m * c if inverse else n - m * c


def _register_builtins() -> None:
    register_autoequivalence(
        AutoequivalenceDescriptor(
            kind=AutoequivalenceKind.PSI.value,
            description="tensor with L after translation by q",
            needs_divisorial=False,
        ),
        lambda n, psi, m: _require_psi(psi).forward(n),
    )
    register_autoequivalence(
        AutoequivalenceDescriptor(
            kind=AutoequivalenceKind.PSI_INVERSE.value,
            description="inverse of Psi",
            needs_divisorial=False,
        ),
        lambda n, psi, m: _require_psi(psi).backward(n),
    )
    register_autoequivalence(
        AutoequivalenceDescriptor(
            kind=AutoequivalenceKind.PHI_DIV.value,
            description="twist by a divisorial object M",
            needs_divisorial=True,
        ),
        lambda n, psi, m: phi_div(_require_divisorial(m), n),
    )
    register_autoequivalence(
        AutoequivalenceDescriptor(
            kind=AutoequivalenceKind.PHI_DIV_INVERSE.value,
            description="inverse twist by a divisorial object M",
            needs_divisorial=True,
        ),
        lambda n, psi, m: phi_div(_require_divisorial(m), n, inverse=True),
    )


def _ensure_builtins() -> None:
    if _REGISTRY:
        return
    _register_builtins()


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def apply_autoequivalence(
    kind: str | AutoequivalenceKind,
    n: EllipticClass,
    *,
    psi: Autoequivalence | None = None,
    m: EllipticClass | None = None,
) -> EllipticClass:
    """Apply an autoequivalence to *n* and normalize the result.

    Raises:
        DomainError: *n* is the zero class, or required data is missing.
        ValueError: *kind* is not registered.
    """
    if n.is_zero():
        raise DomainError("autoequivalences are applied to nonzero classes")
    _, action = get_autoequivalence_kind(kind)
    result = action(n, psi, m).normalized()
    logger.debug("%s(%s) = %s", kind, n, result)
    return result


def hom_ext_dims(
    m: EllipticClass, n: EllipticClass, relations: RelationSet | None = None,
) -> tuple[int, int]:
    """Dimensions of ``Hom(M, N)`` and ``Ext¹(M, N)`` for semistable classes.

    Raises:
        UnsupportedCaseError: equal slopes where either class has gcd > 1.
    """
    relations = relations or RelationSet()
    k = chi_e(m, n)
    sm, sn = m.slope, n.slope
    if sm < sn:
        return k, 0
    if sm > sn:
        return 0, -k
    if m.gcd != 1 or n.gcd != 1:
        raise UnsupportedCaseError(
            f"Hom between equal-slope classes {m} and {n} needs sheaf data when gcd > 1"
        )
    if relations.equal(m.det, n.det):
        return 1, 1
    return 0, 0


def line_sequence(dL: int, i: int) -> EllipticClass:  # noqa: N803
    """``M_i = Ψ^i(O)``: rank 1, degree ``i·dL``, det ``i·λ − dL·i(i−1)/2·κ``."""
    if dL < 1:
        raise DomainError(f"deg L must be a positive integer, got {dL!r}")
    det = DetClass.of(**{LAMBDA: i, KAPPA: -dL * i * (i - 1) // 2})
    return EllipticClass(1, i * dL, det)
