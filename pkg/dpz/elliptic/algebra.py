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

"""The graded algebras ``B_{V,Ψ}`` attached to a divisorial bundle.

For a bundle ``V`` on the curve whose summands have slopes in a window of
length ``deg L``, ``B_{V,Ψ}`` has ``B_n = Hom(V, Ψ^n V)``.  This module
computes its Hilbert series (and those of its centre and of the quotient
by a regular central element of degree one), decides when the simple
modules admit the free resolution described in :mod:`dpz.resolution`, and
tests Koszulness.

Usage::

    from dpz.elliptic import Autoequivalence, DivisorialBundle, EllipticClass, hilbert_series

    v = DivisorialBundle.single(EllipticClass(2, 1))
    hilbert_series(v, Autoequivalence.psi(1), 4)     # [1, 4, 8, 12, 16]
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any

from sympy import Poly, Symbol

from dpz.elliptic.autoequivalences import Autoequivalence
from dpz.elliptic.classes import EllipticClass, chi_e
from dpz.elliptic.determinants import RelationSet
from dpz.errors import DomainError

logger = logging.getLogger(__name__)

ORACLE_TERMS = 200
GUESS_LABEL = "unverified guess"


# ---------------------------------------------------------------------------
# Divisorial bundles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivisorialBundle:
    """Direct sum of indecomposable divisorial sheaves with multiplicities.

    Each component is ``(class, copies)``; the component class
    ``(r, d)`` has ``gcd(r, d)`` stable constituents.  ``alpha`` is the
    start of the slope window (defaults to the smallest slope).
    """

    components: tuple[tuple[EllipticClass, int], ...]
    alpha: Fraction | None = None

    def __post_init__(self) -> None:
        comps = tuple((c, int(k)) for c, k in self.components)
        if not comps:
            raise DomainError("a divisorial bundle needs at least one component")
        seen = set()
        for cls, copies in comps:
            if cls.rank <= 0:
                raise DomainError(f"component {cls} is not a vector bundle class")
            if copies < 1:
                raise DomainError(f"component multiplicity must be >= 1, got {copies}")
            key = (cls.rank, cls.deg, cls.det)
            if key in seen:
                raise DomainError(f"component {cls} is listed twice")
            seen.add(key)
        comps = tuple(sorted(comps, key=lambda item: (item[0].slope.value, item[0].rank)))
        object.__setattr__(self, "components", comps)
        if self.alpha is not None:
            object.__setattr__(self, "alpha", Fraction(self.alpha))

    @classmethod
    def single(cls, component: EllipticClass, copies: int = 1) -> DivisorialBundle:
        return cls(((component, copies),))

    @classmethod
    def of(cls, classes: Iterable[EllipticClass]) -> DivisorialBundle:
        return cls(tuple((c, 1) for c in classes))

    @property
    def rank(self) -> int:
        return sum(c.rank * k for c, k in self.components)

    @property
    def window_start(self) -> Fraction:
        if self.alpha is not None:
            return self.alpha
        return min(c.slope.value for c, _ in self.components)

    def check_window(self, dL: int) -> None:  # noqa: N803
        """Raise :class:`DomainError` unless every slope lies in ``[α, α + dL)``."""
        start = self.window_start
        for c, _ in self.components:
            mu = c.slope.value
            if not start <= mu < start + dL:
                raise DomainError(
                    f"slope {mu} of {c} lies outside the window [{start}, {start + dL})"
                )

    def to_dict(self) -> dict[str, Any]:
        return {
            "components": [{"class": c.to_dict(), "copies": k} for c, k in self.components],
            "alpha": None if self.alpha is None else str(self.alpha),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> DivisorialBundle:
        alpha = data.get("alpha")
        return cls(
            tuple((EllipticClass.from_dict(c["class"]), int(c["copies"]))
                  for c in data["components"]),
            None if alpha is None else Fraction(alpha),
        )


def _component_hom(a: EllipticClass, b: EllipticClass, relations: RelationSet) -> int:
    """``dim Hom`` between indecomposable divisorial sheaves with slopes in one window."""
    if a == b:
        return a.gcd
    sa, sb = a.slope, b.slope
    if sa < sb:
        return chi_e(a, b)
    if sa > sb:
        return 0
    ma, mb = a.gcd, b.gcd
    # same stable constituent iff det(a)/ma == det(b)/mb
    if relations.equal(a.det * mb, b.det * ma):
        return min(ma, mb)
    return 0


def end_dimension(v: DivisorialBundle, relations: RelationSet | None = None) -> int:
    """``dim End(V)``."""
    relations = relations or RelationSet()
    return sum(
        ka * kb * _component_hom(a, b, relations)
        for a, ka in v.components
        for b, kb in v.components
    )


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------

def hilbert_series(
    v: DivisorialBundle,
    psi: Autoequivalence,
    n_max: int,
    relations: RelationSet | None = None,
) -> list[int]:
    """``dim B_n`` for ``0 <= n <= n_max``.

    Raises:
        DomainError: the slope window of *v* is violated.
    """
    v.check_window(psi.dL)
    series = [end_dimension(v, relations)]
    for n in range(1, n_max + 1):
        total = 0
        for a, ka in v.components:
            for b, kb in v.components:
                shifted = psi.power(b, n)
                if not a.slope < shifted.slope:
                    raise DomainError(f"Psi^{n} does not raise {b} above {a}")
                total += ka * kb * chi_e(a, shifted)
        series.append(total)
    return series


def center_series(psi: Autoequivalence, n_max: int) -> list[int]:
    """Hilbert series of ``Z(B)``: the section ring of ``L``, ``1, dL, 2dL, ...``.

    ``Z(B)_n = Γ(E, L^n)``, so only ``Ψ`` enters.
    """
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    return [1] + [n * psi.dL for n in range(1, n_max + 1)]


def quotient_series(
    v: DivisorialBundle,
    psi: Autoequivalence,
    n_max: int,
    relations: RelationSet | None = None,
) -> list[int]:
    """Hilbert series of ``B / (w)`` for a regular central ``w`` of degree one.

    Equals ``dim B_0 + (N − dim B_0)t + N t² + N t³ + ...`` with
    ``N = dL · rank(V)²``.
    """
    b = hilbert_series(v, psi, n_max, relations)
    return [b[0]] + [b[n] - b[n - 1] for n in range(1, n_max + 1)]


@dataclass(frozen=True)
class SeriesGuess:
    """``numerator(t) / (1 − t)^order`` fitted to a finite series prefix."""

    numerator: tuple[int, ...]
    order: int
    label: str = GUESS_LABEL

    def expression(self) -> str:
        t = Symbol("t")
        num = Poly(list(reversed(self.numerator)), t).as_expr() if self.numerator else 0
        den = (1 - t) ** self.order
        return str(num / den)

    def __str__(self) -> str:
        return f"{self.expression()} ({self.label})"

    def to_dict(self) -> dict[str, Any]:
        return {"numerator": list(self.numerator), "order": self.order, "label": self.label}


def rational_guess(
    series: Sequence[int], max_order: int = 3, confirm: int = 3,
) -> SeriesGuess | None:
    """Smallest ``k <= max_order`` with ``(1 − t)^k · series`` a polynomial.

    The polynomial must be followed by at least *confirm* vanishing
    coefficients inside the known prefix.  Returns ``None`` when no such
    ``k`` exists.
    """
    n = len(series)
    if n == 0:
        return None
    t = Symbol("t")
    base = Poly(list(reversed([int(c) for c in series])), t)
    for k in range(max_order + 1):
        product = base * Poly((1 - t) ** k, t)
        coeffs = [int(product.coeff_monomial(t**i)) for i in range(n)]
        last = max((i for i, c in enumerate(coeffs) if c), default=-1)
        if n - 1 - last >= confirm:
            return SeriesGuess(tuple(coeffs[: last + 1]), k)
    return None


# ---------------------------------------------------------------------------
# Resolutions and Koszulness
# ---------------------------------------------------------------------------

def positivity_oracle(alpha: Fraction, tau: Fraction, terms: int = ORACLE_TERMS) -> bool:
    """All of the first *terms* coefficients of ``(1 + αt)/(1 − τt + t²)`` are positive."""
    alpha, tau = Fraction(alpha), Fraction(tau)
    prev, cur = Fraction(1), tau + alpha
    if prev <= 0:
        return False
    for _ in range(1, terms):
        if cur <= 0:
            return False
        prev, cur = cur, tau * cur - prev
    return True


def positivity_closed_form(alpha: Fraction, tau: Fraction) -> bool:
    """Exact decision of ``α >= −(τ + √(τ² − 4))/2`` with ``τ >= 2``."""
    alpha, tau = Fraction(alpha), Fraction(tau)
    if tau < 2:
        return False
    s = 2 * alpha + tau
    if s >= 0:
        return True
    return tau * tau - 4 >= s * s


def resolution_parameters(
    v: tuple[int, int, int], psi: Autoequivalence, m: EllipticClass,
) -> tuple[Fraction | None, Fraction]:
    """``(α, τ)`` for ``V = (r, d, m)``; ``α`` is ``None`` for torsion *m*."""
    r, d, mult = (int(x) for x in v)
    if r <= 0:
        raise DomainError(f"V must have positive rank, got {r}")
    if mult < 1 or gcd(r, d) % mult:
        raise DomainError(f"m = {mult} must divide gcd({r}, {d})")
    tau = Fraction(psi.dL * r * r, mult) - 2
    slope = m.normalized().slope
    if slope.is_infinite:
        return None, tau
    alpha = (r * r * slope.value + mult - d * r) / mult
    return alpha, tau


def resolution_exists(
    v: tuple[int, int, int], psi: Autoequivalence, m: EllipticClass,
) -> bool:
    """Whether the simple modules of ``B_{V,Ψ}`` at *m* have the free resolution.

    Decided exactly from the positivity of ``(1 + αt)/(1 − τt + t²)``;
    for torsion *m* the condition is ``dL·r² >= 4m``.
    """
    alpha, tau = resolution_parameters(v, psi, m)
    if alpha is None:
        return tau >= 2
    return positivity_closed_form(alpha, tau)


def koszul_test(v: tuple[int, int], psi: Autoequivalence) -> bool:
    """``B_{V,Ψ}`` for divisorial ``V = (r, d)`` is Koszul unless ``r | d`` and ``dL·r <= 3``."""
    r, d = (int(x) for x in v)
    if r < 1:
        raise DomainError(f"V must have positive rank, got {r}")
    return not (d % r == 0 and psi.dL * r <= 3)
