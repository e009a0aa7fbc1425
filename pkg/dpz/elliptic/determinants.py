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

"""Determinant classes on the elliptic curve and relations between them.

A :class:`DetClass` is a finitely supported integer combination of named
symbols.  Two symbols are built in: ``L`` (the class ``λ`` of the ample
line bundle) and ``q`` (the class ``κ`` of the translation point).  Any
other identifier may be used as a user symbol.

Equality of determinants is decided modulo a :class:`RelationSet`: a
list of classes declared to be zero, e.g. ``2q`` for a translation of
order two.  Membership in the span of the relations is decided with the
Smith form.

Usage::

    from dpz.elliptic import DetClass, RelationSet

    a = DetClass.parse("-3L-6q")
    b = DetClass.parse("-3L-4q")
    RelationSet.parse("2q").equal(a, b)     # True
    RelationSet().equal(a, b)               # False
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Any

from dpz.errors import DomainError
from dpz.lattice.smith import solve_integer

logger = logging.getLogger(__name__)

LAMBDA = "L"
KAPPA = "q"
BUILTIN_SYMBOLS = (LAMBDA, KAPPA)

_SYMBOL_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z_][A-Za-z0-9_]*)")


def _symbol_key(name: str) -> tuple[int, str]:
    if name in BUILTIN_SYMBOLS:
        return (BUILTIN_SYMBOLS.index(name), name)
    return (len(BUILTIN_SYMBOLS), name)


@dataclass(frozen=True)
class DetClass:
    """Integer combination of determinant symbols.

    ``terms`` is kept canonical: nonzero coefficients only, built-in
    symbols first, then user symbols alphabetically.
    """

    terms: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[str, int] = {}
        for name, coeff in self.terms:
            if not _SYMBOL_RE.fullmatch(name):
                raise DomainError(f"invalid determinant symbol {name!r}")
            merged[name] = merged.get(name, 0) + int(coeff)
        canonical = tuple(
            (name, merged[name]) for name in sorted(merged, key=_symbol_key) if merged[name]
        )
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def zero(cls) -> DetClass:
        return cls()

    @classmethod
    def of(cls, **coeffs: int) -> DetClass:
        """``DetClass.of(L=1, q=-2)``."""
        return cls(tuple(coeffs.items()))

    @classmethod
    def from_mapping(cls, coeffs: Mapping[str, int]) -> DetClass:
        return cls(tuple(coeffs.items()))

    @classmethod
    def parse(cls, text: str) -> DetClass:
        """Parse ``"2q"``, ``"L+q"``, ``"-3L-6q"`` or ``"0"``."""
        body = text.replace(" ", "")
        if body in ("", "0"):
            return cls()
        pos = 0
        terms: list[tuple[str, int]] = []
        while pos < len(body):
            match = _TERM_RE.match(body, pos)
            if match is None or match.end() == pos:
                raise DomainError(f"cannot parse determinant {text!r}")
            sign, digits, name = match.groups()
            if terms and not sign:
                raise DomainError(f"cannot parse determinant {text!r}")
            coeff = int(digits) if digits else 1
            terms.append((name, -coeff if sign == "-" else coeff))
            pos = match.end()
        return cls(tuple(terms))

    # -- access ------------------------------------------------------------

    def coeff(self, name: str) -> int:
        for key, value in self.terms:
            if key == name:
                return value
        return 0

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: DetClass) -> DetClass:
        if not isinstance(other, DetClass):
            return NotImplemented
        return DetClass(self.terms + other.terms)

    def __neg__(self) -> DetClass:
        return DetClass(tuple((name, -c) for name, c in self.terms))

    def __sub__(self, other: DetClass) -> DetClass:
        if not isinstance(other, DetClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> DetClass:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return DetClass(tuple((name, c * k) for name, c in self.terms))

    __rmul__ = __mul__

    # -- serialisation -----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for name, c in self.terms:
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign}{mag}{name}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def to_dict(self) -> dict[str, int]:
        return dict(self.terms)

    @classmethod
    def from_dict(cls, data: Mapping[str, int]) -> DetClass:
        return cls.from_mapping({k: int(v) for k, v in data.items()})


@dataclass(frozen=True)
class Relation:
    """``multiple · det = 0``."""

    det: DetClass
    multiple: int = 1

    def __post_init__(self) -> None:
        if self.multiple < 1:
            raise DomainError(f"relation multiple must be >= 1, got {self.multiple}")

    @property
    def generator(self) -> DetClass:
        return self.det * self.multiple

    def __str__(self) -> str:
        return str(self.generator)


@dataclass(frozen=True)
class RelationSet:
    """Classes declared to be zero; equality of determinants is taken modulo their span."""

    relations: tuple[Relation, ...] = field(default_factory=tuple)

    @classmethod
    def parse(cls, text: str) -> RelationSet:
        """Comma-separated generators, e.g. ``"2q, L-q"``; empty text gives no relations."""
        relations = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            det = DetClass.parse(part)
            if det.is_zero():
                continue
            relations.append(Relation(det))
        return cls(tuple(relations))

    @classmethod
    def of(cls, dets: Iterable[DetClass]) -> RelationSet:
        return cls(tuple(Relation(d) for d in dets if not d.is_zero()))

    def __bool__(self) -> bool:
        return bool(self.relations)

    def __str__(self) -> str:
        return ", ".join(str(r) for r in self.relations)

    def is_zero(self, det: DetClass) -> bool:
        """True when *det* lies in the integer span of the relations."""
        if det.is_zero():
            return True
        if not self.relations:
            return False
        generators = [r.generator for r in self.relations]
        symbols = sorted(
            {name for g in generators for name in g.symbols} | set(det.symbols), key=_symbol_key
        )
        if not set(det.symbols) <= {name for g in generators for name in g.symbols}:
            return False
        matrix = [[g.coeff(name) for g in generators] for name in symbols]
        rhs = [det.coeff(name) for name in symbols]
        return solve_integer(matrix, rhs) is not None

    def equal(self, a: DetClass, b: DetClass) -> bool:
        return self.is_zero(a - b)

    def to_dict(self) -> dict[str, Any]:
        return {"relations": [r.generator.to_dict() for r in self.relations]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> RelationSet:
        return cls.of(DetClass.from_dict(d) for d in data.get("relations", []))
