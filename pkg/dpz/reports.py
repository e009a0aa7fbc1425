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

"""Rendering of command results as text, TSV or JSON.

A :class:`Report` is a titled table of rows plus, optionally, the module
objects the rows were made from.  Text and TSV go through the Jinja2
templates of :mod:`dpz.templates`; JSON is one document with sorted keys
that :func:`parse_report` turns back into the module types.

Usage::

    from dpz.reports import Report, render_report

    report = Report("roots", ("d", "count"), ({"d": "1", "count": 240},))
    print(render_report(report, "tsv"), end="")
"""

from __future__ import annotations

import json
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from dpz.classify.candidates import CandidateClass
from dpz.classify.moduli import ModuliDescriptor
from dpz.classify.polarization import PolarizationVerdict, QuadraticForm
from dpz.config import DpzConfig
from dpz.elliptic.algebra import DivisorialBundle
from dpz.elliptic.classes import EllipticClass
from dpz.lattice.alcove import AlcovePoint
from dpz.lattice.vectors import LatticeVector, RationalVector
from dpz.resolution.shapes import ResolutionShape
from dpz.surface.classes import SurfaceClass
from dpz.templates import TemplateEngine

logger = logging.getLogger(__name__)

TEXT = "text"
TSV = "tsv"
JSON = "json"
FORMATS = (TEXT, JSON, TSV)

TABLE = "table"
COLUMN_GAP = "  "

# Registry: document kind -> parser of one item
_KINDS: dict[str, Callable[[dict[str, Any]], Any]] = {
    "alcove": AlcovePoint.from_dict,
    "bundle": DivisorialBundle.from_dict,
    "candidate": CandidateClass.from_dict,
    "config": DpzConfig.from_dict,
    "elliptic_class": EllipticClass.from_dict,
    "form": QuadraticForm.from_dict,
    "moduli": ModuliDescriptor.from_dict,
    "rational_vector": RationalVector.from_dict,
    "shape": ResolutionShape.from_dict,
    "surface_class": SurfaceClass.from_dict,
    "vector": LatticeVector.from_dict,
    "verdict": PolarizationVerdict.from_dict,
}


def register_kind(kind: str, parser: Callable[[dict[str, Any]], Any]) -> None:
    """Register the item parser for a document kind."""
    _KINDS[kind] = parser


def get_kind(kind: str) -> Callable[[dict[str, Any]], Any]:
    """Return the item parser for *kind*.

    Raises :class:`ValueError` if the kind is not registered.
    """
    parser = _KINDS.get(kind)
    if parser is None:
        raise ValueError(f"Unknown report kind {kind!r}. Available: {sorted(_KINDS)}")
    return parser


@dataclass(frozen=True)
class Report:
    """A titled table; *items* are the objects behind the rows, if any.

    ``kind`` names the type of *items* (see :func:`get_kind`), or
    ``"table"`` for reports that carry rows only.
    """

    kind: str
    columns: tuple[str, ...]
    rows: tuple[dict[str, Any], ...]
    title: str = ""
    items: tuple[Any, ...] = ()

    def document(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "title": self.title,
            "columns": list(self.columns),
            "rows": [{c: _json_value(row.get(c)) for c in self.columns} for row in self.rows],
            "items": [item.to_dict() for item in self.items],
        }


# ---------------------------------------------------------------------------
# Cells
# ---------------------------------------------------------------------------

def _json_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, list)):
        return [_json_value(v) for v in value]
    return value


def format_cell(value: Any) -> str:
    """Single-line text for a cell: sequences join with commas, ``None`` is empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (tuple, list)):
        return ",".join(format_cell(v) for v in value)
    return " ".join(str(value).split())


def _cells(report: Report) -> list[list[str]]:
    return [[format_cell(row.get(c)) for c in report.columns] for row in report.rows]


def _aligned(columns: Sequence[str], cells: list[list[str]]) -> list[str]:
    widths = [len(c) for c in columns]
    for row in cells:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = [COLUMN_GAP.join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append(COLUMN_GAP.join("-" * w for w in widths))
    for row in cells:
        lines.append(COLUMN_GAP.join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return lines


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def render_report(report: Report, fmt: str = TEXT, engine: TemplateEngine | None = None) -> str:
    """Render *report* in *fmt*.

    Raises :class:`ValueError` for an unknown format.
    """
    if fmt not in FORMATS:
        raise ValueError(f"Unknown report format {fmt!r}. Available: {list(FORMATS)}")
    if fmt == JSON:
        return json.dumps(report.document(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    engine = engine or TemplateEngine()
    cells = _cells(report)
    if fmt == TSV:
        return engine.render_table(
            TSV, columns=list(report.columns), cells=cells, sep="\t",
        )
    return engine.render_table(
        TEXT, title=report.title, lines=_aligned(report.columns, cells),
    )


def render_reports(
    reports: Sequence[Report], fmt: str = TEXT, engine: TemplateEngine | None = None,
) -> str:
    """Render several reports; JSON output is one document holding a list."""
    if fmt == JSON:
        docs = [r.document() for r in reports]
        return json.dumps({"reports": docs}, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    engine = engine or TemplateEngine()
    return "\n".join(render_report(r, fmt, engine) for r in reports)


def parse_report(text: str) -> tuple[str, list[Any]]:
    """Parse a JSON report back into ``(kind, items)``.

    Items of a ``"table"`` report are its rows as plain dicts.

    Raises:
        ValueError: the text is not a report document or its kind is unknown.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not a JSON report: {exc}") from None
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError("not a JSON report: missing 'kind'")
    kind = data["kind"]
    if kind == TABLE:
        return kind, list(data.get("rows", []))
    parser = get_kind(kind)
    items = [parser(item) for item in data.get("items", [])]
    logger.debug("Parsed %d %s items", len(items), kind)
    return kind, items
