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

"""Tests for dpz.reports."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from dpz.classify import alcove_candidates
from dpz.config import DpzConfig
from dpz.elliptic import EllipticClass
from dpz.reports import (
    FORMATS,
    Report,
    format_cell,
    get_kind,
    parse_report,
    register_kind,
    render_report,
    render_reports,
)
from dpz.templates import TemplateEngine

ROWS = ({"d": "1", "count": 240, "type": "E8"}, {"d": "2", "count": 126, "type": "E7"})


def _table() -> Report:
    return Report("table", ("d", "count", "type"), ROWS, "root counts")


class TestFormatCell:
    def test_values(self):
        assert format_cell(None) == ""
        assert format_cell(True) == "yes"
        assert format_cell(False) == "no"
        assert format_cell(Fraction(-3, 8)) == "-3/8"
        assert format_cell((0, 0, 1, Fraction(1, 2))) == "0,0,1,1/2"

    def test_whitespace_collapsed(self):
        assert format_cell("a\tb\n c") == "a b c"


class TestRender:
    def test_text_is_aligned(self):
        text = render_report(_table(), "text")
        assert text.splitlines() == [
            "root counts",
            "d  count  type",
            "-  -----  ----",
            "1  240    E8",
            "2  126    E7",
        ]

    def test_tsv_has_header_row(self):
        text = render_report(_table(), "tsv")
        assert text == "d\tcount\ttype\n1\t240\tE8\n2\t126\tE7\n"

    def test_json_is_sorted_and_stable(self):
        first = render_report(_table(), "json")
        assert first == render_report(_table(), "json")
        data = json.loads(first)
        assert data["kind"] == "table"
        assert data["rows"][0] == {"count": 240, "d": "1", "type": "E8"}
        assert list(data) == sorted(data)

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="Unknown report format 'xml'"):
            render_report(_table(), "xml")

    def test_formats(self):
        assert set(FORMATS) == {"text", "json", "tsv"}

    def test_user_template_overrides(self, tmp_path):
        (tmp_path / "table.tsv.j2").write_text("{{ cells|length }} rows\n")
        engine = TemplateEngine(user_dir=tmp_path)
        assert render_report(_table(), "tsv", engine) == "2 rows\n"

    def test_several_reports(self):
        text = render_reports([_table(), _table()], "tsv")
        assert text.count("d\tcount\ttype") == 2
        data = json.loads(render_reports([_table(), _table()], "json"))
        assert len(data["reports"]) == 2


class TestParse:
    def test_table_rows(self):
        kind, rows = parse_report(render_report(_table(), "json"))
        assert kind == "table"
        assert rows[1]["type"] == "E7"

    def test_candidates_round_trip(self):
        cands = alcove_candidates(Fraction(-1, 3))
        report = Report("candidate", ("norm",), tuple({"norm": c.norm} for c in cands),
                        items=tuple(cands))
        kind, items = parse_report(render_report(report, "json"))
        assert kind == "candidate"
        assert items == list(cands)

    def test_config_round_trip(self):
        config = DpzConfig(degree="2", relations="2q")
        report = Report("config", ("key",), (), items=(config,))
        assert parse_report(render_report(report, "json")) == ("config", [config])

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="Unknown report kind 'nothing'"):
            parse_report('{"kind": "nothing", "items": []}')

    def test_not_json(self):
        with pytest.raises(ValueError, match="not a JSON report"):
            parse_report("E8")

    def test_register_kind(self):
        register_kind("curve_class_test", EllipticClass.from_dict)
        assert get_kind("curve_class_test") is EllipticClass.from_dict
        report = Report("curve_class_test", (), (), items=(EllipticClass(2, 1),))
        assert parse_report(render_report(report, "json"))[1] == [EllipticClass(2, 1)]
