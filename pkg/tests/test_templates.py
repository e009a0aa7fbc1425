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

"""Tests for dpz.templates."""

from __future__ import annotations

import pytest
from jinja2 import TemplateNotFound

from dpz.templates import DEFAULT_TEMPLATE_DIR, TemplateEngine, table_template


@pytest.fixture
def dirs(tmp_path):
    default_dir = tmp_path / "defaults"
    user_dir = tmp_path / "user"
    default_dir.mkdir()
    user_dir.mkdir()
    (default_dir / "table.text.j2").write_text("default {{ x }}")
    (default_dir / "table.tsv.j2").write_text("{{ columns|join(sep) }}\n")
    (default_dir / "readme.md").write_text("not a template")
    return user_dir, default_dir


class TestLookup:
    def test_default_dir_is_used(self, dirs):
        _, default_dir = dirs
        engine = TemplateEngine(default_dir=default_dir)
        assert engine.render("table.text.j2", x="E8") == "default E8"

    def test_user_dir_wins(self, dirs):
        user_dir, default_dir = dirs
        (user_dir / "table.text.j2").write_text("user {{ x }}")
        engine = TemplateEngine(user_dir=user_dir, default_dir=default_dir)
        assert engine.render("table.text.j2", x="D5") == "user D5"

    def test_search_path_skips_missing_user_dir(self, dirs):
        _, default_dir = dirs
        engine = TemplateEngine(user_dir=None, default_dir=default_dir)
        assert engine.search_path == (default_dir,)

    def test_missing_template(self, dirs):
        user_dir, default_dir = dirs
        engine = TemplateEngine(user_dir=user_dir, default_dir=default_dir)
        assert not engine.has_template("table.json.j2")
        with pytest.raises(TemplateNotFound):
            engine.render("table.json.j2")

    def test_list_templates_merges_directories(self, dirs):
        user_dir, default_dir = dirs
        (user_dir / "table.csv.j2").write_text("{{ columns|join(',') }}")
        (user_dir / "table.text.j2").write_text("override")
        engine = TemplateEngine(user_dir=user_dir, default_dir=default_dir)
        assert engine.list_templates() == ["table.csv.j2", "table.text.j2", "table.tsv.j2"]
        assert engine.table_formats() == ["csv", "text", "tsv"]


class TestTables:
    def test_table_template_name(self):
        assert table_template("tsv") == "table.tsv.j2"

    def test_render_table(self, dirs):
        _, default_dir = dirs
        engine = TemplateEngine(default_dir=default_dir)
        assert engine.render_table("tsv", columns=["d", "roots"], sep="\t") == "d\troots\n"

    def test_unknown_table_format(self, dirs):
        _, default_dir = dirs
        engine = TemplateEngine(default_dir=default_dir)
        with pytest.raises(ValueError, match="Unknown table format 'xml'"):
            engine.render_table("xml")

    def test_block_tags_leave_no_blank_lines(self, tmp_path):
        (tmp_path / "rows.j2").write_text("{% for row in rows %}\n{{ row }}\n{% endfor %}\n")
        engine = TemplateEngine(default_dir=tmp_path)
        assert engine.render("rows.j2", rows=["A8", "A5A2"]) == "A8\nA5A2\n"


class TestShippedTemplates:
    def test_default_dir(self):
        engine = TemplateEngine()
        assert engine.default_dir == DEFAULT_TEMPLATE_DIR
        assert engine.table_formats() == ["text", "tsv"]

    def test_tsv(self):
        text = TemplateEngine().render_table(
            "tsv", columns=["d", "roots"], cells=[["1", "240"], ["2", "126"]], sep="\t",
        )
        assert text == "d\troots\n1\t240\n2\t126\n"

    def test_text_with_and_without_title(self):
        engine = TemplateEngine()
        assert engine.render_table("text", title="", lines=["a", "b"]) == "a\nb\n"
        assert engine.render_table("text", title="roots", lines=["a"]) == "roots\na\n"


class TestInstallDefaults:
    def test_copies_only_templates(self, dirs, tmp_path):
        _, default_dir = dirs
        target = tmp_path / "fresh"
        engine = TemplateEngine(user_dir=target, default_dir=default_dir)

        installed = engine.install_defaults()

        assert [p.name for p in installed] == ["table.text.j2", "table.tsv.j2"]
        assert (target / "table.text.j2").read_text() == "default {{ x }}"
        assert not (target / "readme.md").exists()

    def test_keeps_user_edits(self, dirs):
        user_dir, default_dir = dirs
        (user_dir / "table.text.j2").write_text("mine")
        engine = TemplateEngine(user_dir=user_dir, default_dir=default_dir)

        installed = engine.install_defaults()

        assert [p.name for p in installed] == ["table.tsv.j2"]
        assert (user_dir / "table.text.j2").read_text() == "mine"
        assert engine.install_defaults() == []

    def test_without_user_dir(self):
        assert TemplateEngine().install_defaults() == []
