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

"""Jinja2 template engine for report files.

Loads templates from a user-configurable directory with fallback to the
package-shipped defaults (``table.text.j2`` and ``table.tsv.j2``).
Supports full Jinja2 syntax (conditionals, loops, filters).

Usage::

    from dpz.templates import TemplateEngine

    engine = TemplateEngine(user_dir=Path("~/.dpz/templates"))
    text = engine.render_table("tsv", columns=["d", "roots"], cells=[["1", "240"]], sep="\t")
"""

from dpz.templates.engine import DEFAULT_TEMPLATE_DIR, TemplateEngine, table_template

__all__ = ["DEFAULT_TEMPLATE_DIR", "TemplateEngine", "table_template"]
