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

"""Report templates with a user override directory.

Templates are looked up along a search path: the user directory (from
``template_dir`` in the configuration) first, then the templates shipped
in ``dpz/templates/defaults``.  Table templates are named after the
output format they produce, ``table.<fmt>.j2``, so a user can restyle
text or TSV output by dropping a file of the same name into their
directory.

Usage::

    from dpz.templates import TemplateEngine

    engine = TemplateEngine(user_dir="~/.dpz/templates")
    engine.install_defaults()
    engine.render_table("tsv", columns=["d", "roots"], cells=[["1", "240"]], sep="\\t")
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from jinja2 import BaseLoader, Environment, TemplateNotFound

logger = logging.getLogger(__name__)

DEFAULT_TEMPLATE_DIR = Path(__file__).parent / "defaults"
TEMPLATE_SUFFIXES = (".txt", ".j2", ".jinja2")
TABLE_PREFIX = "table."


def table_template(fmt: str) -> str:
    """File name of the table template for output format *fmt*."""
    return f"{TABLE_PREFIX}{fmt}.j2"


def _is_template(path: Path) -> bool:
    return path.is_file() and path.suffix in TEMPLATE_SUFFIXES


class _SearchPathLoader(BaseLoader):
    """Serve the first matching file along an ordered list of directories."""

    def __init__(self, search_path: Sequence[Path]) -> None:
        self.search_path = tuple(search_path)

    def get_source(
        self, environment: Environment, template: str,
    ) -> tuple[str, str, Callable[[], bool]]:
        for directory in self.search_path:
            path = directory / template
            if not path.is_file():
                continue
            mtime = path.stat().st_mtime
            return (
                path.read_text(encoding="utf-8"),
                str(path),
                lambda: path.is_file() and path.stat().st_mtime == mtime,
            )
        raise TemplateNotFound(template)

    def list_templates(self) -> list[str]:
        names = {
            p.name
            for directory in self.search_path if directory.is_dir()
            for p in directory.iterdir() if _is_template(p)
        }
        return sorted(names)


class TemplateEngine:
    """Render report templates, preferring *user_dir* over *default_dir*.

    Args:
        user_dir: Directory of user templates, or ``None``.
        default_dir: Directory of shipped templates.
    """

    def __init__(
        self,
        user_dir: Path | str | None = None,
        default_dir: Path | str | None = DEFAULT_TEMPLATE_DIR,
    ) -> None:
        self.user_dir = Path(user_dir).expanduser() if user_dir else None
        self.default_dir = Path(default_dir).expanduser() if default_dir else None
        self.search_path = tuple(d for d in (self.user_dir, self.default_dir) if d is not None)
        self._loader = _SearchPathLoader(self.search_path)
        self._env = Environment(
            loader=self._loader,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
            autoescape=False,
        )

    # -- lookup ------------------------------------------------------------

    def has_template(self, template_name: str) -> bool:
        try:
            self._env.get_template(template_name)
        except TemplateNotFound:
            return False
        return True

    def list_templates(self) -> list[str]:
        """Names of every template visible on the search path."""
        return self._loader.list_templates()

    def table_formats(self) -> list[str]:
        """Output formats that have a ``table.<fmt>.j2`` template."""
        return sorted(
            name[len(TABLE_PREFIX):-len(".j2")]
            for name in self.list_templates()
            if name.startswith(TABLE_PREFIX) and name.endswith(".j2")
        )

    # -- rendering ---------------------------------------------------------

    def render(self, template_name: str, **variables: Any) -> str:
        """Render *template_name*.

        Raises:
            jinja2.TemplateNotFound: no directory on the search path has it.
        """
        return self._env.get_template(template_name).render(**variables)

    def render_table(self, fmt: str, **variables: Any) -> str:
        """Render the table template for *fmt*.

        Raises:
            ValueError: there is no table template for *fmt*.
        """
        name = table_template(fmt)
        if not self.has_template(name):
            raise ValueError(
                f"Unknown table format {fmt!r}. Available: {self.table_formats()}"
            )
        return self.render(name, **variables)

    # -- installation ------------------------------------------------------

    def install_defaults(self) -> list[Path]:
        """Copy shipped templates missing from *user_dir* and return the new paths."""
        if self.user_dir is None or self.default_dir is None or not self.default_dir.is_dir():
            return []
        self.user_dir.mkdir(parents=True, exist_ok=True)
        installed: list[Path] = []
        for src in sorted(p for p in self.default_dir.iterdir() if _is_template(p)):
            dest = self.user_dir / src.name
            if dest.exists():
                logger.debug("Keeping user template %s", dest)
                continue
            dest.write_text(src.read_text(encoding="utf-8"), encoding="utf-8")
            installed.append(dest)
            logger.info("Installed default template: %s", dest)
        return installed
