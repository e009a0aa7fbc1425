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

"""Plain ``key=value`` configuration for the command-line front end.

Recognised keys::

    # defaults for commands that take --d / --delta
    degree = 1
    delta = 0
    # generators declared zero among the curve determinants
    relations = 2q
    jobs = 1
    template_dir = ~/.dpz/templates

Precedence is explicit flag, then config file, then the defaults below.

Usage::

    from dpz.config import load_config

    config = load_config("dpz.cfg")
    config.relation_set().is_zero(DetClass.parse("4q"))
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any

from dpz.elliptic.determinants import RelationSet
from dpz.errors import DomainError
from dpz.lattice.basis import parse_degree_key

logger = logging.getLogger(__name__)

_INT_KEYS = ("delta", "jobs")


@dataclass
class DpzConfig:
    """Effective defaults shared by the subcommands."""

    degree: str = "1"                 # degree key, "1".."9" or "8F0"
    delta: int = 0                    # degree of the image of [O] on the curve
    relations: str = ""               # comma-separated relation generators
    jobs: int = 1                     # worker processes for searches
    template_dir: str | None = None   # user override directory for report templates

    def __post_init__(self) -> None:
        parse_degree_key(str(self.degree))
        self.degree = str(self.degree).strip()
        if self.jobs < 1:
            raise DomainError(f"jobs must be >= 1, got {self.jobs}")
        RelationSet.parse(self.relations)

    @property
    def degree_key(self) -> tuple[int, bool]:
        return parse_degree_key(self.degree)

    def relation_set(self) -> RelationSet:
        return RelationSet.parse(self.relations)

    def merged(self, **overrides: Any) -> DpzConfig:
        """Copy with every non-``None`` override applied."""
        data = self.to_dict()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return DpzConfig.from_dict(data)

    def to_dict(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "delta": self.delta,
            "relations": self.relations,
            "jobs": self.jobs,
            "template_dir": self.template_dir,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> DpzConfig:
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise DomainError(f"unknown config key {unknown[0]!r}. Available: {sorted(known)}")
        return cls(**data)


def parse_config(text: str, source: str = "<config>") -> DpzConfig:
    """Parse ``key=value`` lines; ``#`` starts a comment.

    Raises:
        DomainError: a line has no ``=``, a key is unknown, or an integer
            value does not parse.
    """
    data: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"{source}:{lineno}: expected key=value, got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in _INT_KEYS:
            try:
                data[key] = int(value)
            except ValueError:
                raise DomainError(
                    f"{source}:{lineno}: {key} must be an integer, got {value!r}"
                ) from None
        elif key == "template_dir":
            data[key] = value or None
        else:
            data[key] = value
    config = DpzConfig.from_dict(data)
    logger.debug("Loaded configuration from %s: %s", source, config.to_dict())
    return config


def load_config(path: str | Path | None = None) -> DpzConfig:
    """Read a configuration file; ``None`` gives the defaults.

    Raises:
        DomainError: the file is missing or malformed.
    """
    if path is None:
        return DpzConfig()
    path = Path(path).expanduser()
    if not path.is_file():
        raise DomainError(f"config file {str(path)!r} does not exist")
    return parse_config(path.read_text(encoding="utf-8"), source=str(path))
