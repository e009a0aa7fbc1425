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

"""Free resolutions of simple modules over B_{V,Ψ} and their minimality."""

from dpz.resolution.shapes import (
    CoincidenceMarker,
    MinimalityReport,
    ResolutionShape,
    SequenceSpec,
    alternating_sum,
    free_shape,
    minimality_report,
)

__all__ = [
    "CoincidenceMarker",
    "MinimalityReport",
    "ResolutionShape",
    "SequenceSpec",
    "alternating_sum",
    "free_shape",
    "minimality_report",
]
