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

"""Numerical K-theory of del Pezzo surfaces."""

from dpz.surface.classes import (
    SurfaceClass,
    curve_sheaf,
    dual,
    euler_pairing,
    line_bundle,
    parse_surface_class,
    point_class,
    restrict_to_elliptic,
    serre_twist,
    structure_sheaf,
    twist,
)
from dpz.surface.exceptional import (
    CollectionReport,
    LineTwistMax,
    line_twist_max,
    perp_part,
    twist_center,
    twist_constant,
    validate_collection,
)
from dpz.surface.transforms import (
    is_rational_curve,
    normalize_sign,
    phi_star,
    rational_curve_bundle,
    section_class,
)

__all__ = [
    "CollectionReport",
    "LineTwistMax",
    "SurfaceClass",
    "curve_sheaf",
    "dual",
    "euler_pairing",
    "is_rational_curve",
    "line_bundle",
    "line_twist_max",
    "normalize_sign",
    "parse_surface_class",
    "perp_part",
    "phi_star",
    "point_class",
    "rational_curve_bundle",
    "restrict_to_elliptic",
    "section_class",
    "serre_twist",
    "structure_sheaf",
    "twist",
    "twist_center",
    "twist_constant",
    "validate_collection",
]
