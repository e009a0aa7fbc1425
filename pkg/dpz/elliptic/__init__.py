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

"""K-theory of the elliptic curve: classes, autoequivalences and the algebras B_{V,Ψ}."""

from dpz.elliptic.algebra import (
    DivisorialBundle,
    SeriesGuess,
    center_series,
    end_dimension,
    hilbert_series,
    koszul_test,
    positivity_closed_form,
    positivity_oracle,
    quotient_series,
    rational_guess,
    resolution_exists,
    resolution_parameters,
)
from dpz.elliptic.autoequivalences import (
    Autoequivalence,
    AutoequivalenceDescriptor,
    AutoequivalenceKind,
    apply_autoequivalence,
    get_autoequivalence_kind,
    hom_ext_dims,
    line_sequence,
    list_autoequivalence_kinds,
    phi_div,
    register_autoequivalence,
)
from dpz.elliptic.classes import EllipticClass, Slope, chi_e, parse_elliptic_class
from dpz.elliptic.determinants import DetClass, Relation, RelationSet

__all__ = [
    "Autoequivalence",
    "AutoequivalenceDescriptor",
    "AutoequivalenceKind",
    "DetClass",
    "DivisorialBundle",
    "EllipticClass",
    "Relation",
    "RelationSet",
    "SeriesGuess",
    "Slope",
    "apply_autoequivalence",
    "center_series",
    "chi_e",
    "end_dimension",
    "get_autoequivalence_kind",
    "hilbert_series",
    "hom_ext_dims",
    "koszul_test",
    "line_sequence",
    "list_autoequivalence_kinds",
    "parse_elliptic_class",
    "phi_div",
    "positivity_closed_form",
    "positivity_oracle",
    "quotient_series",
    "rational_guess",
    "register_autoequivalence",
    "resolution_exists",
    "resolution_parameters",
]
