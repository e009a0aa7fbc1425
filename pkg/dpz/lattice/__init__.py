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

"""Picard lattices, root systems, Weyl reduction and closest vectors."""

from dpz.lattice.alcove import (
    AlcovePoint,
    AlcoveStep,
    alcove_point,
    alcove_vertex,
    fundamental_weights,
    reduce_to_alcove,
    replay,
)
from dpz.lattice.basis import DelPezzoLattice, get_lattice, parse_degree_key
from dpz.lattice.cvp import ClosestVectors, closest_vectors, vectors_within
from dpz.lattice.roots import (
    affine_marks,
    highest_roots,
    is_positive,
    is_root,
    positive_roots,
    roots_of_Qperp,
    simple_components,
    simple_coordinates,
    simple_roots,
)
from dpz.lattice.smith import smith_invariants, solve_integer, torsion_factors
from dpz.lattice.subsystems import (
    CartanFactor,
    SubsystemReport,
    format_type,
    subsystem_analyze,
)
from dpz.lattice.vectors import LatticeVector, RationalVector, inner_product, parse_vector

__all__ = [
    "AlcovePoint",
    "AlcoveStep",
    "CartanFactor",
    "ClosestVectors",
    "DelPezzoLattice",
    "LatticeVector",
    "RationalVector",
    "SubsystemReport",
    "affine_marks",
    "alcove_point",
    "alcove_vertex",
    "closest_vectors",
    "format_type",
    "fundamental_weights",
    "get_lattice",
    "highest_roots",
    "inner_product",
    "is_positive",
    "is_root",
    "parse_degree_key",
    "parse_vector",
    "positive_roots",
    "reduce_to_alcove",
    "replay",
    "roots_of_Qperp",
    "simple_components",
    "simple_coordinates",
    "simple_roots",
    "smith_invariants",
    "solve_integer",
    "subsystem_analyze",
    "torsion_factors",
    "vectors_within",
]
