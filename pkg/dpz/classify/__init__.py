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

"""Exceptional-class candidates, moduli configurations and polarizations."""

from dpz.classify.candidates import (
    CandidateClass,
    CandidateStatus,
    ReductionStep,
    alcove_candidates,
    alcove_points,
    classify_slope,
    dprime,
    duality_orbit,
    evaluate_candidate,
    map_candidate,
    minimal_representative,
    reduce_rank_two,
    slope_parts,
)
from dpz.classify.moduli import (
    ModuliDescriptor,
    RankSpec,
    configuration_search,
    decimation_orders,
    orthogonal_factors,
)
from dpz.classify.polarization import (
    Definiteness,
    PolarizationVerdict,
    QuadraticForm,
    class_functional,
    parameter_labels,
    polarization_restrict,
    pullback_form,
)

__all__ = [
    "CandidateClass",
    "CandidateStatus",
    "Definiteness",
    "ModuliDescriptor",
    "PolarizationVerdict",
    "QuadraticForm",
    "RankSpec",
    "ReductionStep",
    "alcove_candidates",
    "alcove_points",
    "class_functional",
    "classify_slope",
    "configuration_search",
    "decimation_orders",
    "dprime",
    "duality_orbit",
    "evaluate_candidate",
    "map_candidate",
    "minimal_representative",
    "orthogonal_factors",
    "parameter_labels",
    "polarization_restrict",
    "pullback_form",
    "reduce_rank_two",
    "slope_parts",
]
