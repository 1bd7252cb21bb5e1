# Copyright 2026 The modlat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Pointed modular data from even integral lattices, in exact arithmetic."""

from ._core import (
    LatticeError,
    ModularData,
    ModularDataError,
    ParseError,
    ValidationError,
    canonical_form,
    classify,
    determinant,
    direct_sum,
    discriminant_group,
    dual_permutation,
    from_lattice,
    fusion_probabilities,
    gauss_data,
    generate_gram_matrices,
    link_invariant,
    parse_modular_data,
    product,
    quantum_dimensions,
    relabel,
    serialize,
    smith_normal_form,
    verify,
    verlinde_fusion,
)

__all__ = [
    "LatticeError",
    "ModularData",
    "ModularDataError",
    "ParseError",
    "ValidationError",
    "canonical_form",
    "classify",
    "determinant",
    "direct_sum",
    "discriminant_group",
    "dual_permutation",
    "from_lattice",
    "fusion_probabilities",
    "gauss_data",
    "generate_gram_matrices",
    "link_invariant",
    "parse_modular_data",
    "product",
    "quantum_dimensions",
    "relabel",
    "serialize",
    "smith_normal_form",
    "verify",
    "verlinde_fusion",
]
