// Copyright 2026 The modlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MODLAT_RATIONAL_LINALG_H
#define MODLAT_RATIONAL_LINALG_H

#include <optional>
#include <vector>

#include "modlat/cyclotomic.h"
#include "modlat/matrix.h"

namespace modlat::detail {

/// Solves a x = b by Gauss-Jordan elimination over Q. `a` may be tall; returns
/// nullopt when the system is inconsistent. Free variables are set to zero.
std::optional<std::vector<Rational>> solve(Matrix<Rational> a, std::vector<Rational> b);

}  // namespace modlat::detail

#endif
