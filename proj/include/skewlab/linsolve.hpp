/* Copyright 2026 The skewlab authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SKEWLAB_LINSOLVE_HPP
#define SKEWLAB_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "skewlab/rational.hpp"

namespace skewlab {

/// One particular solution of A x = b over Q (free variables set to 0), or
/// nullopt when inconsistent. A is row-major, rows of equal length.
std::optional<std::vector<Rat>> solve_rat(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

/// Same over F_p with small nonnegative int entries.
std::optional<std::vector<int>> solve_modp(std::vector<std::vector<int>> A, std::vector<int> b,
                                           int p);

/// A nonzero kernel vector of A over Q, or nullopt when A is injective.
std::optional<std::vector<Rat>> kernel_rat(std::vector<std::vector<Rat>> A);

/// A nonzero kernel vector of A over F_p.
std::optional<std::vector<int>> kernel_modp(std::vector<std::vector<int>> A, int p);

}  // namespace skewlab

#endif
