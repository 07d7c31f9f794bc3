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

#ifndef SKEWLAB_PLTMAT_HPP
#define SKEWLAB_PLTMAT_HPP

#include <optional>
#include <utility>

#include "skewlab/algset.hpp"
#include "skewlab/matk.hpp"

namespace skewlab {

enum class MetroStatus { Solved, NoSolution, Unknown };

/// An instance of C_h X - S(X) C_g - D(X) = U with U = e_{n,1} (single 1 in
/// the bottom-left corner). The solver is complete over finite fields, Q and
/// the rational quaternions; over Q(x) it runs a bounded rational ansatz and
/// may answer Unknown.
struct MetroInstance {
    OrePoly g, h;
    MatK ch, cg, u;          // matrices actually used (companions or chains)
    MetroStatus status = MetroStatus::Unknown;
    std::optional<MatK> x;
    bool verified = false;   // substitution re-check of a returned solution
};

MetroInstance metro_solve(const OrePoly& g, const OrePoly& h, const Options& opts = {});

/// The factored variant: chain matrices built from the given factorizations
/// (product order, leftmost factor first) instead of plain companions.
MetroInstance metro_solve_chain(const std::vector<OrePoly>& g_factors,
                                const std::vector<OrePoly>& h_factors,
                                const Options& opts = {});

/// Witness for 1 in Rg + hR: a pair (x, y) with x g + h y = 1, deg y < deg g.
std::optional<std::pair<OrePoly, OrePoly>> cofactor_search(const OrePoly& g, const OrePoly& h,
                                                           const Options& opts = {});

/// f equals the least left common multiple of its monic irreducible right
/// divisors (finite contexts, exhaustive divisor enumeration).
bool fully_reducible_check(const OrePoly& f, const Options& opts = {});

/// gh stays Wedderburn iff the metro instance solves; over finite contexts the
/// verdict is cross-checked against the root-set rank of the product.
Verdict product_w_check(const OrePoly& g, const OrePoly& h, const Options& opts = {});

}  // namespace skewlab

#endif
