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

#ifndef SKEWLAB_PARSE_HPP
#define SKEWLAB_PARSE_HPP

#include <string>
#include <vector>

#include "skewlab/galg.hpp"
#include "skewlab/matk.hpp"
#include "skewlab/orepoly.hpp"
#include "skewlab/ring.hpp"

namespace skewlab {

/// Ring specs: `Q` | `GF(p^m; frob=k [; beta=<elem>])` | `Qx; d/dx` | `HQ`.
Ring parse_ring(const std::string& spec);

/// Polynomials in t over the given context. Multiplication is noncommutative
/// and explicit (`*`); `^` takes a nonnegative integer; `/` divides by a
/// nonzero constant on the right. Coefficient literals: rationals everywhere,
/// `w` over GF(p^m) with m > 1, `x` over Q(x), `i j k` over HQ.
OrePoly parse_poly(const std::string& src, const Ring& ring);

/// A constant expression (degree-0 polynomial).
Elem parse_elem(const std::string& src, const Ring& ring);

/// `[[a,b],[c,d]]` with constant entries.
MatK parse_matrix(const std::string& src, const Ring& ring);

/// `{a, b, c}`.
std::vector<Elem> parse_set(const std::string& src, const Ring& ring);

/// Comma-separated generators: `Id` | `Frob` | `Frob^k` | `Int(<elem>)`.
AutGroup parse_group(const std::string& src, const Ring& ring);

}  // namespace skewlab

#endif
