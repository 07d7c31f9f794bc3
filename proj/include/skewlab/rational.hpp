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

#ifndef SKEWLAB_RATIONAL_HPP
#define SKEWLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace skewlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Exact integer square root test.
std::optional<Int> int_sqrt_exact(const Int& n);

/// Exact rational square root; cpp_rational keeps num/den reduced, so both
/// parts must be perfect squares.
std::optional<Rat> rat_sqrt_exact(const Rat& r);

/// All positive divisors of |n| by trial division. Throws CapabilityError when
/// a prime factor above the trial bound survives (root search gives up there).
std::vector<Int> divisors_of(Int n);

int cmp(const Rat& a, const Rat& b);

}  // namespace skewlab

#endif
