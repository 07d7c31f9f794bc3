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

#ifndef SKEWLAB_OPTIONS_HPP
#define SKEWLAB_OPTIONS_HPP

#include <cstdint>

namespace skewlab {

/// Tunable caps shared by the semi-decision procedures and exhaustive sweeps.
struct Options {
    /// Degree bound for rational-function ansatz solves over Q(x).
    /// 0 means "derive from the instance" (2 * total degree involved).
    int ansatz_bound = 0;

    /// Hard cap on exhaustive enumerations (vectors, witness matrices).
    std::uint64_t max_enum = 1u << 20;

    /// Seed for randomized sweeps; every randomized routine takes it explicitly.
    std::uint64_t seed = 0;
};

}  // namespace skewlab

#endif
