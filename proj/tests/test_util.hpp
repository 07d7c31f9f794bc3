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

#ifndef SKEWLAB_TEST_UTIL_HPP
#define SKEWLAB_TEST_UTIL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "skewlab/orepoly.hpp"
#include "skewlab/ring.hpp"

namespace skewlab::testutil {

/// All polynomials of degree < len built from coefficient tuples (including
/// shorter ones, when trailing indices are zero).
inline void for_all_polys(const Ring& R, int len, const std::function<void(const OrePoly&)>& fn) {
    std::uint64_t q = R.size();
    std::uint64_t total = 1;
    for (int i = 0; i < len; ++i) total *= q;
    for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t t = v;
        std::vector<Elem> c;
        c.reserve(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            c.push_back(R.elem_at(t % q));
            t /= q;
        }
        fn(OrePoly(R, std::move(c)));
    }
}

/// All monic polynomials of degree exactly d.
inline void for_monic_of_degree(const Ring& R, int d,
                                const std::function<void(const OrePoly&)>& fn) {
    std::uint64_t q = R.size();
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t t = v;
        std::vector<Elem> c;
        c.reserve(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i < d; ++i) {
            c.push_back(R.elem_at(t % q));
            t /= q;
        }
        c.push_back(R.one());
        fn(OrePoly(R, std::move(c)));
    }
}

inline std::vector<OrePoly> monic_polys_of_degrees(const Ring& R, int dmin, int dmax) {
    std::vector<OrePoly> out;
    for (int d = dmin; d <= dmax; ++d)
        for_monic_of_degree(R, d, [&](const OrePoly& f) { out.push_back(f); });
    return out;
}

}  // namespace skewlab::testutil

#endif
