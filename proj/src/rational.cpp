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

#include "skewlab/rational.hpp"

#include <algorithm>

#include "skewlab/errors.hpp"

namespace skewlab {

std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s = boost::multiprecision::sqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto sn = int_sqrt_exact(rat_num(r));
    if (!sn) return std::nullopt;
    auto sd = int_sqrt_exact(rat_den(r));
    if (!sd) return std::nullopt;
    return Rat(*sn, *sd);
}

std::vector<Int> divisors_of(Int n) {
    if (n < 0) n = -n;
    if (n == 0) return {};
    std::vector<std::pair<Int, int>> fac;
    Int m = n;
    const Int trial_bound = 1'000'000;
    for (Int d = 2; d * d <= m; ++d) {
        if (d > trial_bound)
            throw CapabilityError("integer too hard to factor by trial division: " + n.str());
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
    }
    if (m > 1) fac.emplace_back(m, 1);
    std::vector<Int> divs{1};
    for (auto& [p, e] : fac) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int cmp(const Rat& a, const Rat& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

}  // namespace skewlab
