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

#include "skewlab/elem.hpp"

#include "skewlab/errors.hpp"

namespace skewlab {

int Elem::compare(const Elem& a, const Elem& b) {
    if (a.kind() != b.kind()) throw mixed_ctx();
    switch (a.kind()) {
        case ElemKind::Rational:
            return cmp(a.rat(), b.rat());
        case ElemKind::Fq: {
            const auto& x = a.fq();
            const auto& y = b.fq();
            for (std::size_t i = 8; i-- > 0;) {
                if (x.c[i] != y.c[i]) return x.c[i] < y.c[i] ? -1 : 1;
            }
            return 0;
        }
        case ElemKind::RatFn: {
            int c = QxPoly::compare(a.ratfn().den, b.ratfn().den);
            if (c != 0) return c;
            return QxPoly::compare(a.ratfn().num, b.ratfn().num);
        }
        case ElemKind::Quat: {
            const auto& x = a.quat();
            const auto& y = b.quat();
            int c = cmp(x.w, y.w);
            if (c != 0) return c;
            c = cmp(x.x, y.x);
            if (c != 0) return c;
            c = cmp(x.y, y.y);
            if (c != 0) return c;
            return cmp(x.z, y.z);
        }
    }
    return 0;
}

}  // namespace skewlab
