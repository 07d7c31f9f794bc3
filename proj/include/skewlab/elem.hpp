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

#ifndef SKEWLAB_ELEM_HPP
#define SKEWLAB_ELEM_HPP

#include <array>
#include <cstdint>
#include <variant>

#include "skewlab/qxpoly.hpp"
#include "skewlab/rational.hpp"

namespace skewlab {

/// Element of F_{p^m}: coefficient sequence over F_p modulo the fixed
/// irreducible of the owning context, low to high, length exactly m (m <= 8).
/// Unused slots stay zero so structural equality is canonical equality.
struct FqElem {
    std::array<std::uint8_t, 8> c{};
    std::uint8_t m = 0;
    bool operator==(const FqElem&) const = default;
};

/// Rational function over Q in canonical form: denominator monic, nonzero and
/// coprime to the numerator; zero is 0/1.
struct RatFn {
    QxPoly num;
    QxPoly den{Rat(1)};
    bool operator==(const RatFn&) const = default;
};

/// Quaternion with rational components: w + x i + y j + z k.
struct Quat {
    Rat w, x, y, z;
    bool operator==(const Quat&) const = default;
};

enum class ElemKind : std::uint8_t { Rational, Fq, RatFn, Quat };

/// A ground element; which alternative is live must match the owning Ring.
class Elem {
   public:
    Elem() : v_(Rat(0)) {}
    explicit Elem(Rat r) : v_(std::move(r)) {}
    explicit Elem(FqElem f) : v_(f) {}
    explicit Elem(RatFn f) : v_(std::move(f)) {}
    explicit Elem(Quat q) : v_(std::move(q)) {}

    ElemKind kind() const { return static_cast<ElemKind>(v_.index()); }

    const Rat& rat() const { return std::get<Rat>(v_); }
    const FqElem& fq() const { return std::get<FqElem>(v_); }
    const RatFn& ratfn() const { return std::get<RatFn>(v_); }
    const Quat& quat() const { return std::get<Quat>(v_); }

    bool operator==(const Elem&) const = default;

    /// Total order inside one kind (deterministic report output); elements of
    /// different kinds never meet.
    static int compare(const Elem& a, const Elem& b);

   private:
    std::variant<Rat, FqElem, RatFn, Quat> v_;
};

inline bool elem_less(const Elem& a, const Elem& b) { return Elem::compare(a, b) < 0; }

}  // namespace skewlab

#endif
