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

#ifndef SKEWLAB_QXPOLY_HPP
#define SKEWLAB_QXPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "skewlab/rational.hpp"

namespace skewlab {

/// Dense univariate polynomial over Q, coefficients stored low to high with no
/// trailing zeros (empty vector is the zero polynomial). This is the ordinary
/// commutative ring Q[x]; it backs the Q(x) ground field and a few root
/// searches over Q.
class QxPoly {
   public:
    QxPoly() = default;
    explicit QxPoly(Rat c);
    explicit QxPoly(std::vector<Rat> coeffs);

    static QxPoly x();

    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Rat& lc() const;
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    QxPoly operator+(const QxPoly& o) const;
    QxPoly operator-(const QxPoly& o) const;
    QxPoly operator*(const QxPoly& o) const;
    QxPoly operator-() const;
    bool operator==(const QxPoly& o) const { return c_ == o.c_; }

    QxPoly scaled(const Rat& s) const;
    QxPoly monic() const;
    QxPoly derivative() const;
    Rat eval(const Rat& a) const;

    /// Euclidean division, divisor nonzero: *this = q*d + r, deg r < deg d.
    std::pair<QxPoly, QxPoly> divmod(const QxPoly& d) const;

    std::string str(const std::string& var = "x") const;

    /// Lexicographic on (degree, coefficients); total order for dedup/sorting.
    static int compare(const QxPoly& a, const QxPoly& b);

   private:
    void trim();
    std::vector<Rat> c_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
QxPoly qx_gcd(QxPoly a, QxPoly b);

}  // namespace skewlab

#endif
