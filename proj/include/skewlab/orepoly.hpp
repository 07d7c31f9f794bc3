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

#ifndef SKEWLAB_OREPOLY_HPP
#define SKEWLAB_OREPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "skewlab/ring.hpp"

namespace skewlab {

/// Skew polynomial in R = K[t;S,D], coefficients on the left of the powers of
/// t (sum a_i t^i, stored low to high, trimmed). Multiplication rewrites
/// t a = S(a) t + D(a).
class OrePoly {
   public:
    OrePoly(Ring ring, std::vector<Elem> coeffs);
    static OrePoly zero(const Ring& r);
    static OrePoly one(const Ring& r);
    static OrePoly constant(const Ring& r, const Elem& c);
    static OrePoly t(const Ring& r);
    /// t - a
    static OrePoly t_minus(const Ring& r, const Elem& a);

    const Ring& ring() const { return ring_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    bool is_constant() const { return c_.size() <= 1; }
    Elem coeff(std::size_t i) const;
    const std::vector<Elem>& coeffs() const { return c_; }
    const Elem& leading() const;

    OrePoly operator+(const OrePoly& o) const;
    OrePoly operator-(const OrePoly& o) const;
    OrePoly operator*(const OrePoly& o) const;
    OrePoly operator-() const;
    bool operator==(const OrePoly& o) const { return c_ == o.c_; }

    /// c * f (coefficient-wise left multiplication; untwisted).
    OrePoly scaled_left(const Elem& s) const;
    /// Left-normalize to leading coefficient 1; same left ideal.
    OrePoly monic() const;
    OrePoly pow(unsigned e) const;

    /// Right evaluation f(a): remainder of right division by t - a, computed
    /// through the N_i recursion.
    Elem eval(const Elem& a) const;

    std::string str() const;
    static int compare(const OrePoly& a, const OrePoly& b);

   private:
    void trim();
    Ring ring_;
    std::vector<Elem> c_;
};

/// Trace of a right evaluation: N_0(a),...,N_n(a) with
/// N_{i+1}(a) = S(N_i(a)) a + D(N_i(a)), and f(a) = sum c_i N_i(a).
struct EvalTrace {
    Elem point;
    std::vector<Elem> n_seq;
    Elem value;
};

EvalTrace eval_trace(const OrePoly& f, const Elem& a);
/// Independent evaluation route: remainder of right division by t - a.
Elem eval_via_remainder(const OrePoly& f, const Elem& a);

/// f = q*g + r with deg r < deg g; g monic.
std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& f, const OrePoly& g);
/// f = g*q + r with deg r < deg g; g monic; needs S^-1.
std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& f, const OrePoly& g);

struct GcdExt {
    OrePoly d, u, v;  // d = u*f + v*g, d monic (right gcd: Rf + Rg = Rd)
};
GcdExt rgcd_ext(const OrePoly& f, const OrePoly& g);
OrePoly rgcd(const OrePoly& f, const OrePoly& g);

struct Llcm {
    OrePoly m;      // monic least left common multiple
    OrePoly f_cof;  // m = f_cof * g   (the polynomial f^g)
    OrePoly g_cof;  // m = g_cof * f   (the polynomial g^f)
};
Llcm llcm(const OrePoly& f, const OrePoly& g);

/// The similarity transform f^q for Rq + Rf = R: the cofactor with
/// llcm(f, q) = f^q * q. Throws when the inputs are not right-coprime.
OrePoly transform(const OrePoly& f, const OrePoly& q);

/// phi_h(x) = x^{h(x)}, defined when h(x) != 0.
Elem phi(const OrePoly& h, const Elem& x);
/// lambda_{h,a}(x) = h(a^x) x for x != 0 (0 is mapped to 0 by convention).
Elem lambda(const OrePoly& h, const Elem& a, const Elem& x);

/// Rewrite into right-coefficient form f = sum t^i b_i; returns the b_i.
std::vector<Elem> right_coefficients(const OrePoly& f);
OrePoly from_right_coefficients(const Ring& r, const std::vector<Elem>& b);

}  // namespace skewlab

#endif
