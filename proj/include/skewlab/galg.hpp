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

#ifndef SKEWLAB_GALG_HPP
#define SKEWLAB_GALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "skewlab/algset.hpp"
#include "skewlab/canon.hpp"

namespace skewlab {

/// A ring automorphism of a classical context: identity, a Frobenius power
/// (finite fields) or conjugation by a unit (quaternions, unit normalized so
/// its first nonzero component is 1).
struct Aut {
    enum class Kind : std::uint8_t { Identity, Frobenius, Inner } kind = Kind::Identity;
    int power = 0;  // Frobenius exponent
    Elem unit;      // Inner conjugator, canonical scaling

    static Aut identity();
    static Aut frobenius(int power);
    static Aut inner(const Ring& ring, const Elem& unit);
    bool operator==(const Aut& o) const;
    std::string str(const Ring& ring) const;
};

/// A finite group of automorphisms of a classical context, closed under
/// composition at construction (cap 64 elements).
class AutGroup {
   public:
    static AutGroup closure(const Ring& ring, std::vector<Aut> generators);

    const Ring& ring() const { return ring_; }
    std::size_t size() const { return elements_.size(); }
    const Aut& at(std::size_t i) const { return elements_[i]; }
    Elem apply(std::size_t i, const Elem& a) const;
    std::size_t compose(std::size_t i, std::size_t j) const;  // sigma_i o sigma_j
    std::size_t inverse(std::size_t i) const;
    /// Membership in the fixed ring K^G.
    bool fixes(const Elem& x) const;

   private:
    AutGroup(Ring ring, std::vector<Aut> elements);
    std::size_t index_of(const Aut& a) const;
    Ring ring_;
    std::vector<Aut> elements_;
};

/// Orbit of a under G, the stabilizer-class subgroup G_a = {sigma :
/// sigma(a) ~ a}, coset representatives, and the per-coset class pieces.
struct OrbitDecomposition {
    Elem a;
    std::vector<Elem> orbit;
    std::vector<std::size_t> stabilizer;   // indices into the group
    std::vector<std::size_t> coset_reps;
    std::vector<std::vector<Elem>> pieces;  // sigma_i(G_a . a)
};

OrbitDecomposition orbit(const AutGroup& g, const Elem& a);

/// Minimal polynomial with coefficients in K^G: the least left common
/// multiple of {t - sigma(a) : a in Delta, sigma in G}.
struct GPolyResult {
    OrePoly f;
    bool coeffs_in_fixed_ring = false;
    int degree = 0;
    std::optional<std::vector<OrePoly>> linear_factors;
};

GPolyResult g_min_poly(const AutGroup& g, const AlgebraicSet& delta, const Options& opts = {});

/// rk(G.a) = (G : G_a) rk(G_a.a), all three parts computed independently.
struct GRankReport {
    int rk_orbit;   // deg f_{a,G}
    int index;      // (G : G_a)
    int rk_piece;   // rk of the single-class piece G_a.a
};

GRankReport rank_report(const AutGroup& g, const Elem& a, const Options& opts = {});

enum class FullVerdict { Full, NotFull, Unknown };

/// Is V(f_Delta) = Delta? Exact over finite contexts and Q; quaternions get
/// the central-quadratic diagnostic; Unknown otherwise.
FullVerdict is_full(const AlgebraicSet& delta, const Options& opts = {});

/// Irreducibility of a G-polynomial in K^G[t]. Supported fixed rings: finite
/// fields (trial division) and the rational / imaginary-quadratic subfields of
/// the quaternions (discriminant square tests, degree <= 2; degree <= 3 over Q).
bool irreducible_over_fixed(const AutGroup& g, const GPolyResult& f);

/// Linear factorization of a central polynomial over the rational
/// quaternions, degree <= 2: hints (e.g. orbit elements) are tried as roots
/// before the bounded search. Factors re-multiply to f exactly.
std::optional<std::vector<OrePoly>> central_factorize(const OrePoly& f,
                                                      const std::vector<Elem>& hints = {});

}  // namespace skewlab

#endif
