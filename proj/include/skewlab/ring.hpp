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

#ifndef SKEWLAB_RING_HPP
#define SKEWLAB_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewlab/elem.hpp"
#include "skewlab/errors.hpp"
#include "skewlab/options.hpp"

namespace skewlab {

enum class Family : std::uint8_t { Rationals, FiniteField, RationalFunctions, Quaternions };

/// A conjugation certificate: value == S(c) a c^-1 + D(c) c^-1, recomputable.
struct ConjWitness {
    Elem base;
    Elem conjugator;
    Elem value;
};

/// Basis of the centralizer C(a) = {x != 0 | a^x = a} u {0} as a vector space
/// over the context's constant subfield.
struct CentralizerBasis {
    Elem center;
    std::string constant_field;            // "Q", "GF(p^k)"
    std::vector<Elem> constant_elements;   // enumerated when finite, else empty
    std::vector<Elem> basis;
};

/// The ambient triple (K, S, D): one of the four supported exact families,
/// with its endomorphism S, inverse S^-1, derivation D and derived map
/// delta = -D o S^-1. Cheap to copy; immutable after construction.
class Ring {
   public:
    /// Q, classical (S = id, D = 0).
    static Ring rationals();
    /// F_{p^m} with S = Frobenius^frob and D = beta (S - id); the modulus is
    /// the minimal irreducible of degree m over F_p in lexicographic encoding.
    static Ring finite_field(int p, int m, int frob);
    static Ring finite_field(int p, int m, int frob, const Elem& beta);
    /// Q(x) with S = id and D = d/dx.
    static Ring rational_functions();
    /// Rational quaternions, classical.
    static Ring quaternions();

    Family family() const;
    bool is_finite() const;
    std::uint64_t size() const;  // throws CapabilityError when infinite
    int characteristic() const;
    bool classical() const;  // S = id and D = 0
    bool same(const Ring& o) const;
    std::string spec_string() const;

    // -- elements ------------------------------------------------------------
    Elem zero() const;
    Elem one() const;
    Elem from_int(long v) const;
    /// F_q: the class of the modulus variable ("w"); Q(x): x. Errors otherwise.
    Elem generator() const;
    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;

    // -- field arithmetic ----------------------------------------------------
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, unsigned e) const;

    // -- structure maps ------------------------------------------------------
    Elem S(const Elem& a) const;
    Elem Sinv(const Elem& a) const;
    Elem D(const Elem& a) const;
    /// delta = -D o S^-1, the right-hand-side derivation.
    Elem delta(const Elem& a) const;
    bool has_S_inverse() const;

    // -- conjugation and classes ---------------------------------------------
    /// a^c = S(c) a c^-1 + D(c) c^-1, c != 0.
    Elem conj_value(const Elem& a, const Elem& c) const;
    ConjWitness conjugate(const Elem& a, const Elem& c) const;
    /// Membership of b in the (S,D)-conjugacy class of a. Finite contexts are
    /// exhaustive; quaternions compare reduced trace and norm; Q compares by
    /// equality; Q(x) runs the bounded logarithmic-derivative semi-decision.
    bool same_class(const Elem& a, const Elem& b, const Options& opts = {}) const;
    CentralizerBasis centralizer(const Elem& a) const;

    // -- enumeration (finite contexts only) ----------------------------------
    Elem elem_at(std::uint64_t idx) const;
    std::uint64_t index_of(const Elem& a) const;
    std::vector<Elem> all_elements() const;
    std::vector<Elem> all_nonzero() const;

    // -- misc ------------------------------------------------------------------
    std::string str(const Elem& a) const;
    /// Randomized structural self-test (homomorphism, twisted Leibniz,
    /// inverse laws); throws InvariantBreach on failure.
    void self_test(int samples, std::uint64_t seed) const;
    Elem random_elem(std::mt19937_64& rng) const;

    // -- finite-field details --------------------------------------------------
    int p() const;
    int m() const;
    int frob_power() const;
    Elem beta() const;
    const std::vector<std::uint8_t>& modulus() const;

    // quaternion helpers (classical HQ only)
    Rat quat_trace(const Elem& a) const;
    Rat quat_norm(const Elem& a) const;

    struct Data;

   private:
    explicit Ring(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

}  // namespace skewlab

#endif
