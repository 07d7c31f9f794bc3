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

#ifndef SKEWLAB_ALGSET_HPP
#define SKEWLAB_ALGSET_HPP

#include <optional>
#include <vector>

#include "skewlab/matk.hpp"
#include "skewlab/orepoly.hpp"

namespace skewlab {

/// A finite set of ground elements; duplicates are dropped but the caller's
/// order is preserved (P-basis extraction is greedy in input order).
struct AlgebraicSet {
    AlgebraicSet(Ring ring, std::vector<Elem> pts);
    Ring ring;
    std::vector<Elem> points;
};

struct MinPolyResult {
    OrePoly f;                  // monic minimal polynomial of the set
    int rank;                   // = deg f
    std::vector<Elem> p_basis;  // greedy independent subset regenerating f
};

/// Minimal polynomial by adjoining points: f <- (t - b^{f(b)}) f when f(b) != 0.
MinPolyResult min_poly(const AlgebraicSet& delta);

bool p_independent(const AlgebraicSet& delta);
std::vector<Elem> p_basis(const AlgebraicSet& delta);

/// Vandermonde with rows N_i(b_1),...,N_i(b_n), i = 0..n-1.
MatK vandermonde(const Ring& ring, const std::vector<Elem>& points);
bool vandermonde_invertible(const Ring& ring, const std::vector<Elem>& points);

enum class RootSide { Right, Left };

/// One (S,D)-conjugacy class meeting a root set. Infinite quaternion classes
/// carry the trace/norm descriptor and, when a rational witness was found, a
/// representative; `enumerated` is false for those.
struct RootClass {
    std::optional<Elem> rep;
    std::vector<Elem> members;
    bool enumerated = true;
    int e_dim = 0;  // dim over the class centralizer of E(f, rep)
    std::optional<Rat> trace, norm;  // quaternion class descriptor
};

struct RootSet {
    OrePoly f;
    RootSide side = RootSide::Right;
    std::vector<Elem> roots;  // all enumerated roots, canonical order
    std::vector<RootClass> classes;
    int rank() const;  // sum of class e-dims
};

/// Complete root set with class split and e-space dimensions. Supported on
/// finite contexts, classical Q (rational root theorem), and central
/// quaternion polynomials of degree <= 2.
RootSet roots(const OrePoly& f, RootSide side = RootSide::Right, const Options& opts = {});

enum class Verdict { Yes, No, Unknown };

struct WedderburnResult {
    Verdict verdict = Verdict::Unknown;
    bool exact = true;  // false: certificate mode (can prove, cannot refute)
    int rank = -1;
    int degree = 0;
};

WedderburnResult is_wedderburn(const OrePoly& f, const Options& opts = {});
/// Certificate mode: sound when it answers Yes, Unknown otherwise.
WedderburnResult is_wedderburn_cert(const OrePoly& f, const std::vector<Elem>& candidate_roots);

/// V(f_Delta), the closure of Delta.
AlgebraicSet closure(const AlgebraicSet& delta, const Options& opts = {});

/// rk V(gh) = rk V(h) + rk(im phi_h cap V(g)), all parts materialized
/// exhaustively over a finite context; the identity is re-verified.
struct RankProductReport {
    int lhs;               // rk V(gh)
    int rk_vh;             // rk V(h)
    int rk_im_cap_vg;      // rk(im phi_h cap V(g))
};
RankProductReport rank_product_report(const OrePoly& g, const OrePoly& h, const Options& opts = {});

/// rk phi_h(Delta) = rk Delta - rk(closure(Delta) cap V(h)) for Delta disjoint
/// from V(h); the identity is re-verified.
struct PhiImageReport {
    std::vector<Elem> image;
    int rank_image;
    int rank_delta;
    int rank_closure_cap_vh;
};
PhiImageReport phi_image_report(const OrePoly& h, const AlgebraicSet& delta,
                                const Options& opts = {});

/// Rational roots of a monic polynomial over Q (complete, via the rational
/// root theorem after clearing denominators); multiplicities dropped.
std::vector<Rat> rational_roots(const OrePoly& f);

}  // namespace skewlab

#endif
