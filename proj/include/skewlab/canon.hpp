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

#ifndef SKEWLAB_CANON_HPP
#define SKEWLAB_CANON_HPP

#include <optional>

#include "skewlab/algset.hpp"
#include "skewlab/orematrix.hpp"
#include "skewlab/pltmat.hpp"

namespace skewlab {

/// P (tI - A) Q = diag(e_1, ..., e_n) with P, Q unimodular (inverses stored),
/// each diagonal entry monic or 1, and e_i dividing e_{i+1} on both sides.
struct JacobsonForm {
    MatR p, pinv, q, qinv;
    std::vector<OrePoly> diag;
    int non_units = 0;  // count of entries of degree >= 1

    std::vector<OrePoly> invariant_factors() const;  // the non-unit entries
    void verify(const MatK& A) const;                // throws InvariantBreach
};

JacobsonForm jacobson_form(const MatK& A);
std::vector<OrePoly> invariant_factors(const MatK& A);

/// Basis change exhibiting A as blockdiag of the companions of its invariant
/// factors: sd_transform(A, result) = diag(C_{e_1}, ..., C_{e_r}).
MatK invariant_block_transform(const MatK& A, const JacobsonForm& jf);

struct DiagonalizeResult {
    bool diagonalizable = false;
    std::optional<MatK> transform;  // sd_transform(A, transform) = diag
    std::optional<MatK> diagonal;
};
bool is_sd_diagonalizable(const MatK& A, const Options& opts = {});
DiagonalizeResult diagonalize(const MatK& A, const Options& opts = {});

/// Monic linear factors t-a_k, ..., t-a_1 with product f (verified), or
/// nullopt when f has no such splitting. `hints` are tried as roots first.
std::optional<std::vector<OrePoly>> linear_split(const OrePoly& f, const Options& opts = {},
                                                 const std::vector<Elem>& hints = {});

struct TriangularizeResult {
    bool triangularizable = false;
    std::optional<MatK> transform;
    std::optional<MatK> triangular;
};
bool is_sd_triangularizable(const MatK& A, const Options& opts = {});
TriangularizeResult triangularize(const MatK& A, const Options& opts = {});

enum class SpectrumMethod { Brute, ViaRoots };

/// One conjugacy class of eigenvalues with a verified witness vector for the
/// representative (rows for the left spectrum, columns for the right one).
struct EigenClass {
    Elem rep;
    std::vector<Elem> members;  // full class over finite contexts
    bool enumerated = true;
    std::vector<Elem> witness;
};

struct SpectrumReport {
    std::vector<EigenClass> lspec, rspec;
    SpectrumMethod method = SpectrumMethod::ViaRoots;
    OrePoly last_invariant_factor;
};

SpectrumReport spectra(const MatK& A, SpectrumMethod method, const Options& opts = {});

/// Pointwise phi_q on a root set of g, realizing V(g^q) = phi_q(V(g));
/// requires Rq + Rg = R.
RootSet transport_roots(const OrePoly& q, const OrePoly& g, const RootSet& vg);

}  // namespace skewlab

#endif
