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

#ifndef SKEWLAB_MATK_HPP
#define SKEWLAB_MATK_HPP

#include <optional>
#include <string>
#include <vector>

#include "skewlab/orepoly.hpp"
#include "skewlab/ring.hpp"

namespace skewlab {

/// Dense matrix over the ground division ring K. Entries are canonical; row
/// reduction works one-sidedly (left row operations), which is all a division
/// ring offers.
class MatK {
   public:
    MatK(Ring ring, std::size_t rows, std::size_t cols);
    static MatK identity(const Ring& r, std::size_t n);
    static MatK from_rows(const Ring& r, std::vector<std::vector<Elem>> rows);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    MatK operator+(const MatK& o) const;
    MatK operator-(const MatK& o) const;
    MatK operator*(const MatK& o) const;
    bool operator==(const MatK& o) const;

    MatK map_S() const;
    MatK map_D() const;
    MatK transposed() const;

    bool is_zero() const;
    bool is_diagonal() const;
    bool is_upper_triangular() const;

    /// Rank by left row reduction.
    std::size_t rank() const;
    bool invertible() const;
    std::optional<MatK> inverse() const;

    std::string str() const;

   private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

/// Row action of t: T_A(v) = S(v) A + D(v).
std::vector<Elem> t_action(const MatK& A, const std::vector<Elem>& v);
/// Column action of t on the right module: L_A(u) = A S^-1(u) - D(S^-1(u)).
std::vector<Elem> l_action(const MatK& A, const std::vector<Elem>& u);

/// The (S,D)-similar matrix S(P) A P^-1 + D(P) P^-1; P must be invertible.
MatK sd_transform(const MatK& A, const MatK& P);

/// AP = S(P)B + D(P): P is the matrix of a left module morphism between the
/// PLT structures of A and B.
bool morphism_check(const MatK& P, const MatK& A, const MatK& B);

/// Companion matrix of a monic polynomial (1 x 1 block [a] for t - a).
MatK companion(const OrePoly& f);

/// Block form of the companion of a product: factors given left to right in
/// product order (product = factors[0] * ... * factors[k-1]); the companion
/// block of the rightmost factor sits top-left, couplers carry a single 1 in
/// their bottom-left corner.
MatK companion_chain(const std::vector<OrePoly>& factors);

/// Witness check: deg f = deg g, P invertible and C_f P = S(P) C_g + D(P).
bool similar_polys(const OrePoly& f, const OrePoly& g, const MatK& P);
/// Exhaustive witness search over small finite contexts (sizes <= 3).
std::optional<MatK> find_similarity_witness(const OrePoly& f, const OrePoly& g,
                                            const Options& opts = {});

}  // namespace skewlab

#endif
