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

#ifndef SKEWLAB_OREMATRIX_HPP
#define SKEWLAB_OREMATRIX_HPP

#include <vector>

#include "skewlab/matk.hpp"
#include "skewlab/orepoly.hpp"

namespace skewlab {

/// Dense matrix with entries in R = K[t;S,D]. Only what elimination over R
/// needs: products, sums and comparisons.
class MatR {
   public:
    MatR(Ring ring, std::size_t rows, std::size_t cols);
    static MatR identity(const Ring& r, std::size_t n);
    /// tI - A for a square scalar matrix A.
    static MatR t_identity_minus(const MatK& A);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    OrePoly& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const OrePoly& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    MatR operator*(const MatR& o) const;
    bool operator==(const MatR& o) const;
    bool is_identity() const;

    std::string str() const;

   private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<OrePoly> a_;
};

}  // namespace skewlab

#endif
