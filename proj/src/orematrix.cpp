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

#include "skewlab/orematrix.hpp"

namespace skewlab {

MatR::MatR(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, OrePoly::zero(ring_)) {}

MatR MatR::identity(const Ring& r, std::size_t n) {
    MatR m(r, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = OrePoly::one(r);
    return m;
}

MatR MatR::t_identity_minus(const MatK& A) {
    if (A.rows() != A.cols()) throw Error("shape", "tI - A needs a square matrix");
    const Ring& R = A.ring();
    MatR m(R, A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            OrePoly e = OrePoly::constant(R, R.neg(A.at(i, j)));
            if (i == j) e = e + OrePoly::t(R);
            m.at(i, j) = std::move(e);
        }
    return m;
}

MatR MatR::operator*(const MatR& o) const {
    if (cols_ != o.rows_) throw Error("shape", "matrix shape mismatch");
    MatR r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const OrePoly& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        }
    return r;
}

bool MatR::operator==(const MatR& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool MatR::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::string MatR::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            out += at(i, j).str();
            if (j + 1 < cols_) out += ", ";
        }
        out += "]";
        if (i + 1 < rows_) out += ",";
    }
    return out + "]";
}

}  // namespace skewlab
