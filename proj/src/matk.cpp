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

#include "skewlab/matk.hpp"

namespace skewlab {

MatK::MatK(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, ring_.zero()) {}

MatK MatK::identity(const Ring& r, std::size_t n) {
    MatK m(r, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = r.one();
    return m;
}

MatK MatK::from_rows(const Ring& r, std::vector<std::vector<Elem>> rows) {
    if (rows.empty()) return MatK(r, 0, 0);
    MatK m(r, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error("shape", "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

MatK MatK::operator+(const MatK& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("shape", "matrix shape mismatch");
    MatK r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.add(a_[i], o.a_[i]);
    return r;
}

MatK MatK::operator-(const MatK& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("shape", "matrix shape mismatch");
    MatK r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.sub(a_[i], o.a_[i]);
    return r;
}

MatK MatK::operator*(const MatK& o) const {
    if (cols_ != o.rows_) throw Error("shape", "matrix shape mismatch");
    MatK r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem& aik = at(i, k);
            if (ring_.is_zero(aik)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(aik, o.at(k, j)));
        }
    return r;
}

bool MatK::operator==(const MatK& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

MatK MatK::map_S() const {
    MatK r = *this;
    for (auto& v : r.a_) v = ring_.S(v);
    return r;
}

MatK MatK::map_D() const {
    MatK r = *this;
    for (auto& v : r.a_) v = ring_.D(v);
    return r;
}

MatK MatK::transposed() const {
    MatK r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool MatK::is_zero() const {
    for (const auto& v : a_)
        if (!ring_.is_zero(v)) return false;
    return true;
}

bool MatK::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !ring_.is_zero(at(i, j))) return false;
    return true;
}

bool MatK::is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < i && j < cols_; ++j)
            if (!ring_.is_zero(at(i, j))) return false;
    return true;
}

namespace {

// Gauss-Jordan with left row operations; optionally accumulates the same
// operations on an identity block to produce the inverse.
struct Reduction {
    std::size_t rank;
    std::optional<MatK> inverse;
};

Reduction row_reduce(MatK m, bool want_inverse) {
    const Ring& R = m.ring();
    std::size_t n = m.rows(), c = m.cols();
    std::optional<MatK> inv;
    if (want_inverse) inv = MatK::identity(R, n);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c && rank < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = rank; r < n; ++r)
            if (!R.is_zero(m.at(r, col))) {
                piv = r;
                break;
            }
        if (piv == n) continue;
        if (piv != rank) {
            for (std::size_t j = 0; j < c; ++j) std::swap(m.at(piv, j), m.at(rank, j));
            if (inv)
                for (std::size_t j = 0; j < n; ++j) std::swap(inv->at(piv, j), inv->at(rank, j));
        }
        Elem s = R.inv(m.at(rank, col));
        for (std::size_t j = 0; j < c; ++j) m.at(rank, j) = R.mul(s, m.at(rank, j));
        if (inv)
            for (std::size_t j = 0; j < n; ++j) inv->at(rank, j) = R.mul(s, inv->at(rank, j));
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank) continue;
            Elem f = m.at(r, col);
            if (R.is_zero(f)) continue;
            for (std::size_t j = 0; j < c; ++j)
                m.at(r, j) = R.sub(m.at(r, j), R.mul(f, m.at(rank, j)));
            if (inv)
                for (std::size_t j = 0; j < n; ++j)
                    inv->at(r, j) = R.sub(inv->at(r, j), R.mul(f, inv->at(rank, j)));
        }
        ++rank;
    }
    return Reduction{rank, rank == n && n == c ? inv : std::nullopt};
}

}  // namespace

std::size_t MatK::rank() const { return row_reduce(*this, false).rank; }

bool MatK::invertible() const {
    return rows_ == cols_ && rank() == rows_;
}

std::optional<MatK> MatK::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto red = row_reduce(*this, true);
    return red.inverse;
}

std::string MatK::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            out += ring_.str(at(i, j));
            if (j + 1 < cols_) out += ",";
        }
        out += "]";
        if (i + 1 < rows_) out += ",";
    }
    return out + "]";
}

std::vector<Elem> t_action(const MatK& A, const std::vector<Elem>& v) {
    const Ring& R = A.ring();
    if (A.rows() != A.cols() || v.size() != A.rows()) throw Error("shape", "T_A shape mismatch");
    std::vector<Elem> out(v.size(), R.zero());
    for (std::size_t j = 0; j < A.cols(); ++j) {
        Elem acc = R.D(v[j]);
        for (std::size_t i = 0; i < A.rows(); ++i)
            acc = R.add(acc, R.mul(R.S(v[i]), A.at(i, j)));
        out[j] = acc;
    }
    return out;
}

std::vector<Elem> l_action(const MatK& A, const std::vector<Elem>& u) {
    const Ring& R = A.ring();
    if (A.rows() != A.cols() || u.size() != A.rows()) throw Error("shape", "L_A shape mismatch");
    if (!R.has_S_inverse()) throw MapUnavailableError("L_A needs S invertible");
    std::vector<Elem> out(u.size(), R.zero());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Elem acc = R.neg(R.D(R.Sinv(u[i])));
        for (std::size_t j = 0; j < A.cols(); ++j)
            acc = R.add(acc, R.mul(A.at(i, j), R.Sinv(u[j])));
        out[i] = acc;
    }
    return out;
}

MatK sd_transform(const MatK& A, const MatK& P) {
    auto pinv = P.inverse();
    if (!pinv) throw Error("singular", "basis change matrix is singular");
    return P.map_S() * A * *pinv + P.map_D() * *pinv;
}

bool morphism_check(const MatK& P, const MatK& A, const MatK& B) {
    if (A.rows() != A.cols() || B.rows() != B.cols()) throw Error("shape", "square matrices expected");
    if (P.rows() != A.rows() || P.cols() != B.rows()) throw Error("shape", "morphism shape mismatch");
    return A * P == P.map_S() * B + P.map_D();
}

MatK companion(const OrePoly& f) {
    const Ring& R = f.ring();
    if (!f.is_monic()) throw Error("non-monic", "companion matrix needs a monic polynomial");
    std::size_t n = static_cast<std::size_t>(f.deg());
    if (n == 0) throw Error("degree", "companion matrix needs degree >= 1");
    MatK C(R, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) C.at(i, i + 1) = R.one();
    for (std::size_t j = 0; j < n; ++j) C.at(n - 1, j) = R.neg(f.coeff(j));
    return C;
}

MatK companion_chain(const std::vector<OrePoly>& factors) {
    if (factors.empty()) throw Error("degree", "companion chain needs at least one factor");
    const Ring& R = factors.front().ring();
    std::size_t total = 0;
    for (const auto& p : factors) {
        if (!p.is_monic()) throw Error("non-monic", "chain factors must be monic");
        total += static_cast<std::size_t>(p.deg());
    }
    MatK M(R, total, total);
    // rightmost factor first along the diagonal
    std::size_t off = 0;
    for (std::size_t idx = factors.size(); idx-- > 0;) {
        const OrePoly& p = factors[idx];
        std::size_t n = static_cast<std::size_t>(p.deg());
        MatK C = companion(p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) M.at(off + i, off + j) = C.at(i, j);
        if (idx > 0) {
            // coupler into the next block: single 1 in its bottom-left corner
            M.at(off + n - 1, off + n) = R.one();
        }
        off += n;
    }
    return M;
}

bool similar_polys(const OrePoly& f, const OrePoly& g, const MatK& P) {
    if (f.deg() != g.deg()) return false;
    if (f.deg() < 1) return f == g;
    if (!P.invertible()) return false;
    return morphism_check(P, companion(f), companion(g));
}

std::optional<MatK> find_similarity_witness(const OrePoly& f, const OrePoly& g,
                                            const Options& opts) {
    const Ring& R = f.ring();
    if (f.deg() != g.deg() || f.deg() < 1) return std::nullopt;
    if (!R.is_finite()) throw CapabilityError("similarity witness search needs a finite context");
    std::size_t n = static_cast<std::size_t>(f.deg());
    if (n > 3) throw CapabilityError("similarity witness search capped at matrix size 3");
    std::uint64_t q = R.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
        total *= q;
        if (total > opts.max_enum)
            throw CapabilityError("similarity witness search exceeds enumeration cap");
    }
    MatK Cf = companion(f), Cg = companion(g);
    for (std::uint64_t v = 0; v < total; ++v) {
        MatK P(R, n, n);
        std::uint64_t t = v;
        for (std::size_t i = 0; i < n * n; ++i) {
            P.at(i / n, i % n) = R.elem_at(t % q);
            t /= q;
        }
        if (!morphism_check(P, Cf, Cg)) continue;
        if (P.invertible()) return P;
    }
    return std::nullopt;
}

}  // namespace skewlab
