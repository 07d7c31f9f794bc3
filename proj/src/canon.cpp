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

#include "skewlab/canon.hpp"

#include <algorithm>

#include "skewlab/linsolve.hpp"

namespace skewlab {

std::vector<OrePoly> JacobsonForm::invariant_factors() const {
    std::vector<OrePoly> out;
    for (const auto& e : diag)
        if (e.deg() >= 1) out.push_back(e);
    return out;
}

void JacobsonForm::verify(const MatK& A) const {
    const Ring& R = A.ring();
    MatR lhs = p * MatR::t_identity_minus(A) * q;
    MatR want(R, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) want.at(i, i) = diag[i];
    if (!(lhs == want)) throw InvariantBreach("P(tI-A)Q does not equal the diagonal");
    if (!(p * pinv).is_identity() || !(pinv * p).is_identity())
        throw InvariantBreach("P is not unimodular");
    if (!(q * qinv).is_identity() || !(qinv * q).is_identity())
        throw InvariantBreach("Q is not unimodular");
    int total = 0;
    for (const auto& e : diag) {
        if (e.is_zero()) throw InvariantBreach("zero invariant factor");
        if (!e.is_monic()) throw InvariantBreach("diagonal entry is not monic");
        total += e.deg();
    }
    if (total != static_cast<int>(diag.size()))
        throw InvariantBreach("invariant factor degrees do not sum to n");
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        if (!right_divmod(diag[i + 1], diag[i]).second.is_zero() ||
            !left_divmod(diag[i + 1], diag[i]).second.is_zero())
            throw InvariantBreach("two-sided divisibility chain failed");
    }
}

namespace {

// Elimination state over R with unimodular bookkeeping: row operations update
// P and Pinv, column operations update Q and Qinv.
struct Elim {
    Ring R;
    std::size_t n;
    MatR m, p, pinv, q, qinv;

    explicit Elim(const MatK& A)
        : R(A.ring()),
          n(A.rows()),
          m(MatR::t_identity_minus(A)),
          p(MatR::identity(R, n)),
          pinv(MatR::identity(R, n)),
          q(MatR::identity(R, n)),
          qinv(MatR::identity(R, n)) {}

    void row_swap(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m.at(i, j), m.at(k, j));
            std::swap(p.at(i, j), p.at(k, j));
            std::swap(pinv.at(j, i), pinv.at(j, k));
        }
    }
    void col_swap(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t r = 0; r < n; ++r) {
            std::swap(m.at(r, i), m.at(r, k));
            std::swap(q.at(r, i), q.at(r, k));
            std::swap(qinv.at(i, r), qinv.at(k, r));
        }
    }
    // row_i -= f * row_k
    void row_sub(std::size_t i, std::size_t k, const OrePoly& f) {
        if (f.is_zero()) return;
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = m.at(i, j) - f * m.at(k, j);
            p.at(i, j) = p.at(i, j) - f * p.at(k, j);
            pinv.at(j, k) = pinv.at(j, k) + pinv.at(j, i) * f;
        }
    }
    // col_j -= col_k * f
    void col_sub(std::size_t j, std::size_t k, const OrePoly& f) {
        if (f.is_zero()) return;
        for (std::size_t r = 0; r < n; ++r) {
            m.at(r, j) = m.at(r, j) - m.at(r, k) * f;
            q.at(r, j) = q.at(r, j) - q.at(r, k) * f;
            qinv.at(k, r) = qinv.at(k, r) + f * qinv.at(j, r);
        }
    }
    // col_j += col_k (the divisibility fix-up coupler)
    void col_add(std::size_t j, std::size_t k) {
        OrePoly mone = -OrePoly::one(R);
        col_sub(j, k, mone);
    }
    // left-scale row i by a unit
    void row_scale(std::size_t i, const Elem& u) {
        Elem ui = R.inv(u);
        OrePoly fu = OrePoly::constant(R, u);
        OrePoly fui = OrePoly::constant(R, ui);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = fu * m.at(i, j);
            p.at(i, j) = fu * p.at(i, j);
            pinv.at(j, i) = pinv.at(j, i) * fui;
        }
    }

    void eliminate() {
        for (std::size_t k = 0; k < n; ++k) {
            int guard = 0;
            while (true) {
                if (++guard > 1000) throw InvariantBreach("elimination did not converge");
                // minimal-degree nonzero pivot in the trailing submatrix,
                // ties broken row-major
                std::size_t bi = n, bj = n;
                int bd = -1;
                for (std::size_t i = k; i < n; ++i)
                    for (std::size_t j = k; j < n; ++j) {
                        const OrePoly& e = m.at(i, j);
                        if (e.is_zero()) continue;
                        if (bd < 0 || e.deg() < bd) {
                            bd = e.deg();
                            bi = i;
                            bj = j;
                        }
                    }
                if (bd < 0) return;  // trailing block is zero
                row_swap(k, bi);
                col_swap(k, bj);
                if (!m.at(k, k).is_monic()) row_scale(k, R.inv(m.at(k, k).leading()));
                const OrePoly pivot = m.at(k, k);
                bool dirty = false;
                for (std::size_t i = k + 1; i < n; ++i) {
                    if (m.at(i, k).is_zero()) continue;
                    auto [qf, r] = right_divmod(m.at(i, k), pivot);
                    row_sub(i, k, qf);
                    if (!r.is_zero()) dirty = true;
                }
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (m.at(k, j).is_zero()) continue;
                    auto [qf, r] = left_divmod(m.at(k, j), pivot);
                    col_sub(j, k, qf);
                    if (!r.is_zero()) dirty = true;
                }
                if (!dirty) break;
            }
        }
    }

    void sort_diagonal() {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j + 1 < n - i; ++j) {
                if (m.at(j, j).deg() > m.at(j + 1, j + 1).deg()) {
                    row_swap(j, j + 1);
                    col_swap(j, j + 1);
                }
            }
    }
};

}  // namespace

JacobsonForm jacobson_form(const MatK& A) {
    const Ring& R = A.ring();
    if (A.rows() != A.cols() || A.rows() == 0) throw Error("shape", "square matrix expected");
    if (!R.has_S_inverse())
        throw MapUnavailableError("the invariant factor algorithm needs S invertible");
    Elim e(A);
    e.eliminate();
    e.sort_diagonal();
    // enforce the two-sided divisibility chain
    int guard = 0;
    while (true) {
        if (++guard > 200) throw InvariantBreach("divisibility fix-up did not converge");
        std::size_t bad = e.n;
        for (std::size_t i = 0; i + 1 < e.n; ++i) {
            const OrePoly& e1 = e.m.at(i, i);
            const OrePoly& e2 = e.m.at(i + 1, i + 1);
            if (right_divmod(e2, e1).second.is_zero() && left_divmod(e2, e1).second.is_zero())
                continue;
            bad = i;
            break;
        }
        if (bad == e.n) break;
        e.col_add(bad, bad + 1);  // couple the two cyclic blocks, then rediagonalize
        e.eliminate();
        e.sort_diagonal();
    }
    JacobsonForm jf{e.p, e.pinv, e.q, e.qinv, {}, 0};
    for (std::size_t i = 0; i < e.n; ++i) {
        jf.diag.push_back(e.m.at(i, i));
        if (e.m.at(i, i).deg() >= 1) ++jf.non_units;
    }
    jf.verify(A);
    return jf;
}

std::vector<OrePoly> invariant_factors(const MatK& A) {
    return jacobson_form(A).invariant_factors();
}

MatK invariant_block_transform(const MatK& A, const JacobsonForm& jf) {
    const Ring& R = A.ring();
    std::size_t n = A.rows();
    std::vector<std::size_t> block_cols;  // column offsets of the non-unit blocks
    std::vector<std::size_t> block_idx;   // indices into jf.diag
    std::size_t off = 0;
    for (std::size_t j = 0; j < jf.diag.size(); ++j) {
        if (jf.diag[j].deg() < 1) continue;
        block_cols.push_back(off);
        block_idx.push_back(j);
        off += static_cast<std::size_t>(jf.diag[j].deg());
    }
    if (off != n) throw InvariantBreach("block widths do not sum to n");

    // row i of the morphism matrix: reduce row i of Q modulo each e_j
    MatK p1(R, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < block_idx.size(); ++b) {
            const OrePoly& ej = jf.diag[block_idx[b]];
            OrePoly rem = right_divmod(jf.q.at(i, block_idx[b]), ej).second;
            for (int d = 0; d < ej.deg(); ++d)
                p1.at(i, block_cols[b] + static_cast<std::size_t>(d)) =
                    rem.coeff(static_cast<std::size_t>(d));
        }
    }
    // target: block diagonal of the companions
    MatK b(R, n, n);
    for (std::size_t bi = 0; bi < block_idx.size(); ++bi) {
        MatK c = companion(jf.diag[block_idx[bi]]);
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t cc = 0; cc < c.cols(); ++cc)
                b.at(block_cols[bi] + r, block_cols[bi] + cc) = c.at(r, cc);
    }
    if (!morphism_check(p1, A, b))
        throw InvariantBreach("module decomposition morphism failed");
    auto p1inv = p1.inverse();
    if (!p1inv) throw InvariantBreach("module decomposition matrix is singular");
    if (!(sd_transform(A, *p1inv) == b))
        throw InvariantBreach("block transform does not reach the companion form");
    return *p1inv;
}

namespace {

// pick deg(e) P-independent roots of a Wedderburn polynomial e
std::vector<Elem> w_poly_basis(const OrePoly& e, const Options& opts) {
    const Ring& R = e.ring();
    RootSet rs = roots(e, RootSide::Right, opts);
    bool all_enumerated = true;
    for (const auto& c : rs.classes) all_enumerated = all_enumerated && c.enumerated;
    if (all_enumerated) {
        MinPolyResult mp = min_poly(AlgebraicSet(R, rs.roots));
        if (mp.rank != e.deg() || !(mp.f == e))
            throw InvariantBreach("root basis does not regenerate the invariant factor");
        return mp.p_basis;
    }
    // quaternion central quadratic: representative plus a distinct conjugate
    if (rs.classes.size() == 1 && rs.classes[0].rep && e.deg() == 2) {
        Elem a = *rs.classes[0].rep;
        for (const Elem& c : {Elem(Quat{Rat(0), Rat(1), Rat(0), Rat(0)}),
                              Elem(Quat{Rat(0), Rat(0), Rat(1), Rat(0)}),
                              Elem(Quat{Rat(0), Rat(0), Rat(0), Rat(1)}),
                              Elem(Quat{Rat(1), Rat(1), Rat(0), Rat(0)})}) {
            Elem b = R.conj_value(a, c);
            if (b == a) continue;
            MinPolyResult mp = min_poly(AlgebraicSet(R, {a, b}));
            if (mp.rank == 2 && mp.f == e) return mp.p_basis;
        }
    }
    throw CapabilityError("no materializable P-basis for the invariant factor");
}

MatK block_diag(const Ring& R, const std::vector<MatK>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    MatK out(R, n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return out;
}

}  // namespace

bool is_sd_diagonalizable(const MatK& A, const Options& opts) {
    auto efs = invariant_factors(A);
    if (efs.empty()) throw InvariantBreach("no invariant factors");
    return is_wedderburn(efs.back(), opts).verdict == Verdict::Yes;
}

DiagonalizeResult diagonalize(const MatK& A, const Options& opts) {
    const Ring& R = A.ring();
    JacobsonForm jf = jacobson_form(A);
    auto efs = jf.invariant_factors();
    if (efs.empty()) throw InvariantBreach("no invariant factors");
    DiagonalizeResult out;
    if (is_wedderburn(efs.back(), opts).verdict != Verdict::Yes) return out;
    out.diagonalizable = true;

    MatK p1inv = invariant_block_transform(A, jf);
    std::vector<MatK> blocks;
    for (const OrePoly& e : efs) {
        std::vector<Elem> basis = w_poly_basis(e, opts);
        MatK v = vandermonde(R, basis);
        auto vinv = v.inverse();
        if (!vinv) throw InvariantBreach("Vandermonde of a P-basis is singular");
        blocks.push_back(*vinv);
    }
    MatK ptotal = block_diag(R, blocks) * p1inv;
    MatK d = sd_transform(A, ptotal);
    if (!d.is_diagonal()) throw InvariantBreach("diagonalization witness failed");
    out.transform = ptotal;
    out.diagonal = d;
    return out;
}

std::optional<std::vector<OrePoly>> linear_split(const OrePoly& f, const Options& opts,
                                                 const std::vector<Elem>& hints) {
    const Ring& R = f.ring();
    if (!f.is_monic()) throw Error("non-monic", "linear splitting needs a monic polynomial");
    if (f.deg() == 0) return std::vector<OrePoly>{};
    if (f.deg() == 1) return std::vector<OrePoly>{f};

    std::optional<Elem> root;
    for (const Elem& h : hints) {
        if (R.is_zero(f.eval(h))) {
            root = h;
            break;
        }
    }
    if (!root) {
        switch (R.family()) {
            case Family::FiniteField:
                for (const Elem& a : R.all_elements())
                    if (R.is_zero(f.eval(a))) {
                        root = a;
                        break;
                    }
                break;
            case Family::Rationals: {
                auto rr = rational_roots(f);
                if (!rr.empty()) root = Elem(rr.front());
                break;
            }
            case Family::Quaternions: {
                RootSet rs = roots(f, RootSide::Right, opts);  // degree <= 2 central
                if (!rs.roots.empty()) root = rs.roots.front();
                break;
            }
            case Family::RationalFunctions:
                throw CapabilityError("root search is not available over Q(x)");
        }
    }
    if (!root) return std::nullopt;
    auto [quot, rem] = right_divmod(f, OrePoly::t_minus(R, *root));
    if (!rem.is_zero()) throw InvariantBreach("claimed root fails to divide");
    auto rest = linear_split(quot.monic(), opts, hints);
    if (!rest) return std::nullopt;
    rest->push_back(OrePoly::t_minus(R, *root));
    OrePoly prod = OrePoly::one(R);
    for (const auto& fac : *rest) prod = prod * fac;
    if (!(prod == f)) throw InvariantBreach("linear factors fail to re-multiply");
    return rest;
}

bool is_sd_triangularizable(const MatK& A, const Options& opts) {
    auto efs = invariant_factors(A);
    if (efs.empty()) throw InvariantBreach("no invariant factors");
    return linear_split(efs.back(), opts).has_value();
}

TriangularizeResult triangularize(const MatK& A, const Options& opts) {
    const Ring& R = A.ring();
    JacobsonForm jf = jacobson_form(A);
    auto efs = jf.invariant_factors();
    if (efs.empty()) throw InvariantBreach("no invariant factors");
    TriangularizeResult out;
    if (!linear_split(efs.back(), opts)) return out;
    out.triangularizable = true;

    MatK p1inv = invariant_block_transform(A, jf);
    std::vector<MatK> blocks;
    for (const OrePoly& e : efs) {
        auto split = linear_split(e, opts);
        if (!split)
            throw InvariantBreach("divisor of a split polynomial failed to split");
        // chain basis 1, (t-a_1), (t-a_2)(t-a_1), ... written in powers of t
        std::size_t k = static_cast<std::size_t>(e.deg());
        MatK w(R, k, k);
        OrePoly u = OrePoly::one(R);
        for (std::size_t s = 0; s < k; ++s) {
            for (int d = 0; d <= u.deg(); ++d)
                w.at(s, static_cast<std::size_t>(d)) = u.coeff(static_cast<std::size_t>(d));
            u = (*split)[split->size() - 1 - s] * u;
        }
        blocks.push_back(w);
    }
    MatK ptotal = block_diag(R, blocks) * p1inv;
    MatK t = sd_transform(A, ptotal);
    if (!t.is_upper_triangular()) throw InvariantBreach("triangularization witness failed");
    out.transform = ptotal;
    out.triangular = t;
    return out;
}

namespace {

std::vector<Elem> class_members(const Ring& R, const Elem& rep) {
    std::vector<Elem> out;
    if (R.is_finite()) {
        for (const Elem& x : R.all_elements())
            if (R.same_class(rep, x)) out.push_back(x);
        std::sort(out.begin(), out.end(), elem_less);
    } else {
        out.push_back(rep);  // classical commutative: classes are singletons
    }
    return out;
}

// solve T_A(v) = alpha v (left) or L_A(u) = u beta (right) for a nonzero
// witness by prime-coordinate linear algebra
std::vector<Elem> eigen_witness(const MatK& A, const Elem& value, bool left) {
    const Ring& R = A.ring();
    std::size_t n = A.rows();
    auto op = [&](const std::vector<Elem>& vec) {
        std::vector<Elem> r = left ? t_action(A, vec) : l_action(A, vec);
        for (std::size_t i = 0; i < n; ++i)
            r[i] = left ? R.sub(r[i], R.mul(value, vec[i])) : R.sub(r[i], R.mul(vec[i], value));
        return r;
    };
    if (R.is_finite()) {
        int p = R.p(), m = R.m();
        std::size_t unknowns = n * static_cast<std::size_t>(m);
        std::vector<std::vector<int>> M(unknowns, std::vector<int>(unknowns, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k) {
                std::uint64_t pk = 1;
                for (int t = 0; t < k; ++t) pk *= static_cast<std::uint64_t>(p);
                std::vector<Elem> basis(n, R.zero());
                basis[i] = R.elem_at(pk);
                auto img = op(basis);
                for (std::size_t r = 0; r < n; ++r) {
                    const FqElem& e = img[r].fq();
                    for (int d = 0; d < m; ++d)
                        M[r * static_cast<std::size_t>(m) + static_cast<std::size_t>(d)]
                         [i * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)] =
                             e.c[static_cast<std::size_t>(d)];
                }
            }
        auto ker = kernel_modp(std::move(M), p);
        if (!ker) throw InvariantBreach("eigenvalue without an eigenvector");
        std::vector<Elem> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            FqElem e;
            e.m = static_cast<std::uint8_t>(m);
            for (int d = 0; d < m; ++d)
                e.c[static_cast<std::size_t>(d)] = static_cast<std::uint8_t>(
                    (*ker)[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(d)]);
            out[i] = Elem(e);
        }
        return out;
    }
    if (R.family() == Family::Rationals) {
        std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Elem> basis(n, R.zero());
            basis[i] = R.one();
            auto img = op(basis);
            for (std::size_t r = 0; r < n; ++r) M[r][i] = img[r].rat();
        }
        auto ker = kernel_rat(std::move(M));
        if (!ker) throw InvariantBreach("eigenvalue without an eigenvector");
        std::vector<Elem> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = Elem((*ker)[i]);
        return out;
    }
    throw CapabilityError("eigenvector recovery needs a finite context or Q");
}

void verify_eigen(const MatK& A, const Elem& value, const std::vector<Elem>& vec, bool left) {
    const Ring& R = A.ring();
    bool nonzero = false;
    for (const auto& v : vec) nonzero = nonzero || !R.is_zero(v);
    if (!nonzero) throw InvariantBreach("zero eigenvector");
    auto img = left ? t_action(A, vec) : l_action(A, vec);
    for (std::size_t i = 0; i < vec.size(); ++i) {
        Elem want = left ? R.mul(value, vec[i]) : R.mul(vec[i], value);
        if (!(img[i] == want)) throw InvariantBreach("eigenpair fails to verify");
    }
}

std::vector<EigenClass> group_into_classes(const Ring& R,
                                           const std::vector<std::pair<Elem, std::vector<Elem>>>&
                                               pairs) {
    std::vector<EigenClass> out;
    for (const auto& [val, wit] : pairs) {
        bool placed = false;
        for (auto& cls : out) {
            if (R.same_class(cls.rep, val)) {
                if (std::find(cls.members.begin(), cls.members.end(), val) == cls.members.end())
                    cls.members.push_back(val);
                placed = true;
                break;
            }
        }
        if (!placed) {
            EigenClass cls;
            cls.rep = val;
            cls.members = {val};
            cls.witness = wit;
            out.push_back(std::move(cls));
        }
    }
    for (auto& cls : out) std::sort(cls.members.begin(), cls.members.end(), elem_less);
    return out;
}

}  // namespace

SpectrumReport spectra(const MatK& A, SpectrumMethod method, const Options& opts) {
    const Ring& R = A.ring();
    std::size_t n = A.rows();
    JacobsonForm jf = jacobson_form(A);
    auto efs = jf.invariant_factors();
    SpectrumReport rep{{}, {}, method, efs.back()};

    if (method == SpectrumMethod::Brute) {
        std::vector<std::pair<Elem, std::vector<Elem>>> lpairs, rpairs;
        auto consider = [&](const std::vector<Elem>& vec) {
            // left: T_A(v) = alpha v
            auto tv = t_action(A, vec);
            std::size_t idx = n;
            for (std::size_t i = 0; i < n; ++i)
                if (!R.is_zero(vec[i])) {
                    idx = i;
                    break;
                }
            if (idx == n) return;
            Elem alpha = R.mul(tv[idx], R.inv(vec[idx]));
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) ok = tv[i] == R.mul(alpha, vec[i]);
            if (ok) lpairs.emplace_back(alpha, vec);
            // right: L_A(u) = u beta
            auto lu = l_action(A, vec);
            Elem beta = R.mul(R.inv(vec[idx]), lu[idx]);
            ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) ok = lu[i] == R.mul(vec[i], beta);
            if (ok) rpairs.emplace_back(beta, vec);
        };
        if (R.is_finite()) {
            std::uint64_t q = R.size();
            std::uint64_t total = 1;
            bool overflow = false;
            for (std::size_t i = 0; i < n; ++i) {
                total *= q;
                if (total > opts.max_enum) overflow = true;
            }
            if (overflow) throw CapabilityError("eigenvector enumeration exceeds the cap");
            for (std::uint64_t v = 1; v < total; ++v) {
                std::uint64_t t = v;
                std::vector<Elem> vec(n);
                for (std::size_t i = 0; i < n; ++i) {
                    vec[i] = R.elem_at(t % q);
                    t /= q;
                }
                consider(vec);
            }
        } else if (R.family() == Family::Rationals) {
            // bounded-height sanity grid, projectively normalized
            std::vector<Elem> grid;
            for (long num = -3; num <= 3; ++num)
                for (long den = 1; den <= 2; ++den) grid.push_back(Elem(Rat(num, den)));
            for (std::size_t lead = 0; lead < n; ++lead) {
                std::size_t free = n - lead - 1;
                std::uint64_t total = 1;
                for (std::size_t i = 0; i < free; ++i) total *= grid.size();
                for (std::uint64_t v = 0; v < total; ++v) {
                    std::vector<Elem> vec(n, R.zero());
                    vec[lead] = R.one();
                    std::uint64_t t = v;
                    for (std::size_t i = lead + 1; i < n; ++i) {
                        vec[i] = grid[t % grid.size()];
                        t /= grid.size();
                    }
                    consider(vec);
                }
            }
        } else {
            throw CapabilityError("brute spectra need a finite context or Q");
        }
        rep.lspec = group_into_classes(R, lpairs);
        rep.rspec = group_into_classes(R, rpairs);
        for (auto& cls : rep.lspec) verify_eigen(A, cls.rep, cls.witness, true);
        for (auto& cls : rep.rspec) verify_eigen(A, cls.rep, cls.witness, false);
        return rep;
    }

    // via_roots: rspec from V(e_r), lspec from V'(e_r), closed under conjugacy
    RootSet vr = roots(efs.back(), RootSide::Right, opts);
    RootSet vl = roots(efs.back(), RootSide::Left, opts);
    auto build = [&](const RootSet& rs, bool left) {
        std::vector<EigenClass> out;
        for (const auto& rcls : rs.classes) {
            if (!rcls.enumerated)
                throw CapabilityError("spectrum classes are infinite in this context");
            EigenClass cls;
            cls.rep = *rcls.rep;
            cls.members = class_members(R, cls.rep);
            cls.witness = eigen_witness(A, cls.rep, left);
            verify_eigen(A, cls.rep, cls.witness, left);
            out.push_back(std::move(cls));
        }
        return out;
    };
    rep.rspec = build(vr, false);
    rep.lspec = build(vl, true);
    std::size_t total_classes = rep.rspec.size();
    for (const auto& lc : rep.lspec) {
        bool merged = false;
        for (const auto& rc : rep.rspec) merged = merged || R.same_class(lc.rep, rc.rep);
        if (!merged) ++total_classes;
    }
    if (total_classes > static_cast<std::size_t>(efs.back().deg()))
        throw InvariantBreach("spectrum meets more classes than deg e_r");
    return rep;
}

RootSet transport_roots(const OrePoly& q, const OrePoly& g, const RootSet& vg) {
    const Ring& R = q.ring();
    if (!rgcd(q, g).is_one()) throw Error("not-coprime", "transport needs Rq + Rg = R");
    OrePoly fq = transform(g, q);
    std::vector<Elem> images;
    for (const Elem& a : vg.roots) {
        Elem y = phi(q, a);
        if (!R.is_zero(fq.eval(y))) throw InvariantBreach("transported point is not a root");
        if (std::find(images.begin(), images.end(), y) != images.end())
            throw InvariantBreach("phi_q is not injective on the root set");
        images.push_back(y);
    }
    if (R.is_finite()) {
        RootSet direct = roots(fq, RootSide::Right);
        std::vector<Elem> a = images, b = direct.roots;
        std::sort(a.begin(), a.end(), elem_less);
        std::sort(b.begin(), b.end(), elem_less);
        if (a != b) throw InvariantBreach("transported roots differ from V(g^q)");
        return direct;
    }
    RootSet out{fq, RootSide::Right, images, {}};
    for (std::size_t i = 0; i < images.size(); ++i) {
        bool placed = false;
        for (auto& cls : out.classes) {
            if (R.same_class(*cls.rep, images[i])) {
                cls.members.push_back(images[i]);
                placed = true;
                break;
            }
        }
        if (!placed) {
            RootClass cls;
            cls.rep = images[i];
            cls.members = {images[i]};
            // phi_q preserves classes and E-space ranks; carry the source dim
            for (const auto& src : vg.classes) {
                if (src.rep && R.same_class(*src.rep, vg.roots[i])) {
                    cls.e_dim = src.e_dim;
                    break;
                }
            }
            out.classes.push_back(std::move(cls));
        }
    }
    return out;
}

}  // namespace skewlab
