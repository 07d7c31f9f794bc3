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

#include "skewlab/pltmat.hpp"

#include <algorithm>

#include "skewlab/linsolve.hpp"

namespace skewlab {

namespace {

MatK metro_op(const MatK& ch, const MatK& cg, const MatK& x) {
    return ch * x - x.map_S() * cg - x.map_D();
}

MatK unit_corner(const Ring& R, std::size_t n, std::size_t l) {
    MatK u(R, n, l);
    u.at(n - 1, 0) = R.one();
    return u;
}

// The metro operator is linear over the prime coordinates of K; solve by
// materializing one column per unknown coordinate.
std::optional<MatK> metro_linear_solve(const Ring& R, const MatK& ch, const MatK& cg,
                                       const MatK& u) {
    std::size_t n = ch.rows(), l = cg.rows();
    if (R.family() == Family::FiniteField) {
        int p = R.p(), m = R.m();
        std::size_t unknowns = n * l * static_cast<std::size_t>(m);
        std::vector<std::vector<int>> A(unknowns, std::vector<int>(unknowns, 0));
        std::vector<int> b(unknowns, 0);
        auto flat = [&](const MatK& mat, std::vector<int>& out) {
            out.clear();
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < l; ++c) {
                    const FqElem& e = mat.at(r, c).fq();
                    for (int k = 0; k < m; ++k) out.push_back(e.c[static_cast<std::size_t>(k)]);
                }
        };
        std::vector<int> column;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < l; ++c)
                for (int k = 0; k < m; ++k) {
                    std::uint64_t pk = 1;
                    for (int i = 0; i < k; ++i) pk *= static_cast<std::uint64_t>(p);
                    MatK basis(R, n, l);
                    basis.at(r, c) = R.elem_at(pk);
                    flat(metro_op(ch, cg, basis), column);
                    std::size_t cidx = (r * l + c) * static_cast<std::size_t>(m) +
                                       static_cast<std::size_t>(k);
                    for (std::size_t row = 0; row < unknowns; ++row) A[row][cidx] = column[row];
                }
        flat(u, column);
        b = column;
        auto sol = solve_modp(std::move(A), std::move(b), p);
        if (!sol) return std::nullopt;
        MatK x(R, n, l);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < l; ++c) {
                FqElem e;
                e.m = static_cast<std::uint8_t>(m);
                for (int k = 0; k < m; ++k)
                    e.c[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(
                        (*sol)[(r * l + c) * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)]);
                x.at(r, c) = Elem(e);
            }
        return x;
    }

    // rational coordinates: dimension 1 (Q) or 4 (HQ) per entry
    int dim = R.family() == Family::Quaternions ? 4 : 1;
    auto coords = [&](const Elem& e, std::vector<Rat>& out) {
        if (dim == 1) {
            out.push_back(e.rat());
        } else {
            const Quat& q = e.quat();
            out.push_back(q.w);
            out.push_back(q.x);
            out.push_back(q.y);
            out.push_back(q.z);
        }
    };
    auto basis_elem = [&](int k) {
        if (dim == 1) return R.one();
        Quat q{Rat(0), Rat(0), Rat(0), Rat(0)};
        (k == 0 ? q.w : k == 1 ? q.x : k == 2 ? q.y : q.z) = 1;
        return Elem(q);
    };
    std::size_t unknowns = n * l * static_cast<std::size_t>(dim);
    std::vector<std::vector<Rat>> A(unknowns, std::vector<Rat>(unknowns, Rat(0)));
    std::vector<Rat> b;
    auto flat = [&](const MatK& mat, std::vector<Rat>& out) {
        out.clear();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < l; ++c) coords(mat.at(r, c), out);
    };
    std::vector<Rat> column;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < l; ++c)
            for (int k = 0; k < dim; ++k) {
                MatK basis(R, n, l);
                basis.at(r, c) = basis_elem(k);
                flat(metro_op(ch, cg, basis), column);
                std::size_t cidx =
                    (r * l + c) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k);
                for (std::size_t row = 0; row < unknowns; ++row) A[row][cidx] = column[row];
            }
    flat(u, b);
    auto sol = solve_rat(std::move(A), std::move(b));
    if (!sol) return std::nullopt;
    MatK x(R, n, l);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < l; ++c) {
            std::size_t base = (r * l + c) * static_cast<std::size_t>(dim);
            if (dim == 1) {
                x.at(r, c) = Elem((*sol)[base]);
            } else {
                x.at(r, c) =
                    Elem(Quat{(*sol)[base], (*sol)[base + 1], (*sol)[base + 2], (*sol)[base + 3]});
            }
        }
    return x;
}

// Bounded rational-function ansatz over Q(x): X = N / d entrywise with d a
// power of the common coefficient denominator and deg N bounded.
std::optional<MatK> metro_qx_solve(const Ring& R, const MatK& ch, const MatK& cg, const MatK& u,
                                   int bound) {
    std::size_t n = ch.rows(), l = cg.rows();
    // clear the companion entries: E = lcm of their denominators
    QxPoly E(Rat(1));
    auto fold_lcm = [&](const MatK& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const QxPoly& den = m.at(i, j).ratfn().den;
                QxPoly g = qx_gcd(E, den);
                E = (E * den).divmod(g).first.monic();
            }
    };
    fold_lcm(ch);
    fold_lcm(cg);
    auto cleared = [&](const MatK& m, std::size_t i, std::size_t j) {
        const RatFn& f = m.at(i, j).ratfn();
        return f.num * E.divmod(f.den).first;
    };
    int max_cleared = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            max_cleared = std::max(max_cleared, cleared(ch, i, k).deg());
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t k = 0; k < l; ++k)
            max_cleared = std::max(max_cleared, cleared(cg, i, k).deg());
    int kmax = E.deg() == 0 ? 0 : std::max(1, bound / std::max(1, E.deg()));
    for (int K = 0; K <= kmax; ++K) {
        QxPoly d(Rat(1));
        for (int i = 0; i < K; ++i) d = d * E;
        int B = bound;  // numerator degree bound
        std::size_t per = static_cast<std::size_t>(B + 1);
        std::size_t unknowns = n * l * per;
        int maxdeg = std::max(max_cleared + d.deg() + B, E.deg() + 2 * d.deg()) + 1;
        std::size_t eq_rows = n * l * static_cast<std::size_t>(maxdeg + 1);
        std::vector<std::vector<Rat>> A(eq_rows, std::vector<Rat>(unknowns, Rat(0)));
        std::vector<Rat> rhs(eq_rows, Rat(0));
        auto eq_index = [&](std::size_t r, std::size_t c, int s) {
            return (r * l + c) * static_cast<std::size_t>(maxdeg + 1) + static_cast<std::size_t>(s);
        };
        auto unk_index = [&](std::size_t r, std::size_t c, int j) {
            return (r * l + c) * per + static_cast<std::size_t>(j);
        };
        auto add_poly_times_unknown = [&](std::size_t er, std::size_t ec, const QxPoly& poly,
                                          std::size_t ur, std::size_t uc, const Rat& scale) {
            // equation entry (er,ec) += scale * poly * N[ur][uc]
            for (int s = 0; s <= poly.deg(); ++s) {
                Rat pc = poly.coeff(static_cast<std::size_t>(s)) * scale;
                if (pc == 0) continue;
                for (int j = 0; j <= B; ++j)
                    A[eq_index(er, ec, s + j)][unk_index(ur, uc, j)] += pc;
            }
        };
        QxPoly Ed = E * d;
        QxPoly Edp = E * d.derivative();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < l; ++c) {
                // sum_k (E ch[r,k]) d N[k,c]
                for (std::size_t k = 0; k < n; ++k)
                    add_poly_times_unknown(r, c, cleared(ch, r, k) * d, k, c, Rat(1));
                // - sum_k N[r,k] (E cg[k,c]) d
                for (std::size_t k = 0; k < l; ++k)
                    add_poly_times_unknown(r, c, cleared(cg, k, c) * d, r, k, Rat(-1));
                // - E (N' d - N d') = -Ed N' + Edp N
                for (int j = 1; j <= B; ++j) {
                    // N' coefficient j-1 is j*N_j
                    for (int s = 0; s <= Ed.deg(); ++s) {
                        Rat pc = Ed.coeff(static_cast<std::size_t>(s)) * Rat(j);
                        if (pc == 0) continue;
                        A[eq_index(r, c, s + j - 1)][unk_index(r, c, j)] -= pc;
                    }
                }
                add_poly_times_unknown(r, c, Edp, r, c, Rat(1));
                // rhs: E U[r,c] d^2
                if (!R.is_zero(u.at(r, c))) {
                    QxPoly target = E * d * d * u.at(r, c).ratfn().num;  // U entries are 0/1
                    for (int s = 0; s <= target.deg(); ++s)
                        rhs[eq_index(r, c, s)] = target.coeff(static_cast<std::size_t>(s));
                }
            }
        auto sol = solve_rat(std::move(A), std::move(rhs));
        if (!sol) continue;
        MatK x(R, n, l);
        bool ok = true;
        for (std::size_t r = 0; r < n && ok; ++r)
            for (std::size_t c = 0; c < l && ok; ++c) {
                std::vector<Rat> coeffs(per);
                for (int j = 0; j <= B; ++j)
                    coeffs[static_cast<std::size_t>(j)] = (*sol)[unk_index(r, c, j)];
                QxPoly num(std::move(coeffs));
                x.at(r, c) = R.div(Elem(RatFn{num, QxPoly(Rat(1))}),
                                   Elem(RatFn{d, QxPoly(Rat(1))}));
            }
        if (ok && metro_op(ch, cg, x) == u) return x;
    }
    return std::nullopt;  // bound exhausted: unknown
}

MetroInstance metro_generic(const OrePoly& g, const OrePoly& h, MatK cg, MatK ch,
                            const Options& opts) {
    const Ring& R = g.ring();
    std::size_t n = ch.rows(), l = cg.rows();
    MetroInstance out{g, h, ch, cg, unit_corner(R, n, l), MetroStatus::Unknown, std::nullopt, false};
    std::optional<MatK> x;
    switch (R.family()) {
        case Family::FiniteField:
        case Family::Rationals:
        case Family::Quaternions:
            x = metro_linear_solve(R, ch, cg, out.u);
            out.status = x ? MetroStatus::Solved : MetroStatus::NoSolution;
            break;
        case Family::RationalFunctions: {
            int bound = opts.ansatz_bound > 0 ? opts.ansatz_bound : 2 * (g.deg() + h.deg());
            x = metro_qx_solve(R, ch, cg, out.u, bound);
            out.status = x ? MetroStatus::Solved : MetroStatus::Unknown;
            break;
        }
    }
    if (x) {
        if (!(metro_op(ch, cg, *x) == out.u))
            throw InvariantBreach("metro solution failed substitution");
        out.x = std::move(x);
        out.verified = true;
    }
    return out;
}

}  // namespace

MetroInstance metro_solve(const OrePoly& g, const OrePoly& h, const Options& opts) {
    if (!g.ring().same(h.ring())) throw mixed_ctx();
    if (!g.is_monic() || !h.is_monic() || g.deg() < 1 || h.deg() < 1)
        throw Error("non-monic", "metro needs monic g, h of degree >= 1");
    return metro_generic(g, h, companion(g), companion(h), opts);
}

MetroInstance metro_solve_chain(const std::vector<OrePoly>& g_factors,
                                const std::vector<OrePoly>& h_factors, const Options& opts) {
    if (g_factors.empty() || h_factors.empty())
        throw Error("degree", "chain metro needs nonempty factorizations");
    const Ring& R = g_factors.front().ring();
    OrePoly g = OrePoly::one(R), h = OrePoly::one(R);
    for (const auto& f : g_factors) g = g * f;
    for (const auto& f : h_factors) h = h * f;
    return metro_generic(g, h, companion_chain(g_factors), companion_chain(h_factors), opts);
}

std::optional<std::pair<OrePoly, OrePoly>> cofactor_search(const OrePoly& g, const OrePoly& h,
                                                           const Options& opts) {
    const Ring& R = g.ring();
    if (!R.same(h.ring())) throw mixed_ctx();
    if (!g.is_monic() || !h.is_monic()) throw Error("non-monic", "cofactor search needs monic inputs");
    OrePoly one = OrePoly::one(R);
    if (g.is_one()) return std::make_pair(one, OrePoly::zero(R));
    if (h.is_one()) return std::make_pair(OrePoly::zero(R), one);

    auto verify = [&](const OrePoly& x, const OrePoly& y) {
        if (!(x * g + h * y == one)) throw InvariantBreach("cofactor witness fails");
    };

    switch (R.family()) {
        case Family::FiniteField: {
            // brute force over y with deg y < deg g (independent of the metro route)
            std::uint64_t q = R.size();
            std::size_t len = static_cast<std::size_t>(g.deg());
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < len; ++i) {
                total *= q;
                if (total > opts.max_enum)
                    throw CapabilityError("cofactor search exceeds enumeration cap");
            }
            for (std::uint64_t v = 0; v < total; ++v) {
                std::uint64_t t = v;
                std::vector<Elem> yc(len);
                for (std::size_t i = 0; i < len; ++i) {
                    yc[i] = R.elem_at(t % q);
                    t /= q;
                }
                OrePoly y(R, std::move(yc));
                auto [x, rem] = right_divmod(one - h * y, g);
                if (rem.is_zero()) {
                    verify(x, y);
                    return std::make_pair(x, y);
                }
            }
            return std::nullopt;
        }
        case Family::Rationals: {
            GcdExt e = rgcd_ext(g, h);
            if (!e.d.is_one()) return std::nullopt;
            // commutative: u g + v h = 1 gives x = u, y = v
            verify(e.u, e.v);
            return std::make_pair(e.u, e.v);
        }
        case Family::Quaternions: {
            // linear system in the coefficients of x (deg < deg h) and
            // y (deg < deg g): classical ring, so coefficients slide freely
            std::size_t nh = static_cast<std::size_t>(h.deg());
            std::size_t lg = static_cast<std::size_t>(g.deg());
            std::size_t unknowns = 4 * (nh + lg);
            std::size_t eqs = 4 * (nh + lg);  // coefficients 0 .. nh+lg-1
            std::vector<std::vector<Rat>> A(eqs, std::vector<Rat>(unknowns, Rat(0)));
            std::vector<Rat> b(eqs, Rat(0));
            b[0] = 1;  // constant coefficient of 1
            auto qcoord = [](const Quat& q, int k) {
                return k == 0 ? q.w : k == 1 ? q.x : k == 2 ? q.y : q.z;
            };
            auto unit = [](int k) {
                Quat q{Rat(0), Rat(0), Rat(0), Rat(0)};
                (k == 0 ? q.w : k == 1 ? q.x : k == 2 ? q.y : q.z) = 1;
                return q;
            };
            const Ring& H = R;
            // x_j g_i contributes to coefficient i+j; h_i y_j likewise
            for (std::size_t j = 0; j < nh; ++j)
                for (int k = 0; k < 4; ++k) {
                    std::size_t colidx = j * 4 + static_cast<std::size_t>(k);
                    for (int i = 0; i <= g.deg(); ++i) {
                        Elem prod = H.mul(Elem(unit(k)), g.coeff(static_cast<std::size_t>(i)));
                        std::size_t s = j + static_cast<std::size_t>(i);
                        for (int kk = 0; kk < 4; ++kk)
                            A[s * 4 + static_cast<std::size_t>(kk)][colidx] +=
                                qcoord(prod.quat(), kk);
                    }
                }
            for (std::size_t j = 0; j < lg; ++j)
                for (int k = 0; k < 4; ++k) {
                    std::size_t colidx = (nh + j) * 4 + static_cast<std::size_t>(k);
                    for (int i = 0; i <= h.deg(); ++i) {
                        Elem prod = H.mul(h.coeff(static_cast<std::size_t>(i)), Elem(unit(k)));
                        std::size_t s = j + static_cast<std::size_t>(i);
                        for (int kk = 0; kk < 4; ++kk)
                            A[s * 4 + static_cast<std::size_t>(kk)][colidx] +=
                                qcoord(prod.quat(), kk);
                    }
                }
            auto sol = solve_rat(std::move(A), std::move(b));
            if (!sol) return std::nullopt;
            std::vector<Elem> xc(nh), yc(lg);
            for (std::size_t j = 0; j < nh; ++j)
                xc[j] = Elem(Quat{(*sol)[j * 4], (*sol)[j * 4 + 1], (*sol)[j * 4 + 2],
                                  (*sol)[j * 4 + 3]});
            for (std::size_t j = 0; j < lg; ++j) {
                std::size_t base = (nh + j) * 4;
                yc[j] = Elem(Quat{(*sol)[base], (*sol)[base + 1], (*sol)[base + 2],
                                  (*sol)[base + 3]});
            }
            OrePoly x(R, std::move(xc)), y(R, std::move(yc));
            verify(x, y);
            return std::make_pair(x, y);
        }
        case Family::RationalFunctions:
            throw CapabilityError("cofactor search is not available over Q(x)");
    }
    throw InvariantBreach("bad family");
}

bool fully_reducible_check(const OrePoly& f, const Options& opts) {
    const Ring& R = f.ring();
    if (!R.is_finite()) throw CapabilityError("full reducibility needs a finite context");
    if (!f.is_monic() || f.deg() < 1)
        throw Error("non-monic", "full reducibility needs a monic polynomial of degree >= 1");
    std::uint64_t q = R.size();

    auto monic_divides_right = [&](const OrePoly& p) {
        return right_divmod(f, p).second.is_zero();
    };
    auto irreducible = [&](const OrePoly& p) {
        // no monic right factor of degree 1..deg-1
        for (int d = 1; d < p.deg(); ++d) {
            std::uint64_t total = 1;
            for (int i = 0; i < d; ++i) total *= q;
            for (std::uint64_t v = 0; v < total; ++v) {
                std::uint64_t t = v;
                std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
                for (int i = 0; i < d; ++i) {
                    c[static_cast<std::size_t>(i)] = R.elem_at(t % q);
                    t /= q;
                }
                c[static_cast<std::size_t>(d)] = R.one();
                if (right_divmod(p, OrePoly(R, std::move(c))).second.is_zero()) return false;
            }
        }
        return true;
    };

    std::optional<OrePoly> acc;
    std::uint64_t budget = 0;
    for (int d = 1; d <= f.deg(); ++d) {
        std::uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= q;
        budget += total;
        if (budget > opts.max_enum)
            throw CapabilityError("divisor enumeration exceeds the cap");
        for (std::uint64_t v = 0; v < total; ++v) {
            std::uint64_t t = v;
            std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = R.elem_at(t % q);
                t /= q;
            }
            c[static_cast<std::size_t>(d)] = R.one();
            OrePoly p(R, std::move(c));
            if (!monic_divides_right(p) || !irreducible(p)) continue;
            acc = acc ? llcm(*acc, p).m : p;
        }
    }
    return acc && *acc == f.monic();
}

Verdict product_w_check(const OrePoly& g, const OrePoly& h, const Options& opts) {
    const Ring& R = g.ring();
    if (R.is_finite() || R.family() == Family::Rationals || R.family() == Family::Quaternions) {
        WedderburnResult wg = is_wedderburn(g.monic(), opts);
        WedderburnResult wh = is_wedderburn(h.monic(), opts);
        if (wg.verdict != Verdict::Yes || wh.verdict != Verdict::Yes)
            throw Error("precondition", "product_w_check needs Wedderburn factors");
    }
    MetroInstance mi = metro_solve(g.monic(), h.monic(), opts);
    Verdict v = mi.status == MetroStatus::Solved
                    ? Verdict::Yes
                    : (mi.status == MetroStatus::NoSolution ? Verdict::No : Verdict::Unknown);
    if (R.is_finite()) {
        WedderburnResult direct = is_wedderburn((g * h).monic(), opts);
        Verdict expect = direct.verdict;
        if ((v == Verdict::Yes) != (expect == Verdict::Yes))
            throw InvariantBreach("metro and root-rank routes disagree on the product");
    }
    return v;
}

}  // namespace skewlab
