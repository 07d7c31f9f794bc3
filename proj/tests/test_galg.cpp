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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "skewlab/galg.hpp"

using namespace skewlab;

namespace {

const Ring HQ = Ring::quaternions();

Elem quat(long w, long x, long y, long z) {
    return Elem(Quat{Rat(w), Rat(x), Rat(y), Rat(z)});
}

const Elem qi = quat(0, 1, 0, 0);
const Elem qj = quat(0, 0, 1, 0);
const Elem qk = quat(0, 0, 0, 1);

AutGroup group_id_inti() { return AutGroup::closure(HQ, {Aut::inner(HQ, qi)}); }

/// Independent oracle: classical minimal polynomial of a over F_p via linear
/// dependence of the powers 1, a, a^2, ... in prime-field coordinates.
OrePoly minpoly_oracle(const Ring& R, const Elem& a) {
    int p = R.p(), m = R.m();
    std::vector<std::vector<int>> rows;   // coordinates of a^k
    for (int k = 0;; ++k) {
        Elem ak = R.pow(a, static_cast<unsigned>(k));
        std::vector<int> coords(static_cast<std::size_t>(m));
        for (int d = 0; d < m; ++d) coords[static_cast<std::size_t>(d)] = ak.fq().c[static_cast<std::size_t>(d)];
        rows.push_back(coords);
        // look for a dependency sum c_k a^k = 0 with c_k in F_p, c_last = 1
        // by solving over F_p: try to express a^k in terms of lower powers
        std::vector<std::vector<int>> sys(static_cast<std::size_t>(m),
                                          std::vector<int>(static_cast<std::size_t>(k), 0));
        std::vector<int> rhs(static_cast<std::size_t>(m), 0);
        for (int d = 0; d < m; ++d) {
            for (int kk = 0; kk < k; ++kk)
                sys[static_cast<std::size_t>(d)][static_cast<std::size_t>(kk)] =
                    rows[static_cast<std::size_t>(kk)][static_cast<std::size_t>(d)];
            rhs[static_cast<std::size_t>(d)] = rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
        }
        // tiny Gaussian elimination over F_p
        auto sol = [&]() -> std::optional<std::vector<int>> {
            std::size_t R_ = sys.size(), C_ = static_cast<std::size_t>(k);
            std::vector<std::size_t> pivots;
            std::size_t rank = 0;
            auto invp = [&](int v) {
                int r = 1, b = ((v % p) + p) % p;
                for (int e = p - 2; e > 0; e >>= 1) {
                    if (e & 1) r = r * b % p;
                    b = b * b % p;
                }
                return r;
            };
            for (std::size_t c = 0; c < C_ && rank < R_; ++c) {
                std::size_t piv = R_;
                for (std::size_t r = rank; r < R_; ++r)
                    if (sys[r][c] % p != 0) {
                        piv = r;
                        break;
                    }
                if (piv == R_) continue;
                std::swap(sys[piv], sys[rank]);
                std::swap(rhs[piv], rhs[rank]);
                int iv = invp(sys[rank][c]);
                for (auto& v : sys[rank]) v = v * iv % p;
                rhs[rank] = rhs[rank] * iv % p;
                for (std::size_t r = 0; r < R_; ++r) {
                    if (r == rank) continue;
                    int f = ((sys[r][c] % p) + p) % p;
                    if (!f) continue;
                    for (std::size_t cc = 0; cc < C_; ++cc)
                        sys[r][cc] = ((sys[r][cc] - f * sys[rank][cc]) % p + p) % p;
                    rhs[r] = ((rhs[r] - f * rhs[rank]) % p + p) % p;
                }
                pivots.push_back(c);
                ++rank;
            }
            for (std::size_t r = rank; r < R_; ++r)
                if (((rhs[r] % p) + p) % p != 0) return std::nullopt;
            std::vector<int> x(C_, 0);
            for (std::size_t r = 0; r < rank; ++r) x[pivots[r]] = ((rhs[r] % p) + p) % p;
            return x;
        }();
        if (sol) {
            // a^k = sum c_kk a^kk  =>  minimal polynomial t^k - sum c_kk t^kk
            std::vector<Elem> coeffs(static_cast<std::size_t>(k) + 1);
            for (int kk = 0; kk < k; ++kk)
                coeffs[static_cast<std::size_t>(kk)] =
                    R.neg(R.from_int((*sol)[static_cast<std::size_t>(kk)]));
            coeffs[static_cast<std::size_t>(k)] = R.one();
            return OrePoly(R, std::move(coeffs));
        }
    }
}

}  // namespace

TEST_CASE("orbits over the quaternions") {
    AutGroup G = group_id_inti();
    CHECK(G.size() == 2);

    OrbitDecomposition oj = orbit(G, qj);
    REQUIRE(oj.orbit.size() == 2);  // {j, -j}
    CHECK(std::find(oj.orbit.begin(), oj.orbit.end(), HQ.neg(qj)) != oj.orbit.end());
    CHECK(oj.stabilizer.size() == 2);  // -j = j^i: one class
    CHECK(oj.pieces.size() == 1);

    OrbitDecomposition oa = orbit(G, HQ.add(qi, qj));
    REQUIRE(oa.orbit.size() == 2);  // {i+j, i-j}
    CHECK(oa.stabilizer.size() == 2);
    CHECK(oa.pieces.size() == 1);
}

TEST_CASE("orbit over F16 under the Frobenius group") {
    Ring F16 = Ring::finite_field(2, 4, 0);  // classical context
    AutGroup G = AutGroup::closure(F16, {Aut::frobenius(1)});
    CHECK(G.size() == 4);
    Elem w = F16.generator();
    OrbitDecomposition od = orbit(G, w);
    CHECK(od.orbit.size() == 4);
    CHECK(od.stabilizer.size() == 1);  // commutative: classes are singletons
    CHECK(od.pieces.size() == 4);
    for (auto& p : od.pieces) CHECK(p.size() == 1);
}

TEST_CASE("G-minimal polynomials") {
    AutGroup G = group_id_inti();
    GPolyResult pj = g_min_poly(G, AlgebraicSet(HQ, {qj}));
    CHECK(pj.f == OrePoly(HQ, {HQ.one(), HQ.zero(), HQ.one()}));  // t^2 + 1
    CHECK(pj.coeffs_in_fixed_ring);
    REQUIRE(pj.linear_factors.has_value());
    CHECK((*pj.linear_factors)[0] * (*pj.linear_factors)[1] == pj.f);

    GPolyResult pa = g_min_poly(G, AlgebraicSet(HQ, {HQ.add(qi, qj)}));
    CHECK(pa.f == OrePoly(HQ, {HQ.from_int(2), HQ.zero(), HQ.one()}));  // t^2 + 2

    Ring F16 = Ring::finite_field(2, 4, 0);
    AutGroup GF = AutGroup::closure(F16, {Aut::frobenius(1)});
    Elem w = F16.generator();
    GPolyResult pw = g_min_poly(GF, AlgebraicSet(F16, {w}));
    CHECK(pw.f == minpoly_oracle(F16, w));
}

TEST_CASE("rank reports") {
    AutGroup G = group_id_inti();
    GRankReport ra = rank_report(G, HQ.add(qi, qj));
    CHECK(ra.rk_orbit == 2);
    CHECK(ra.index == 1);
    CHECK(ra.rk_piece == 2);

    Ring F16 = Ring::finite_field(2, 4, 0);
    AutGroup GF = AutGroup::closure(F16, {Aut::frobenius(1)});
    GRankReport rw = rank_report(GF, F16.generator());
    CHECK(rw.rk_orbit == 4);
    CHECK(rw.index == 4);
    CHECK(rw.rk_piece == 1);

    // central element: 1 = 1 * 1
    GRankReport rc = rank_report(G, HQ.from_int(3));
    CHECK(rc.rk_orbit == 1);
    CHECK(rc.index == 1);
    CHECK(rc.rk_piece == 1);
}

TEST_CASE("fullness verdicts") {
    Ring F4c = Ring::finite_field(2, 2, 0);
    CHECK(is_full(AlgebraicSet(F4c, {F4c.one()})) == FullVerdict::Full);

    CHECK(is_full(AlgebraicSet(HQ, {qj, HQ.neg(qj)})) == FullVerdict::NotFull);
    CHECK(is_full(AlgebraicSet(HQ, {HQ.add(qi, qj), HQ.sub(qi, qj)})) == FullVerdict::NotFull);
    CHECK(is_full(AlgebraicSet(HQ, {qk})) == FullVerdict::Full);  // singleton
}

TEST_CASE("irreducibility over the fixed ring") {
    AutGroup G = group_id_inti();
    GPolyResult pa = g_min_poly(G, AlgebraicSet(HQ, {HQ.add(qi, qj)}));  // t^2+2
    CHECK(irreducible_over_fixed(G, pa));

    GPolyResult pj = g_min_poly(G, AlgebraicSet(HQ, {qj}));  // t^2+1 over Q(i)
    CHECK_FALSE(irreducible_over_fixed(G, pj));              // (t+i)(t-i)

    // t^2+t+1 over F2: irreducible (no root in the fixed field F2)
    Ring F4c = Ring::finite_field(2, 2, 0);
    AutGroup GF = AutGroup::closure(F4c, {Aut::frobenius(1)});
    Elem w = F4c.generator();
    GPolyResult pw = g_min_poly(GF, AlgebraicSet(F4c, {w}));
    CHECK(pw.f.deg() == 2);  // t^2 + t + 1, the minimal polynomial of w
    CHECK(irreducible_over_fixed(GF, pw));
}

TEST_CASE("central factorization over the quaternions") {
    OrePoly t2p1 = OrePoly(HQ, {HQ.one(), HQ.zero(), HQ.one()});
    auto f1 = central_factorize(t2p1);
    REQUIRE(f1.has_value());
    CHECK((*f1)[0] == OrePoly(HQ, {qi, HQ.one()}));     // t + i
    CHECK((*f1)[1] == OrePoly::t_minus(HQ, qi));        // t - i

    OrePoly t2p2 = OrePoly(HQ, {HQ.from_int(2), HQ.zero(), HQ.one()});
    auto f2 = central_factorize(t2p2, {HQ.add(qi, qj)});
    REQUIRE(f2.has_value());
    CHECK((*f2)[1] == OrePoly::t_minus(HQ, HQ.add(qi, qj)));
    CHECK((*f2)[0] * (*f2)[1] == t2p2);

    // t - a is its own factorization
    auto f3 = central_factorize(OrePoly::t_minus(HQ, HQ.from_int(4)));
    REQUIRE(f3.has_value());
    CHECK(f3->size() == 1);

    // t^2 - 2 has no quaternion roots at all
    OrePoly t2m2 = OrePoly(HQ, {HQ.from_int(-2), HQ.zero(), HQ.one()});
    CHECK_FALSE(central_factorize(t2m2).has_value());
}

TEST_CASE("coset/class correspondence across the implemented groups") {
    // sigma G_a = tau G_a iff sigma(a) and tau(a) are in the same class
    std::vector<std::pair<AutGroup, std::vector<Elem>>> cases;
    cases.emplace_back(group_id_inti(),
                       std::vector<Elem>{qi, qj, qk, HQ.add(qi, qj), HQ.from_int(2)});
    AutGroup quat4 = AutGroup::closure(HQ, {Aut::inner(HQ, qi), Aut::inner(HQ, qj)});
    CHECK(quat4.size() == 4);
    cases.emplace_back(quat4, std::vector<Elem>{qi, qj, HQ.add(qi, qj)});
    Ring F16 = Ring::finite_field(2, 4, 0);
    AutGroup GF = AutGroup::closure(F16, {Aut::frobenius(1)});
    std::vector<Elem> f16elems;
    for (auto& e : F16.all_elements()) f16elems.push_back(e);
    cases.emplace_back(GF, f16elems);

    for (auto& [G, elems] : cases) {
        for (const Elem& a : elems) {
            OrbitDecomposition od = orbit(G, a);
            auto in_stab = [&](std::size_t s) {
                return std::find(od.stabilizer.begin(), od.stabilizer.end(), s) !=
                       od.stabilizer.end();
            };
            for (std::size_t s = 0; s < G.size(); ++s)
                for (std::size_t t = 0; t < G.size(); ++t) {
                    bool same_coset = in_stab(G.compose(G.inverse(s), t));
                    bool same_cls = G.ring().same_class(G.apply(s, a), G.apply(t, a));
                    CHECK(same_coset == same_cls);
                }
        }
    }
}

TEST_CASE("Galois consistency over F16: all 16 elements") {
    Ring F16 = Ring::finite_field(2, 4, 0);
    AutGroup G = AutGroup::closure(F16, {Aut::frobenius(1)});
    for (const Elem& a : F16.all_elements()) {
        GPolyResult gp = g_min_poly(G, AlgebraicSet(F16, {a}));
        CHECK(gp.f == minpoly_oracle(F16, a));
        GRankReport rep = rank_report(G, a);
        CHECK(rep.rk_orbit == rep.index * rep.rk_piece);
    }
}

TEST_CASE("irreducibility of f_{G.a} matches the root criterion, deg <= 3") {
    // over F8/F2 (degrees 1 and 3) and F4/F2 (degrees 1 and 2):
    // f_{G.a} irreducible iff every root b in K has f_{G.b} = f_{G.a}
    for (Ring R : {Ring::finite_field(2, 3, 0), Ring::finite_field(2, 2, 0)}) {
        AutGroup G = AutGroup::closure(R, {Aut::frobenius(1)});
        for (const Elem& a : R.all_elements()) {
            GPolyResult gp = g_min_poly(G, AlgebraicSet(R, {a}));
            if (gp.f.deg() > 3) continue;
            bool all_match = true;
            for (const Elem& b : R.all_elements()) {
                if (!R.is_zero(gp.f.eval(b))) continue;
                GPolyResult gb = g_min_poly(G, AlgebraicSet(R, {b}));
                all_match = all_match && gb.f == gp.f;
            }
            CHECK(irreducible_over_fixed(G, gp) == all_match);
        }
    }
}

TEST_CASE("fixed-ring membership always holds for G-polynomials") {
    AutGroup G = group_id_inti();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Elem a = HQ.random_elem(rng);
        GPolyResult gp = g_min_poly(G, AlgebraicSet(HQ, {a}));
        CHECK(gp.coeffs_in_fixed_ring);  // would have thrown otherwise
        CHECK(gp.degree <= 2 * 1 + 2);
    }
}
