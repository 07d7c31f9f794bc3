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

#include <set>

#include "skewlab/canon.hpp"
#include "test_util.hpp"

using namespace skewlab;
using namespace skewlab::testutil;

namespace {

const Ring F4 = Ring::finite_field(2, 2, 1);
const Ring QQ = Ring::rationals();
const Ring HQ = Ring::quaternions();

OrePoly f4poly(std::initializer_list<int> idx) {
    std::vector<Elem> c;
    for (int i : idx) c.push_back(F4.elem_at(static_cast<std::uint64_t>(i)));
    return OrePoly(F4, std::move(c));
}

MatK f4mat(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Elem>> r;
    for (auto& row : rows) {
        std::vector<Elem> er;
        for (int v : row) er.push_back(F4.elem_at(static_cast<std::uint64_t>(v)));
        r.push_back(std::move(er));
    }
    return MatK::from_rows(F4, std::move(r));
}

MatK random_f4_2x2(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, 3);
    MatK A(F4, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) A.at(i, j) = F4.elem_at(dist(rng));
    return A;
}

std::multiset<std::vector<std::vector<int>>> class_fingerprint(const Ring& R,
                                                               const std::vector<EigenClass>& v) {
    // each class as its sorted member index list
    std::multiset<std::vector<std::vector<int>>> out;
    for (const auto& c : v) {
        std::vector<int> idx;
        for (const auto& e : c.members) idx.push_back(static_cast<int>(R.index_of(e)));
        std::sort(idx.begin(), idx.end());
        out.insert({idx});
    }
    return out;
}

}  // namespace

TEST_CASE("jacobson form keystone examples") {
    // [[0,1],[1,0]] over F4: diag(1, t^2+1)
    JacobsonForm jf = jacobson_form(f4mat({{0, 1}, {1, 0}}));
    REQUIRE(jf.diag.size() == 2);
    CHECK(jf.diag[0].is_one());
    CHECK(jf.diag[1] == f4poly({1, 0, 1}));
    CHECK(jf.non_units == 1);

    // diag(a, a) over Q: two invariant factors t - a
    MatK Aq(QQ, 2, 2);
    Aq.at(0, 0) = QQ.from_int(5);
    Aq.at(1, 1) = QQ.from_int(5);
    auto efs = invariant_factors(Aq);
    REQUIRE(efs.size() == 2);
    CHECK(efs[0] == OrePoly::t_minus(QQ, QQ.from_int(5)));
    CHECK(efs[1] == OrePoly::t_minus(QQ, QQ.from_int(5)));

    // diag(1, w) over F4: left-coprime linears produce one cyclic factor
    JacobsonForm jf2 = jacobson_form(f4mat({{1, 0}, {0, 2}}));
    REQUIRE(jf2.non_units == 1);
    CHECK(jf2.diag[1] == f4poly({1, 0, 1}));
}

TEST_CASE("invariant factors of companions") {
    auto e1 = invariant_factors(companion(f4poly({1, 0, 1})));
    REQUIRE(e1.size() == 1);
    CHECK(e1[0] == f4poly({1, 0, 1}));
    auto e2 = invariant_factors(companion(f4poly({0, 0, 1})));
    REQUIRE(e2.size() == 1);
    CHECK(e2[0] == f4poly({0, 0, 1}));
}

TEST_CASE("diagonalization verdicts and witnesses") {
    DiagonalizeResult d = diagonalize(companion(f4poly({1, 0, 1})));
    REQUIRE(d.diagonalizable);
    CHECK(d.diagonal->is_diagonal());
    // the verified witness transforms to diag(1, w) (the P-basis order)
    CHECK(d.diagonal->at(0, 0) == F4.one());
    CHECK(d.diagonal->at(1, 1) == F4.generator());
    CHECK(sd_transform(companion(f4poly({1, 0, 1})), *d.transform) == *d.diagonal);

    CHECK_FALSE(diagonalize(companion(f4poly({0, 0, 1}))).diagonalizable);
    CHECK(is_sd_triangularizable(companion(f4poly({0, 0, 1}))));

    MatK Aq(QQ, 2, 2);
    Aq.at(0, 0) = QQ.from_int(5);
    Aq.at(1, 1) = QQ.from_int(5);
    DiagonalizeResult dq = diagonalize(Aq);
    REQUIRE(dq.diagonalizable);
    CHECK(dq.diagonal->is_diagonal());
}

TEST_CASE("linear splitting") {
    auto s = linear_split(f4poly({1, 0, 1}));
    REQUIRE(s.has_value());
    REQUIRE(s->size() == 2);
    // first root found is 1, so the rightmost factor is t-1 = t+1
    CHECK((*s)[1] == f4poly({1, 1}));
    CHECK((*s)[0] * (*s)[1] == f4poly({1, 0, 1}));

    auto s2 = linear_split(f4poly({0, 0, 1}));
    REQUIRE(s2.has_value());
    CHECK((*s2)[0] == OrePoly::t(F4));
    CHECK((*s2)[1] == OrePoly::t(F4));

    // HQ: t^2+1 = (t+i)(t-i)
    Elem qi = Elem(Quat{Rat(0), Rat(1), Rat(0), Rat(0)});
    OrePoly f = OrePoly(HQ, {HQ.one(), HQ.zero(), HQ.one()});
    auto s3 = linear_split(f);
    REQUIRE(s3.has_value());
    CHECK((*s3)[0] == OrePoly(HQ, {qi, HQ.one()}));
    CHECK((*s3)[1] == OrePoly::t_minus(HQ, qi));

    // rotation block over Q: t^2+1 has no rational roots
    MatK rot(QQ, 2, 2);
    rot.at(0, 1) = QQ.one();
    rot.at(1, 0) = QQ.from_int(-1);
    CHECK_FALSE(is_sd_triangularizable(rot));
    CHECK_FALSE(diagonalize(rot).diagonalizable);
}

TEST_CASE("triangularization witnesses") {
    TriangularizeResult t = triangularize(companion(f4poly({0, 0, 1})));
    REQUIRE(t.triangularizable);
    CHECK(t.triangular->is_upper_triangular());

    // every F4 companion of degree 2 is triangularizable iff its last factor splits
    for_monic_of_degree(F4, 2, [&](const OrePoly& f) {
        bool splits = linear_split(f).has_value();
        TriangularizeResult tr = triangularize(companion(f));
        CHECK(tr.triangularizable == splits);
        if (tr.triangularizable) CHECK(tr.triangular->is_upper_triangular());
    });
}

TEST_CASE("spectra of the keystone matrix") {
    MatK A = f4mat({{0, 1}, {1, 0}});
    SpectrumReport brute = spectra(A, SpectrumMethod::Brute);
    SpectrumReport via = spectra(A, SpectrumMethod::ViaRoots);
    // rspec is the conjugacy closure of V(t^2+1) = F4^*
    REQUIRE(via.rspec.size() == 1);
    CHECK(via.rspec[0].members.size() == 3);
    CHECK(class_fingerprint(F4, brute.rspec) == class_fingerprint(F4, via.rspec));
    CHECK(class_fingerprint(F4, brute.lspec) == class_fingerprint(F4, via.lspec));

    // witness u = (1,1)^t for beta = 1 exists; ours is verified on return
    bool found_one = false;
    for (auto& c : brute.rspec)
        for (auto& m : c.members) found_one = found_one || m == F4.one();
    CHECK(found_one);
}

TEST_CASE("spectra over Q: rotation matrix has empty spectra") {
    MatK rot(QQ, 2, 2);
    rot.at(0, 1) = QQ.one();
    rot.at(1, 0) = QQ.from_int(-1);
    SpectrumReport via = spectra(rot, SpectrumMethod::ViaRoots);
    CHECK(via.rspec.empty());
    CHECK(via.lspec.empty());
    SpectrumReport brute = spectra(rot, SpectrumMethod::Brute);
    CHECK(brute.rspec.empty());
    CHECK(brute.lspec.empty());

    // diagonal over Q: each entry is an eigenvalue with a unit eigenvector
    MatK D(QQ, 2, 2);
    D.at(0, 0) = QQ.from_int(2);
    D.at(1, 1) = QQ.from_int(7);
    SpectrumReport s = spectra(D, SpectrumMethod::ViaRoots);
    CHECK(s.lspec.size() == 2);
    CHECK(s.rspec.size() == 2);
}

TEST_CASE("randomized canonical forms over F4 and F8") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 300; ++trial) {
        MatK A = random_f4_2x2(rng);
        JacobsonForm jf = jacobson_form(A);  // verify() runs inside
        int total = 0;
        for (auto& e : jf.diag) total += e.deg();
        CHECK(total == 2);
    }
    Ring F8 = Ring::finite_field(2, 3, 1);
    std::uniform_int_distribution<std::uint64_t> dist(0, 7);
    for (int trial = 0; trial < 200; ++trial) {
        MatK A(F8, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) A.at(i, j) = F8.elem_at(dist(rng));
        JacobsonForm jf = jacobson_form(A);
        int total = 0;
        for (auto& e : jf.diag) total += e.deg();
        CHECK(total == 2);
    }
}

TEST_CASE("left and right module structures give equal invariant factor degrees") {
    // right-module factors computed in the opposite context (S^-1, -D S^-1)
    // on the transposed matrix; over a commutative ground ring this is again
    // an Ore context of the supported shape
    Ring F4op = Ring::finite_field(2, 2, 1);  // Frobenius is an involution on F4
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        MatK A = random_f4_2x2(rng);
        MatK At(F4op, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) At.at(i, j) = A.at(j, i);
        auto left = invariant_factors(A);
        auto right = invariant_factors(At);
        REQUIRE(left.size() == right.size());
        for (std::size_t i = 0; i < left.size(); ++i) CHECK(left[i].deg() == right[i].deg());
    }
}

TEST_CASE("spectra agreement and class bound on a random family") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        MatK A = random_f4_2x2(rng);
        SpectrumReport brute = spectra(A, SpectrumMethod::Brute);
        SpectrumReport via = spectra(A, SpectrumMethod::ViaRoots);
        CHECK(class_fingerprint(F4, brute.rspec) == class_fingerprint(F4, via.rspec));
        CHECK(class_fingerprint(F4, brute.lspec) == class_fingerprint(F4, via.lspec));
        // class-count bound by deg e_r
        std::set<std::vector<int>> classes;
        for (auto& c : brute.rspec) {
            std::vector<int> idx;
            for (auto& m : c.members) idx.push_back(static_cast<int>(F4.index_of(m)));
            std::sort(idx.begin(), idx.end());
            classes.insert(idx);
        }
        for (auto& c : brute.lspec) {
            std::vector<int> idx;
            for (auto& m : c.members) idx.push_back(static_cast<int>(F4.index_of(m)));
            std::sort(idx.begin(), idx.end());
            classes.insert(idx);
        }
        CHECK(static_cast<int>(classes.size()) <= via.last_invariant_factor.deg());
    }
}

TEST_CASE("spectra closed under conjugation, exhaustive F4") {
    MatK A = f4mat({{0, 1}, {1, 0}});
    SpectrumReport s = spectra(A, SpectrumMethod::Brute);
    for (auto& cls : s.rspec)
        for (auto& m : cls.members)
            for (auto& c : F4.all_nonzero()) {
                Elem conj = F4.conj_value(m, c);
                bool present = false;
                for (auto& cls2 : s.rspec)
                    for (auto& m2 : cls2.members) present = present || m2 == conj;
                CHECK(present);
            }
}

TEST_CASE("transport of root sets") {
    OrePoly g = f4poly({1, 0, 1});
    RootSet vg = roots(g);
    // unit q = w: class-preserving bijection of V
    RootSet moved = transport_roots(OrePoly::constant(F4, F4.generator()), g, vg);
    std::vector<Elem> a = moved.roots, b = vg.roots;
    std::sort(a.begin(), a.end(), elem_less);
    std::sort(b.begin(), b.end(), elem_less);
    CHECK(a == b);

    // q = 1 is the identity
    RootSet same = transport_roots(OrePoly::one(F4), g, vg);
    a = same.roots;
    std::sort(a.begin(), a.end(), elem_less);
    CHECK(a == b);

    // linear case: g = t-a, constant q = c gives {a^c}
    for (auto& aelem : F4.all_elements())
        for (auto& c : F4.all_nonzero()) {
            OrePoly lin = OrePoly::t_minus(F4, aelem);
            RootSet rs = roots(lin);
            RootSet tr = transport_roots(OrePoly::constant(F4, c), lin, rs);
            REQUIRE(tr.roots.size() == 1);
            CHECK(tr.roots[0] == F4.conj_value(aelem, c));
        }
}

TEST_CASE("3x3 canonical forms and witnesses over F4") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<std::uint64_t> dist(0, 3);
    for (int trial = 0; trial < 80; ++trial) {
        MatK A(F4, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) A.at(i, j) = F4.elem_at(dist(rng));
        JacobsonForm jf = jacobson_form(A);
        int total = 0;
        for (auto& e : jf.diag) total += e.deg();
        CHECK(total == 3);
        DiagonalizeResult d = diagonalize(A);
        if (d.diagonalizable) {
            CHECK(d.diagonal->is_diagonal());
            CHECK(sd_transform(A, *d.transform) == *d.diagonal);
        }
        TriangularizeResult t = triangularize(A);
        if (t.triangularizable) {
            CHECK(t.triangular->is_upper_triangular());
            CHECK(sd_transform(A, *t.transform) == *t.triangular);
        }
    }
}

TEST_CASE("quaternion diagonalization of the rotation companion") {
    // companion(t^2+1) over HQ: the invariant factor is Wedderburn with an
    // infinite root class; the witness uses a representative pair
    OrePoly f = OrePoly(HQ, {HQ.one(), HQ.zero(), HQ.one()});
    MatK C = companion(f);
    CHECK(is_sd_diagonalizable(C));
    DiagonalizeResult d = diagonalize(C);
    REQUIRE(d.diagonalizable);
    CHECK(d.diagonal->is_diagonal());
    CHECK(sd_transform(C, *d.transform) == *d.diagonal);
    // diagonal entries are conjugate quaternion square roots of -1
    Elem d0 = d.diagonal->at(0, 0);
    CHECK(HQ.quat_trace(d0) == Rat(0));
    CHECK(HQ.quat_norm(d0) == Rat(1));
    TriangularizeResult t = triangularize(C);
    REQUIRE(t.triangularizable);
    CHECK(t.triangular->is_upper_triangular());
}

TEST_CASE("spectra agreement over F8") {
    Ring F8 = Ring::finite_field(2, 3, 1);
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<std::uint64_t> dist(0, 7);
    for (int trial = 0; trial < 60; ++trial) {
        MatK A(F8, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) A.at(i, j) = F8.elem_at(dist(rng));
        SpectrumReport brute = spectra(A, SpectrumMethod::Brute);
        SpectrumReport via = spectra(A, SpectrumMethod::ViaRoots);
        CHECK(class_fingerprint(F8, brute.rspec) == class_fingerprint(F8, via.rspec));
        CHECK(class_fingerprint(F8, brute.lspec) == class_fingerprint(F8, via.lspec));
    }
}

TEST_CASE("witness soundness: every success re-verifies") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        MatK A = random_f4_2x2(rng);
        DiagonalizeResult d = diagonalize(A);
        if (d.diagonalizable) {
            CHECK(sd_transform(A, *d.transform) == *d.diagonal);
            CHECK(d.diagonal->is_diagonal());
        }
        TriangularizeResult t = triangularize(A);
        if (t.triangularizable) {
            CHECK(sd_transform(A, *t.transform) == *t.triangular);
            CHECK(t.triangular->is_upper_triangular());
        }
        // diagonalizable implies triangularizable
        if (d.diagonalizable) CHECK(t.triangularizable);
    }
}
