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

#include "skewlab/ring.hpp"

using namespace skewlab;

namespace {

Elem quat(long w, long x, long y, long z) {
    return Elem(Quat{Rat(w), Rat(x), Rat(y), Rat(z)});
}

const Elem qi = quat(0, 1, 0, 0);
const Elem qj = quat(0, 0, 1, 0);
const Elem qk = quat(0, 0, 0, 1);

}  // namespace

TEST_CASE("quaternion multiplication table") {
    Ring H = Ring::quaternions();
    CHECK(H.mul(qi, qj) == qk);
    CHECK(H.mul(qj, qk) == qi);
    CHECK(H.mul(qk, qi) == qj);
    CHECK(H.mul(qj, qi) == H.neg(qk));
    CHECK(H.mul(qi, qi) == H.from_int(-1));
    CHECK(H.mul(qj, qj) == H.from_int(-1));
    CHECK(H.mul(qk, qk) == H.from_int(-1));
    CHECK(H.inv(qi) == H.neg(qi));
}

TEST_CASE("F4 defining relation and tables") {
    Ring F4 = Ring::finite_field(2, 2, 1);
    Elem w = F4.generator();
    Elem w2 = F4.mul(w, w);
    CHECK(w2 == F4.add(w, F4.one()));  // w^2 = w + 1
    CHECK(F4.mul(w2, w) == F4.one());  // w^3 = 1
    CHECK(F4.inv(w) == w2);
    CHECK(F4.size() == 4);
}

TEST_CASE("Qx inversion canonicalizes") {
    Ring Qx = Ring::rational_functions();
    Elem x = Qx.generator();
    // (x^2+1)/x inverted is x/(x^2+1)
    Elem f = Qx.div(Qx.add(Qx.mul(x, x), Qx.one()), x);
    Elem g = Qx.inv(f);
    CHECK(Qx.str(g) == "(x)/(x^2+1)");
    CHECK(Qx.mul(f, g) == Qx.one());
}

TEST_CASE("structure maps") {
    Ring F4 = Ring::finite_field(2, 2, 1);
    Elem w = F4.generator();
    CHECK(F4.S(w) == F4.mul(w, w));  // Frobenius squares
    CHECK(F4.Sinv(F4.S(w)) == w);
    CHECK(F4.is_zero(F4.D(w)));  // no derivation configured
    CHECK(F4.is_zero(F4.delta(w)));

    Ring Qx = Ring::rational_functions();
    Elem x = Qx.generator();
    Elem x2 = Qx.mul(x, x);
    CHECK(Qx.D(x2) == Qx.mul(Qx.from_int(2), x));  // d/dx x^2 = 2x
    CHECK(Qx.delta(x2) == Qx.neg(Qx.D(x2)));       // S = id

    Ring F9 = Ring::finite_field(3, 2, 1);
    Elem w9 = F9.generator();
    Ring F9b = Ring::finite_field(3, 2, 1, w9);
    // D = w (S - id) really is an S-derivation; spot value at the generator
    CHECK(F9b.D(w9) == F9b.mul(w9, F9b.sub(F9b.S(w9), w9)));
}

TEST_CASE("conjugation values") {
    Ring H = Ring::quaternions();
    CHECK(H.conj_value(qi, qj) == H.neg(qi));  // j i j^-1 = -i

    Ring F4 = Ring::finite_field(2, 2, 1);
    Elem w = F4.generator();
    Elem w2 = F4.mul(w, w);
    CHECK(F4.conj_value(w, w2) == F4.one());

    Ring Qx = Ring::rational_functions();
    Elem x = Qx.generator();
    // x^c with c = x is x + 1/x
    CHECK(Qx.conj_value(x, x) == Qx.add(x, Qx.inv(x)));

    ConjWitness cw = H.conjugate(qi, qj);
    Elem ci = H.inv(cw.conjugator);
    Elem recomputed = H.add(H.mul(H.mul(H.S(cw.conjugator), cw.base), ci), H.mul(H.D(cw.conjugator), ci));
    CHECK(recomputed == cw.value);
    CHECK_THROWS_AS(H.conjugate(qi, H.zero()), Error);
}

TEST_CASE("same_class per context") {
    Ring H = Ring::quaternions();
    CHECK(H.same_class(H.add(qi, qj), H.sub(qi, qj)));  // conjugator c = i
    CHECK(H.same_class(qi, qi));
    CHECK_FALSE(H.same_class(qi, H.from_int(1)));

    Ring F4 = Ring::finite_field(2, 2, 1);
    Elem w = F4.generator();
    CHECK(F4.same_class(F4.one(), w));  // class of 1 is all of F4*
    for (auto& a : F4.all_elements()) CHECK(F4.same_class(a, a));

    Ring Q = Ring::rationals();
    CHECK(Q.same_class(Q.from_int(2), Q.from_int(2)));
    CHECK_FALSE(Q.same_class(Q.from_int(2), Q.from_int(3)));

    Ring Qx = Ring::rational_functions();
    Elem x = Qx.generator();
    CHECK(Qx.same_class(x, Qx.add(x, Qx.inv(x))));       // witness c = x
    CHECK(Qx.same_class(x, Qx.conj_value(x, Qx.mul(x, x))));
    CHECK_FALSE(Qx.same_class(x, Qx.add(x, Qx.one())));  // 1 is not a log derivative
    // 1/x^2 has a double pole, so it is not c'/c either
    CHECK_FALSE(Qx.same_class(Qx.zero(), Qx.inv(Qx.mul(x, x))));
}

TEST_CASE("centralizer bases") {
    Ring F4 = Ring::finite_field(2, 2, 1);
    CentralizerBasis cb = F4.centralizer(F4.one());
    CHECK(cb.basis.size() == 1);
    CHECK(cb.basis[0] == F4.one());
    CHECK(cb.constant_elements.size() == 2);  // F2

    Ring H = Ring::quaternions();
    CentralizerBasis ci = H.centralizer(qi);
    REQUIRE(ci.basis.size() == 2);
    CHECK(ci.basis[0] == H.one());
    CHECK(ci.basis[1] == qi);
    CHECK(H.centralizer(H.from_int(5)).basis.size() == 4);  // central: whole ring

    Ring Q = Ring::rationals();
    CHECK(Q.centralizer(Q.from_int(7)).basis.size() == 1);

    Ring Qx = Ring::rational_functions();
    CHECK_THROWS_AS(Qx.centralizer(Qx.generator()), CapabilityError);
}

TEST_CASE("enumeration") {
    Ring F4 = Ring::finite_field(2, 2, 1);
    auto elems = F4.all_elements();
    REQUIRE(elems.size() == 4);
    std::sort(elems.begin(), elems.end(), elem_less);
    CHECK(std::unique(elems.begin(), elems.end()) == elems.end());

    Ring F2 = Ring::finite_field(2, 1, 0);
    CHECK(F2.all_elements().size() == 2);

    CHECK_THROWS_AS(Ring::rational_functions().size(), CapabilityError);
}

TEST_CASE("conjugation composes: (a^c)^d = a^{dc}") {
    // exhaustive on F4, F8, F9 with derivation; randomized on HQ and Qx
    std::vector<Ring> finite = {Ring::finite_field(2, 2, 1), Ring::finite_field(2, 3, 1)};
    {
        Ring F9 = Ring::finite_field(3, 2, 1);
        finite.push_back(Ring::finite_field(3, 2, 1, F9.generator()));
    }
    for (const Ring& R : finite) {
        for (auto& a : R.all_elements())
            for (auto& c : R.all_nonzero())
                for (auto& d : R.all_nonzero())
                    CHECK(R.conj_value(R.conj_value(a, c), d) == R.conj_value(a, R.mul(d, c)));
    }
    std::mt19937_64 rng(7);
    for (Ring R : {Ring::quaternions(), Ring::rational_functions()}) {
        for (int k = 0; k < 50; ++k) {
            Elem a = R.random_elem(rng), c = R.random_elem(rng), d = R.random_elem(rng);
            if (R.is_zero(c) || R.is_zero(d)) continue;
            CHECK(R.conj_value(R.conj_value(a, c), d) == R.conj_value(a, R.mul(d, c)));
        }
    }
}

TEST_CASE("same_class is an equivalence relation on finite contexts") {
    Ring F9 = Ring::finite_field(3, 2, 1);
    std::vector<Ring> rings = {Ring::finite_field(2, 2, 1),
                               Ring::finite_field(3, 2, 1, F9.generator())};
    for (const Ring& R : rings) {
        auto elems = R.all_elements();
        for (auto& a : elems) CHECK(R.same_class(a, a));
        for (auto& a : elems)
            for (auto& b : elems) CHECK(R.same_class(a, b) == R.same_class(b, a));
        for (auto& a : elems)
            for (auto& b : elems)
                for (auto& c : elems)
                    if (R.same_class(a, b) && R.same_class(b, c)) CHECK(R.same_class(a, c));
    }
}

TEST_CASE("centralizer members really centralize, scaled by constants") {
    Ring F9 = Ring::finite_field(3, 2, 1);
    Ring F9b = Ring::finite_field(3, 2, 1, F9.generator());
    for (const Ring& R : {Ring::finite_field(2, 2, 1), F9b}) {
        for (auto& a : R.all_elements()) {
            CentralizerBasis cb = R.centralizer(a);
            for (auto& x : cb.basis)
                for (auto& lam : cb.constant_elements) {
                    Elem xl = R.mul(x, lam);
                    if (R.is_zero(xl)) continue;
                    CHECK(R.conj_value(a, xl) == a);
                }
        }
    }
}

TEST_CASE("ring structural self-tests") {
    Ring F9 = Ring::finite_field(3, 2, 1);
    for (Ring R : {Ring::rationals(), Ring::finite_field(2, 2, 1), Ring::finite_field(2, 3, 1),
                   Ring::finite_field(3, 2, 1, F9.generator()), Ring::rational_functions(),
                   Ring::quaternions()}) {
        CHECK_NOTHROW(R.self_test(1000, 42));
    }
}

TEST_CASE("mixed contexts are rejected") {
    Ring F4 = Ring::finite_field(2, 2, 1);
    Ring Q = Ring::rationals();
    CHECK_THROWS_AS(F4.add(F4.one(), Q.one()), Error);
    CHECK_THROWS_AS(Q.div(Q.one(), Q.zero()), Error);
}
