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

#include <json.hpp>

#include "skewlab/cli.hpp"
#include "skewlab/parse.hpp"

using namespace skewlab;

TEST_CASE("ring spec parsing and round trip") {
    Ring f4 = parse_ring("GF(2^2; frob=1)");
    CHECK(f4.family() == Family::FiniteField);
    CHECK(f4.p() == 2);
    CHECK(f4.m() == 2);
    CHECK(f4.frob_power() == 1);
    CHECK(parse_ring(f4.spec_string()).same(f4));

    Ring qx = parse_ring("Qx; d/dx");
    CHECK(qx.family() == Family::RationalFunctions);
    CHECK(parse_ring(qx.spec_string()).same(qx));

    Ring f9b = parse_ring("GF(3^2; frob=1; beta=w)");
    CHECK(f9b.family() == Family::FiniteField);
    CHECK(f9b.beta() == f9b.generator());
    CHECK(parse_ring(f9b.spec_string()).same(f9b));

    CHECK(parse_ring("Q").family() == Family::Rationals);
    CHECK(parse_ring("HQ").family() == Family::Quaternions);

    CHECK_THROWS_AS(parse_ring("GF(4^1; frob=0)"), Error);   // 4 is not prime
    CHECK_THROWS_AS(parse_ring("GF(2^9; frob=0)"), Error);   // too large
    CHECK_THROWS_AS(parse_ring("Zp"), ParseError);
}

TEST_CASE("polynomial parsing") {
    Ring f4 = parse_ring("GF(2^2; frob=1)");
    OrePoly f = parse_poly("t^2 + 1", f4);
    CHECK(f.deg() == 2);
    CHECK(f.coeff(0) == f4.one());
    CHECK(f4.is_zero(f.coeff(1)));

    Ring qx = parse_ring("Qx; d/dx");
    OrePoly g = parse_poly("(t - x)*(t - x)", qx);
    CHECK(g == parse_poly("t^2 - 2*x*t + x^2 - 1", qx));  // commutation expanded

    Ring hq = parse_ring("HQ");
    Elem q = parse_elem("1 + 2*i - 3*j + k", hq);
    CHECK(q == Elem(Quat{Rat(1), Rat(2), Rat(-3), Rat(1)}));
    CHECK(parse_elem("1/2 + (3/4)*i", hq) == Elem(Quat{Rat(1, 2), Rat(3, 4), Rat(0), Rat(0)}));

    CHECK_THROWS_AS(parse_poly("t^2 +", f4), ParseError);
    CHECK_THROWS_AS(parse_poly("y + 1", f4), ParseError);
    CHECK_THROWS_AS(parse_poly("x + 1", f4), Error);  // coefficient not in ring
}

TEST_CASE("matrix and set parsing") {
    Ring f4 = parse_ring("GF(2^2; frob=1)");
    MatK m = parse_matrix("[[0,1],[1,0]]", f4);
    CHECK(m.rows() == 2);
    CHECK(m.at(0, 1) == f4.one());

    Ring hq = parse_ring("HQ");
    auto pts = parse_set("{i+j, i-j}", hq);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == Elem(Quat{Rat(0), Rat(1), Rat(1), Rat(0)}));

    CHECK(parse_set("{}", hq).empty());
    CHECK_THROWS_AS(parse_matrix("[[0,1],[1]]", f4), Error);  // ragged
}

TEST_CASE("group parsing") {
    Ring hq = parse_ring("HQ");
    AutGroup g = parse_group("Id,Int(i)", hq);
    CHECK(g.size() == 2);
    Ring f16 = parse_ring("GF(2^4; frob=0)");
    AutGroup gf = parse_group("Frob", f16);
    CHECK(gf.size() == 4);
    CHECK(parse_group("Frob^2", f16).size() == 2);
}

TEST_CASE("print/parse round trip on a generated corpus") {
    int count = 0;
    // finite field and quaternion polynomials
    Ring f4 = parse_ring("GF(2^2; frob=1)");
    for (std::uint64_t v = 0; v < 32; ++v) {
        std::vector<Elem> c;
        std::uint64_t t = v;
        for (int i = 0; i < 3; ++i) {
            c.push_back(f4.elem_at(t % 4));
            t /= 4;
        }
        OrePoly f(f4, std::move(c));
        CHECK(parse_poly(f.str(), f4) == f);
        ++count;
    }
    Ring hq = parse_ring("HQ");
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Elem> c;
        for (int i = 0; i < 3; ++i) c.push_back(hq.random_elem(rng));
        OrePoly f(hq, std::move(c));
        CHECK(parse_poly(f.str(), hq) == f);
        ++count;
    }
    Ring qx = parse_ring("Qx; d/dx");
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Elem> c;
        for (int i = 0; i < 2; ++i) c.push_back(qx.random_elem(rng));
        OrePoly f(qx, std::move(c));
        CHECK(parse_poly(f.str(), qx) == f);
        ++count;
    }
    // elements round-trip through the ring printer
    for (auto& e : f4.all_elements()) {
        CHECK(parse_elem(f4.str(e), f4) == e);
        ++count;
    }
    CHECK(count >= 50);
}

TEST_CASE("command dispatch and exit codes") {
    using cli::run_command;
    cli::Report ok = run_command({"wcheck", "--ring", "GF(2^2;frob=1)", "t^2+1"});
    CHECK(ok.exit_code == 0);
    auto j = nlohmann::json::parse(ok.json);
    CHECK(j["status"] == "ok");
    CHECK(j["result"]["wedderburn"] == "yes");

    cli::Report no = run_command({"wcheck", "--ring", "GF(2^2;frob=1)", "t^2"});
    CHECK(no.exit_code == 2);

    cli::Report err = run_command({"wcheck", "--ring", "GF(2^2;frob=1)", "t^^"});
    CHECK(err.exit_code == 1);
    auto je = nlohmann::json::parse(err.json);
    CHECK(je["status"] == "error");
    CHECK(je["error"]["code"] == "parse");

    cli::Report metro_no = run_command({"metro", "--ring", "Q", "t+1", "t+1"});
    CHECK(metro_no.exit_code == 2);
    CHECK(nlohmann::json::parse(metro_no.json)["result"]["status"] == "no-solution");

    cli::Report diag = run_command({"diag", "--ring", "GF(2^2;frob=1)", "[[0,1],[1,0]]"});
    CHECK(diag.exit_code == 0);
    auto jd = nlohmann::json::parse(diag.json);
    CHECK(jd["result"]["verified"] == true);

    cli::Report gm = run_command({"gminpoly", "--ring", "HQ", "--group", "Id,Int(i)", "{j}"});
    CHECK(gm.exit_code == 0);
    CHECK(nlohmann::json::parse(gm.json)["result"]["f"]["text"] == "t^2 + 1");

    // missing ring
    CHECK(run_command({"mul", "t", "t"}).exit_code == 1);
}

TEST_CASE("JSON reports are byte-identical across runs") {
    using cli::run_command;
    std::vector<std::vector<std::string>> cmds = {
        {"wcheck", "--ring", "GF(2^2;frob=1)", "t^2+1"},
        {"spec", "--ring", "GF(2^2;frob=1)", "[[0,1],[1,0]]", "--method", "brute"},
        {"invfactors", "--ring", "GF(2^2;frob=1)", "[[1,w],[0,w]]"},
        {"metro", "--ring", "Qx; d/dx", "t-x", "t-x"},
        {"gorbit", "--ring", "HQ", "--group", "Id,Int(i)", "i+j"},
    };
    for (const auto& cmd : cmds) {
        cli::Report a = run_command(cmd);
        cli::Report b = run_command(cmd);
        CHECK(a.json == b.json);
    }
}

TEST_CASE("argument splitting honors quotes") {
    auto v = cli::split_args("wcheck --ring \"GF(2^2; frob=1)\" \"t^2 + 1\"");
    REQUIRE(v.size() == 4);
    CHECK(v[1] == "--ring");
    CHECK(v[2] == "GF(2^2; frob=1)");
    CHECK(v[3] == "t^2 + 1");
}
