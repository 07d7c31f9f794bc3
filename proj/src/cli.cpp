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

#include "skewlab/cli.hpp"

#include <chrono>
#include <json.hpp>
#include <optional>

#include "skewlab/canon.hpp"
#include "skewlab/galg.hpp"
#include "skewlab/parse.hpp"
#include "skewlab/pltmat.hpp"

namespace skewlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Invocation {
    std::string command;
    std::vector<std::string> positional;
    std::optional<std::string> ring_spec, group_spec, side, method, certificate;
    bool want_json = false;
    Options opts;

    Ring ring() const {
        if (!ring_spec) throw Error("no-ring", "a ring context is required (--ring)");
        return parse_ring(*ring_spec);
    }
    AutGroup group(const Ring& r) const {
        if (!group_spec) throw Error("no-group", "an automorphism group is required (--group)");
        return parse_group(*group_spec, r);
    }
    const std::string& arg(std::size_t i) const {
        if (i >= positional.size()) throw Error("usage", "missing argument");
        return positional[i];
    }
    void expect_args(std::size_t n) const {
        if (positional.size() != n)
            throw Error("usage", "expected " + std::to_string(n) + " argument(s), got " +
                            std::to_string(positional.size()));
    }
};

Json poly_json(const OrePoly& f) {
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        coeffs.push_back(f.ring().str(f.coeff(i)));
    return Json{{"coeffs", coeffs}, {"text", f.str()}};
}

Json mat_json(const MatK& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.ring().str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json elems_json(const Ring& r, const std::vector<Elem>& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(r.str(e));
    return out;
}

Json rootset_json(const Ring& r, const RootSet& rs) {
    Json classes = Json::array();
    for (const auto& c : rs.classes) {
        Json jc;
        if (c.rep) jc["rep"] = r.str(*c.rep);
        jc["enumerated"] = c.enumerated;
        if (c.enumerated) jc["members"] = elems_json(r, c.members);
        if (c.trace) jc["trace"] = c.trace->str();
        if (c.norm) jc["norm"] = c.norm->str();
        jc["e_dim"] = c.e_dim;
        classes.push_back(std::move(jc));
    }
    std::vector<Elem> sorted = rs.roots;
    std::sort(sorted.begin(), sorted.end(), elem_less);
    return Json{{"side", rs.side == RootSide::Right ? "right" : "left"},
                {"roots", elems_json(r, sorted)},
                {"classes", classes},
                {"rank", rs.rank()}};
}

const char* verdict_str(Verdict v) {
    return v == Verdict::Yes ? "yes" : v == Verdict::No ? "no" : "unknown";
}

int verdict_exit(Verdict v) { return v == Verdict::Yes ? 0 : 2; }

Json dispatch(const Invocation& inv, int& exit_code) {
    const std::string& cmd = inv.command;
    exit_code = 0;

    if (cmd == "eval") {
        inv.expect_args(2);
        Ring r = inv.ring();
        OrePoly f = parse_poly(inv.arg(0), r);
        Elem a = parse_elem(inv.arg(1), r);
        EvalTrace tr = eval_trace(f, a);
        Elem other = eval_via_remainder(f, a);
        if (!(other == tr.value)) throw InvariantBreach("evaluation routes disagree");
        return Json{{"value", r.str(tr.value)},
                    {"n_sequence", elems_json(r, tr.n_seq)},
                    {"verified", true}};
    }
    if (cmd == "mul") {
        inv.expect_args(2);
        Ring r = inv.ring();
        return Json{{"product", poly_json(parse_poly(inv.arg(0), r) * parse_poly(inv.arg(1), r))}};
    }
    if (cmd == "divr" || cmd == "divl") {
        inv.expect_args(2);
        Ring r = inv.ring();
        OrePoly f = parse_poly(inv.arg(0), r), g = parse_poly(inv.arg(1), r);
        auto [q, rem] = cmd == "divr" ? right_divmod(f, g) : left_divmod(f, g);
        bool ok = cmd == "divr" ? (q * g + rem == f) : (g * q + rem == f);
        if (!ok) throw InvariantBreach("division re-multiplication failed");
        return Json{{"quotient", poly_json(q)}, {"remainder", poly_json(rem)}, {"verified", true}};
    }
    if (cmd == "rgcd") {
        inv.expect_args(2);
        Ring r = inv.ring();
        OrePoly f = parse_poly(inv.arg(0), r), g = parse_poly(inv.arg(1), r);
        GcdExt e = rgcd_ext(f, g);
        if (!(e.u * f + e.v * g == e.d)) throw InvariantBreach("Bezout identity failed");
        return Json{{"gcd", poly_json(e.d)},
                    {"u", poly_json(e.u)},
                    {"v", poly_json(e.v)},
                    {"verified", true}};
    }
    if (cmd == "llcm") {
        inv.expect_args(2);
        Ring r = inv.ring();
        OrePoly f = parse_poly(inv.arg(0), r), g = parse_poly(inv.arg(1), r);
        Llcm l = llcm(f, g);
        return Json{{"lcm", poly_json(l.m)},
                    {"cofactor_of_second", poly_json(l.f_cof)},
                    {"cofactor_of_first", poly_json(l.g_cof)},
                    {"verified", true}};
    }
    if (cmd == "minpoly") {
        inv.expect_args(1);
        Ring r = inv.ring();
        AlgebraicSet d(r, parse_set(inv.arg(0), r));
        MinPolyResult mp = min_poly(d);
        return Json{{"f", poly_json(mp.f)},
                    {"rank", mp.rank},
                    {"p_basis", elems_json(r, mp.p_basis)}};
    }
    if (cmd == "roots") {
        inv.expect_args(1);
        Ring r = inv.ring();
        RootSide side = inv.side && *inv.side == "left" ? RootSide::Left : RootSide::Right;
        return rootset_json(r, roots(parse_poly(inv.arg(0), r), side, inv.opts));
    }
    if (cmd == "wcheck") {
        inv.expect_args(1);
        Ring r = inv.ring();
        OrePoly f = parse_poly(inv.arg(0), r);
        WedderburnResult res;
        Json extra;
        if (inv.certificate) {
            res = is_wedderburn_cert(f, parse_set(*inv.certificate, r));
        } else {
            res = is_wedderburn(f, inv.opts);
            extra = rootset_json(r, roots(f, RootSide::Right, inv.opts));
        }
        exit_code = verdict_exit(res.verdict);
        Json out{{"wedderburn", verdict_str(res.verdict)},
                 {"exact", res.exact},
                 {"rank", res.rank},
                 {"degree", res.degree}};
        if (!extra.is_null()) out["roots"] = extra;
        return out;
    }
    if (cmd == "fullred") {
        inv.expect_args(1);
        Ring r = inv.ring();
        bool v = fully_reducible_check(parse_poly(inv.arg(0), r), inv.opts);
        exit_code = v ? 0 : 2;
        return Json{{"fully_reducible", v}};
    }
    if (cmd == "companion") {
        Ring r = inv.ring();
        if (inv.positional.empty()) throw Error("usage", "companion needs >= 1 polynomial");
        if (inv.positional.size() == 1)
            return Json{{"matrix", mat_json(companion(parse_poly(inv.arg(0), r)))}};
        std::vector<OrePoly> factors;
        for (const auto& s : inv.positional) factors.push_back(parse_poly(s, r));
        return Json{{"matrix", mat_json(companion_chain(factors))}};
    }
    if (cmd == "metro") {
        inv.expect_args(2);
        Ring r = inv.ring();
        MetroInstance mi =
            metro_solve(parse_poly(inv.arg(0), r), parse_poly(inv.arg(1), r), inv.opts);
        Json out{{"status", mi.status == MetroStatus::Solved
                                ? "solved"
                                : mi.status == MetroStatus::NoSolution ? "no-solution"
                                                                       : "unknown"}};
        if (mi.x) {
            out["x"] = mat_json(*mi.x);
            out["verified"] = mi.verified;
        }
        exit_code = mi.status == MetroStatus::Solved ? 0 : 2;
        return out;
    }
    if (cmd == "prodw") {
        inv.expect_args(2);
        Ring r = inv.ring();
        Verdict v = product_w_check(parse_poly(inv.arg(0), r), parse_poly(inv.arg(1), r), inv.opts);
        exit_code = verdict_exit(v);
        return Json{{"product_wedderburn", verdict_str(v)}};
    }
    if (cmd == "invfactors") {
        inv.expect_args(1);
        Ring r = inv.ring();
        JacobsonForm jf = jacobson_form(parse_matrix(inv.arg(0), r));
        Json factors = Json::array();
        for (const auto& e : jf.invariant_factors()) factors.push_back(poly_json(e));
        return Json{{"invariant_factors", factors}, {"verified", true}};
    }
    if (cmd == "diag") {
        inv.expect_args(1);
        Ring r = inv.ring();
        MatK a = parse_matrix(inv.arg(0), r);
        DiagonalizeResult d = diagonalize(a, inv.opts);
        Json out{{"diagonalizable", d.diagonalizable}};
        if (d.diagonalizable) {
            out["transform"] = mat_json(*d.transform);
            out["diagonal"] = mat_json(*d.diagonal);
            out["verified"] = sd_transform(a, *d.transform) == *d.diagonal;
        } else {
            exit_code = 2;
        }
        return out;
    }
    if (cmd == "triang") {
        inv.expect_args(1);
        Ring r = inv.ring();
        MatK a = parse_matrix(inv.arg(0), r);
        TriangularizeResult t = triangularize(a, inv.opts);
        Json out{{"triangularizable", t.triangularizable}};
        if (t.triangularizable) {
            out["transform"] = mat_json(*t.transform);
            out["triangular"] = mat_json(*t.triangular);
            out["verified"] = sd_transform(a, *t.transform) == *t.triangular;
        } else {
            exit_code = 2;
        }
        return out;
    }
    if (cmd == "spec") {
        inv.expect_args(1);
        Ring r = inv.ring();
        SpectrumMethod method = inv.method && *inv.method == "brute" ? SpectrumMethod::Brute
                                                                    : SpectrumMethod::ViaRoots;
        SpectrumReport rep = spectra(parse_matrix(inv.arg(0), r), method, inv.opts);
        auto side_json = [&](const std::vector<EigenClass>& v) {
            Json out = Json::array();
            for (const auto& c : v) {
                out.push_back(Json{{"rep", r.str(c.rep)},
                                   {"members", elems_json(r, c.members)},
                                   {"witness", elems_json(r, c.witness)}});
            }
            return out;
        };
        return Json{{"method", method == SpectrumMethod::Brute ? "brute" : "via_roots"},
                    {"last_invariant_factor", poly_json(rep.last_invariant_factor)},
                    {"lspec", side_json(rep.lspec)},
                    {"rspec", side_json(rep.rspec)},
                    {"verified", true}};
    }
    if (cmd == "gorbit") {
        inv.expect_args(1);
        Ring r = inv.ring();
        AutGroup g = inv.group(r);
        OrbitDecomposition od = orbit(g, parse_elem(inv.arg(0), r));
        Json pieces = Json::array();
        for (const auto& p : od.pieces) pieces.push_back(elems_json(r, p));
        std::vector<Elem> sorted = od.orbit;
        std::sort(sorted.begin(), sorted.end(), elem_less);
        Json stab = Json::array();
        for (std::size_t s : od.stabilizer) stab.push_back(g.at(s).str(r));
        return Json{{"orbit", elems_json(r, sorted)},
                    {"stabilizer_class_subgroup", stab},
                    {"class_pieces", pieces}};
    }
    if (cmd == "gminpoly") {
        inv.expect_args(1);
        Ring r = inv.ring();
        AutGroup g = inv.group(r);
        GPolyResult gp = g_min_poly(g, AlgebraicSet(r, parse_set(inv.arg(0), r)), inv.opts);
        Json out{{"f", poly_json(gp.f)},
                 {"degree", gp.degree},
                 {"coeffs_in_fixed_ring", gp.coeffs_in_fixed_ring}};
        if (gp.linear_factors) {
            Json fs = Json::array();
            for (const auto& f : *gp.linear_factors) fs.push_back(poly_json(f));
            out["linear_factors"] = fs;
        }
        return out;
    }
    if (cmd == "girr") {
        inv.expect_args(1);
        Ring r = inv.ring();
        AutGroup g = inv.group(r);
        GPolyResult gp = g_min_poly(g, AlgebraicSet(r, parse_set(inv.arg(0), r)), inv.opts);
        bool irr = irreducible_over_fixed(g, gp);
        exit_code = irr ? 0 : 2;
        return Json{{"f", poly_json(gp.f)}, {"irreducible_over_fixed_ring", irr}};
    }
    if (cmd == "rankreport") {
        inv.expect_args(1);
        Ring r = inv.ring();
        AutGroup g = inv.group(r);
        GRankReport rep = rank_report(g, parse_elem(inv.arg(0), r), inv.opts);
        return Json{{"rk_orbit", rep.rk_orbit},
                    {"index", rep.index},
                    {"rk_piece", rep.rk_piece},
                    {"identity_holds", rep.rk_orbit == rep.index * rep.rk_piece}};
    }
    if (cmd == "gfull") {
        inv.expect_args(1);
        Ring r = inv.ring();
        FullVerdict v = is_full(AlgebraicSet(r, parse_set(inv.arg(0), r)), inv.opts);
        exit_code = v == FullVerdict::Full ? 0 : 2;
        return Json{{"full", v == FullVerdict::Full
                                 ? "full"
                                 : v == FullVerdict::NotFull ? "not-full" : "unknown"}};
    }
    throw Error("usage", "unknown command '" + cmd + "'");
}

std::string render_text(const Json& j, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    std::string out;
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                out += pad + it.key() + ":\n" + render_text(it.value(), indent + 1);
            } else {
                out += pad + it.key() + " = " + (it.value().is_string()
                                                     ? it.value().get<std::string>()
                                                     : it.value().dump()) +
                       "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                out += pad + "-\n" + render_text(v, indent + 1);
            } else {
                out += pad + "- " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
            }
        }
    } else {
        out += pad + j.dump() + "\n";
    }
    return out;
}

}  // namespace

std::vector<std::string> split_args(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_quotes = false, have = false;
    for (char c : line) {
        if (c == '"') {
            in_quotes = !in_quotes;
            have = true;
            continue;
        }
        if (!in_quotes && std::isspace(static_cast<unsigned char>(c))) {
            if (have || !cur.empty()) out.push_back(cur);
            cur.clear();
            have = false;
            continue;
        }
        cur += c;
    }
    if (have || !cur.empty()) out.push_back(cur);
    return out;
}

std::string usage() {
    return "usage: skewlab <command> --ring \"<spec>\" [options] <args>\n"
           "\n"
           "rings: Q | GF(p^m; frob=k [; beta=<elem>]) | \"Qx; d/dx\" | HQ\n"
           "\n"
           "commands:\n"
           "  eval POLY ELEM          right evaluation with the N-sequence\n"
           "  mul POLY POLY           product in K[t;S,D]\n"
           "  divr POLY POLY          right division f = q g + r\n"
           "  divl POLY POLY          left division f = g q + r\n"
           "  rgcd POLY POLY          extended right gcd, u f + v g = d\n"
           "  llcm POLY POLY          least left common multiple + cofactors\n"
           "  minpoly SET             minimal polynomial, rank, P-basis\n"
           "  roots POLY [--side=S]   root set with class split (right|left)\n"
           "  wcheck POLY [--certificate SET]   Wedderburn test\n"
           "  fullred POLY            fully-reducible test (finite contexts)\n"
           "  companion POLY...       companion matrix (chain when several)\n"
           "  metro POLY POLY         solve C_h X - S(X) C_g - D(X) = U\n"
           "  prodw POLY POLY         is the product again Wedderburn\n"
           "  invfactors MAT          invariant factors of tI - A\n"
           "  diag MAT                (S,D)-diagonalization with witness\n"
           "  triang MAT              (S,D)-triangularization with witness\n"
           "  spec MAT [--method=M]   left/right spectra (brute|roots)\n"
           "  gorbit ELEM --group G   orbit and class decomposition\n"
           "  gminpoly SET --group G  G-minimal polynomial\n"
           "  girr SET --group G      irreducibility over the fixed ring\n"
           "  gfull SET               fullness of an algebraic set\n"
           "  rankreport ELEM --group G   orbit rank identity\n"
           "  batch                   read one command per line from stdin\n"
           "\n"
           "options: --json --seed=N --ansatz-bound=N --max-enum=N\n"
           "groups:  comma-separated Id | Frob | Frob^k | Int(<elem>)\n";
}

Report run_command(const std::vector<std::string>& args) {
    Report rep;
    Json envelope;
    envelope["schema"] = 1;
    auto t0 = std::chrono::steady_clock::now();
    Invocation inv;
    try {
        std::vector<std::string> positional;
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::string& a = args[i];
            auto value_of = [&](const std::string& flag) -> std::string {
                if (a.size() > flag.size() && a[flag.size()] == '=')
                    return a.substr(flag.size() + 1);
                if (++i >= args.size()) throw Error("usage", flag + " needs a value");
                return args[i];
            };
            if (a.rfind("--ring", 0) == 0)
                inv.ring_spec = value_of("--ring");
            else if (a.rfind("--group", 0) == 0)
                inv.group_spec = value_of("--group");
            else if (a.rfind("--side", 0) == 0)
                inv.side = value_of("--side");
            else if (a.rfind("--method", 0) == 0)
                inv.method = value_of("--method");
            else if (a.rfind("--certificate", 0) == 0)
                inv.certificate = value_of("--certificate");
            else if (a.rfind("--seed", 0) == 0)
                inv.opts.seed = std::stoull(value_of("--seed"));
            else if (a.rfind("--ansatz-bound", 0) == 0)
                inv.opts.ansatz_bound = std::stoi(value_of("--ansatz-bound"));
            else if (a.rfind("--max-enum", 0) == 0)
                inv.opts.max_enum = std::stoull(value_of("--max-enum"));
            else if (a == "--json")
                inv.want_json = true;
            else if (a.rfind("--", 0) == 0)
                throw Error("usage", "unknown flag " + a);
            else
                positional.push_back(a);
        }
        if (positional.empty()) throw Error("usage", "no command given");
        inv.command = positional.front();
        inv.positional.assign(positional.begin() + 1, positional.end());

        envelope["command"] = inv.command;
        if (inv.ring_spec) envelope["ring"] = parse_ring(*inv.ring_spec).spec_string();
        if (inv.group_spec) envelope["group"] = *inv.group_spec;
        envelope["args"] = inv.positional;

        int code = 0;
        Json result = dispatch(inv, code);
        envelope["status"] = code == 0 ? "ok" : "no";
        envelope["result"] = std::move(result);
        rep.exit_code = code;
    } catch (const Error& e) {
        envelope["status"] = "error";
        envelope["error"] = Json{{"code", e.code()}, {"message", e.what()}};
        rep.exit_code = 1;
    } catch (const std::exception& e) {
        envelope["status"] = "error";
        envelope["error"] = Json{{"code", "internal"}, {"message", e.what()}};
        rep.exit_code = 1;
    }
    rep.json = envelope.dump();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    rep.text = render_text(envelope) + "time_ms = " + std::to_string(ms) + "\n";
    return rep;
}

}  // namespace skewlab::cli
