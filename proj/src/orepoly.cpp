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

#include "skewlab/orepoly.hpp"

#include <algorithm>

namespace skewlab {

OrePoly::OrePoly(Ring ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    trim();
}

void OrePoly::trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
}

OrePoly OrePoly::zero(const Ring& r) { return OrePoly(r, {}); }
OrePoly OrePoly::one(const Ring& r) { return OrePoly(r, {r.one()}); }
OrePoly OrePoly::constant(const Ring& r, const Elem& c) { return OrePoly(r, {c}); }
OrePoly OrePoly::t(const Ring& r) { return OrePoly(r, {r.zero(), r.one()}); }
OrePoly OrePoly::t_minus(const Ring& r, const Elem& a) { return OrePoly(r, {r.neg(a), r.one()}); }

bool OrePoly::is_one() const { return c_.size() == 1 && ring_.is_one(c_[0]); }

bool OrePoly::is_monic() const { return !c_.empty() && ring_.is_one(c_.back()); }

Elem OrePoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }

const Elem& OrePoly::leading() const {
    if (c_.empty()) throw Error("internal", "leading coefficient of zero polynomial");
    return c_.back();
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
    if (!ring_.same(o.ring_)) throw mixed_ctx();
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), ring_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = ring_.add(r[i], o.c_[i]);
    return OrePoly(ring_, std::move(r));
}

OrePoly OrePoly::operator-() const {
    std::vector<Elem> r = c_;
    for (auto& v : r) v = ring_.neg(v);
    return OrePoly(ring_, std::move(r));
}

OrePoly OrePoly::operator-(const OrePoly& o) const { return *this + (-o); }

OrePoly OrePoly::operator*(const OrePoly& o) const {
    if (!ring_.same(o.ring_)) throw mixed_ctx();
    if (is_zero() || o.is_zero()) return zero(ring_);
    // accumulate a_i * (t^i * g), building t^i * g incrementally
    std::vector<Elem> acc(c_.size() + o.c_.size() - 1, ring_.zero());
    std::vector<Elem> tig = o.c_;  // t^i * g, starts at i = 0
    for (std::size_t i = 0;; ++i) {
        const Elem& ai = c_[i];
        if (!ring_.is_zero(ai)) {
            for (std::size_t j = 0; j < tig.size(); ++j)
                acc[j] = ring_.add(acc[j], ring_.mul(ai, tig[j]));
        }
        if (i + 1 == c_.size()) break;
        // t * (sum b_j t^j) = sum S(b_j) t^{j+1} + D(b_j) t^j
        std::vector<Elem> next(tig.size() + 1, ring_.zero());
        for (std::size_t j = 0; j < tig.size(); ++j) {
            next[j + 1] = ring_.add(next[j + 1], ring_.S(tig[j]));
            next[j] = ring_.add(next[j], ring_.D(tig[j]));
        }
        tig = std::move(next);
    }
    return OrePoly(ring_, std::move(acc));
}

OrePoly OrePoly::scaled_left(const Elem& s) const {
    std::vector<Elem> r = c_;
    for (auto& v : r) v = ring_.mul(s, v);
    return OrePoly(ring_, std::move(r));
}

OrePoly OrePoly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return scaled_left(ring_.inv(leading()));
}

OrePoly OrePoly::pow(unsigned e) const {
    OrePoly r = one(ring_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Elem OrePoly::eval(const Elem& a) const {
    Elem ni = ring_.one();  // N_0
    Elem acc = is_zero() ? ring_.zero() : coeff(0);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        ni = ring_.add(ring_.mul(ring_.S(ni), a), ring_.D(ni));  // N_i
        acc = ring_.add(acc, ring_.mul(c_[i], ni));
    }
    return acc;
}

EvalTrace eval_trace(const OrePoly& f, const Elem& a) {
    const Ring& R = f.ring();
    EvalTrace tr;
    tr.point = a;
    Elem ni = R.one();
    tr.n_seq.push_back(ni);
    int n = std::max(f.deg(), 0);
    Elem acc = f.is_zero() ? R.zero() : f.coeff(0);
    for (int i = 1; i <= n; ++i) {
        ni = R.add(R.mul(R.S(ni), a), R.D(ni));
        tr.n_seq.push_back(ni);
        acc = R.add(acc, R.mul(f.coeff(static_cast<std::size_t>(i)), ni));
    }
    tr.value = acc;
    return tr;
}

Elem eval_via_remainder(const OrePoly& f, const Elem& a) {
    OrePoly r = right_divmod(f, OrePoly::t_minus(f.ring(), a)).second;
    return r.is_zero() ? f.ring().zero() : r.coeff(0);
}

std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& f, const OrePoly& g) {
    const Ring& R = f.ring();
    if (!R.same(g.ring())) throw mixed_ctx();
    if (g.is_zero()) throw div_by_zero();
    if (!g.is_monic()) throw Error("non-monic-divisor", "right division needs a monic divisor");
    if (g.is_constant()) return {f, OrePoly::zero(R)};

    std::vector<Elem> rem = f.coeffs();
    int dg = g.deg();
    std::vector<Elem> quo(f.deg() >= dg ? static_cast<std::size_t>(f.deg() - dg + 1) : 0, R.zero());

    // t^k * g, raised as k walks from (deg f - deg g) downwards; recompute the
    // ladder upfront.
    int kmax = f.deg() - dg;
    std::vector<std::vector<Elem>> tkg;
    if (kmax >= 0) {
        tkg.reserve(static_cast<std::size_t>(kmax) + 1);
        tkg.push_back(g.coeffs());
        for (int k = 1; k <= kmax; ++k) {
            const auto& prev = tkg.back();
            std::vector<Elem> next(prev.size() + 1, R.zero());
            for (std::size_t j = 0; j < prev.size(); ++j) {
                next[j + 1] = R.add(next[j + 1], R.S(prev[j]));
                next[j] = R.add(next[j], R.D(prev[j]));
            }
            tkg.push_back(std::move(next));
        }
    }

    auto deg_of = [&R](const std::vector<Elem>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && R.is_zero(v[static_cast<std::size_t>(d)])) --d;
        return d;
    };

    int dr = deg_of(rem);
    while (dr >= dg) {
        int k = dr - dg;
        Elem lead = rem[static_cast<std::size_t>(dr)];
        quo[static_cast<std::size_t>(k)] = R.add(quo[static_cast<std::size_t>(k)], lead);
        const auto& gk = tkg[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < gk.size(); ++j)
            rem[j] = R.sub(rem[j], R.mul(lead, gk[j]));
        dr = deg_of(rem);
    }
    return {OrePoly(R, std::move(quo)), OrePoly(R, std::move(rem))};
}

std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& f, const OrePoly& g) {
    const Ring& R = f.ring();
    if (!R.same(g.ring())) throw mixed_ctx();
    if (g.is_zero()) throw div_by_zero();
    if (!g.is_monic()) throw Error("non-monic-divisor", "left division needs a monic divisor");
    if (!R.has_S_inverse()) throw MapUnavailableError("left division needs S to be invertible");
    if (g.is_constant()) return {f, OrePoly::zero(R)};

    OrePoly rem = f;
    int dg = g.deg();
    std::vector<Elem> quo(f.deg() >= dg ? static_cast<std::size_t>(f.deg() - dg + 1) : 0, R.zero());
    while (!rem.is_zero() && rem.deg() >= dg) {
        int k = rem.deg() - dg;
        // leading coefficient of g * (b t^k) is S^{deg g}(b)
        Elem b = rem.leading();
        for (int i = 0; i < dg; ++i) b = R.Sinv(b);
        quo[static_cast<std::size_t>(k)] = R.add(quo[static_cast<std::size_t>(k)], b);
        std::vector<Elem> mono(static_cast<std::size_t>(k) + 1, R.zero());
        mono[static_cast<std::size_t>(k)] = b;
        rem = rem - g * OrePoly(R, std::move(mono));
    }
    return {OrePoly(R, std::move(quo)), rem};
}

namespace {

// division with an arbitrary nonzero divisor: f = q*g + r
std::pair<OrePoly, OrePoly> right_divmod_any(const OrePoly& f, const OrePoly& g) {
    if (g.is_monic()) return right_divmod(f, g);
    const Ring& R = f.ring();
    Elem u = R.inv(g.leading());
    auto [q, r] = right_divmod(f, g.scaled_left(u));
    // f = q*(u*g) + r = (q*u)*g + r
    return {q * OrePoly::constant(R, u), r};
}

}  // namespace

GcdExt rgcd_ext(const OrePoly& f, const OrePoly& g) {
    const Ring& R = f.ring();
    if (!R.same(g.ring())) throw mixed_ctx();
    if (f.is_zero() && g.is_zero()) throw Error("gcd-zero", "rgcd(0, 0) is undefined");
    OrePoly r0 = f, r1 = g;
    OrePoly u0 = OrePoly::one(R), v0 = OrePoly::zero(R);
    OrePoly u1 = OrePoly::zero(R), v1 = OrePoly::one(R);
    while (!r1.is_zero()) {
        auto [q, r2] = right_divmod_any(r0, r1);
        OrePoly u2 = u0 - q * u1;
        OrePoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_monic()) {
        Elem u = R.inv(r0.leading());
        OrePoly s = OrePoly::constant(R, u);
        r0 = r0.scaled_left(u);
        u0 = s * u0;
        v0 = s * v0;
    }
    return GcdExt{r0, u0, v0};
}

OrePoly rgcd(const OrePoly& f, const OrePoly& g) { return rgcd_ext(f, g).d; }

Llcm llcm(const OrePoly& f, const OrePoly& g) {
    const Ring& R = f.ring();
    if (!R.same(g.ring())) throw mixed_ctx();
    if (f.is_zero() || g.is_zero()) throw Error("lcm-zero", "llcm needs nonzero inputs");
    // run the Euclidean chain one step past the gcd: the vanishing row gives
    // u*f = -v*g, the least left common multiple
    OrePoly r0 = f, r1 = g;
    OrePoly u0 = OrePoly::one(R), v0 = OrePoly::zero(R);
    OrePoly u1 = OrePoly::zero(R), v1 = OrePoly::one(R);
    int dgcd;
    while (true) {
        auto [q, r2] = right_divmod_any(r0, r1);
        OrePoly u2 = u0 - q * u1;
        OrePoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        u0 = u1;
        v0 = v1;
        u1 = std::move(u2);
        v1 = std::move(v2);
        if (r2.is_zero()) {
            dgcd = r0.deg();
            break;
        }
        r1 = std::move(r2);
    }
    OrePoly m = u1 * f;
    if (m.is_zero()) throw InvariantBreach("llcm chain degenerated");
    Llcm out{OrePoly::zero(R), OrePoly::zero(R), OrePoly::zero(R)};
    Elem u = R.inv(m.leading());
    OrePoly s = OrePoly::constant(R, u);
    out.m = m.scaled_left(u);
    out.g_cof = s * u1;
    out.f_cof = -(s * v1);
    if (out.m != out.f_cof * g || out.m != out.g_cof * f)
        throw InvariantBreach("llcm cofactor identity failed");
    if (out.m.deg() != f.deg() + g.deg() - dgcd)
        throw InvariantBreach("llcm degree law failed");
    return out;
}

OrePoly transform(const OrePoly& f, const OrePoly& q) {
    const Ring& R = f.ring();
    GcdExt e = rgcd_ext(f, q);
    if (!e.d.is_one())
        throw Error("not-coprime", "transform f^q needs Rq + Rf = R");
    if (q.is_constant()) {
        // Rf cap Rc = Rf for a unit c; the monic cofactor is monic(f * c^-1)
        return (f * OrePoly::constant(R, R.inv(q.coeff(0)))).monic();
    }
    return llcm(f, q.monic()).f_cof;
}

Elem phi(const OrePoly& h, const Elem& x) {
    const Ring& R = h.ring();
    Elem hx = h.eval(x);
    if (R.is_zero(hx)) throw Error("undefined-point", "phi_h is undefined where h vanishes");
    return R.conj_value(x, hx);
}

Elem lambda(const OrePoly& h, const Elem& a, const Elem& x) {
    const Ring& R = h.ring();
    if (R.is_zero(x)) throw Error("zero-point", "lambda_{h,a} takes nonzero x");
    return R.mul(h.eval(R.conj_value(a, x)), x);
}

std::vector<Elem> right_coefficients(const OrePoly& f) {
    const Ring& R = f.ring();
    if (!R.has_S_inverse()) throw MapUnavailableError("right form needs S invertible");
    if (f.is_zero()) return {};
    // peel from the top: the left-form leading coefficient of t^n b_n is S^n(b_n)
    OrePoly rem = f;
    std::vector<Elem> b(static_cast<std::size_t>(f.deg()) + 1, R.zero());
    for (int i = f.deg(); i >= 0; --i) {
        if (rem.deg() < i) continue;
        Elem lead = rem.coeff(static_cast<std::size_t>(i));
        Elem bi = lead;
        for (int k = 0; k < i; ++k) bi = R.Sinv(bi);
        b[static_cast<std::size_t>(i)] = bi;
        rem = rem - OrePoly::t(R).pow(static_cast<unsigned>(i)) * OrePoly::constant(R, bi);
    }
    if (!rem.is_zero()) throw InvariantBreach("right-form conversion left a remainder");
    return b;
}

OrePoly from_right_coefficients(const Ring& r, const std::vector<Elem>& b) {
    OrePoly acc = OrePoly::zero(r);
    for (std::size_t i = 0; i < b.size(); ++i)
        acc = acc + OrePoly::t(r).pow(static_cast<unsigned>(i)) * OrePoly::constant(r, b[i]);
    return acc;
}

std::string OrePoly::str() const {
    if (is_zero()) return "0";
    auto atomic = [](const std::string& s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (ch == '+' || ch == '/' || ch == '(') return false;
        if (s.find('-', 1) != std::string::npos) return false;
        return true;
    };
    std::string out;
    for (std::size_t idx = c_.size(); idx-- > 0;) {
        if (ring_.is_zero(c_[idx])) continue;
        std::string cs = ring_.str(c_[idx]);
        std::string term;
        if (idx == 0) {
            term = cs;
        } else {
            std::string var = idx == 1 ? "t" : "t^" + std::to_string(idx);
            if (ring_.is_one(c_[idx]))
                term = var;
            else
                term = (atomic(cs) ? cs : "(" + cs + ")") + "*" + var;
        }
        if (out.empty())
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

int OrePoly::compare(const OrePoly& a, const OrePoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        int c = Elem::compare(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace skewlab
