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

#include "skewlab/algset.hpp"

#include <algorithm>
#include <cmath>

namespace skewlab {

AlgebraicSet::AlgebraicSet(Ring r, std::vector<Elem> pts) : ring(std::move(r)) {
    for (auto& p : pts) {
        if (std::find(points.begin(), points.end(), p) == points.end())
            points.push_back(std::move(p));
    }
}

MinPolyResult min_poly(const AlgebraicSet& delta) {
    const Ring& R = delta.ring;
    MinPolyResult out{OrePoly::one(R), 0, {}};
    for (const Elem& b : delta.points) {
        Elem v = out.f.eval(b);
        if (R.is_zero(v)) continue;
        out.f = OrePoly::t_minus(R, R.conj_value(b, v)) * out.f;
        out.p_basis.push_back(b);
    }
    out.rank = out.f.deg();
    for (const Elem& b : delta.points) {
        if (!R.is_zero(out.f.eval(b))) throw InvariantBreach("minimal polynomial misses a point");
    }
    return out;
}

bool p_independent(const AlgebraicSet& delta) {
    return min_poly(delta).rank == static_cast<int>(delta.points.size());
}

std::vector<Elem> p_basis(const AlgebraicSet& delta) { return min_poly(delta).p_basis; }

MatK vandermonde(const Ring& ring, const std::vector<Elem>& points) {
    std::size_t n = points.size();
    MatK V(ring, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Elem ni = ring.one();
        for (std::size_t i = 0; i < n; ++i) {
            V.at(i, j) = ni;
            ni = ring.add(ring.mul(ring.S(ni), points[j]), ring.D(ni));
        }
    }
    return V;
}

bool vandermonde_invertible(const Ring& ring, const std::vector<Elem>& points) {
    return vandermonde(ring, points).invertible();
}

int RootSet::rank() const {
    int s = 0;
    for (const auto& c : classes) s += c.e_dim;
    return s;
}

std::vector<Rat> rational_roots(const OrePoly& f) {
    const Ring& R = f.ring();
    if (R.family() != Family::Rationals) throw Error("internal", "rational_roots needs ring Q");
    if (!f.is_monic()) throw Error("non-monic", "rational_roots expects a monic polynomial");
    // substitute t = u/L with L the lcm of coefficient denominators: monic
    // integer polynomial in u, whose rational roots are integer divisors of
    // the constant term
    Int L = 1;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        Int d = rat_den(f.coeff(i).rat());
        L = boost::multiprecision::lcm(L, d);
    }
    int n = f.deg();
    std::vector<Int> g(static_cast<std::size_t>(n) + 1);
    Int Lpow = 1;
    for (int i = n; i >= 0; --i) {
        Rat c = f.coeff(static_cast<std::size_t>(i)).rat() * Rat(Lpow);
        if (rat_den(c) != 1) throw InvariantBreach("substitution failed to clear denominators");
        g[static_cast<std::size_t>(i)] = rat_num(c);
        Lpow *= L;
    }
    auto eval_int = [&](const Int& u) {
        Int v = 0;
        for (int i = n; i >= 0; --i) v = v * u + g[static_cast<std::size_t>(i)];
        return v;
    };
    std::vector<Rat> out;
    auto push = [&](const Int& u) {
        Rat r(u, L);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    };
    // peel zero roots
    Int c0 = g[0];
    if (c0 == 0) push(0);
    std::size_t k = 0;
    while (k <= static_cast<std::size_t>(n) && g[k] == 0) ++k;
    if (k > static_cast<std::size_t>(n)) return out;  // f was x^n only
    c0 = g[k];
    for (const Int& d : divisors_of(c0)) {
        if (eval_int(d) == 0) push(d);
        if (eval_int(-d) == 0) push(-d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int exact_log(std::uint64_t value, std::uint64_t base) {
    int d = 0;
    std::uint64_t v = 1;
    while (v < value) {
        v *= base;
        ++d;
    }
    if (v != value) throw InvariantBreach("E-space size is not a power of the centralizer size");
    return d;
}

// e-space dimension over the class centralizer, finite context
int e_dim_finite(const OrePoly& f, const Elem& rep, RootSide side) {
    const Ring& R = f.ring();
    std::uint64_t e_count = 1;  // zero vector
    std::uint64_t c_count = 1;
    for (const Elem& x : R.all_nonzero()) {
        Elem ax = side == RootSide::Right ? R.conj_value(rep, x) : R.conj_value(rep, R.Sinv(x));
        bool in_v;
        if (side == RootSide::Right) {
            in_v = R.is_zero(f.eval(ax));
        } else {
            in_v = left_divmod(f, OrePoly::t_minus(R, ax)).second.is_zero();
        }
        if (in_v) ++e_count;
        if (R.conj_value(rep, x) == rep) ++c_count;
    }
    return exact_log(e_count, c_count);
}

RootSet roots_finite(const OrePoly& f, RootSide side) {
    const Ring& R = f.ring();
    RootSet out{f, side, {}, {}};
    for (const Elem& a : R.all_elements()) {
        bool is_root = side == RootSide::Right
                           ? R.is_zero(f.eval(a))
                           : left_divmod(f, OrePoly::t_minus(R, a)).second.is_zero();
        if (is_root) out.roots.push_back(a);
    }
    for (const Elem& a : out.roots) {
        bool placed = false;
        for (auto& cls : out.classes) {
            if (R.same_class(*cls.rep, a)) {
                cls.members.push_back(a);
                placed = true;
                break;
            }
        }
        if (!placed) {
            RootClass cls;
            cls.rep = a;
            cls.members = {a};
            out.classes.push_back(std::move(cls));
        }
    }
    for (auto& cls : out.classes) {
        std::sort(cls.members.begin(), cls.members.end(), elem_less);
        cls.e_dim = e_dim_finite(f, *cls.rep, side);
    }
    if (static_cast<int>(out.classes.size()) > std::max(f.deg(), 0))
        throw InvariantBreach("more root classes than the degree allows");
    return out;
}

RootSet roots_rationals(const OrePoly& f, RootSide side) {
    const Ring& R = f.ring();
    RootSet out{f, side, {}, {}};
    for (const Rat& r : rational_roots(f)) {
        Elem a = Elem(r);
        out.roots.push_back(a);
        RootClass cls;
        cls.rep = a;
        cls.members = {a};
        cls.e_dim = 1;
        out.classes.push_back(std::move(cls));
    }
    (void)R;
    return out;
}

// central monic quadratic over the rational quaternions
RootSet roots_quat(const OrePoly& f, RootSide side, const Options& opts) {
    const Ring& R = f.ring();
    RootSet out{f, side, {}, {}};
    if (f.deg() == 1) {
        // single root; left and right coincide for linear polynomials
        Elem a = R.neg(f.coeff(0));
        out.roots = {a};
        RootClass cls;
        cls.rep = a;
        cls.members = {a};
        cls.enumerated = true;
        cls.e_dim = 1;
        cls.trace = R.quat_trace(a);
        cls.norm = R.quat_norm(a);
        out.classes.push_back(std::move(cls));
        return out;
    }
    if (f.deg() != 2) throw CapabilityError("quaternion root search supports degree <= 2");
    Elem b1 = f.coeff(1), b0 = f.coeff(0);
    auto central = [](const Quat& q) { return q.x == 0 && q.y == 0 && q.z == 0; };
    if (!central(b1.quat()) || !central(b0.quat()))
        throw CapabilityError("quaternion root search needs central coefficients");
    Rat B = b1.quat().w, C = b0.quat().w;
    // roots: q = -B/2 + pure with N(pure) = C - B^2/4
    Rat w = -B / 2;
    Rat n = C - B * B / 4;
    if (n < 0) {
        // disc > 0: central roots if disc is a rational square, else no roots
        auto s = rat_sqrt_exact(Rat(-n));
        if (!s) return out;  // empty
        for (const Rat& root : {Rat(w + *s), Rat(w - *s)}) {
            Elem a = Elem(Quat{root, Rat(0), Rat(0), Rat(0)});
            if (std::find(out.roots.begin(), out.roots.end(), a) != out.roots.end()) continue;
            out.roots.push_back(a);
            RootClass cls;
            cls.rep = a;
            cls.members = {a};
            cls.e_dim = 1;
            cls.trace = Rat(2) * root;
            cls.norm = root * root;
            out.classes.push_back(std::move(cls));
        }
        return out;
    }
    if (n == 0) {
        Elem a = Elem(Quat{w, Rat(0), Rat(0), Rat(0)});
        out.roots = {a};
        RootClass cls;
        cls.rep = a;
        cls.members = {a};
        cls.e_dim = 1;
        cls.trace = Rat(2) * w;
        cls.norm = w * w;
        out.classes.push_back(std::move(cls));
        return out;
    }
    // one infinite class: trace -B, norm C; E(f, a) is all of H, dimension 2
    // over the quadratic centralizer
    RootClass cls;
    cls.enumerated = false;
    cls.e_dim = 2;
    cls.trace = -B;
    cls.norm = C;
    // try to exhibit a representative: pure part of norm n
    auto witness = [&]() -> std::optional<Elem> {
        for (int d = 1; d <= 6; ++d) {
            Rat target = n * d * d;
            if (rat_den(target) != 1) continue;
            Int t = rat_num(target);
            if (t > 400) continue;
            long tl = static_cast<long>(t);
            for (long a3 = 0; a3 * a3 <= tl; ++a3)
                for (long b3 = a3; a3 * a3 + b3 * b3 <= tl; ++b3) {
                    long rem = tl - a3 * a3 - b3 * b3;
                    auto c3 = int_sqrt_exact(Int(rem));
                    if (!c3) continue;
                    return Elem(Quat{w, Rat(*c3, d), Rat(b3, d), Rat(a3, d)});
                }
        }
        return std::nullopt;
    }();
    (void)opts;
    if (witness) {
        if (!R.is_zero(f.eval(*witness))) throw InvariantBreach("quaternion root witness fails");
        cls.rep = *witness;
        out.roots.push_back(*witness);
    }
    out.classes.push_back(std::move(cls));
    return out;
}

}  // namespace

RootSet roots(const OrePoly& f, RootSide side, const Options& opts) {
    const Ring& R = f.ring();
    if (f.is_zero()) throw Error("degree", "root set of the zero polynomial");
    switch (R.family()) {
        case Family::FiniteField:
            return roots_finite(f, side);
        case Family::Rationals:
            return roots_rationals(f.monic(), side);
        case Family::Quaternions:
            return roots_quat(f.monic(), side, opts);
        case Family::RationalFunctions:
            throw CapabilityError("root enumeration is not available over Q(x)");
    }
    throw InvariantBreach("bad family");
}

WedderburnResult is_wedderburn(const OrePoly& f, const Options& opts) {
    if (!f.is_monic()) throw Error("non-monic", "Wedderburn test needs a monic polynomial");
    WedderburnResult out;
    out.degree = f.deg();
    RootSet rs = roots(f, RootSide::Right, opts);
    out.rank = rs.rank();
    out.exact = true;
    out.verdict = out.rank == out.degree ? Verdict::Yes : Verdict::No;
    if (out.rank > out.degree) throw InvariantBreach("root-set rank exceeds the degree");
    return out;
}

WedderburnResult is_wedderburn_cert(const OrePoly& f, const std::vector<Elem>& candidate_roots) {
    if (!f.is_monic()) throw Error("non-monic", "Wedderburn test needs a monic polynomial");
    WedderburnResult out;
    out.degree = f.deg();
    out.exact = false;
    for (const Elem& a : candidate_roots) {
        if (!f.ring().is_zero(f.eval(a)))
            throw Error("bad-certificate", "supplied point is not a root");
    }
    MinPolyResult mp = min_poly(AlgebraicSet(f.ring(), candidate_roots));
    out.rank = mp.rank;
    out.verdict = (mp.rank == out.degree && mp.f == f.monic()) ? Verdict::Yes : Verdict::Unknown;
    return out;
}

AlgebraicSet closure(const AlgebraicSet& delta, const Options& opts) {
    MinPolyResult mp = min_poly(delta);
    if (mp.f.is_one()) return AlgebraicSet(delta.ring, {});
    RootSet rs = roots(mp.f, RootSide::Right, opts);
    for (const auto& cls : rs.classes) {
        if (!cls.enumerated)
            throw CapabilityError("closure is infinite in this context");
    }
    std::vector<Elem> pts = rs.roots;
    std::sort(pts.begin(), pts.end(), elem_less);
    return AlgebraicSet(delta.ring, std::move(pts));
}

RankProductReport rank_product_report(const OrePoly& g, const OrePoly& h, const Options& opts) {
    const Ring& R = g.ring();
    if (!R.is_finite()) throw CapabilityError("rank reports need a finite context");
    OrePoly gh = g * h;
    auto rank_of_roots = [&](const OrePoly& f) {
        std::vector<Elem> pts;
        for (const Elem& a : R.all_elements())
            if (R.is_zero(f.eval(a))) pts.push_back(a);
        return min_poly(AlgebraicSet(R, pts)).rank;
    };
    RankProductReport rep{0, 0, 0};
    rep.lhs = rank_of_roots(gh);
    rep.rk_vh = rank_of_roots(h);
    // im phi_h over K \ V(h), intersected with V(g)
    std::vector<Elem> img;
    for (const Elem& x : R.all_elements()) {
        if (R.is_zero(h.eval(x))) continue;
        Elem y = phi(h, x);
        if (R.is_zero(g.eval(y))) img.push_back(y);
    }
    rep.rk_im_cap_vg = min_poly(AlgebraicSet(R, img)).rank;
    if (rep.lhs != rep.rk_vh + rep.rk_im_cap_vg)
        throw InvariantBreach("product rank identity failed");
    (void)opts;
    return rep;
}

PhiImageReport phi_image_report(const OrePoly& h, const AlgebraicSet& delta, const Options& opts) {
    const Ring& R = h.ring();
    for (const Elem& a : delta.points) {
        if (R.is_zero(h.eval(a)))
            throw Error("precondition", "Delta must be disjoint from V(h)");
    }
    PhiImageReport rep;
    MinPolyResult mp = min_poly(delta);
    rep.rank_delta = mp.rank;
    for (const Elem& a : delta.points) {
        Elem y = phi(h, a);
        if (std::find(rep.image.begin(), rep.image.end(), y) == rep.image.end())
            rep.image.push_back(y);
    }
    rep.rank_image = min_poly(AlgebraicSet(R, rep.image)).rank;
    // closure(Delta) cap V(h): x runs over V(h), membership tested via f_Delta
    RootSet vh = roots(h, RootSide::Right, opts);
    for (const auto& cls : vh.classes) {
        if (!cls.enumerated)
            throw CapabilityError("V(h) is infinite; closure intersection not computable");
    }
    std::vector<Elem> inter;
    for (const Elem& x : vh.roots)
        if (R.is_zero(mp.f.eval(x))) inter.push_back(x);
    rep.rank_closure_cap_vh = min_poly(AlgebraicSet(R, inter)).rank;
    if (rep.rank_image != rep.rank_delta - rep.rank_closure_cap_vh)
        throw InvariantBreach("phi-image rank identity failed");
    return rep;
}

}  // namespace skewlab
