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

#include "skewlab/galg.hpp"

#include <algorithm>

namespace skewlab {

namespace {

Elem normalize_unit(const Ring& R, const Elem& u) {
    if (R.is_zero(u)) throw Error("zero-conjugator", "inner automorphism needs a unit");
    const Quat& q = u.quat();
    Rat lead = q.w != 0 ? q.w : q.x != 0 ? q.x : q.y != 0 ? q.y : q.z;
    return Elem(Quat{q.w / lead, q.x / lead, q.y / lead, q.z / lead});
}

}  // namespace

Aut Aut::identity() { return Aut{}; }

Aut Aut::frobenius(int power) {
    Aut a;
    if (power == 0) return a;
    a.kind = Kind::Frobenius;
    a.power = power;
    return a;
}

Aut Aut::inner(const Ring& ring, const Elem& unit) {
    if (ring.family() != Family::Quaternions)
        throw Error("ring-spec", "inner automorphisms are supported over HQ");
    Elem n = normalize_unit(ring, unit);
    Aut a;
    const Quat& q = n.quat();
    if (q.x == 0 && q.y == 0 && q.z == 0) return a;  // central unit: identity
    a.kind = Kind::Inner;
    a.unit = n;
    return a;
}

bool Aut::operator==(const Aut& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Frobenius) return power == o.power;
    if (kind == Kind::Inner) return unit == o.unit;
    return true;
}

std::string Aut::str(const Ring& ring) const {
    switch (kind) {
        case Kind::Identity:
            return "Id";
        case Kind::Frobenius:
            return power == 1 ? "Frob" : "Frob^" + std::to_string(power);
        case Kind::Inner:
            return "Int(" + ring.str(unit) + ")";
    }
    return {};
}

AutGroup::AutGroup(Ring ring, std::vector<Aut> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {}

AutGroup AutGroup::closure(const Ring& ring, std::vector<Aut> generators) {
    if (!ring.classical())
        throw Error("ring-spec", "automorphism groups act on classical contexts (S=id, D=0)");
    for (const Aut& g : generators) {
        if (g.kind == Aut::Kind::Frobenius && ring.family() != Family::FiniteField)
            throw Error("ring-spec", "Frobenius needs a finite field");
        if (g.kind == Aut::Kind::Inner && ring.family() != Family::Quaternions)
            throw Error("ring-spec", "Int(u) needs the quaternions");
    }
    std::vector<Aut> elems{Aut::identity()};
    auto canon = [&](const Aut& a) {
        if (a.kind == Aut::Kind::Frobenius) {
            int m = ring.m();
            int p = ((a.power % m) + m) % m;
            return Aut::frobenius(p);
        }
        if (a.kind == Aut::Kind::Inner) return Aut::inner(ring, a.unit);
        return Aut::identity();
    };
    auto mul = [&](const Aut& a, const Aut& b) {
        if (a.kind == Aut::Kind::Identity) return canon(b);
        if (b.kind == Aut::Kind::Identity) return canon(a);
        if (a.kind == Aut::Kind::Frobenius && b.kind == Aut::Kind::Frobenius)
            return canon(Aut::frobenius(a.power + b.power));
        if (a.kind == Aut::Kind::Inner && b.kind == Aut::Kind::Inner)
            return Aut::inner(ring, ring.mul(a.unit, b.unit));
        throw Error("ring-spec", "mixed automorphism kinds");
    };
    for (auto& g : generators) {
        Aut c = canon(g);
        if (std::find(elems.begin(), elems.end(), c) == elems.end()) elems.push_back(c);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < elems.size() && !grew; ++i)
            for (std::size_t j = 0; j < elems.size() && !grew; ++j) {
                Aut c = mul(elems[i], elems[j]);
                if (std::find(elems.begin(), elems.end(), c) == elems.end()) {
                    elems.push_back(c);
                    grew = true;
                }
            }
        if (elems.size() > 64)
            throw CapabilityError("automorphism group closure exceeds 64 elements");
    }
    AutGroup g(ring, std::move(elems));
    // group sanity: inverses exist within the closure
    for (std::size_t i = 0; i < g.size(); ++i) g.inverse(i);
    return g;
}

std::size_t AutGroup::index_of(const Aut& a) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == a) return i;
    throw InvariantBreach("automorphism escaped the closure");
}

Elem AutGroup::apply(std::size_t i, const Elem& a) const {
    const Aut& s = elements_[i];
    switch (s.kind) {
        case Aut::Kind::Identity:
            return a;
        case Aut::Kind::Frobenius: {
            Elem r = a;
            std::uint64_t reps = 1;
            for (int k = 0; k < s.power; ++k) reps *= static_cast<std::uint64_t>(ring_.p());
            return ring_.pow(a, static_cast<unsigned>(reps));
        }
        case Aut::Kind::Inner:
            return ring_.mul(ring_.mul(s.unit, a), ring_.inv(s.unit));
    }
    throw InvariantBreach("bad automorphism kind");
}

std::size_t AutGroup::compose(std::size_t i, std::size_t j) const {
    const Aut &a = elements_[i], &b = elements_[j];
    if (a.kind == Aut::Kind::Identity) return j;
    if (b.kind == Aut::Kind::Identity) return i;
    if (a.kind == Aut::Kind::Frobenius && b.kind == Aut::Kind::Frobenius) {
        int m = ring_.m();
        return index_of(Aut::frobenius(((a.power + b.power) % m + m) % m));
    }
    if (a.kind == Aut::Kind::Inner && b.kind == Aut::Kind::Inner)
        return index_of(Aut::inner(ring_, ring_.mul(a.unit, b.unit)));
    throw Error("ring-spec", "mixed automorphism kinds");
}

std::size_t AutGroup::inverse(std::size_t i) const {
    for (std::size_t j = 0; j < elements_.size(); ++j) {
        if (elements_[compose(i, j)].kind == Aut::Kind::Identity) return j;
    }
    throw InvariantBreach("automorphism without inverse in the closure");
}

bool AutGroup::fixes(const Elem& x) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (!(apply(i, x) == x)) return false;
    return true;
}

OrbitDecomposition orbit(const AutGroup& g, const Elem& a) {
    const Ring& R = g.ring();
    OrbitDecomposition out;
    out.a = a;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Elem img = g.apply(i, a);
        if (std::find(out.orbit.begin(), out.orbit.end(), img) == out.orbit.end())
            out.orbit.push_back(img);
        if (R.same_class(img, a)) out.stabilizer.push_back(i);
    }
    // G_a is a subgroup: closed under composition and inverses
    for (std::size_t x : out.stabilizer) {
        for (std::size_t y : out.stabilizer) {
            std::size_t xy = g.compose(x, y);
            if (std::find(out.stabilizer.begin(), out.stabilizer.end(), xy) ==
                out.stabilizer.end())
                throw InvariantBreach("stabilizer-class subgroup is not closed");
        }
        std::size_t xi = g.inverse(x);
        if (std::find(out.stabilizer.begin(), out.stabilizer.end(), xi) == out.stabilizer.end())
            throw InvariantBreach("stabilizer-class subgroup misses an inverse");
    }
    // left cosets sigma G_a <-> class pieces sigma(G_a . a)
    std::vector<bool> seen(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        out.coset_reps.push_back(i);
        for (std::size_t s : out.stabilizer) seen[g.compose(i, s)] = true;
        std::vector<Elem> piece;
        for (std::size_t s : out.stabilizer) {
            Elem v = g.apply(g.compose(i, s), a);
            if (std::find(piece.begin(), piece.end(), v) == piece.end()) piece.push_back(v);
        }
        std::sort(piece.begin(), piece.end(), elem_less);
        out.pieces.push_back(std::move(piece));
    }
    if (out.coset_reps.size() * out.stabilizer.size() != g.size())
        throw InvariantBreach("coset decomposition does not partition the group");
    // the pieces partition the orbit
    std::size_t total = 0;
    for (const auto& p : out.pieces) total += p.size();
    if (total != out.orbit.size())
        throw InvariantBreach("class pieces fail to partition the orbit");
    return out;
}

GPolyResult g_min_poly(const AutGroup& g, const AlgebraicSet& delta, const Options& opts) {
    const Ring& R = g.ring();
    std::vector<Elem> pts;
    for (const Elem& a : delta.points)
        for (std::size_t i = 0; i < g.size(); ++i) {
            Elem v = g.apply(i, a);
            if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
        }
    MinPolyResult mp = min_poly(AlgebraicSet(R, pts));
    GPolyResult out{mp.f, true, mp.rank, std::nullopt};
    for (std::size_t i = 0; i < mp.f.coeffs().size(); ++i)
        out.coeffs_in_fixed_ring = out.coeffs_in_fixed_ring && g.fixes(mp.f.coeff(i));
    if (!out.coeffs_in_fixed_ring)
        throw InvariantBreach("G-minimal polynomial has a coefficient outside the fixed ring");
    // attach a linear factorization where the contexts allow one
    if (R.family() == Family::Quaternions && mp.f.deg() >= 1 && mp.f.deg() <= 2) {
        bool central = true;
        for (std::size_t i = 0; i < mp.f.coeffs().size(); ++i) {
            const Quat& qc = mp.f.coeff(i).quat();
            central = central && qc.x == 0 && qc.y == 0 && qc.z == 0;
        }
        if (central) {
            out.linear_factors = central_factorize(mp.f, pts);
        } else {
            try {
                out.linear_factors = linear_split(mp.f, opts, pts);
            } catch (const CapabilityError&) {
                // factorization stays unset; it is an optional attachment
            }
        }
    } else if (R.is_finite() || R.family() == Family::Rationals) {
        auto split = linear_split(mp.f, opts, pts);
        if (split) out.linear_factors = std::move(*split);
    }
    return out;
}

GRankReport rank_report(const AutGroup& g, const Elem& a, const Options& opts) {
    const Ring& R = g.ring();
    GPolyResult gp = g_min_poly(g, AlgebraicSet(R, {a}), opts);
    OrbitDecomposition od = orbit(g, a);
    std::vector<Elem> piece;  // G_a . a
    for (std::size_t s : od.stabilizer) {
        Elem v = g.apply(s, a);
        if (std::find(piece.begin(), piece.end(), v) == piece.end()) piece.push_back(v);
    }
    GRankReport rep{gp.degree, static_cast<int>(g.size() / od.stabilizer.size()),
                    min_poly(AlgebraicSet(R, piece)).rank};
    if (rep.rk_orbit != rep.index * rep.rk_piece)
        throw InvariantBreach("orbit rank identity failed");
    return rep;
}

FullVerdict is_full(const AlgebraicSet& delta, const Options& opts) {
    const Ring& R = delta.ring;
    if (R.is_finite() || R.family() == Family::Rationals) {
        AlgebraicSet cl = closure(delta, opts);
        std::vector<Elem> a = cl.points, b = delta.points;
        std::sort(a.begin(), a.end(), elem_less);
        std::sort(b.begin(), b.end(), elem_less);
        return a == b ? FullVerdict::Full : FullVerdict::NotFull;
    }
    if (R.family() == Family::Quaternions) {
        MinPolyResult mp = min_poly(delta);
        if (mp.rank == 0) return FullVerdict::Full;  // empty set, f = 1
        if (mp.rank == 1) return FullVerdict::Full;  // V(t - a) = {a}
        if (mp.rank == 2) {
            RootSet rs = roots(mp.f, RootSide::Right, opts);
            bool infinite = false;
            for (const auto& c : rs.classes) infinite = infinite || !c.enumerated;
            if (infinite) return FullVerdict::NotFull;  // a whole class of roots
            // enumerable root set: compare directly
            std::vector<Elem> a = rs.roots, b = delta.points;
            std::sort(a.begin(), a.end(), elem_less);
            std::sort(b.begin(), b.end(), elem_less);
            return a == b ? FullVerdict::Full : FullVerdict::NotFull;
        }
        return FullVerdict::Unknown;
    }
    throw CapabilityError("fullness is not decidable in this context");
}

namespace {

// K^G inside HQ as a Q-vector space; returns a basis from {1, i, j, k}
// coordinates by intersecting the fixed spaces of the generators.
std::vector<Quat> fixed_ring_basis_hq(const AutGroup& g) {
    // collect fixed vectors among rational combinations: solve sigma(x) = x
    // for all sigma simultaneously on the 4-dimensional coordinate space
    std::vector<std::vector<Rat>> rowsys;
    const Ring& R = g.ring();
    for (std::size_t s = 0; s < g.size(); ++s) {
        for (int b = 0; b < 4; ++b) {
            Quat unit{Rat(0), Rat(0), Rat(0), Rat(0)};
            (b == 0 ? unit.w : b == 1 ? unit.x : b == 2 ? unit.y : unit.z) = 1;
            Elem img = g.apply(s, Elem(unit));
            const Quat& q = img.quat();
            // row block: (sigma - id) applied to basis vector b
            if (rowsys.size() < (s + 1) * 4) rowsys.resize((s + 1) * 4, std::vector<Rat>(4, Rat(0)));
            rowsys[s * 4 + 0][static_cast<std::size_t>(b)] = q.w - (b == 0 ? 1 : 0);
            rowsys[s * 4 + 1][static_cast<std::size_t>(b)] = q.x - (b == 1 ? 1 : 0);
            rowsys[s * 4 + 2][static_cast<std::size_t>(b)] = q.y - (b == 2 ? 1 : 0);
            rowsys[s * 4 + 3][static_cast<std::size_t>(b)] = q.z - (b == 3 ? 1 : 0);
        }
    }
    // kernel by rational row reduction
    std::size_t rows = rowsys.size();
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(4, false);
    for (std::size_t col = 0; col < 4 && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (rowsys[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(rowsys[piv], rowsys[rank]);
        Rat pv = rowsys[rank][col];
        for (auto& v : rowsys[rank]) v /= pv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || rowsys[r][col] == 0) continue;
            Rat f = rowsys[r][col];
            for (std::size_t c = 0; c < 4; ++c) rowsys[r][c] -= f * rowsys[rank][c];
        }
        pivots.push_back(col);
        is_pivot[col] = true;
        ++rank;
    }
    std::vector<Quat> basis;
    for (std::size_t free = 0; free < 4; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> x(4, Rat(0));
        x[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) x[pivots[r]] = -rowsys[r][free];
        basis.push_back(Quat{x[0], x[1], x[2], x[3]});
    }
    (void)R;
    return basis;
}

// is z = alpha + beta*theta a square in Q(theta), theta^2 = -n (n > 0)?
bool is_square_imag_quadratic(const Rat& alpha, const Rat& beta, const Rat& n) {
    if (beta == 0) {
        if (rat_sqrt_exact(alpha)) return true;          // gamma^2 = alpha
        if (n != 0 && alpha <= 0 && rat_sqrt_exact(Rat(-alpha / n))) return true;  // (delta theta)^2
        return false;
    }
    // (gamma + delta theta)^2 = gamma^2 - n delta^2 + 2 gamma delta theta
    // => gamma^2 = (alpha + s)/2 with s^2 = alpha^2 + n beta^2
    auto s = rat_sqrt_exact(Rat(alpha * alpha + n * beta * beta));
    if (!s) return false;
    for (const Rat& cand : {Rat((alpha + *s) / 2), Rat((alpha - *s) / 2)}) {
        if (cand <= 0) continue;
        if (rat_sqrt_exact(cand)) return true;
    }
    return false;
}

}  // namespace

bool irreducible_over_fixed(const AutGroup& g, const GPolyResult& f) {
    const Ring& R = g.ring();
    if (!f.coeffs_in_fixed_ring)
        throw Error("precondition", "polynomial must have coefficients in the fixed ring");
    if (f.f.deg() <= 0) throw Error("degree", "irreducibility needs degree >= 1");
    if (f.f.deg() == 1) return true;

    if (R.is_finite()) {
        // trial division by monic polynomials with coefficients in the fixed
        // subfield, of degree up to deg/2
        std::vector<Elem> sub;
        for (const Elem& x : R.all_elements())
            if (g.fixes(x)) sub.push_back(x);
        std::uint64_t fq = sub.size();
        for (int d = 1; 2 * d <= f.f.deg(); ++d) {
            std::uint64_t total = 1;
            for (int i = 0; i < d; ++i) total *= fq;
            for (std::uint64_t v = 0; v < total; ++v) {
                std::uint64_t t = v;
                std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
                for (int i = 0; i < d; ++i) {
                    c[static_cast<std::size_t>(i)] = sub[t % fq];
                    t /= fq;
                }
                c[static_cast<std::size_t>(d)] = R.one();
                if (right_divmod(f.f, OrePoly(R, std::move(c))).second.is_zero()) return false;
            }
        }
        return true;
    }

    if (R.family() == Family::Quaternions) {
        std::vector<Quat> basis = fixed_ring_basis_hq(g);
        auto as_pair = [&](const Elem& e, const Quat& theta) -> std::optional<std::pair<Rat, Rat>> {
            // e = alpha + beta*theta with rational alpha, beta?
            const Quat& q = e.quat();
            Rat beta(0);
            // theta has zero scalar part by construction
            if (theta.x != 0)
                beta = q.x / theta.x;
            else if (theta.y != 0)
                beta = q.y / theta.y;
            else if (theta.z != 0)
                beta = q.z / theta.z;
            if (q.x == beta * theta.x && q.y == beta * theta.y && q.z == beta * theta.z)
                return std::make_pair(q.w, beta);
            return std::nullopt;
        };
        if (basis.size() == 1) {
            // K^G = Q: rational polynomial of degree <= 3 via root search
            if (f.f.deg() > 3)
                throw CapabilityError("irreducibility over Q supported up to degree 3");
            Ring Q = Ring::rationals();
            std::vector<Elem> c;
            for (std::size_t i = 0; i < f.f.coeffs().size(); ++i)
                c.push_back(Elem(f.f.coeff(i).quat().w));
            return rational_roots(OrePoly(Q, std::move(c))).empty();
        }
        if (basis.size() == 2) {
            // K^G = Q(theta), an imaginary quadratic field
            Quat theta = basis[0].x == 0 && basis[0].y == 0 && basis[0].z == 0 ? basis[1]
                                                                               : basis[0];
            theta.w = 0;  // normalize to a pure generator
            Rat nval = theta.x * theta.x + theta.y * theta.y + theta.z * theta.z;
            if (f.f.deg() != 2)
                throw CapabilityError("irreducibility over Q(theta) supported at degree 2");
            auto b1 = as_pair(f.f.coeff(1), theta);
            auto b0 = as_pair(f.f.coeff(0), theta);
            if (!b1 || !b0) throw InvariantBreach("coefficients escape the fixed field");
            // discriminant B^2 - 4C in Q(theta); reducible iff it is a square
            Rat da = b1->first * b1->first - nval * b1->second * b1->second - 4 * b0->first;
            Rat db = 2 * b1->first * b1->second - 4 * b0->second;
            return !is_square_imag_quadratic(da, db, nval);
        }
        throw CapabilityError("unsupported fixed ring inside the quaternions");
    }
    throw CapabilityError("irreducibility test not available in this context");
}

std::optional<std::vector<OrePoly>> central_factorize(const OrePoly& f,
                                                      const std::vector<Elem>& hints) {
    const Ring& R = f.ring();
    if (R.family() != Family::Quaternions)
        throw CapabilityError("central factorization is a quaternion operation");
    if (!f.is_monic()) throw Error("non-monic", "central factorization needs a monic polynomial");
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Quat& q = f.coeff(i).quat();
        if (!(q.x == 0 && q.y == 0 && q.z == 0))
            throw Error("precondition", "coefficients must be central (rational)");
    }
    if (f.deg() == 1) return std::vector<OrePoly>{f};
    if (f.deg() != 2) throw CapabilityError("central factorization supported up to degree 2");

    std::optional<Elem> root;
    for (const Elem& h : hints)
        if (R.is_zero(f.eval(h))) {
            root = h;
            break;
        }
    if (!root) {
        RootSet rs = roots(f, RootSide::Right);
        if (rs.roots.empty()) {
            bool exists = false;
            for (const auto& c : rs.classes) exists = exists || !c.enumerated;
            if (exists)
                throw Error("no-rational-witness",
                            "roots exist but no small rational witness was found");
            return std::nullopt;  // genuinely rootless central quadratic
        }
        root = rs.roots.front();
    }
    auto [q, rem] = right_divmod(f, OrePoly::t_minus(R, *root));
    if (!rem.is_zero()) throw InvariantBreach("claimed root fails to divide");
    if (q.deg() != 1) throw InvariantBreach("quotient is not linear");
    std::vector<OrePoly> out{q, OrePoly::t_minus(R, *root)};
    if (!(out[0] * out[1] == f)) throw InvariantBreach("central factors fail to re-multiply");
    return out;
}

}  // namespace skewlab
