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

#include "skewlab/qxpoly.hpp"

#include <algorithm>

#include "skewlab/errors.hpp"

namespace skewlab {

QxPoly::QxPoly(Rat c) {
    if (c != 0) c_.push_back(std::move(c));
}

QxPoly::QxPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QxPoly QxPoly::x() { return QxPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

const Rat& QxPoly::lc() const {
    if (c_.empty()) throw Error("internal", "leading coefficient of zero polynomial");
    return c_.back();
}

void QxPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QxPoly QxPoly::operator+(const QxPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QxPoly(std::move(r));
}

QxPoly QxPoly::operator-(const QxPoly& o) const { return *this + (-o); }

QxPoly QxPoly::operator-() const {
    std::vector<Rat> r = c_;
    for (auto& v : r) v = -v;
    return QxPoly(std::move(r));
}

QxPoly QxPoly::operator*(const QxPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QxPoly(std::move(r));
}

QxPoly QxPoly::scaled(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (auto& v : r) v *= s;
    return QxPoly(std::move(r));
}

QxPoly QxPoly::monic() const {
    if (is_zero()) return {};
    return scaled(Rat(1) / lc());
}

QxPoly QxPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<unsigned>(i));
    return QxPoly(std::move(r));
}

Rat QxPoly::eval(const Rat& a) const {
    Rat v(0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * a + c_[i];
    return v;
}

std::pair<QxPoly, QxPoly> QxPoly::divmod(const QxPoly& d) const {
    if (d.is_zero()) throw div_by_zero();
    QxPoly r = *this;
    std::vector<Rat> q(deg() >= d.deg() ? static_cast<std::size_t>(deg() - d.deg() + 1) : 0,
                       Rat(0));
    while (!r.is_zero() && r.deg() >= d.deg()) {
        Rat f = r.lc() / d.lc();
        std::size_t k = static_cast<std::size_t>(r.deg() - d.deg());
        q[k] = f;
        // r -= f * x^k * d
        std::vector<Rat> rc = r.c_;
        for (std::size_t i = 0; i < d.c_.size(); ++i) rc[i + k] -= f * d.c_[i];
        r = QxPoly(std::move(rc));
    }
    return {QxPoly(std::move(q)), r};
}

std::string QxPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t idx = c_.size(); idx-- > 0;) {
        const Rat& c = c_[idx];
        if (c == 0) continue;
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        std::string cs = a.str();
        bool frac = rat_den(a) != 1;
        if (idx == 0) {
            out += frac ? "(" + cs + ")" : cs;
        } else {
            if (a != 1) out += (frac ? "(" + cs + ")" : cs) + "*";
            out += var;
            if (idx > 1) out += "^" + std::to_string(idx);
        }
    }
    return out;
}

int QxPoly::compare(const QxPoly& a, const QxPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

QxPoly qx_gcd(QxPoly a, QxPoly b) {
    while (!b.is_zero()) {
        QxPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace skewlab
