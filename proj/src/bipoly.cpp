/*
 * Copyright 2026 The jainmom Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "jainmom/bipoly.hpp"

#include <algorithm>

namespace jainmom {

BiPoly BiPoly::term(unsigned vexp, unsigned bexp, const Rational& c) {
    BiPoly p;
    if (!c.is_zero()) {
        p.terms_.emplace(VBExp{vexp, bexp}, c);
    }
    return p;
}

BiPoly BiPoly::one_minus_beta() {
    BiPoly p = constant(Rational(1));
    p.add_term(0, 1, Rational(-1));
    return p;
}

BiPoly BiPoly::from_beta(const BetaPoly& p, unsigned vexp) {
    BiPoly out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        out.add_term(vexp, static_cast<unsigned>(i), p.coeffs()[i]);
    }
    return out;
}

bool BiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == VBExp{0, 0} &&
           terms_.begin()->second.is_one();
}

int BiPoly::v_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, static_cast<int>(e.v));
    }
    return d;
}

int BiPoly::beta_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, static_cast<int>(e.b));
    }
    return d;
}

BetaPoly BiPoly::beta_coeff_of_v(unsigned vexp) const {
    std::vector<Rational> coeffs;
    for (auto it = terms_.lower_bound(VBExp{vexp, 0});
         it != terms_.end() && it->first.v == vexp; ++it) {
        if (coeffs.size() <= it->first.b) {
            coeffs.resize(it->first.b + 1);
        }
        coeffs[it->first.b] = it->second;
    }
    return BetaPoly::from_coeffs(std::move(coeffs));
}

std::vector<Rational> BiPoly::eval_beta_one() const {
    std::vector<Rational> out;
    for (const auto& [e, c] : terms_) {
        if (out.size() <= e.v) {
            out.resize(e.v + 1);
        }
        out[e.v] += c;
    }
    return out;
}

Rational BiPoly::eval(const Rational& v0, const Rational& beta0) const {
    Rational acc;
    for (const auto& [e, c] : terms_) {
        acc += c * jainmom::pow(v0, e.v) * jainmom::pow(beta0, e.b);
    }
    return acc;
}

void BiPoly::add_term(unsigned vexp, unsigned bexp, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    const VBExp key{vexp, bexp};
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly p;
    for (const auto& [e, c] : terms_) {
        p.terms_.emplace(e, -c);
    }
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        add_term(e.v, e.b, c);
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        add_term(e.v, e.b, -c);
    }
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly p;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            p.add_term(ea.v + eb.v, ea.b + eb.b, ca * cb);
        }
    }
    return p;
}

BiPoly operator*(const Rational& s, const BiPoly& p) {
    BiPoly q;
    if (s.is_zero()) {
        return q;
    }
    for (const auto& [e, c] : p.terms_) {
        q.terms_.emplace(e, s * c);
    }
    return q;
}

BiPoly BiPoly::pow(unsigned long e) const {
    BiPoly acc = constant(Rational(1));
    for (unsigned long i = 0; i < e; ++i) {
        acc = acc * *this;
    }
    return acc;
}

std::optional<BiPoly> BiPoly::divide_one_minus_beta() const {
    // Per v-column synthetic division: a(beta) = (1-beta) q(beta) forces
    // q_i = a_0 + ... + a_i, and requires a(1) = 0.
    BiPoly out;
    auto it = terms_.begin();
    while (it != terms_.end()) {
        const unsigned v = it->first.v;
        BetaPoly column = beta_coeff_of_v(v);
        const auto& a = column.coeffs();
        Rational prefix;
        for (std::size_t i = 0; i < a.size(); ++i) {
            prefix += a[i];
            if (i + 1 < a.size()) {
                out.add_term(v, static_cast<unsigned>(i), prefix);
            }
        }
        if (!prefix.is_zero()) {
            return std::nullopt;  // column value at beta = 1 is nonzero
        }
        while (it != terms_.end() && it->first.v == v) {
            ++it;
        }
    }
    return out;
}

}  // namespace jainmom
