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
#pragma once

#include <compare>
#include <map>
#include <optional>

#include "jainmom/beta_poly.hpp"
#include "jainmom/rational.hpp"

namespace jainmom {

// Exponent pair of a bivariate monomial v^v beta^b. Ordered v-major so that
// map iteration visits whole v-columns consecutively.
struct VBExp {
    unsigned v = 0;
    unsigned b = 0;
    friend auto operator<=>(const VBExp&, const VBExp&) = default;
};

/*
 * Sparse bivariate polynomial in (v, beta) over Rational, where v stands for
 * the series' main variable (alpha or y). Canonical form: no zero
 * coefficients stored.
 */
class BiPoly {
public:
    BiPoly() = default;  // zero

    static BiPoly constant(const Rational& c) { return term(0, 0, c); }
    static BiPoly term(unsigned vexp, unsigned bexp, const Rational& c);
    static BiPoly var_v() { return term(1, 0, Rational(1)); }
    static BiPoly var_beta() { return term(0, 1, Rational(1)); }
    static BiPoly one_minus_beta();
    // Embeds a univariate polynomial in beta, optionally times v^vexp.
    static BiPoly from_beta(const BetaPoly& p, unsigned vexp = 0);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int v_degree() const;     // -1 for zero
    int beta_degree() const;  // -1 for zero

    const std::map<VBExp, Rational>& terms() const { return terms_; }

    // The beta-polynomial multiplying v^vexp.
    BetaPoly beta_coeff_of_v(unsigned vexp) const;

    // Substitutes beta = 1; returns the resulting coefficients in v
    // (ascending, possibly with embedded zeros).
    std::vector<Rational> eval_beta_one() const;

    Rational eval(const Rational& v0, const Rational& beta0) const;

    void add_term(unsigned vexp, unsigned bexp, const Rational& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& s, const BiPoly& p);

    BiPoly pow(unsigned long e) const;

    // Exact quotient by (1 - beta), or nullopt when not divisible. Divisibility
    // is equivalent to eval_beta_one() being identically zero.
    std::optional<BiPoly> divide_one_minus_beta() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<VBExp, Rational> terms_;
};

}  // namespace jainmom
