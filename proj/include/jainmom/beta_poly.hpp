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

#include <initializer_list>
#include <optional>
#include <vector>

#include "jainmom/rational.hpp"

namespace jainmom {

/*
 * Dense univariate polynomial over Rational, used for every polynomial in a
 * single variable (beta, and occasionally y or x in test helpers). Canonical
 * form: no trailing zero coefficients; the zero polynomial stores nothing and
 * reports degree -1.
 */
class BetaPoly {
public:
    BetaPoly() = default;  // zero polynomial
    BetaPoly(std::initializer_list<Rational> ascending);
    explicit BetaPoly(const Rational& constant);

    static BetaPoly from_coeffs(std::vector<Rational> ascending);
    static BetaPoly monomial(std::size_t deg, const Rational& coeff);
    static BetaPoly one() { return BetaPoly(Rational(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1: zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    // Coefficient of beta^i; zero beyond the stored degree.
    Rational coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Rational();
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    BetaPoly operator-() const;
    BetaPoly& operator+=(const BetaPoly& o);
    BetaPoly& operator-=(const BetaPoly& o);
    friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
    friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
    friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
    friend BetaPoly operator*(const Rational& s, const BetaPoly& p);
    friend BetaPoly operator*(const BetaPoly& p, const Rational& s) { return s * p; }

    BetaPoly pow(unsigned long e) const;

    bool divisible_by_power(std::size_t n) const;
    // Exact division by beta^n, or nullopt when a low coefficient is nonzero.
    std::optional<BetaPoly> divide_power(std::size_t n) const;
    // Multiply by beta^n (degree shift).
    BetaPoly shift_up(std::size_t n) const;

    friend bool operator==(const BetaPoly& a, const BetaPoly& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<Rational> c_;  // ascending exponents
    void trim();
};

}  // namespace jainmom
