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

#include <stdexcept>
#include <string>
#include <vector>

#include "jainmom/bipoly.hpp"

namespace jainmom {

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct PoleAtBetaOne : std::domain_error {
    PoleAtBetaOne() : std::domain_error("evaluation at beta = 1 hits the (1-beta) pole") {}
};

/*
 * Element of Q[v, beta][p] where p = 1/(1-beta): a bivariate numerator over
 * the denominator (1-beta)^denom_exp. Canonical form: either denom_exp == 0
 * or the numerator is not divisible by (1-beta); the zero value has
 * denom_exp == 0. Every operation returns canonical values.
 */
class RatFuncBeta {
public:
    RatFuncBeta() = default;  // zero
    RatFuncBeta(BiPoly numerator, unsigned denom_exp);

    static RatFuncBeta p_power(unsigned k) {
        return RatFuncBeta(BiPoly::constant(Rational(1)), k);
    }
    static RatFuncBeta constant(const Rational& c) {
        return RatFuncBeta(BiPoly::constant(c), 0);
    }
    static RatFuncBeta from_bipoly(const BiPoly& n) { return RatFuncBeta(n, 0); }
    static RatFuncBeta from_beta(const BetaPoly& p) {
        return RatFuncBeta(BiPoly::from_beta(p), 0);
    }

    const BiPoly& numerator() const { return num_; }
    unsigned denom_exp() const { return denom_exp_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_v_free() const { return num_.v_degree() <= 0; }
    int v_degree() const { return num_.v_degree(); }

    // Coefficient of v^j as a v-free value over the same denominator,
    // re-canonicalized.
    RatFuncBeta coeff_of_v(unsigned j) const;

    RatFuncBeta operator-() const;
    friend RatFuncBeta operator+(const RatFuncBeta& a, const RatFuncBeta& b);
    friend RatFuncBeta operator-(const RatFuncBeta& a, const RatFuncBeta& b);
    friend RatFuncBeta operator*(const RatFuncBeta& a, const RatFuncBeta& b);
    friend RatFuncBeta operator*(const Rational& s, const RatFuncBeta& f);

    friend bool operator==(const RatFuncBeta& a, const RatFuncBeta& b) {
        return a.denom_exp_ == b.denom_exp_ && a.num_ == b.num_;
    }

private:
    BiPoly num_;
    unsigned denom_exp_ = 0;
    void canonicalize();
};

/*
 * Expands f(v + step(beta) * k) and collects powers of k: returns c_0..c_D
 * with f(v + step*k) = sum_t c_t k^t identically. Empty for f = 0.
 */
std::vector<RatFuncBeta> shift_main_var(const RatFuncBeta& f, const BetaPoly& step);

// f(v + shift(beta)), implemented as the k = 1 specialization of the above.
RatFuncBeta substitute_shift(const RatFuncBeta& f, const BetaPoly& shift);

/*
 * For a v-free f, returns the unique q with f = q * beta^beta_power * p^p_power
 * as a pure polynomial in beta. Throws NotDivisible when no such q exists;
 * callers treat that as a structural failure, never as something to repair.
 */
BetaPoly divide_out(const RatFuncBeta& f, unsigned beta_power, unsigned p_power);

// Exact evaluation; throws PoleAtBetaOne when beta0 = 1.
Rational eval_rational(const RatFuncBeta& f, const Rational& v0, const Rational& beta0);

}  // namespace jainmom
