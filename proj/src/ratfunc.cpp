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
#include "jainmom/ratfunc.hpp"

namespace jainmom {

namespace {

Integer binom_small(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

RatFuncBeta::RatFuncBeta(BiPoly numerator, unsigned denom_exp)
    : num_(std::move(numerator)), denom_exp_(denom_exp) {
    canonicalize();
}

void RatFuncBeta::canonicalize() {
    if (num_.is_zero()) {
        denom_exp_ = 0;
        return;
    }
    while (denom_exp_ > 0) {
        auto q = num_.divide_one_minus_beta();
        if (!q) {
            break;
        }
        num_ = std::move(*q);
        --denom_exp_;
    }
}

RatFuncBeta RatFuncBeta::coeff_of_v(unsigned j) const {
    return RatFuncBeta(BiPoly::from_beta(num_.beta_coeff_of_v(j)), denom_exp_);
}

RatFuncBeta RatFuncBeta::operator-() const {
    RatFuncBeta f;
    f.num_ = -num_;
    f.denom_exp_ = denom_exp_;
    return f;
}

RatFuncBeta operator+(const RatFuncBeta& a, const RatFuncBeta& b) {
    const unsigned d = std::max(a.denom_exp_, b.denom_exp_);
    const BiPoly omb = BiPoly::one_minus_beta();
    BiPoly na = a.num_ * omb.pow(d - a.denom_exp_);
    BiPoly nb = b.num_ * omb.pow(d - b.denom_exp_);
    return RatFuncBeta(na + nb, d);
}

RatFuncBeta operator-(const RatFuncBeta& a, const RatFuncBeta& b) {
    return a + (-b);
}

RatFuncBeta operator*(const RatFuncBeta& a, const RatFuncBeta& b) {
    return RatFuncBeta(a.num_ * b.num_, a.denom_exp_ + b.denom_exp_);
}

RatFuncBeta operator*(const Rational& s, const RatFuncBeta& f) {
    return RatFuncBeta(s * f.num_, f.denom_exp_);
}

std::vector<RatFuncBeta> shift_main_var(const RatFuncBeta& f, const BetaPoly& step) {
    if (f.is_zero()) {
        return {};
    }
    const auto vdeg = static_cast<unsigned>(f.v_degree());

    std::vector<BetaPoly> step_pow(vdeg + 1);
    step_pow[0] = BetaPoly::one();
    for (unsigned i = 1; i <= vdeg; ++i) {
        step_pow[i] = step_pow[i - 1] * step;
    }

    // v^j beta^b -> sum_t C(j,t) v^{j-t} beta^b step(beta)^t k^t
    std::vector<BiPoly> nums(vdeg + 1);
    for (const auto& [e, c] : f.numerator().terms()) {
        for (unsigned t = 0; t <= e.v; ++t) {
            const Rational w = c * Rational(binom_small(e.v, t));
            nums[t] += BiPoly::from_beta(w * step_pow[t], e.v - t) *
                       BiPoly::term(0, e.b, Rational(1));
        }
    }

    std::vector<RatFuncBeta> out;
    out.reserve(nums.size());
    for (auto& n : nums) {
        out.emplace_back(std::move(n), f.denom_exp());
    }
    return out;
}

RatFuncBeta substitute_shift(const RatFuncBeta& f, const BetaPoly& shift) {
    RatFuncBeta acc;
    for (const auto& c : shift_main_var(f, shift)) {
        acc = acc + c;
    }
    return acc;
}

BetaPoly divide_out(const RatFuncBeta& f, unsigned beta_power, unsigned p_power) {
    if (f.is_zero()) {
        return {};
    }
    if (!f.is_v_free()) {
        throw NotDivisible("value depends on the main variable");
    }
    if (f.denom_exp() > p_power) {
        throw NotDivisible("p-power " + std::to_string(p_power) +
                           " too small for denominator exponent " +
                           std::to_string(f.denom_exp()));
    }
    BetaPoly q = f.numerator().beta_coeff_of_v(0);
    const BetaPoly omb{1, -1};
    for (unsigned i = f.denom_exp(); i < p_power; ++i) {
        q = q * omb;
    }
    auto divided = q.divide_power(beta_power);
    if (!divided) {
        throw NotDivisible("not divisible by beta^" + std::to_string(beta_power));
    }
    return *divided;
}

Rational eval_rational(const RatFuncBeta& f, const Rational& v0, const Rational& beta0) {
    if (beta0 == Rational(1)) {
        throw PoleAtBetaOne();
    }
    const Rational num = f.numerator().eval(v0, beta0);
    const Rational den = pow(Rational(1) - beta0, f.denom_exp());
    return num / den;
}

}  // namespace jainmom
