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
#include "jainmom/moments.hpp"

namespace jainmom {

Rational MomentForm::eval_exact(const Rational& n, const Rational& x,
                                const Rational& beta) const {
    if (m == 0) {
        return Rational(1);
    }
    if (beta == Rational(1)) {
        throw PoleAtBetaOne();
    }
    const Rational y = n * x;
    const Rational p = Rational(1) / (Rational(1) - beta);
    Rational bracket;
    const std::size_t count = graded.entries.size();
    for (std::size_t k = 0; k < count; ++k) {
        bracket += graded.entries[k].eval(beta) *
                   pow(y, count - 1 - k) * pow(p, k);
    }
    return y * pow(p, m) * bracket / pow(n, m);
}

const MomentForm& MomentEngine::moment(unsigned m) {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(m); it != memo_.end()) {
        return it->second;
    }
    MomentForm form;
    form.m = m;
    if (m == 0) {
        form.graded.prefix_p_exp = 0;
        form.graded.entries = {BetaPoly::one()};
    } else {
        RatFuncBeta acc;
        for (unsigned r = 1; r <= m; ++r) {
            acc = acc + Rational(stirling2(m, r)) * series_.s_shifted(r).value;
        }
        if (acc.v_degree() != static_cast<int>(m) - 1) {
            throw AnsatzViolation("moment m=" + std::to_string(m) +
                                  ": bracket degree " + std::to_string(acc.v_degree()) +
                                  ", expected " + std::to_string(m - 1));
        }
        form.graded.prefix_p_exp = m;
        form.graded.entries.reserve(m);
        for (unsigned k = 0; k < m; ++k) {
            const RatFuncBeta c = acc.coeff_of_v(m - 1 - k);
            try {
                form.graded.entries.push_back(divide_out(c, 0, m + k));
            } catch (const NotDivisible& e) {
                throw AnsatzViolation("moment m=" + std::to_string(m) +
                                      ", slot k=" + std::to_string(k) + ": " +
                                      e.what());
            }
        }
        if (!form.graded.entries[0].is_one()) {
            throw AnsatzViolation("moment m=" + std::to_string(m) +
                                  ": leading coefficient is not exactly p^m");
        }
    }
    return memo_.emplace(m, std::move(form)).first->second;
}

std::map<unsigned, BetaPoly> MomentEngine::extract_sigma(unsigned m) {
    if (m < 4) {
        throw std::invalid_argument("sigma extraction needs m >= 4");
    }
    const MomentForm& form = moment(m);
    std::map<unsigned, BetaPoly> out;
    for (unsigned k = 2; k + 2 <= m; ++k) {
        out.emplace(k, form.graded.entries[k]);
    }
    return out;
}

std::pair<BetaPoly, BetaPoly> MomentEngine::endpoint_check(unsigned m) {
    if (m < 2) {
        throw std::invalid_argument("endpoint check needs m >= 2");
    }
    const MomentForm& form = moment(m);
    return {form.graded.entries[m - 1], eulerian_poly_second(m - 1)};
}

BetaPoly MomentEngine::moment_beta_zero(unsigned m) {
    if (m == 0) {
        return BetaPoly::one();
    }
    std::vector<Rational> coeffs(m + 1);
    for (unsigned r = 1; r <= m; ++r) {
        coeffs[r] = Rational(stirling2(m, r));
    }
    return BetaPoly::from_coeffs(std::move(coeffs));
}

CoeffTriangle MomentEngine::sigma_triangle(unsigned m_max) {
    CoeffTriangle t;
    t.family = TriangleFamily::sigma;
    for (unsigned m = 4; m <= m_max; ++m) {
        for (auto& [k, poly] : extract_sigma(m)) {
            t.entries.emplace(std::make_pair(m, k), std::move(poly));
        }
    }
    return t;
}

}  // namespace jainmom
