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
#include "jainmom/series.hpp"

namespace jainmom {

const char* family_name(TriangleFamily f) {
    switch (f) {
        case TriangleFamily::theta: return "theta";
        case TriangleFamily::phi:   return "phi";
        case TriangleFamily::sigma: return "sigma";
    }
    return "?";
}

RatFuncBeta GradedForm::assemble() const {
    RatFuncBeta acc;
    const std::size_t count = entries.size();
    for (std::size_t k = 0; k < count; ++k) {
        const unsigned vexp = static_cast<unsigned>(count - 1 - k);
        RatFuncBeta term(BiPoly::from_beta(entries[k], vexp),
                         prefix_p_exp + static_cast<unsigned>(k));
        acc = acc + term;
    }
    return acc;
}

std::vector<Integer> CoeffTriangle::column(unsigned k, unsigned beta_exp) const {
    std::vector<Integer> out;
    for (const auto& [rk, poly] : entries) {
        if (rk.second != k) {
            continue;
        }
        const Rational c = poly.coeff(beta_exp);
        if (!c.is_integer()) {
            throw std::logic_error("non-integer triangle coefficient");
        }
        out.push_back(c.num());
    }
    return out;
}

RatFuncBeta weighted_sum_transform(const RatFuncBeta& g) {
    if (g.is_zero()) {
        return {};
    }
    // g(alpha + beta k) = sum_t c_t k^t; multiplying by (alpha + beta k)
    // gives coefficients d_t = alpha c_t + beta c_{t-1}; then each
    // sum_k k^t beta^k collapses to its closed form.
    const auto cs = shift_main_var(g, BetaPoly::monomial(1, Rational(1)));
    const RatFuncBeta v = RatFuncBeta::from_bipoly(BiPoly::var_v());
    const RatFuncBeta beta = RatFuncBeta::from_bipoly(BiPoly::var_beta());

    RatFuncBeta acc;
    for (std::size_t t = 0; t <= cs.size(); ++t) {
        RatFuncBeta dt;
        if (t < cs.size()) {
            dt = v * cs[t];
        }
        if (t >= 1) {
            dt = dt + beta * cs[t - 1];
        }
        if (!dt.is_zero()) {
            acc = acc + dt * power_sum_closed(static_cast<unsigned>(t));
        }
    }
    return acc;
}

GradedForm grade_series(const RatFuncBeta& value, unsigned r, MainVar var) {
    const char* tag = var == MainVar::alpha ? "alpha" : "shifted";
    if (value.v_degree() != static_cast<int>(r) - 1) {
        throw AnsatzViolation("series r=" + std::to_string(r) + " (" + tag +
                              "): main-variable degree " +
                              std::to_string(value.v_degree()) + ", expected " +
                              std::to_string(r - 1));
    }
    GradedForm g;
    g.prefix_p_exp = r;
    g.entries.reserve(r);
    for (unsigned k = 0; k < r; ++k) {
        const RatFuncBeta c = value.coeff_of_v(r - 1 - k);
        try {
            g.entries.push_back(divide_out(c, 0, r + k));
        } catch (const NotDivisible& e) {
            throw AnsatzViolation("series r=" + std::to_string(r) + " (" + tag +
                                  "), slot k=" + std::to_string(k) + ": " + e.what());
        }
    }
    if (!g.entries[0].is_one()) {
        throw AnsatzViolation("series r=" + std::to_string(r) + " (" + tag +
                              "): leading coefficient is not exactly p^r");
    }
    for (unsigned k = 1; k < r; ++k) {
        const unsigned need = var == MainVar::alpha ? k + 1 : k;
        if (!g.entries[k].divisible_by_power(need)) {
            throw AnsatzViolation("series r=" + std::to_string(r) + " (" + tag +
                                  "), slot k=" + std::to_string(k) +
                                  ": not divisible by beta^" + std::to_string(need));
        }
    }
    return g;
}

const SeriesForm& SeriesEngine::s_alpha(unsigned r) {
    if (r == 0) {
        throw std::invalid_argument("series order must be >= 1");
    }
    std::lock_guard lock(mu_);
    return s_alpha_locked(r);
}

const SeriesForm& SeriesEngine::s_alpha_locked(unsigned r) {
    if (auto it = alpha_.find(r); it != alpha_.end()) {
        return it->second;
    }
    SeriesForm form;
    form.r = r;
    form.var = MainVar::alpha;
    if (r == 1) {
        form.value = RatFuncBeta::p_power(1);
    } else {
        form.value = weighted_sum_transform(s_alpha_locked(r - 1).value);
    }
    form.graded = grade_series(form.value, r, MainVar::alpha);
    return alpha_.emplace(r, std::move(form)).first->second;
}

const SeriesForm& SeriesEngine::s_shifted(unsigned r) {
    if (r == 0) {
        throw std::invalid_argument("series order must be >= 1");
    }
    std::lock_guard lock(mu_);
    return s_shifted_locked(r);
}

const SeriesForm& SeriesEngine::s_shifted_locked(unsigned r) {
    if (auto it = shifted_.find(r); it != shifted_.end()) {
        return it->second;
    }
    SeriesForm form;
    form.r = r;
    form.var = MainVar::y_shifted;
    const BetaPoly shift = BetaPoly::monomial(1, Rational(static_cast<long>(r)));
    form.value = substitute_shift(s_alpha_locked(r).value, shift);
    form.graded = grade_series(form.value, r, MainVar::y_shifted);
    return shifted_.emplace(r, std::move(form)).first->second;
}

std::map<unsigned, BetaPoly> SeriesEngine::extract_theta(unsigned r) {
    if (r < 2) {
        throw std::invalid_argument("theta extraction needs r >= 2");
    }
    const SeriesForm& form = s_alpha(r);
    std::map<unsigned, BetaPoly> out;
    for (unsigned k = 1; k < r; ++k) {
        auto q = form.graded.entries[k].divide_power(k + 1);
        if (!q) {
            throw AnsatzViolation("theta r=" + std::to_string(r) +
                                  " k=" + std::to_string(k) +
                                  ": beta divisibility lost");
        }
        out.emplace(k, std::move(*q));
    }
    return out;
}

std::map<unsigned, BetaPoly> SeriesEngine::extract_phi(unsigned r) {
    if (r < 2) {
        throw std::invalid_argument("phi extraction needs r >= 2");
    }
    const SeriesForm& form = s_shifted(r);
    std::map<unsigned, BetaPoly> out;
    for (unsigned k = 1; k < r; ++k) {
        auto q = form.graded.entries[k].divide_power(k);
        if (!q) {
            throw AnsatzViolation("phi r=" + std::to_string(r) +
                                  " k=" + std::to_string(k) +
                                  ": beta divisibility lost");
        }
        out.emplace(k, std::move(*q));
    }
    return out;
}

CoeffTriangle SeriesEngine::theta_triangle(unsigned r_max) {
    CoeffTriangle t;
    t.family = TriangleFamily::theta;
    for (unsigned r = 2; r <= r_max; ++r) {
        for (auto& [k, poly] : extract_theta(r)) {
            t.entries.emplace(std::make_pair(r, k), std::move(poly));
        }
    }
    return t;
}

CoeffTriangle SeriesEngine::phi_triangle(unsigned r_max) {
    CoeffTriangle t;
    t.family = TriangleFamily::phi;
    for (unsigned r = 2; r <= r_max; ++r) {
        for (auto& [k, poly] : extract_phi(r)) {
            t.entries.emplace(std::make_pair(r, k), std::move(poly));
        }
    }
    return t;
}

}  // namespace jainmom
