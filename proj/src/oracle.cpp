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
#include "jainmom/oracle.hpp"

#include <cmath>
#include <string>

namespace jainmom::oracle {

namespace {

void check_domain(double alpha, double beta) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("series oracle requires alpha > 0");
    }
    if (!(beta >= 0.0) || beta >= 1.0) {
        throw std::domain_error("series oracle requires 0 <= beta < 1");
    }
}

void check_basis_domain(double n, double x, double beta) {
    if (!(n > 0.0) || !(x > 0.0)) {
        throw std::domain_error("basis oracle requires n > 0 and x > 0");
    }
    if (!(beta >= 0.0) || beta >= 1.0) {
        throw std::domain_error("basis oracle requires 0 <= beta < 1");
    }
}

// One series term: (alpha + beta k)^{k+r-1} e^{-(alpha+beta k)} / k!,
// evaluated in log space so large k cannot overflow.
double series_term(unsigned r, double alpha, double beta, std::size_t k) {
    const double a = alpha + beta * static_cast<double>(k);
    const double exponent = static_cast<double>(k) + static_cast<double>(r) - 1.0;
    return std::exp(exponent * std::log(a) - a -
                    std::lgamma(static_cast<double>(k) + 1.0));
}

template <typename TermFn>
SumResult run_sum(const TruncationPolicy& policy, const char* what, TermFn term) {
    KahanSum sum;
    std::size_t below = 0;
    for (std::size_t k = 0; k < policy.max_terms; ++k) {
        const double t = term(k);
        sum.add(t);
        below = std::abs(t) < policy.abs_tail ? below + 1 : 0;
        if (below >= policy.window) {
            return {sum.value(), k + 1};
        }
    }
    throw TruncationNotConverged(std::string(what) + ": stop rule not reached in " +
                                 std::to_string(policy.max_terms) + " terms");
}

}  // namespace

SumResult numeric_series(unsigned r, double alpha, double beta,
                         const TruncationPolicy& policy) {
    check_domain(alpha, beta);
    return run_sum(policy, "series sum",
                   [&](std::size_t k) { return series_term(r, alpha, beta, k); });
}

double numeric_series_partial(unsigned r, double alpha, double beta,
                              std::size_t max_terms) {
    check_domain(alpha, beta);
    KahanSum sum;
    for (std::size_t k = 0; k < max_terms; ++k) {
        sum.add(series_term(r, alpha, beta, k));
    }
    return sum.value();
}

double numeric_basis(double n, unsigned k, double beta, double x) {
    check_basis_domain(n, x, beta);
    const double y = n * x;
    if (k == 0) {
        return std::exp(-y);  // the (y)^{-1} factor cancels the y prefactor
    }
    const double a = y + beta * static_cast<double>(k);
    return std::exp(std::log(y) + (static_cast<double>(k) - 1.0) * std::log(a) - a -
                    std::lgamma(static_cast<double>(k) + 1.0));
}

SumResult numeric_moment(unsigned m, double n, double x, double beta,
                         const TruncationPolicy& policy) {
    check_basis_domain(n, x, beta);
    return run_sum(policy, "moment sum", [&](std::size_t k) {
        const double basis = numeric_basis(n, k, beta, x);
        if (m == 0) {
            return basis;
        }
        if (k == 0) {
            return 0.0;
        }
        return std::exp(static_cast<double>(m) *
                        std::log(static_cast<double>(k) / n)) *
               basis;
    });
}

SumResult partition_of_unity(double n, double x, double beta,
                             const TruncationPolicy& policy) {
    return numeric_moment(0, n, x, beta, policy);
}

SumResult numeric_recursion_rhs(unsigned r, double alpha, double beta,
                                const TruncationPolicy& policy) {
    if (r < 1) {
        throw std::domain_error("recursion cross-check needs r >= 1");
    }
    check_domain(alpha, beta);
    std::size_t inner_terms = 0;
    auto result = run_sum(policy, "recursion sum", [&](std::size_t k) {
        const double a = alpha + beta * static_cast<double>(k);
        const double weight =
            std::pow(beta, static_cast<double>(k)) * a;
        if (weight == 0.0) {
            return 0.0;  // beta = 0 beyond k = 0
        }
        const SumResult inner = numeric_series(r - 1, a, beta, policy);
        inner_terms += inner.terms_used;
        return weight * inner.value;
    });
    result.terms_used += inner_terms;
    return result;
}

CompareResult compare(const Rational& exact, double numeric, double rel_tol) {
    if (!(rel_tol > 0.0)) {
        throw std::domain_error("relative tolerance must be positive");
    }
    const double e = exact.to_double();
    const double scale = std::max(1.0, std::abs(e));
    const double achieved = std::abs(e - numeric) / scale;
    return {achieved <= rel_tol, achieved};
}

}  // namespace jainmom::oracle
