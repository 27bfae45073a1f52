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

#include <cstddef>
#include <stdexcept>

#include "jainmom/rational.hpp"

namespace jainmom::oracle {

struct TruncationNotConverged : std::runtime_error {
    explicit TruncationNotConverged(const std::string& what)
        : std::runtime_error(what) {}
};

/*
 * Truncation control for the defining infinite sums. The term ratio is
 * bounded by beta * e^{1-beta} < 1 on [0,1), so the tail decays
 * geometrically and a run of consecutive sub-threshold terms is a safe stop
 * signal. The term budget is sized for beta up to 0.9 at moderate orders
 * (beta = 0.9, r = 8 measures just under 20000 terms to reach the tail
 * threshold); the stop rule ends summation much earlier everywhere else.
 */
struct TruncationPolicy {
    std::size_t max_terms = 25000;
    double abs_tail = 1e-18;
    std::size_t window = 25;
};

struct SumResult {
    double value = 0.0;
    std::size_t terms_used = 0;
};

// Compensated (Kahan) accumulator.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

/*
 * Truncated sum_{k>=0} (alpha + beta k)^{k+r-1} e^{-(alpha+beta k)} / k!.
 * Requires alpha > 0 and 0 <= beta < 1. Throws TruncationNotConverged when
 * max_terms is exhausted before the stop rule fires.
 */
SumResult numeric_series(unsigned r, double alpha, double beta,
                         const TruncationPolicy& policy = {});

// First max_terms partial sum with no stop rule; test hook for truncation
// monotonicity.
double numeric_series_partial(unsigned r, double alpha, double beta,
                              std::size_t max_terms);

/*
 * Basis function value n x (n x + k beta)^{k-1} e^{-(n x + k beta)} / k!,
 * evaluated in log space. The k = 0 factor (n x)^{-1} cancels the prefactor,
 * so the k = 0 value is e^{-n x}; that is the unique convention under which
 * the basis sums to 1.
 */
double numeric_basis(double n, unsigned k, double beta, double x);

// Truncated sum_k (k/n)^m L_{n,k}(x); the m-th monomial moment.
SumResult numeric_moment(unsigned m, double n, double x, double beta,
                         const TruncationPolicy& policy = {});

// Truncated sum_k L_{n,k}(x); should be 1 to truncation accuracy.
SumResult partition_of_unity(double n, double x, double beta,
                             const TruncationPolicy& policy = {});

/*
 * Right-hand side of the series recursion evaluated purely numerically:
 * sum_k beta^k (alpha + beta k) * numeric_series(r-1, alpha + beta k, beta).
 * A symbol-free cross-check of the recursion itself.
 */
SumResult numeric_recursion_rhs(unsigned r, double alpha, double beta,
                                const TruncationPolicy& policy = {});

struct CompareResult {
    bool pass = false;
    double achieved = 0.0;  // |exact - numeric| / max(1, |exact|)
};

// Relative comparison with an absolute floor of 1 on the scale.
CompareResult compare(const Rational& exact, double numeric, double rel_tol);

}  // namespace jainmom::oracle
