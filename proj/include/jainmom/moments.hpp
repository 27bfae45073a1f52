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

#include <map>
#include <mutex>
#include <utility>

#include "jainmom/series.hpp"

namespace jainmom {

/*
 * The m-th operator moment applied to t^m, stored as its graded bracket:
 *
 *   moment(m) = (y p^m / n^m) * sum_k entries[k] * y^{m-1-k} * p^k
 *
 * with y = n x. The y^1 and n^{-m} prefactors are bookkeeping only (n never
 * enters the ring); eval_exact applies them.
 */
struct MomentForm {
    unsigned m = 0;
    GradedForm graded;

    Rational eval_exact(const Rational& n, const Rational& x,
                        const Rational& beta) const;
};

class MomentEngine {
public:
    explicit MomentEngine(SeriesEngine& series) : series_(series) {}

    const MomentForm& moment(unsigned m);

    // sigma_k^m for k = 2..m-2 (m >= 4); the graded slots outside that range
    // are the leading binomial coefficients and the endpoint polynomial.
    std::map<unsigned, BetaPoly> extract_sigma(unsigned m);

    // (computed endpoint entries[m-1], second-order Eulerian B_{m-1}); the
    // caller compares. m >= 2.
    std::pair<BetaPoly, BetaPoly> endpoint_check(unsigned m);

    // The beta = 0 reduction target: sum_r S(m,r) y^r as a polynomial in y,
    // built independently from Stirling numbers of the second kind.
    BetaPoly moment_beta_zero(unsigned m);

    CoeffTriangle sigma_triangle(unsigned m_max);

    SeriesEngine& series() { return series_; }

private:
    SeriesEngine& series_;
    std::map<unsigned, MomentForm> memo_;
    std::mutex mu_;
};

}  // namespace jainmom
