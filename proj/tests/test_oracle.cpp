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
#include <doctest.h>

#include <cmath>

#include "jainmom/oracle.hpp"
#include "jainmom/series.hpp"

using namespace jainmom;
using namespace jainmom::oracle;

TEST_CASE("series sum reproduces the geometric base case") {
    // order 1 is the geometric series 1/(1-beta) regardless of alpha
    CHECK(std::abs(numeric_series(1, 2.0, 0.5).value - 2.0) < 1e-10);
    CHECK(std::abs(numeric_series(1, 0.7, 0.25).value - 4.0 / 3.0) < 1e-10);
}

TEST_CASE("order zero sums to 1/alpha") {
    for (const double a : {0.5, 1.0, 2.0, 5.0}) {
        CHECK(std::abs(numeric_series(0, a, 0.3).value - 1.0 / a) < 1e-10);
    }
}

TEST_CASE("order three at (1, 1/2) hits the hand value 28") {
    // alpha^2 p^3 + 3 alpha b^2 p^4 + b^3 (1 + 2b) p^5 at alpha = 1,
    // beta = 1/2 is 8 + 12 + 8 = 28, confirmed against the exact engine
    const SumResult got = numeric_series(3, 1.0, 0.5);
    CHECK(compare(Rational(28), got.value, 1e-9).pass);

    SeriesEngine engine;
    CHECK(eval_rational(engine.s_alpha(3).value, Rational(1), Rational(1, 2)) ==
          Rational(28));
}

TEST_CASE("basis values") {
    SUBCASE("beta = 0 is the Poisson mass") {
        const double n = 2.0;
        const double x = 1.5;
        for (unsigned k = 0; k <= 12; ++k) {
            const double poisson = std::exp(-n * x + k * std::log(n * x) -
                                            std::lgamma(k + 1.0));
            CHECK(std::abs(numeric_basis(n, k, 0.0, x) - poisson) < 1e-12);
        }
    }
    SUBCASE("k = 0 collapses to exp(-n x)") {
        CHECK(numeric_basis(2.0, 0, 0.7, 0.25) == std::exp(-0.5));
    }
    SUBCASE("the basis sums to one") {
        const SumResult s = partition_of_unity(1.0, 1.0, 0.5);
        CHECK(std::abs(s.value - 1.0) < 1e-10);
    }
}

TEST_CASE("moment sums") {
    CHECK(std::abs(numeric_moment(0, 2.0, 0.5, 0.3).value - 1.0) < 1e-10);
    // beta = 0 first moment is x (Poisson mean)
    for (const double x : {0.25, 1.0, 2.0}) {
        CHECK(std::abs(numeric_moment(1, 3.0, x, 0.0).value - x) < 1e-10);
    }
}

TEST_CASE("compare semantics") {
    CHECK(compare(Rational(2), 2.0, 1e-9).pass);
    const CompareResult r = compare(Rational(2), 2.1, 1e-9);
    CHECK(!r.pass);
    CHECK(r.achieved == doctest::Approx(0.05).epsilon(1e-12));
    // small exact values are judged on an absolute scale
    CHECK(compare(Rational(0), 1e-12, 1e-9).pass);
    CHECK_THROWS_AS(compare(Rational(1), 1.0, 0.0), std::domain_error);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(numeric_series(2, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(numeric_series(2, 1.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(numeric_series(2, 0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(numeric_basis(0.0, 1, 0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(numeric_moment(2, 1.0, -1.0, 0.5), std::domain_error);
}

TEST_CASE("exhausting the term budget raises") {
    TruncationPolicy tiny;
    tiny.max_terms = 5;
    CHECK_THROWS_AS(numeric_series(2, 1.0, 0.5, tiny), TruncationNotConverged);
}

TEST_CASE("truncation error is monotone in the term budget") {
    SeriesEngine engine;
    for (const double beta : {0.25, 0.5, 0.75}) {
        const Rational exact = eval_rational(engine.s_alpha(4).value, Rational(2),
                                             beta == 0.25 ? Rational(1, 4)
                                             : beta == 0.5
                                                 ? Rational(1, 2)
                                                 : Rational(3, 4));
        const double e = exact.to_double();
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t budget = 25; budget <= 1600; budget *= 2) {
            const double err =
                std::abs(numeric_series_partial(4, 2.0, beta, budget) - e);
            // allow float-level jitter once the error reaches the plateau
            CHECK(err <= prev * (1.0 + 1e-12) + 1e-15 * std::max(1.0, std::abs(e)));
            prev = err;
        }
    }
}

TEST_CASE("the recursion holds numerically with no symbols involved") {
    for (unsigned r = 2; r <= 4; ++r) {
        for (const double a : {0.5, 1.0, 3.0}) {
            for (const double b : {0.0, 0.25, 0.5}) {
                const double lhs = numeric_series(r, a, b).value;
                const double rhs = numeric_recursion_rhs(r, a, b).value;
                CHECK(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)) <= 1e-7);
            }
        }
    }
}

TEST_CASE("terms used are reported") {
    const SumResult s = numeric_series(2, 1.0, 0.5);
    CHECK(s.terms_used > 25);
    CHECK(s.terms_used < 25000);
}
