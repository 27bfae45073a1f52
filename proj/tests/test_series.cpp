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

#include <atomic>
#include <thread>

#include "jainmom/oracle.hpp"
#include "jainmom/series.hpp"

using namespace jainmom;

namespace {

RatFuncBeta beta_term(const BetaPoly& b, unsigned vexp, unsigned pexp) {
    return RatFuncBeta(BiPoly::from_beta(b, vexp), pexp);
}

}  // namespace

TEST_CASE("base cases match the first three closed expressions") {
    SeriesEngine engine;
    // S(1) = p
    CHECK(engine.s_alpha(1).value == RatFuncBeta::p_power(1));
    // S(2) = alpha p^2 + b^2 p^3
    const RatFuncBeta s2 =
        beta_term(BetaPoly::one(), 1, 2) + beta_term(BetaPoly{0, 0, 1}, 0, 3);
    CHECK(engine.s_alpha(2).value == s2);
    // S(3) = alpha^2 p^3 + 3 alpha b^2 p^4 + b^3 (1 + 2b) p^5
    const RatFuncBeta s3 = beta_term(BetaPoly::one(), 2, 3) +
                           beta_term(BetaPoly{0, 0, 3}, 1, 4) +
                           beta_term(BetaPoly{0, 0, 0, 1, 2}, 0, 5);
    CHECK(engine.s_alpha(3).value == s3);
}

TEST_CASE("order four matches the printed graded row") {
    SeriesEngine engine;
    const auto theta = engine.extract_theta(4);
    CHECK(theta.at(1) == BetaPoly{6});
    CHECK(theta.at(2) == BetaPoly{4, 11});
    CHECK(theta.at(3) == BetaPoly{1, 8, 6});
}

TEST_CASE("weighted sum transform special cases") {
    // constant input: alpha p + b^2 p^2
    const RatFuncBeta out =
        weighted_sum_transform(RatFuncBeta::constant(Rational(1)));
    CHECK(out == beta_term(BetaPoly::one(), 1, 1) + beta_term(BetaPoly{0, 0, 1}, 0, 2));
    CHECK(weighted_sum_transform(RatFuncBeta()).is_zero());
}

TEST_CASE("transform degenerates to alpha * g at beta = 0") {
    SeriesEngine engine;
    for (unsigned r = 1; r <= 5; ++r) {
        const RatFuncBeta& g = engine.s_alpha(r).value;
        const RatFuncBeta t = weighted_sum_transform(g);
        for (const Rational& a : {Rational(1, 2), Rational(2), Rational(5)}) {
            CHECK(eval_rational(t, a, Rational(0)) ==
                  a * eval_rational(g, a, Rational(0)));
        }
    }
}

TEST_CASE("theta extraction examples") {
    SeriesEngine engine;
    CHECK(engine.extract_theta(3).at(2) == BetaPoly{1, 2});
    CHECK(engine.extract_theta(10).at(1) == BetaPoly{45});
    CHECK(engine.extract_theta(10).at(9) == eulerian_poly_second(9));
}

TEST_CASE("shifted series examples") {
    SeriesEngine engine;
    CHECK(engine.s_shifted(1).value == RatFuncBeta::p_power(1));
    // S(2, y + 2b, b) = p^2 (y + (2 - b) b p)
    const RatFuncBeta expected =
        beta_term(BetaPoly::one(), 1, 2) + beta_term(BetaPoly{0, 2, -1}, 0, 3);
    CHECK(engine.s_shifted(2).value == expected);
}

TEST_CASE("phi extraction examples") {
    SeriesEngine engine;
    CHECK(engine.extract_phi(2).at(1) == BetaPoly{2, -1});
    CHECK(engine.extract_phi(5).at(4) == BetaPoly{625, -974, 622, -192, 24});
    CHECK(engine.extract_phi(10).at(1) == Rational(45) * BetaPoly{2, -1});
}

TEST_CASE("beta = 0 reduction to a pure power of the main variable") {
    SeriesEngine engine;
    for (unsigned r = 1; r <= 8; ++r) {
        for (const Rational& v : {Rational(1, 3), Rational(2), Rational(7)}) {
            const Rational expected = pow(v, r - 1);
            CHECK(eval_rational(engine.s_alpha(r).value, v, Rational(0)) == expected);
            CHECK(eval_rational(engine.s_shifted(r).value, v, Rational(0)) ==
                  expected);
        }
    }
}

TEST_CASE("leading coefficient is exactly the p-power prefix") {
    SeriesEngine engine;
    for (unsigned r = 1; r <= 12; ++r) {
        CHECK(engine.s_alpha(r).graded.entries[0].is_one());
        CHECK(engine.s_shifted(r).graded.entries[0].is_one());
        CHECK(engine.s_alpha(r).graded.prefix_p_exp == r);
    }
}

TEST_CASE("degree and constant-term laws over the computed triangles") {
    SeriesEngine engine;
    for (unsigned r = 2; r <= 12; ++r) {
        const auto theta = engine.extract_theta(r);
        const auto phi = engine.extract_phi(r);
        for (unsigned k = 1; k < r; ++k) {
            CHECK(theta.at(k).degree() == static_cast<int>(k) - 1);
            CHECK(phi.at(k).degree() == static_cast<int>(k));
            CHECK(theta.at(k).coeff(0) == Rational(binomial(r, k + 1)));
        }
    }
}

TEST_CASE("endpoint law: top theta entry is the second-order Eulerian row") {
    SeriesEngine engine;
    for (unsigned r = 3; r <= 11; ++r) {
        CHECK(engine.extract_theta(r).at(r - 1) == eulerian_poly_second(r - 1));
    }
}

TEST_CASE("substituting the alpha form reproduces the shifted extraction") {
    SeriesEngine engine;
    for (unsigned r = 2; r <= 10; ++r) {
        // rebuild the value from its graded form, substitute, regrade
        const RatFuncBeta assembled = engine.s_alpha(r).graded.assemble();
        CHECK(assembled == engine.s_alpha(r).value);
        const RatFuncBeta shifted = substitute_shift(
            assembled, BetaPoly::monomial(1, Rational(static_cast<long>(r))));
        const GradedForm regraded = grade_series(shifted, r, MainVar::y_shifted);
        const auto phi = engine.extract_phi(r);
        for (unsigned k = 1; k < r; ++k) {
            CHECK(*regraded.entries[k].divide_power(k) == phi.at(k));
        }
    }
}

TEST_CASE("series values agree with the truncated defining sum") {
    SeriesEngine engine;
    const std::vector<Rational> alphas = {Rational(1, 2), Rational(1), Rational(3)};
    const std::vector<Rational> betas = {Rational(0), Rational(1, 4),
                                         Rational(1, 2), Rational(3, 4)};
    for (unsigned r = 1; r <= 8; ++r) {
        const RatFuncBeta& value = engine.s_alpha(r).value;
        for (const auto& a : alphas) {
            for (const auto& b : betas) {
                const Rational exact = eval_rational(value, a, b);
                const double numeric =
                    oracle::numeric_series(r, a.to_double(), b.to_double()).value;
                CHECK(oracle::compare(exact, numeric, 1e-9).pass);
            }
        }
    }
}

TEST_CASE("concurrent extraction sees the same values as serial use") {
    SeriesEngine serial;
    std::map<unsigned, std::map<unsigned, BetaPoly>> expected;
    for (unsigned r = 2; r <= 9; ++r) {
        expected[r] = serial.extract_theta(r);
    }

    SeriesEngine shared;
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&, w] {
            for (unsigned r = 2 + (w % 2); r <= 9; ++r) {
                if (shared.extract_theta(r) != expected[r]) {
                    ok = false;
                }
            }
        });
    }
    for (auto& t : workers) {
        t.join();
    }
    CHECK(ok);
}

TEST_CASE("invalid orders are rejected") {
    SeriesEngine engine;
    CHECK_THROWS_AS(engine.s_alpha(0), std::invalid_argument);
    CHECK_THROWS_AS(engine.extract_theta(1), std::invalid_argument);
    CHECK_THROWS_AS(engine.extract_phi(0), std::invalid_argument);
}

TEST_CASE("grading rejects values that do not fit the pattern") {
    // degree too high for the claimed order
    CHECK_THROWS_AS(
        grade_series(RatFuncBeta::from_bipoly(BiPoly::var_v().pow(3)), 2,
                     MainVar::alpha),
        AnsatzViolation);
    // right degree, but the slot polynomial misses its beta divisibility
    const RatFuncBeta bad =
        beta_term(BetaPoly::one(), 1, 2) + beta_term(BetaPoly{0, 1}, 0, 3);
    CHECK_THROWS_AS(grade_series(bad, 2, MainVar::alpha), AnsatzViolation);
    // leading coefficient must be exactly p^r
    const RatFuncBeta scaled =
        beta_term(BetaPoly{2}, 1, 2) + beta_term(BetaPoly{0, 0, 1}, 0, 3);
    CHECK_THROWS_AS(grade_series(scaled, 2, MainVar::alpha), AnsatzViolation);
}
