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

/*
 * Acceptance suite: one criterion per check, one pass/fail line each.
 * Everything here is pinned — orders, grids and tolerances are fixed in this
 * file, not configurable.
 */
#include <array>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "jainmom/cli.hpp"
#include "jainmom/closed_forms.hpp"
#include "jainmom/fixtures.hpp"
#include "jainmom/moments.hpp"
#include "jainmom/oeis.hpp"
#include "jainmom/oracle.hpp"

using namespace jainmom;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool pass,
               const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << name;
    if (!detail.empty()) {
        std::cout << " — " << detail;
    }
    std::cout << "\n";
    if (!pass) {
        ++g_failures;
    }
}

RatFuncBeta beta_term(const BetaPoly& b, unsigned vexp, unsigned pexp) {
    return RatFuncBeta(BiPoly::from_beta(b, vexp), pexp);
}

// 1. The first three series orders equal their closed expressions exactly.
void criterion_base_cases(SeriesEngine& series) {
    const RatFuncBeta s1 = RatFuncBeta::p_power(1);
    const RatFuncBeta s2 =
        beta_term(BetaPoly::one(), 1, 2) + beta_term(BetaPoly{0, 0, 1}, 0, 3);
    const RatFuncBeta s3 = beta_term(BetaPoly::one(), 2, 3) +
                           beta_term(BetaPoly{0, 0, 3}, 1, 4) +
                           beta_term(BetaPoly{0, 0, 0, 1, 2}, 0, 5);
    const bool pass = series.s_alpha(1).value == s1 &&
                      series.s_alpha(2).value == s2 &&
                      series.s_alpha(3).value == s3;
    criterion(1, "base-case exactness (orders 1-3, exact equality)", pass);
}

// 2. Every transcribed table value matches, except the annotated set, each
//    member of which must still differ.
void criterion_table_reproduction(MomentEngine& moments) {
    std::string detail;
    bool pass = true;
    try {
        const auto data = default_data_dir();
        const FixtureSet fixtures = FixtureSet::load(data / "reference_tables.txt");
        const auto expected =
            load_expected_mismatches(data / "expected_mismatches.txt");
        const DiscrepancyReport report = fixtures.diff_all(moments);

        std::set<std::string> mismatched;
        for (const auto& e : report.entries) {
            mismatched.insert(e.family + " " + std::to_string(e.index) + " " +
                              std::to_string(e.k));
        }
        pass = mismatched == expected;
        std::ostringstream os;
        os << report.matched << "/" << report.compared << " exact, "
           << mismatched.size() << " annotated diffs confirmed";
        detail = os.str();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    criterion(2, "table reproduction (orders <= 10, annotated diffs asserted)",
              pass, detail);
}

// 3. The endpoint slot of every moment equals the second-order Eulerian row.
void criterion_endpoint(MomentEngine& moments) {
    bool pass = true;
    for (unsigned m = 2; m <= 10; ++m) {
        const auto [computed, reference] = moments.endpoint_check(m);
        pass = pass && computed == reference;
    }
    criterion(3, "endpoint law (orders 2-10, exact equality)", pass);
}

// 4. Closed forms: the exact group verifies cleanly to order 30; the rest
//    verify or produce a stable term-localized report; two specific forms
//    must be discrepant, stably.
void criterion_closed_forms(SeriesEngine& series, MomentEngine& moments) {
    const DiscrepancyReport report = verify_all_closed_forms(30, series, moments);
    const auto stability = analyze_stability(report, {2, 30});

    const std::set<std::string> must_be_exact = {
        "theta-k1-closed", "theta-k2-closed", "theta-k3-closed", "phi-k1-closed"};
    const std::set<std::string> must_be_discrepant = {"theta-k5-closed",
                                                      "sigma-k4-closed"};

    bool pass = true;
    std::string offender;
    for (const auto& s : stability) {
        const bool exact = s.flagged_exps.empty();
        bool ok = s.stable;
        if (must_be_exact.count(s.source)) {
            ok = ok && exact;
        } else if (must_be_discrepant.count(s.source)) {
            ok = ok && !exact;
        }
        if (!ok && pass) {
            offender = s.source;
        }
        pass = pass && ok;
    }
    criterion(4, "closed-form verification (orders 2-30, stability required)",
              pass, pass ? "" : "first offender: " + offender);
}

// 5. At beta = 0 each moment bracket collapses to the Stirling-built
//    polynomial in y.
void criterion_beta_zero(MomentEngine& moments) {
    bool pass = true;
    for (unsigned m = 0; m <= 10; ++m) {
        const auto& form = moments.moment(m);
        std::vector<Rational> coeffs(m + 1);
        if (m == 0) {
            coeffs[0] = Rational(1);
        } else {
            for (unsigned k = 0; k < m; ++k) {
                coeffs[m - k] = form.graded.entries[k].coeff(0);
            }
        }
        pass = pass &&
               BetaPoly::from_coeffs(std::move(coeffs)) == moments.moment_beta_zero(m);
    }
    criterion(5, "beta = 0 reduction (orders 0-10, exact equality)", pass);
}

// 6. Exact values vs truncated defining sums, at the documented grids.
void criterion_numeric_agreement(SeriesEngine& series, MomentEngine& moments) {
    double worst_series = 0.0;
    double worst_moment = 0.0;
    bool pass = true;

    const std::vector<Rational> alphas = {Rational(1, 2), Rational(1), Rational(3)};
    const std::vector<Rational> betas = {Rational(0), Rational(1, 4),
                                         Rational(1, 2), Rational(3, 4)};
    for (unsigned r = 1; r <= 8; ++r) {
        for (const auto& a : alphas) {
            for (const auto& b : betas) {
                const Rational exact = eval_rational(series.s_alpha(r).value, a, b);
                const double numeric =
                    oracle::numeric_series(r, a.to_double(), b.to_double()).value;
                const auto cmp = oracle::compare(exact, numeric, 1e-9);
                worst_series = std::max(worst_series, cmp.achieved);
                pass = pass && cmp.pass;
            }
        }
    }

    const std::vector<std::array<Rational, 3>> points = {
        {Rational(1), Rational(1), Rational(0)},
        {Rational(2), Rational(1, 2), Rational(3, 10)},
        {Rational(5), Rational(3, 2), Rational(3, 5)},
    };
    for (unsigned m = 0; m <= 8; ++m) {
        for (const auto& pt : points) {
            const Rational exact = moments.moment(m).eval_exact(pt[0], pt[1], pt[2]);
            const double numeric =
                oracle::numeric_moment(m, pt[0].to_double(), pt[1].to_double(),
                                       pt[2].to_double())
                    .value;
            const auto cmp = oracle::compare(exact, numeric, 1e-8);
            worst_moment = std::max(worst_moment, cmp.achieved);
            pass = pass && cmp.pass;
        }
    }

    std::ostringstream os;
    os << "worst series err " << worst_series << " (tol 1e-9), worst moment err "
       << worst_moment << " (tol 1e-8)";
    criterion(6, "numeric oracle agreement (series r<=8, moments m<=8)", pass,
              os.str());
}

// 7. The truncated basis sums to 1 on the sample grid.
void criterion_partition_of_unity() {
    const std::vector<std::array<double, 3>> grid = {
        {1, 1, 0}, {2, 0.5, 0.3}, {5, 1.5, 0.6}, {1, 2, 0.75}};
    bool pass = true;
    double worst = 0.0;
    for (const auto& [n, x, b] : grid) {
        const double got = oracle::partition_of_unity(n, x, b).value;
        worst = std::max(worst, std::abs(got - 1.0));
        pass = pass && std::abs(got - 1.0) <= 1e-9;
    }
    std::ostringstream os;
    os << "worst |sum - 1| = " << worst << " (tol 1e-9)";
    criterion(7, "partition of unity on the sample grid", pass, os.str());
}

// 8. Every cited column identification matches fully over rows <= 12, and
//    both Eulerian triangles match their generators for n <= 10.
void criterion_oeis(SeriesEngine& series) {
    bool pass = true;
    std::ostringstream shifts;
    const auto idents = oeis::check_identifications(series, 12);
    pass = pass && idents.size() == 13;
    for (const auto& ident : idents) {
        pass = pass && ident.report.full;
        shifts << ident.id << ":" << ident.report.shift << " ";
    }
    for (const std::string id : {"A008292", "A008517"}) {
        const unsigned first = id == "A008292" ? 0u : 1u;
        for (unsigned n = first; n <= 10; ++n) {
            const auto row = oeis::builtin_triangle_row(id, n);
            const BetaPoly poly =
                id == "A008292" ? eulerian_poly_first(n) : eulerian_poly_second(n);
            std::vector<Integer> expected;
            for (const auto& c : poly.coeffs()) {
                expected.push_back(c.num());
            }
            pass = pass && row == expected;
        }
    }
    criterion(8, "sequence identifications (full matches, rows <= 12)", pass,
              "shifts: " + shifts.str());
}

// 9. Property suites: ring axioms on 1000 random values, ansatz laws on all
//    computed triangles, and the numeric recursion cross-check.
void criterion_properties(SeriesEngine& series, MomentEngine& moments) {
    bool pass = true;

    // ring axioms and canonical re-construction fixed point
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<unsigned> ve(0, 3);
    std::uniform_int_distribution<unsigned> be(0, 4);
    std::uniform_int_distribution<unsigned> dd(0, 3);
    std::uniform_int_distribution<int> nt(0, 5);
    const auto rand_ratfunc = [&] {
        BiPoly p;
        const int n = nt(rng);
        for (int i = 0; i < n; ++i) {
            p.add_term(ve(rng), be(rng), Rational(num(rng), den(rng)));
        }
        return RatFuncBeta(std::move(p), dd(rng));
    };
    for (int i = 0; i < 1000 && pass; ++i) {
        const RatFuncBeta a = rand_ratfunc();
        const RatFuncBeta b = rand_ratfunc();
        const RatFuncBeta c = rand_ratfunc();
        pass = pass && (a + b) + c == a + (b + c);
        pass = pass && a * (b + c) == a * b + a * c;
        pass = pass && (a + (-a)).is_zero();
        const RatFuncBeta s = a * b + c;
        pass = pass && RatFuncBeta(s.numerator(), s.denom_exp()) == s;
    }

    // ansatz degree/divisibility laws for every computed triangle entry
    for (unsigned r = 2; r <= 12 && pass; ++r) {
        const auto theta = series.extract_theta(r);
        const auto phi = series.extract_phi(r);
        for (unsigned k = 1; k < r; ++k) {
            pass = pass && theta.at(k).degree() == static_cast<int>(k) - 1;
            pass = pass && phi.at(k).degree() == static_cast<int>(k);
            pass = pass && theta.at(k).coeff(0) == Rational(binomial(r, k + 1));
            pass = pass &&
                   series.s_alpha(r).graded.entries[k].divisible_by_power(k + 1);
            pass = pass &&
                   series.s_shifted(r).graded.entries[k].divisible_by_power(k);
        }
    }
    for (unsigned m = 4; m <= 12 && pass; ++m) {
        for (const auto& [k, poly] : moments.extract_sigma(m)) {
            pass = pass && poly.degree() == static_cast<int>(k) - 1;
        }
    }

    // numeric recursion cross-check, both sides truncated sums
    double worst = 0.0;
    for (unsigned r = 2; r <= 4; ++r) {
        for (const double a : {0.5, 1.0, 3.0}) {
            for (const double b : {0.0, 0.25, 0.5}) {
                const double lhs = oracle::numeric_series(r, a, b).value;
                const double rhs = oracle::numeric_recursion_rhs(r, a, b).value;
                const double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
                worst = std::max(worst, err);
                pass = pass && err <= 1e-7;
            }
        }
    }
    std::ostringstream os;
    os << "recursion worst rel err " << worst << " (tol 1e-7)";
    criterion(9, "property suites (ring axioms, ansatz laws, recursion)", pass,
              os.str());
}

// 10. Two verify-all runs, with different parallelism, are byte-identical.
void criterion_determinism() {
    const auto invoke = [](unsigned jobs) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run({"verify", "all", "--jobs", std::to_string(jobs)},
                                  out, err);
        return std::make_pair(code, out.str());
    };
    const auto [code1, out1] = invoke(2);
    const auto [code2, out2] = invoke(2);
    const auto [code3, out3] = invoke(1);
    const bool pass = code1 == 0 && code2 == 0 && code3 == 0 && out1 == out2 &&
                      out1 == out3;
    criterion(10, "determinism (verify all is byte-identical across runs/jobs)",
              pass);
}

}  // namespace

int main() {
    std::cout << "acceptance suite\n================\n";
    SeriesEngine series;
    MomentEngine moments(series);

    criterion_base_cases(series);
    criterion_table_reproduction(moments);
    criterion_endpoint(moments);
    criterion_closed_forms(series, moments);
    criterion_beta_zero(moments);
    criterion_numeric_agreement(series, moments);
    criterion_partition_of_unity();
    criterion_oeis(series);
    criterion_properties(series, moments);
    criterion_determinism();

    std::cout << "================\n"
              << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criteria FAILED")
              << "\n";
    return g_failures;
}
