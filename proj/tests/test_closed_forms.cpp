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

#include <nlohmann/json.hpp>
#include <set>

#include "jainmom/closed_forms.hpp"

using namespace jainmom;

namespace {

DiscrepancyReport run_one(const std::string& source, unsigned lo, unsigned hi,
                          SeriesEngine& series, MomentEngine& moments) {
    const auto& spec = closed_form_by_source(source);
    DiscrepancyReport rep =
        verify_family(spec.family, {spec.k, spec.k}, {lo, hi}, series, moments);
    // two specs can share (family, k); keep only the requested source
    std::erase_if(rep.entries,
                  [&](const DiscrepancyEntry& e) { return e.source != source; });
    const unsigned first = std::max(lo, spec.first_index());
    rep.compared = first <= hi ? hi - first + 1 : 0;
    rep.matched = rep.compared - rep.entries.size();
    return rep;
}

std::set<unsigned> flagged_exps_at(const DiscrepancyReport& report,
                                   const std::string& source, unsigned index) {
    std::set<unsigned> out;
    for (const auto& e : report.entries) {
        if (e.source == source && e.index == index) {
            for (const auto& d : e.diffs) {
                out.insert(d.beta_exp);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("closed form evaluation examples") {
    // cubic-column form at order 5
    CHECK(closed_eval(closed_form_by_source("theta-k3-closed"), 5) ==
          BetaPoly{5, 50, 50});
    // quartic-column form at order 5
    CHECK(closed_eval(closed_form_by_source("theta-k4-closed"), 5) ==
          BetaPoly{1, 22, 58, 24});
    // sigma k=2 at order 4
    CHECK(closed_eval(closed_form_by_source("sigma-k2-closed"), 4) ==
          BetaPoly{7, 8});
    // below the first nonzero order everything vanishes via the binomial factor
    CHECK(closed_eval(closed_form_by_source("theta-k4-closed"), 3).is_zero());
}

TEST_CASE("duplicated printed exponents sum on evaluation") {
    // the k=5 theta form carries two b^3 terms and no b^4 term
    const BetaPoly v = closed_eval(closed_form_by_source("theta-k5-closed"), 6);
    CHECK(v.coeff(3) == Rational(444 + 120));
    CHECK(v.coeff(4) == Rational(0));
    CHECK(v.coeff(2) == Rational(328));
}

TEST_CASE("exact families verify cleanly through order 12") {
    SeriesEngine series;
    MomentEngine moments(series);
    for (const char* source : {"theta-k1-closed", "theta-k2-closed",
                               "theta-k3-closed", "theta-k4-closed",
                               "phi-k1-closed", "phi-k2-closed", "phi-k3-closed",
                               "phi-k4-closed", "sigma-k2-closed",
                               "sigma-k3-closed"}) {
        const auto report = run_one(source, 2, 12, series, moments);
        CHECK_MESSAGE(report.empty(), source);
        CHECK(report.matched == report.compared);
    }
}

TEST_CASE("inline forms verify exactly through order 30") {
    SeriesEngine series;
    MomentEngine moments(series);
    for (const char* source :
         {"theta-k1-closed", "theta-k2-closed", "phi-k1-closed"}) {
        CHECK(run_one(source, 2, 30, series, moments).empty());
    }
}

TEST_CASE("the k=5 theta form flags the same two terms at every order") {
    SeriesEngine series;
    MomentEngine moments(series);
    const auto report = run_one("theta-k5-closed", 2, 12, series, moments);
    for (unsigned r = 6; r <= 12; ++r) {
        CHECK(flagged_exps_at(report, "theta-k5-closed", r) ==
              std::set<unsigned>{3, 4});
    }
    // the final printed term's coefficient formula actually matches the
    // recursion value of the b^4 coefficient
    for (unsigned r = 6; r <= 12; ++r) {
        const Rational lr(static_cast<long>(r));
        const Rational formula = Rational(binomial(r, 6)) * Rational(1, 16) * lr *
                                 (lr - Rational(1)) *
                                 (Rational(3) * lr * lr - Rational(7) * lr -
                                  Rational(2));
        CHECK(series.extract_theta(r).at(5).coeff(4) == formula);
    }
}

TEST_CASE("the k=4 sigma form flags only its linear term, with both values") {
    SeriesEngine series;
    MomentEngine moments(series);
    const auto report = run_one("sigma-k4-closed", 6, 12, series, moments);
    for (unsigned m = 6; m <= 12; ++m) {
        CHECK(flagged_exps_at(report, "sigma-k4-closed", m) ==
              std::set<unsigned>{1});
    }
    // computed sides at the two smallest orders
    bool saw_m6 = false;
    bool saw_m7 = false;
    for (const auto& e : report.entries) {
        if (e.index == 6) {
            REQUIRE(e.diffs.size() == 1);
            CHECK(e.diffs[0].computed == Rational(292));
            CHECK(e.diffs[0].printed == Rational(172));
            saw_m6 = true;
        }
        if (e.index == 7) {
            REQUIRE(e.diffs.size() == 1);
            CHECK(e.diffs[0].computed == Rational(1792));
            saw_m7 = true;
        }
    }
    CHECK(saw_m6);
    CHECK(saw_m7);
}

TEST_CASE("single-term mismatches carry a derived repair note") {
    SeriesEngine series;
    MomentEngine moments(series);
    const auto report = run_one("sigma-k4-closed", 6, 8, series, moments);
    REQUIRE(!report.entries.empty());
    for (const auto& e : report.entries) {
        CHECK(e.note.find("derived repair") != std::string::npos);
    }
}

TEST_CASE("families empty through 12 stay empty through 30") {
    SeriesEngine series;
    MomentEngine moments(series);
    for (const auto& spec : reference_closed_forms()) {
        const auto small = run_one(spec.source, 2, 12, series, moments);
        if (small.empty()) {
            CHECK_MESSAGE(run_one(spec.source, 2, 30, series, moments).empty(),
                          spec.source);
        }
    }
}

TEST_CASE("stability analysis matches the expected gap structure") {
    SeriesEngine series;
    MomentEngine moments(series);
    const auto report = verify_all_closed_forms(30, series, moments);
    const auto stability = analyze_stability(report, {2, 30});
    std::map<std::string, std::vector<unsigned>> expected = {
        {"theta-k5-closed", {3, 4}},
        {"theta-k2-stirling", {1}},
        {"phi-k5-closed", {3, 5}},
        {"sigma-k4-closed", {1}},
        {"sigma-k5-closed", {4}},
    };
    for (const auto& s : stability) {
        CHECK_MESSAGE(s.stable, s.source);
        const auto it = expected.find(s.source);
        const std::vector<unsigned> want =
            it == expected.end() ? std::vector<unsigned>{} : it->second;
        CHECK_MESSAGE(s.flagged_exps == want, s.source);
    }
}

TEST_CASE("specs round-trip through serialization") {
    for (const auto& spec : reference_closed_forms()) {
        const auto j = spec.to_json();
        const ClosedFormSpec back = ClosedFormSpec::from_json(j);
        CHECK(back.to_json() == j);
        // and the round-tripped spec evaluates identically
        for (unsigned idx = 2; idx <= 10; ++idx) {
            CHECK(closed_eval(back, idx) == closed_eval(spec, idx));
        }
    }
}

TEST_CASE("unknown source tags are rejected") {
    CHECK_THROWS_AS(closed_form_by_source("nope"), std::invalid_argument);
}
