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
#include "jainmom/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef JAINMOM_DATA_DIR
#define JAINMOM_DATA_DIR "data"
#endif

namespace jainmom {

std::string PaperFixture::id() const {
    return family + " " + std::to_string(index) + " " + std::to_string(k);
}

namespace {

bool valid_family(const std::string& f) {
    return f == "theta" || f == "phi" || f == "moment" || f == "eulerian1";
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

FixtureSet FixtureSet::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot open fixture file: " + file.string());
    }
    FixtureSet set;
    std::string line;
    std::string citation;
    std::set<std::string> seen;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) {
            continue;
        }
        if (t[0] == '#') {
            citation = trim(t.substr(1));
            continue;
        }
        std::istringstream is(t);
        PaperFixture fx;
        std::string colon;
        if (!(is >> fx.family >> fx.index >> fx.k >> colon) || colon != ":") {
            throw FixtureParseError("expected 'family index k : coeffs'", line_no);
        }
        if (!valid_family(fx.family)) {
            throw FixtureParseError("unknown family '" + fx.family + "'", line_no);
        }
        std::vector<Rational> coeffs;
        std::string tok;
        while (is >> tok) {
            try {
                coeffs.push_back(Rational::from_string(tok));
            } catch (const std::exception& e) {
                throw FixtureParseError(e.what(), line_no);
            }
        }
        if (coeffs.empty()) {
            throw FixtureParseError("no coefficients", line_no);
        }
        fx.printed = BetaPoly::from_coeffs(std::move(coeffs));
        fx.citation = citation;
        if (!seen.insert(fx.id()).second) {
            throw FixtureParseError("duplicate fixture " + fx.id(), line_no);
        }
        set.fixtures_.push_back(std::move(fx));
    }
    return set;
}

std::size_t FixtureSet::count_family(const std::string& family) const {
    std::size_t n = 0;
    for (const auto& fx : fixtures_) {
        n += fx.family == family ? 1 : 0;
    }
    return n;
}

std::size_t FixtureSet::count_moment_rows() const {
    std::set<unsigned> rows;
    for (const auto& fx : fixtures_) {
        if (fx.family == "moment") {
            rows.insert(fx.index);
        }
    }
    return rows.size();
}

DiscrepancyReport FixtureSet::diff_all(MomentEngine& moments) const {
    DiscrepancyReport report;
    SeriesEngine& series = moments.series();
    for (const auto& fx : fixtures_) {
        BetaPoly computed;
        if (fx.family == "theta") {
            computed = series.extract_theta(fx.index).at(fx.k);
        } else if (fx.family == "phi") {
            computed = series.extract_phi(fx.index).at(fx.k);
        } else if (fx.family == "moment") {
            computed = moments.moment(fx.index).graded.entries.at(fx.k);
        } else {  // eulerian1
            computed = eulerian_poly_first(fx.index);
        }
        report.compared += 1;
        auto diffs = diff_polys(fx.printed, computed);
        if (diffs.empty()) {
            report.matched += 1;
            continue;
        }
        DiscrepancyEntry entry;
        entry.source = fx.citation.empty() ? "fixture" : fx.citation;
        entry.family = fx.family;
        entry.index = fx.index;
        entry.k = fx.k;
        entry.diffs = std::move(diffs);
        if (entry.diffs.size() == 1) {
            entry.note = "derived repair: coefficient of beta^" +
                         std::to_string(entry.diffs[0].beta_exp) + " is " +
                         entry.diffs[0].computed.str();
        }
        report.add(std::move(entry));
    }
    report.sort();
    return report;
}

std::set<std::string> load_expected_mismatches(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot open annotation file: " + file.string());
    }
    std::set<std::string> ids;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        if (const auto pos = t.find(':'); pos != std::string::npos) {
            t = trim(t.substr(0, pos));
        }
        std::istringstream is(t);
        std::string family;
        unsigned index = 0;
        unsigned k = 0;
        if (!(is >> family >> index >> k) || !valid_family(family)) {
            throw FixtureParseError("expected 'family index k [: note]'", line_no);
        }
        ids.insert(family + " " + std::to_string(index) + " " + std::to_string(k));
    }
    return ids;
}

std::map<std::string, std::vector<unsigned>> load_expected_closed_form_gaps(
    const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot open annotation file: " + file.string());
    }
    std::map<std::string, std::vector<unsigned>> gaps;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        const auto pos = t.find(':');
        if (pos == std::string::npos) {
            throw FixtureParseError("expected 'source : exponents'", line_no);
        }
        const std::string source = trim(t.substr(0, pos));
        std::istringstream is(t.substr(pos + 1));
        std::vector<unsigned> exps;
        unsigned e = 0;
        while (is >> e) {
            exps.push_back(e);
        }
        gaps[source] = std::move(exps);
    }
    return gaps;
}

std::filesystem::path default_data_dir(const std::string& override_dir) {
    if (!override_dir.empty()) {
        return override_dir;
    }
    if (const char* env = std::getenv("JAINMOM_DATA_DIR"); env && *env) {
        return env;
    }
    return JAINMOM_DATA_DIR;
}

}  // namespace jainmom
