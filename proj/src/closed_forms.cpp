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
#include "jainmom/closed_forms.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace jainmom {

namespace {

ClosedFormTerm term(unsigned beta_exp, Rational scalar, unsigned binom_col,
                    std::vector<Rational> index_poly) {
    return ClosedFormTerm{beta_exp, std::move(scalar), binom_col,
                          std::move(index_poly)};
}

/*
 * The reference text's parametric coefficient formulas, transcribed term for
 * term, printed exponents included. Several carry printing errors on purpose
 * (duplicated exponents, wrong inner coefficients); the verify sweep against
 * the recursion-derived triangles is what decides, and a stable per-term
 * mismatch across the whole index range is the signature of a misprint.
 */
std::vector<ClosedFormSpec> build_reference_forms() {
    std::vector<ClosedFormSpec> specs;

    specs.push_back({TriangleFamily::theta, 1, "theta-k1-closed",
                     "C(r,2)",
                     'r',
                     {term(0, 1, 2, {1})}});

    specs.push_back({TriangleFamily::theta, 2, "theta-k2-closed",
                     "C(r,3) (1 + (1/4)(3r - 1) b)",
                     'r',
                     {term(0, 1, 3, {1}),
                      term(1, {1, 4}, 3, {-1, 3})}});

    // The same column as printed with a shifted Stirling index for the beta
    // coefficient: |s(r+1, r-1)| instead of |s(r, r-2)|. Kept so the report
    // documents both candidate indexings against the recursion truth.
    specs.push_back({TriangleFamily::theta, 2, "theta-k2-stirling",
                     "C(r,3) + |s(r+1, r-1)| b",
                     'r',
                     {term(0, 1, 3, {1}),
                      term(1, {1, 24}, 0, {0, -2, -3, 2, 3})}});

    specs.push_back({TriangleFamily::theta, 3, "theta-k3-closed",
                     "C(r,4) (1 + 2r b + (1/2) r (r-1) b^2)",
                     'r',
                     {term(0, 1, 4, {1}),
                      term(1, 2, 4, {0, 1}),
                      term(2, {1, 2}, 4, {0, -1, 1})}});

    specs.push_back({TriangleFamily::theta, 4, "theta-k4-closed",
                     "C(r,5) (1 + (1/6)(25r + 7) b + (1/6)(15r^2 - 5r - 2) b^2"
                     " + (1/48)(15r^3 - 30r^2 + 5r + 2) b^3)",
                     'r',
                     {term(0, 1, 5, {1}),
                      term(1, {1, 6}, 5, {7, 25}),
                      term(2, {1, 6}, 5, {-2, -5, 15}),
                      term(3, {1, 48}, 5, {2, 5, -30, 15})}});

    // Transcribed with both cubic-exponent terms exactly as printed; no b^4
    // term appears in the source.
    specs.push_back({TriangleFamily::theta, 5, "theta-k5-closed",
                     "C(r,6) (1 + (8r + 4) b + (1/4)(35r^2 + 9r - 2) b^2"
                     " + (1/2) r (5r^2 - 5r - 2) b^3"
                     " + (1/16) r (r-1)(3r^2 - 7r - 2) b^3)",
                     'r',
                     {term(0, 1, 6, {1}),
                      term(1, 1, 6, {4, 8}),
                      term(2, {1, 4}, 6, {-2, 9, 35}),
                      term(3, {1, 2}, 6, {0, -2, -5, 5}),
                      term(3, {1, 16}, 6, {0, 2, 5, -10, 3})}});

    specs.push_back({TriangleFamily::phi, 1, "phi-k1-closed",
                     "C(r,2) (2 - b)",
                     'r',
                     {term(0, 2, 2, {1}),
                      term(1, -1, 2, {1})}});

    specs.push_back({TriangleFamily::phi, 2, "phi-k2-closed",
                     "(1/4) C(r,3) (12r - 4(3r - 1) b + (3r - 1) b^2)",
                     'r',
                     {term(0, 3, 3, {0, 1}),
                      term(1, -1, 3, {-1, 3}),
                      term(2, {1, 4}, 3, {-1, 3})}});

    specs.push_back({TriangleFamily::phi, 3, "phi-k3-closed",
                     "(1/2) C(r,4) (8r^2 - 2(6r^2 - 4r - 1) b + 6r(r-1) b^2"
                     " - r(r-1) b^3)",
                     'r',
                     {term(0, 4, 4, {0, 0, 1}),
                      term(1, -1, 4, {-1, -4, 6}),
                      term(2, 3, 4, {0, -1, 1}),
                      term(3, {-1, 2}, 4, {0, -1, 1})}});

    specs.push_back({TriangleFamily::phi, 4, "phi-k4-closed",
                     "(1/48) C(r,5) (240r^3 - 48(10r^3 - 10r^2 - 5r - 1) b"
                     " + 8(45r^3 - 75r^2 - 5r + 7) b^2"
                     " - 8(15r^3 - 30r^2 + 5r + 2) b^3"
                     " + (15r^3 - 30r^2 + 5r + 2) b^4)",
                     'r',
                     {term(0, 5, 5, {0, 0, 0, 1}),
                      term(1, -1, 5, {-1, -5, -10, 10}),
                      term(2, {1, 6}, 5, {7, -5, -75, 45}),
                      term(3, {-1, 6}, 5, {2, 5, -30, 15}),
                      term(4, {1, 48}, 5, {2, 5, -30, 15})}});

    // The two sign-positive late terms are as printed.
    specs.push_back({TriangleFamily::phi, 5, "phi-k5-closed",
                     "(1/16) C(r,6) (96r^4 - 16(15r^4 - 20r^3 - 15r^2 - 6r - 1) b"
                     " + 16(15r^4 - 35r^3 - 5r^2 + 9r + 4) b^2"
                     " + 4(30r^4 - 90r^3 + 25r^2 + 27r + 2) b^3"
                     " + 10 r(r-1)(3r^2 - 7r - 2) b^4"
                     " + r(r-1)(3r^2 - 7r - 2) b^5)",
                     'r',
                     {term(0, 6, 6, {0, 0, 0, 0, 1}),
                      term(1, -1, 6, {-1, -6, -15, -20, 15}),
                      term(2, 1, 6, {4, 9, -5, -35, 15}),
                      term(3, {1, 4}, 6, {2, 27, 25, -90, 30}),
                      term(4, {5, 8}, 6, {0, 2, 5, -10, 3}),
                      term(5, {1, 16}, 6, {0, 2, 5, -10, 3})}});

    specs.push_back({TriangleFamily::sigma, 2, "sigma-k2-closed",
                     "(1/4) C(m,3) (3m - 5 + 8 b)",
                     'm',
                     {term(0, {1, 4}, 3, {-5, 3}),
                      term(1, 2, 3, {1})}});

    specs.push_back({TriangleFamily::sigma, 3, "sigma-k3-closed",
                     "(1/2) C(m,4) ((m-2)(m-3) + 8(m-2) b + 12 b^2)",
                     'm',
                     {term(0, {1, 2}, 4, {6, -5, 1}),
                      term(1, 4, 4, {-2, 1}),
                      term(2, 6, 4, {1})}});

    specs.push_back({TriangleFamily::sigma, 4, "sigma-k4-closed",
                     "(1/48) C(m,5) ((15m^3 - 150m^2 + 485m - 502)"
                     " + 16(15m^2 - 95m + 116) b + 16(65m - 151) b^2 + 1152 b^3)",
                     'm',
                     {term(0, {1, 48}, 5, {-502, 485, -150, 15}),
                      term(1, {1, 3}, 5, {116, -95, 15}),
                      term(2, {1, 3}, 5, {-151, 65}),
                      term(3, 24, 5, {1})}});

    specs.push_back({TriangleFamily::sigma, 5, "sigma-k5-closed",
                     "(1/16) C(m,6) ((3m^4 - 50m^3 + 305m^2 - 802m + 760)"
                     " + 16(5m^3 - 55m^2 + 196m - 224) b"
                     " + 8(85m^2 - 537m + 818) b^2 + 192(11m - 29) b^3 + 120 b^4)",
                     'm',
                     {term(0, {1, 16}, 6, {760, -802, 305, -50, 3}),
                      term(1, 1, 6, {-224, 196, -55, 5}),
                      term(2, {1, 2}, 6, {818, -537, 85}),
                      term(3, 12, 6, {-29, 11}),
                      term(4, {15, 2}, 6, {1})}});

    return specs;
}

Rational eval_index_poly(const std::vector<Rational>& poly, unsigned index) {
    Rational acc;
    const Rational x(static_cast<long>(index));
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

// First index whose family slot is nonzero; used as the stability window.
unsigned first_nonzero_index(const ClosedFormSpec& spec) {
    return spec.family == TriangleFamily::sigma ? spec.k + 2 : spec.k + 1;
}

}  // namespace

unsigned ClosedFormSpec::first_index() const {
    return family == TriangleFamily::sigma ? k + 2 : 2;
}

const std::vector<ClosedFormSpec>& reference_closed_forms() {
    static const std::vector<ClosedFormSpec> specs = build_reference_forms();
    return specs;
}

const ClosedFormSpec& closed_form_by_source(const std::string& source) {
    for (const auto& spec : reference_closed_forms()) {
        if (spec.source == source) {
            return spec;
        }
    }
    throw std::invalid_argument("no closed form tagged '" + source + "'");
}

BetaPoly closed_eval(const ClosedFormSpec& spec, unsigned index) {
    BetaPoly out;
    for (const auto& t : spec.terms) {
        Rational c = t.scalar * eval_index_poly(t.index_poly, index);
        if (t.binom_col > 0) {
            c = c * Rational(binomial(index, t.binom_col));
        }
        out += BetaPoly::monomial(t.beta_exp, c);
    }
    return out;
}

nlohmann::json ClosedFormSpec::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family);
    j["k"] = k;
    j["source"] = source;
    j["printed"] = printed;
    j["index_var"] = std::string(1, index_var);
    j["terms"] = nlohmann::json::array();
    for (const auto& t : terms) {
        nlohmann::json jt;
        jt["beta_exp"] = t.beta_exp;
        jt["scalar"] = t.scalar.str();
        jt["binom_col"] = t.binom_col;
        jt["index_poly"] = nlohmann::json::array();
        for (const auto& c : t.index_poly) {
            jt["index_poly"].push_back(c.str());
        }
        j["terms"].push_back(std::move(jt));
    }
    return j;
}

ClosedFormSpec ClosedFormSpec::from_json(const nlohmann::json& j) {
    ClosedFormSpec spec;
    const std::string fam = j.at("family").get<std::string>();
    if (fam == "theta") {
        spec.family = TriangleFamily::theta;
    } else if (fam == "phi") {
        spec.family = TriangleFamily::phi;
    } else if (fam == "sigma") {
        spec.family = TriangleFamily::sigma;
    } else {
        throw std::invalid_argument("unknown closed-form family: " + fam);
    }
    spec.k = j.at("k").get<unsigned>();
    spec.source = j.at("source").get<std::string>();
    spec.printed = j.at("printed").get<std::string>();
    spec.index_var = j.at("index_var").get<std::string>().at(0);
    for (const auto& jt : j.at("terms")) {
        ClosedFormTerm t;
        t.beta_exp = jt.at("beta_exp").get<unsigned>();
        t.scalar = Rational::from_string(jt.at("scalar").get<std::string>());
        t.binom_col = jt.at("binom_col").get<unsigned>();
        for (const auto& c : jt.at("index_poly")) {
            t.index_poly.push_back(Rational::from_string(c.get<std::string>()));
        }
        spec.terms.push_back(std::move(t));
    }
    return spec;
}

namespace {

BetaPoly recursion_truth(const ClosedFormSpec& spec, unsigned index,
                         SeriesEngine& series, MomentEngine& moments) {
    switch (spec.family) {
        case TriangleFamily::theta: {
            if (spec.k > index - 1) {
                return {};
            }
            return series.extract_theta(index).at(spec.k);
        }
        case TriangleFamily::phi: {
            if (spec.k > index - 1) {
                return {};
            }
            return series.extract_phi(index).at(spec.k);
        }
        case TriangleFamily::sigma:
            return moments.extract_sigma(index).at(spec.k);
    }
    throw std::logic_error("unreachable family");
}

}  // namespace

DiscrepancyReport verify_family(TriangleFamily family,
                                std::pair<unsigned, unsigned> k_range,
                                std::pair<unsigned, unsigned> index_range,
                                SeriesEngine& series, MomentEngine& moments) {
    DiscrepancyReport report;
    for (const auto& spec : reference_closed_forms()) {
        if (spec.family != family || spec.k < k_range.first || spec.k > k_range.second) {
            continue;
        }
        const unsigned lo = std::max(index_range.first, spec.first_index());
        for (unsigned idx = lo; idx <= index_range.second; ++idx) {
            const BetaPoly closed = closed_eval(spec, idx);
            const BetaPoly truth = recursion_truth(spec, idx, series, moments);
            report.compared += 1;
            auto diffs = diff_polys(closed, truth);
            if (diffs.empty()) {
                report.matched += 1;
                continue;
            }
            DiscrepancyEntry entry;
            entry.source = spec.source;
            entry.family = family_name(family);
            entry.index = idx;
            entry.k = spec.k;
            entry.diffs = std::move(diffs);
            if (entry.diffs.size() == 1) {
                entry.note = "derived repair: coefficient of beta^" +
                             std::to_string(entry.diffs[0].beta_exp) + " is " +
                             entry.diffs[0].computed.str();
            }
            report.add(std::move(entry));
        }
    }
    report.sort();
    return report;
}

DiscrepancyReport verify_all_closed_forms(unsigned index_max, SeriesEngine& series,
                                          MomentEngine& moments) {
    DiscrepancyReport report;
    report.merge(verify_family(TriangleFamily::theta, {1, 5}, {2, index_max},
                               series, moments));
    report.merge(verify_family(TriangleFamily::phi, {1, 5}, {2, index_max},
                               series, moments));
    report.merge(verify_family(TriangleFamily::sigma, {2, 5}, {2, index_max},
                               series, moments));
    return report;
}

std::vector<SourceStability> analyze_stability(
    const DiscrepancyReport& report, std::pair<unsigned, unsigned> index_range) {
    std::vector<SourceStability> out;
    for (const auto& spec : reference_closed_forms()) {
        SourceStability s;
        s.source = spec.source;

        std::map<unsigned, std::set<unsigned>> flagged;  // index -> exponents
        for (const auto& e : report.entries) {
            if (e.source != spec.source) {
                continue;
            }
            for (const auto& d : e.diffs) {
                flagged[e.index].insert(d.beta_exp);
            }
        }

        // The flag set must be identical at every index from the first
        // nonzero one on; below that both sides may vanish, so a subset of
        // the stable set (usually empty) is allowed.
        const unsigned stable_from =
            std::max(first_nonzero_index(spec), index_range.first);
        std::set<unsigned> stable_set;
        bool first = true;
        for (unsigned idx = stable_from; idx <= index_range.second; ++idx) {
            std::set<unsigned> here;
            if (auto it = flagged.find(idx); it != flagged.end()) {
                here = it->second;
            }
            if (first) {
                stable_set = here;
                first = false;
            } else if (here != stable_set) {
                s.stable = false;
            }
            s.indices_seen += 1;
        }
        for (unsigned idx = std::max(spec.first_index(), index_range.first);
             idx < stable_from; ++idx) {
            std::set<unsigned> here;
            if (auto it = flagged.find(idx); it != flagged.end()) {
                here = it->second;
            }
            if (!std::includes(stable_set.begin(), stable_set.end(), here.begin(),
                               here.end())) {
                s.stable = false;
            }
        }
        s.flagged_exps.assign(stable_set.begin(), stable_set.end());
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace jainmom
