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

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "jainmom/discrepancy.hpp"
#include "jainmom/moments.hpp"
#include "jainmom/series.hpp"

namespace jainmom {

/*
 * One additive term of a transcribed parametric closed form:
 *
 *   scalar * C(index, binom_col) * index_poly(index) * beta^beta_exp
 *
 * Terms are stored exactly as transcribed, including terms that share a
 * beta exponent (those sum on evaluation) and terms suspected to be wrong.
 */
struct ClosedFormTerm {
    unsigned beta_exp = 0;
    Rational scalar = Rational(1);
    unsigned binom_col = 0;  // C(index, 0) = 1 means no binomial factor
    std::vector<Rational> index_poly;  // ascending powers of the index
};

struct ClosedFormSpec {
    TriangleFamily family = TriangleFamily::theta;
    unsigned k = 0;
    std::string source;      // stable tag, e.g. "theta-k3-closed"
    std::string printed;     // human-readable transcription of the formula
    char index_var = 'r';    // 'r' for series forms, 'm' for moment forms
    std::vector<ClosedFormTerm> terms;

    // Smallest index at which the family defines the entry.
    unsigned first_index() const;

    nlohmann::json to_json() const;
    static ClosedFormSpec from_json(const nlohmann::json& j);
};

// Every parametric coefficient formula transcribed from the reference text.
const std::vector<ClosedFormSpec>& reference_closed_forms();

const ClosedFormSpec& closed_form_by_source(const std::string& source);

// Evaluates a closed form at a concrete index. Terms with equal printed
// beta exponents are summed as transcribed.
BetaPoly closed_eval(const ClosedFormSpec& spec, unsigned index);

/*
 * Compares closed forms of one family against the recursion-derived triangle
 * entries over k in k_range and index in index_range (both inclusive). For
 * theta/phi, indices below k+1 compare against the zero entry; for sigma only
 * indices with a defined sigma_k^m slot are compared. Mismatches land in the
 * report with per-term values from both sides.
 */
DiscrepancyReport verify_family(TriangleFamily family,
                                std::pair<unsigned, unsigned> k_range,
                                std::pair<unsigned, unsigned> index_range,
                                SeriesEngine& series, MomentEngine& moments);

// Same sweep over every transcribed form, 2..index_max.
DiscrepancyReport verify_all_closed_forms(unsigned index_max, SeriesEngine& series,
                                          MomentEngine& moments);

/*
 * Per-source stability summary of a verify run: a source is stable when every
 * index in its range flags the same set of beta exponents (possibly none).
 * A stable nonempty set is the signature of a transcription-level printing
 * error as opposed to an engine defect.
 */
struct SourceStability {
    std::string source;
    bool stable = true;
    std::vector<unsigned> flagged_exps;  // empty means exact match everywhere
    unsigned indices_seen = 0;
};

std::vector<SourceStability> analyze_stability(const DiscrepancyReport& report,
                                               std::pair<unsigned, unsigned> index_range);

}  // namespace jainmom
