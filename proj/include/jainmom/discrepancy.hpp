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

#include "jainmom/beta_poly.hpp"

namespace jainmom {

// One differing beta-power between a transcribed value and computed truth.
struct TermDiff {
    unsigned beta_exp = 0;
    Rational printed;
    Rational computed;
};

struct DiscrepancyEntry {
    std::string source;   // closed-form tag or fixture location
    std::string family;   // theta | phi | sigma | moment | eulerian1
    unsigned index = 0;   // r, m or n
    unsigned k = 0;       // column / slot (0 when meaningless)
    std::vector<TermDiff> diffs;  // ascending beta exponent
    std::string note;     // minimal-repair hint for single-term diffs

    std::string subject() const;
};

/*
 * Structured diff between computed truth and transcribed reference values.
 * Mismatches are data, not errors: an entry states both sides exactly and
 * leaves interpretation to the caller. Entries are kept sorted so reports are
 * byte-identical across runs and parallelism settings.
 */
struct DiscrepancyReport {
    std::size_t compared = 0;
    std::size_t matched = 0;
    std::vector<DiscrepancyEntry> entries;

    bool empty() const { return entries.empty(); }
    void add(DiscrepancyEntry e);
    void merge(DiscrepancyReport other);
    void sort();

    std::string to_text() const;
    nlohmann::json to_json() const;
};

// Compares two polynomials term by term; empty result means exact equality.
std::vector<TermDiff> diff_polys(const BetaPoly& printed, const BetaPoly& computed);

}  // namespace jainmom
