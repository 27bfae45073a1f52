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

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "jainmom/discrepancy.hpp"
#include "jainmom/moments.hpp"

namespace jainmom {

struct FixtureParseError : std::runtime_error {
    FixtureParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_number(line) {}
    int line_number;
};

/*
 * One transcribed reference polynomial. Lines in the fixture file look like
 *
 *   theta 4 2 : 4 11
 *
 * meaning family theta, row index 4, column 2, coefficients ascending in
 * beta. Transcription is verbatim: suspected misprints are kept as printed
 * (terms sharing a printed exponent are summed, with the duplication noted in
 * the preceding comment), and the diff decides.
 */
struct PaperFixture {
    std::string family;  // theta | phi | moment | eulerian1
    unsigned index = 0;  // r, m or n
    unsigned k = 0;
    std::string citation;  // nearest preceding comment in the file
    BetaPoly printed;

    std::string id() const;  // "theta 4 2"
};

class FixtureSet {
public:
    // Parse is total: any malformed line throws FixtureParseError.
    static FixtureSet load(const std::filesystem::path& file);

    const std::vector<PaperFixture>& all() const { return fixtures_; }

    std::size_t count_family(const std::string& family) const;
    // Moment fixtures are counted as rows (one per m), not per slot.
    std::size_t count_moment_rows() const;

    // Exact comparison of every fixture against recomputed truth.
    DiscrepancyReport diff_all(MomentEngine& moments) const;

private:
    std::vector<PaperFixture> fixtures_;
};

// Annotation file: fixture ids expected to differ from computed truth, one
// per line ("theta 8 7 : note..."), '#' comments allowed.
std::set<std::string> load_expected_mismatches(const std::filesystem::path& file);

// Closed-form annotation file: "source : e1 e2 ..." beta exponents expected
// to be flagged at every index of that source's range.
std::map<std::string, std::vector<unsigned>> load_expected_closed_form_gaps(
    const std::filesystem::path& file);

// Resolves the data directory: explicit argument if nonempty, else the
// JAINMOM_DATA_DIR environment variable, else the compiled-in default.
std::filesystem::path default_data_dir(const std::string& override_dir = "");

}  // namespace jainmom
