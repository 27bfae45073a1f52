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
#include <stdexcept>
#include <string>
#include <vector>

#include "jainmom/rational.hpp"
#include "jainmom/series.hpp"

namespace jainmom::oeis {

struct UnknownSequence : std::runtime_error {
    explicit UnknownSequence(const std::string& id)
        : std::runtime_error("unknown sequence id: " + id) {}
};

struct MalformedBFile : std::runtime_error {
    MalformedBFile(const std::string& what, int line)
        : std::runtime_error("malformed b-file at line " + std::to_string(line) +
                             ": " + what),
          line_number(line) {}
    int line_number;
};

struct NonContiguousIndices : std::runtime_error {
    NonContiguousIndices(long expected, long got)
        : std::runtime_error("non-contiguous b-file indices: expected " +
                             std::to_string(expected) + ", got " +
                             std::to_string(got)) {}
};

struct NetworkDisabled : std::runtime_error {
    NetworkDisabled()
        : std::runtime_error(
              "network fetch disabled and no cached b-file available") {}
};

struct FetchFailed : std::runtime_error {
    explicit FetchFailed(const std::string& what)
        : std::runtime_error("b-file fetch failed: " + what) {}
};

struct SequenceRef {
    enum class Source { builtin, bfile };

    std::string id;   // "A000217"
    long offset = 0;  // index of terms[0]
    Source source = Source::builtin;
    std::vector<Integer> terms;

    friend bool operator==(const SequenceRef&, const SequenceRef&) = default;
};

// The sequence ids this registry generates exactly.
const std::vector<std::string>& supported_ids();

// Human-readable generator formula of a builtin id.
std::string builtin_formula(const std::string& id);

std::vector<Integer> builtin_terms(const std::string& id, std::size_t count);
SequenceRef builtin_ref(const std::string& id, std::size_t count);

// Row of a builtin triangle id (A008292 rows from n = 0, A008517 from n = 1).
std::vector<Integer> builtin_triangle_row(const std::string& id, unsigned n);

SequenceRef parse_bfile(const std::string& text);
std::string render_bfile(const SequenceRef& ref);

struct FetchOptions {
    bool network = false;                 // off by default; opt in explicitly
    std::filesystem::path cache_dir;      // required
    std::string base_url = "https://oeis.org";
};

/*
 * Returns the sequence's b-file, from the on-disk cache when present (no
 * network touched), otherwise via HTTP GET when options.network is set.
 * Freshly fetched files are cached with a write-to-temp-then-rename so a
 * concurrent reader never sees a partial file.
 */
SequenceRef fetch_bfile(const std::string& id, const FetchOptions& options);

struct MatchReport {
    int shift = 0;              // values[i] aligned with terms[i + shift]
    std::size_t matched = 0;    // exact-prefix match length
    bool full = false;          // every provided value matched
};

// Best alignment of values against the sequence terms with |shift| <= 5;
// ties prefer the smallest |shift|, then the smaller shift.
MatchReport match_column(const std::vector<Integer>& values, const SequenceRef& seq);

// One coefficient-column identification asserted by the reference text.
struct Identification {
    std::string name;        // e.g. "theta k=2 beta^1 column"
    std::string id;          // sequence id
    std::vector<Integer> values;
    MatchReport report;
};

/*
 * Recomputes every column identification from the theta triangle (rows up to
 * r_max) and matches it against the named sequences. Uses builtin terms, or
 * fetched b-files when options is non-null.
 */
std::vector<Identification> check_identifications(SeriesEngine& series,
                                                  unsigned r_max,
                                                  const FetchOptions* options = nullptr);

}  // namespace jainmom::oeis
