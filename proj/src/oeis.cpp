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
#include "jainmom/oeis.hpp"

#include <httplib.h>

#include <cctype>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "jainmom/combinatorics.hpp"

namespace jainmom::oeis {

namespace {

struct BuiltinDef {
    const char* id;
    const char* formula;
    long offset;
    // term generator for linear sequences; null for triangles
    std::function<Integer(long)> term;
    // row generator for triangles (flattened row-major); null otherwise
    std::function<std::vector<Integer>(unsigned)> row;
    unsigned first_row = 0;
};

Integer binom_l(long n, unsigned k) {
    if (n < 0) {
        return 0;
    }
    return binomial(static_cast<unsigned>(n), k);
}

Integer stirling1_l(long n, long k) {
    if (n < 0 || k < 0) {
        return 0;
    }
    return stirling1_unsigned(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

std::vector<Integer> poly_row(const BetaPoly& p) {
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        out.push_back(c.num());
    }
    return out;
}

/*
 * The cited sequences. Binomial columns C(n,2) and C(n,3) keep their
 * customary leading zero (a(n) = C(n+1,2) and C(n+2,3) from n = 0); the
 * higher binomial columns start at their first nonzero term so that triangle
 * columns align within the matcher's +-5 shift window. The Stirling columns
 * are |s(n+j, n)| from n = 0.
 */
const std::vector<BuiltinDef>& registry() {
    static const std::vector<BuiltinDef> defs = {
        {"A000217", "a(n) = C(n+1, 2), n >= 0", 0,
         [](long n) { return binom_l(n + 1, 2); }, nullptr, 0},
        {"A000292", "a(n) = C(n+2, 3), n >= 0", 0,
         [](long n) { return binom_l(n + 2, 3); }, nullptr, 0},
        {"A000332", "a(n) = C(n, 4), n >= 4", 4,
         [](long n) { return binom_l(n + 4, 4); }, nullptr, 0},
        {"A000389", "a(n) = C(n, 5), n >= 5", 5,
         [](long n) { return binom_l(n + 5, 5); }, nullptr, 0},
        {"A000579", "a(n) = C(n, 6), n >= 6", 6,
         [](long n) { return binom_l(n + 6, 6); }, nullptr, 0},
        {"A000580", "a(n) = C(n, 7), n >= 7", 7,
         [](long n) { return binom_l(n + 7, 7); }, nullptr, 0},
        {"A000581", "a(n) = C(n, 8), n >= 8", 8,
         [](long n) { return binom_l(n + 8, 8); }, nullptr, 0},
        {"A000582", "a(n) = C(n, 9), n >= 9", 9,
         [](long n) { return binom_l(n + 9, 9); }, nullptr, 0},
        {"A001287", "a(n) = C(n, 10), n >= 10", 10,
         [](long n) { return binom_l(n + 10, 10); }, nullptr, 0},
        {"A000914", "a(n) = |s(n+2, n)|, n >= 0", 0,
         [](long n) { return stirling1_l(n + 2, n); }, nullptr, 0},
        {"A001303", "a(n) = |s(n+3, n)|, n >= 0", 0,
         [](long n) { return stirling1_l(n + 3, n); }, nullptr, 0},
        {"A000915", "a(n) = |s(n+4, n)|, n >= 0", 0,
         [](long n) { return stirling1_l(n + 4, n); }, nullptr, 0},
        {"A053567", "a(n) = |s(n+5, n)|, n >= 0", 0,
         [](long n) { return stirling1_l(n + 5, n); }, nullptr, 0},
        {"A008292", "Eulerian triangle rows, from row 0", 0, nullptr,
         [](unsigned n) { return poly_row(eulerian_poly_first(n)); }, 0},
        {"A008517", "second-order Eulerian triangle rows, from row 1", 1, nullptr,
         [](unsigned n) { return poly_row(eulerian_poly_second(n)); }, 1},
    };
    return defs;
}

const BuiltinDef& find_def(const std::string& id) {
    for (const auto& d : registry()) {
        if (id == d.id) {
            return d;
        }
    }
    throw UnknownSequence(id);
}

bool valid_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A') {
        return false;
    }
    return std::all_of(id.begin() + 1, id.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

const std::vector<std::string>& supported_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& d : registry()) {
            v.emplace_back(d.id);
        }
        return v;
    }();
    return ids;
}

std::string builtin_formula(const std::string& id) {
    return find_def(id).formula;
}

std::vector<Integer> builtin_terms(const std::string& id, std::size_t count) {
    const BuiltinDef& def = find_def(id);
    std::vector<Integer> out;
    out.reserve(count);
    if (def.term) {
        for (std::size_t n = 0; n < count; ++n) {
            out.push_back(def.term(static_cast<long>(n)));
        }
        return out;
    }
    for (unsigned n = def.first_row; out.size() < count; ++n) {
        for (auto& v : def.row(n)) {
            out.push_back(std::move(v));
            if (out.size() == count) {
                break;
            }
        }
    }
    return out;
}

SequenceRef builtin_ref(const std::string& id, std::size_t count) {
    SequenceRef ref;
    ref.id = id;
    ref.offset = find_def(id).offset;
    ref.source = SequenceRef::Source::builtin;
    ref.terms = builtin_terms(id, count);
    return ref;
}

std::vector<Integer> builtin_triangle_row(const std::string& id, unsigned n) {
    const BuiltinDef& def = find_def(id);
    if (!def.row) {
        throw UnknownSequence(id + " is not a triangle");
    }
    if (n < def.first_row) {
        throw std::invalid_argument(id + std::string(" rows start at ") +
                                    std::to_string(def.first_row));
    }
    return def.row(n);
}

SequenceRef parse_bfile(const std::string& text) {
    SequenceRef ref;
    ref.source = SequenceRef::Source::bfile;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_first = false;
    long expected = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) {
            continue;  // blank line
        }
        if (line[b] == '#') {
            // Recover the id from a comment of the form "# A000217 ...".
            if (ref.id.empty()) {
                std::istringstream cs(line.substr(b + 1));
                std::string word;
                if (cs >> word && valid_id(word)) {
                    ref.id = word;
                }
            }
            continue;
        }
        std::istringstream is(line);
        long index = 0;
        std::string value;
        std::string extra;
        if (!(is >> index >> value) || (is >> extra)) {
            throw MalformedBFile("expected 'index value'", line_no);
        }
        Integer term;
        try {
            term = Integer(value);
        } catch (const std::invalid_argument&) {
            throw MalformedBFile("bad integer '" + value + "'", line_no);
        }
        if (!have_first) {
            ref.offset = index;
            expected = index;
            have_first = true;
        }
        if (index != expected) {
            throw NonContiguousIndices(expected, index);
        }
        ++expected;
        ref.terms.push_back(std::move(term));
    }
    if (!have_first) {
        throw MalformedBFile("no data lines", line_no == 0 ? 1 : line_no);
    }
    return ref;
}

std::string render_bfile(const SequenceRef& ref) {
    std::ostringstream os;
    if (!ref.id.empty()) {
        os << "# " << ref.id << "\n";
    }
    long index = ref.offset;
    for (const auto& t : ref.terms) {
        os << index << " " << t.get_str() << "\n";
        ++index;
    }
    return os.str();
}

SequenceRef fetch_bfile(const std::string& id, const FetchOptions& options) {
    if (!valid_id(id)) {
        throw FetchFailed("bad sequence id '" + id + "'");
    }
    if (options.cache_dir.empty()) {
        throw FetchFailed("no cache directory configured");
    }
    const std::filesystem::path cached = options.cache_dir / (id + ".bfile.txt");
    if (std::filesystem::exists(cached)) {
        std::ifstream in(cached);
        std::stringstream buf;
        buf << in.rdbuf();
        SequenceRef ref = parse_bfile(buf.str());
        if (ref.id.empty()) {
            ref.id = id;
        }
        return ref;
    }
    if (!options.network) {
        throw NetworkDisabled();
    }

    const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    httplib::Client client(options.base_url);
    client.set_follow_location(true);
    client.set_connection_timeout(15, 0);
    client.set_read_timeout(30, 0);
    auto res = client.Get(path);
    if (!res) {
        throw FetchFailed("transport error for " + options.base_url + path);
    }
    if (res->status != 200) {
        throw FetchFailed("HTTP " + std::to_string(res->status) + " for " +
                          options.base_url + path);
    }

    SequenceRef ref = parse_bfile(res->body);
    if (ref.id.empty()) {
        ref.id = id;
    }

    std::filesystem::create_directories(options.cache_dir);
    // Write-to-temp-then-rename keeps concurrent readers away from partials.
    std::mt19937_64 rng(std::random_device{}());
    const std::filesystem::path tmp =
        options.cache_dir / (id + ".tmp." + std::to_string(rng()));
    {
        std::ofstream out(tmp);
        out << "# " << id << "\n";
        out << "# fetched-from: " << options.base_url << path << "\n";
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        out << "# fetched-at-unix: "
            << std::chrono::duration_cast<std::chrono::seconds>(now).count() << "\n";
        for (std::size_t i = 0; i < ref.terms.size(); ++i) {
            out << ref.offset + static_cast<long>(i) << " " << ref.terms[i].get_str()
                << "\n";
        }
    }
    std::filesystem::rename(tmp, cached);
    return ref;
}

MatchReport match_column(const std::vector<Integer>& values, const SequenceRef& seq) {
    MatchReport best;
    bool have_best = false;
    for (int shift = -5; shift <= 5; ++shift) {
        std::size_t len = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const long pos = static_cast<long>(i) + shift;
            if (pos < 0 || pos >= static_cast<long>(seq.terms.size())) {
                break;
            }
            if (values[i] != seq.terms[static_cast<std::size_t>(pos)]) {
                break;
            }
            ++len;
        }
        const bool better =
            !have_best || len > best.matched ||
            (len == best.matched &&
             (std::abs(shift) < std::abs(best.shift) ||
              (std::abs(shift) == std::abs(best.shift) && shift < best.shift)));
        if (better) {
            best.shift = shift;
            best.matched = len;
            have_best = true;
        }
    }
    best.full = best.matched == values.size();
    return best;
}

std::vector<Identification> check_identifications(SeriesEngine& series,
                                                  unsigned r_max,
                                                  const FetchOptions* options) {
    const CoeffTriangle theta = series.theta_triangle(r_max);

    const auto get_seq = [&](const std::string& id,
                             std::size_t count) -> SequenceRef {
        if (options != nullptr) {
            return fetch_bfile(id, *options);
        }
        return builtin_ref(id, count);
    };

    std::vector<Identification> out;

    // Constant columns of the theta triangle against the binomial-column ids.
    static const char* binom_ids[] = {"A000217", "A000292", "A000332",
                                      "A000389", "A000579", "A000580",
                                      "A000581", "A000582", "A001287"};
    for (unsigned k = 1; k <= 9; ++k) {
        Identification ident;
        ident.name = "theta k=" + std::to_string(k) + " beta^0 column";
        ident.id = binom_ids[k - 1];
        ident.values = theta.column(k, 0);
        ident.report =
            match_column(ident.values, get_seq(ident.id, ident.values.size() + 16));
        out.push_back(std::move(ident));
    }

    // Top-coefficient columns against the Stirling first-kind ids.
    static const std::pair<unsigned, const char*> stirling_ids[] = {
        {2, "A000914"}, {3, "A001303"}, {4, "A000915"}, {5, "A053567"}};
    for (const auto& [k, id] : stirling_ids) {
        Identification ident;
        ident.name = "theta k=" + std::to_string(k) + " beta^" +
                     std::to_string(k - 1) + " column";
        ident.id = id;
        ident.values = theta.column(k, k - 1);
        ident.report =
            match_column(ident.values, get_seq(ident.id, ident.values.size() + 16));
        out.push_back(std::move(ident));
    }

    return out;
}

}  // namespace jainmom::oeis
