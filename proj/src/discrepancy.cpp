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
#include "jainmom/discrepancy.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <tuple>

namespace jainmom {

std::string DiscrepancyEntry::subject() const {
    std::ostringstream os;
    os << source << " " << family << "[" << index << "," << k << "]";
    return os.str();
}

void DiscrepancyReport::add(DiscrepancyEntry e) {
    entries.push_back(std::move(e));
}

void DiscrepancyReport::merge(DiscrepancyReport other) {
    compared += other.compared;
    matched += other.matched;
    for (auto& e : other.entries) {
        entries.push_back(std::move(e));
    }
    sort();
}

void DiscrepancyReport::sort() {
    std::sort(entries.begin(), entries.end(),
              [](const DiscrepancyEntry& a, const DiscrepancyEntry& b) {
                  return std::tie(a.family, a.k, a.index, a.source) <
                         std::tie(b.family, b.k, b.index, b.source);
              });
}

std::string DiscrepancyReport::to_text() const {
    std::ostringstream os;
    os << "compared " << compared << " values, " << matched << " exact matches, "
       << entries.size() << " discrepancies\n";
    for (const auto& e : entries) {
        os << "  " << e.subject() << ":";
        for (const auto& d : e.diffs) {
            os << " beta^" << d.beta_exp << " printed " << d.printed.str()
               << " != computed " << d.computed.str() << ";";
        }
        if (!e.note.empty()) {
            os << " [" << e.note << "]";
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json DiscrepancyReport::to_json() const {
    nlohmann::json j;
    j["compared"] = compared;
    j["matched"] = matched;
    j["discrepancies"] = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json je;
        je["source"] = e.source;
        je["family"] = e.family;
        je["index"] = e.index;
        je["k"] = e.k;
        je["terms"] = nlohmann::json::array();
        for (const auto& d : e.diffs) {
            je["terms"].push_back({{"beta_exp", d.beta_exp},
                                   {"printed", d.printed.str()},
                                   {"computed", d.computed.str()}});
        }
        if (!e.note.empty()) {
            je["note"] = e.note;
        }
        j["discrepancies"].push_back(std::move(je));
    }
    return j;
}

std::vector<TermDiff> diff_polys(const BetaPoly& printed, const BetaPoly& computed) {
    std::vector<TermDiff> diffs;
    const int top = std::max(printed.degree(), computed.degree());
    for (int e = 0; e <= top; ++e) {
        const auto exp = static_cast<std::size_t>(e);
        if (printed.coeff(exp) != computed.coeff(exp)) {
            diffs.push_back({static_cast<unsigned>(e), printed.coeff(exp),
                             computed.coeff(exp)});
        }
    }
    return diffs;
}

}  // namespace jainmom
