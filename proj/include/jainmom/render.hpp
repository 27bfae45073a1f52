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

#include "jainmom/discrepancy.hpp"
#include "jainmom/moments.hpp"
#include "jainmom/series.hpp"

namespace jainmom::render {

enum class Format { text, latex, json };

Format parse_format(const std::string& name);  // throws std::invalid_argument

// Polynomial renderings list coefficients in ascending beta degree.
std::string poly_text(const BetaPoly& p, const std::string& var = "β");
std::string poly_latex(const BetaPoly& p, const std::string& var = "\\beta");
nlohmann::json poly_json(const BetaPoly& p);  // exact integer-pair strings
BetaPoly poly_from_json(const nlohmann::json& coeffs);

// Ansatz-form documents. The series/moment bodies are grouped the way the
// reference tables group them: prefactor first, then ascending p powers.
std::string series_doc(const SeriesForm& form, Format format);
std::string moment_doc(const MomentForm& form, Format format);

std::string triangle_doc(const CoeffTriangle& triangle, Format format);
CoeffTriangle triangle_from_json(const nlohmann::json& doc);

std::string report_doc(const DiscrepancyReport& report, Format format);

}  // namespace jainmom::render
