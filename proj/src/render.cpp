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
#include "jainmom/render.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace jainmom::render {

Format parse_format(const std::string& name) {
    if (name == "text") {
        return Format::text;
    }
    if (name == "latex") {
        return Format::latex;
    }
    if (name == "json") {
        return Format::json;
    }
    throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::string power(const std::string& var, unsigned e, bool latex) {
    if (e == 0) {
        return "";
    }
    if (e == 1) {
        return var;
    }
    if (latex) {
        return var + "^{" + std::to_string(e) + "}";
    }
    return var + "^" + std::to_string(e);
}

std::string poly_string(const BetaPoly& p, const std::string& var, bool latex) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
        const Rational& c = p.coeffs()[e];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = abs(c);
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const std::string vp = power(var, static_cast<unsigned>(e), latex);
        if (mag.is_one() && !vp.empty()) {
            os << vp;
        } else {
            os << mag.str();
            if (!vp.empty()) {
                os << " " << vp;
            }
        }
    }
    return os.str();
}

// Renders "coeff * extras" where extras are already-joined power factors;
// parenthesizes multi-term coefficients and drops a bare 1.
std::string coeff_times(const BetaPoly& coeff, const std::string& extras,
                        bool latex) {
    const std::string var = latex ? "\\beta" : "β";
    std::string cs;
    const bool multi_term =
        coeff.degree() > 0 || (coeff.degree() == 0 && coeff.coeff(0).sign() < 0);
    if (coeff.is_one()) {
        cs = "";
    } else if (multi_term) {
        cs = "(" + poly_string(coeff, var, latex) + ")";
    } else {
        cs = poly_string(coeff, var, latex);
    }
    if (cs.empty()) {
        return extras.empty() ? "1" : extras;
    }
    if (extras.empty()) {
        return cs;
    }
    return cs + " " + extras;
}

std::string join_powers(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) {
            continue;
        }
        if (!out.empty()) {
            out += " ";
        }
        out += p;
    }
    return out;
}

nlohmann::json poly_json_impl(const BetaPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back(c.str());
    }
    return arr;
}

}  // namespace

std::string poly_text(const BetaPoly& p, const std::string& var) {
    return poly_string(p, var, false);
}

std::string poly_latex(const BetaPoly& p, const std::string& var) {
    return poly_string(p, var, true);
}

nlohmann::json poly_json(const BetaPoly& p) {
    return poly_json_impl(p);
}

BetaPoly poly_from_json(const nlohmann::json& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        c.push_back(Rational::from_string(s.get<std::string>()));
    }
    return BetaPoly::from_coeffs(std::move(c));
}

std::string series_doc(const SeriesForm& form, Format format) {
    const bool shifted = form.var == MainVar::y_shifted;
    const unsigned r = form.r;

    if (format == Format::json) {
        nlohmann::json j;
        j["kind"] = "series";
        j["r"] = r;
        j["variable"] = shifted ? "y" : "alpha";
        j["prefix_p_exp"] = form.graded.prefix_p_exp;
        j["coefficients"] = nlohmann::json::array();
        for (unsigned k = 0; k < form.graded.entries.size(); ++k) {
            const unsigned shift = k == 0 ? 0 : (shifted ? k : k + 1);
            const BetaPoly reduced = *form.graded.entries[k].divide_power(shift);
            j["coefficients"].push_back({{"k", k},
                                         {"beta_exp", shift},
                                         {"poly", poly_json_impl(reduced)}});
        }
        return j.dump(2) + "\n";
    }

    const bool latex = format == Format::latex;
    const std::string vvar = latex ? (shifted ? "y" : "\\alpha") : (shifted ? "y" : "α");
    const std::string bvar = latex ? "\\beta" : "β";

    std::ostringstream body;
    for (unsigned k = 0; k < form.graded.entries.size(); ++k) {
        const unsigned shift = k == 0 ? 0 : (shifted ? k : k + 1);
        const BetaPoly reduced = *form.graded.entries[k].divide_power(shift);
        const std::string extras = join_powers({power(bvar, shift, latex),
                                                power(vvar, r - 1 - k, latex),
                                                power("p", k, latex)});
        if (k > 0) {
            body << " + ";
        }
        body << coeff_times(reduced, extras, latex);
    }

    std::ostringstream os;
    if (latex) {
        os << "S(" << r << ", "
           << (shifted ? "y + " + std::to_string(r) + " \\beta" : "\\alpha")
           << ", \\beta) = "
           << (r == 1 ? "p" : power("p", r, true) + " \\left[ " + body.str() + " \\right]")
           << "\n";
    } else {
        os << "S(" << r << ", " << (shifted ? "y + " + std::to_string(r) + " β" : "α")
           << ", β) = "
           << (r == 1 ? "p" : power("p", r, false) + " [ " + body.str() + " ]") << "\n";
    }
    return os.str();
}

std::string moment_doc(const MomentForm& form, Format format) {
    const unsigned m = form.m;

    if (format == Format::json) {
        nlohmann::json j;
        j["kind"] = "moment";
        j["m"] = m;
        j["prefix_p_exp"] = form.graded.prefix_p_exp;
        j["coefficients"] = nlohmann::json::array();
        for (unsigned k = 0; k < form.graded.entries.size(); ++k) {
            j["coefficients"].push_back(
                {{"k", k}, {"poly", poly_json_impl(form.graded.entries[k])}});
        }
        return j.dump(2) + "\n";
    }

    const bool latex = format == Format::latex;
    std::ostringstream os;
    if (m == 0) {
        os << (latex ? "B(t^{0}, x) = 1\n" : "B(t^0, x) = 1\n");
        return os.str();
    }

    std::ostringstream body;
    for (unsigned k = 0; k < form.graded.entries.size(); ++k) {
        const std::string extras = join_powers(
            {power("y", m - 1 - k, latex), power("p", k, latex)});
        if (k > 0) {
            body << " + ";
        }
        body << coeff_times(form.graded.entries[k], extras, latex);
    }

    if (latex) {
        os << "B(t^{" << m << "}, x) = \\frac{y\\,p^{" << m << "}}{n^{" << m
           << "}} \\left( " << body.str() << " \\right)\n";
    } else {
        const std::string prefix =
            "y " + (m == 1 ? std::string("p") : "p^" + std::to_string(m)) + "/n" +
            (m == 1 ? "" : "^" + std::to_string(m));
        if (m == 1) {
            os << "B(t^1, x) = y p/n\n";
        } else {
            os << "B(t^" << m << ", x) = " << prefix << " · ( " << body.str()
               << " )\n";
        }
    }
    return os.str();
}

std::string triangle_doc(const CoeffTriangle& triangle, Format format) {
    const std::string fam = family_name(triangle.family);

    if (format == Format::json) {
        nlohmann::json j;
        j["kind"] = "triangle";
        j["family"] = fam;
        j["entries"] = nlohmann::json::array();
        for (const auto& [rk, poly] : triangle.entries) {
            j["entries"].push_back({{"index", rk.first},
                                    {"k", rk.second},
                                    {"poly", poly_json_impl(poly)}});
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    for (const auto& [rk, poly] : triangle.entries) {
        if (format == Format::latex) {
            os << "\\" << fam << "_{" << rk.second << "}^{" << rk.first
               << "}(\\beta) &= " << poly_latex(poly) << " \\\\\n";
        } else {
            os << fam << "[" << rk.first << "," << rk.second
               << "] = " << poly_text(poly) << "\n";
        }
    }
    return os.str();
}

CoeffTriangle triangle_from_json(const nlohmann::json& doc) {
    CoeffTriangle t;
    const std::string fam = doc.at("family").get<std::string>();
    if (fam == "theta") {
        t.family = TriangleFamily::theta;
    } else if (fam == "phi") {
        t.family = TriangleFamily::phi;
    } else if (fam == "sigma") {
        t.family = TriangleFamily::sigma;
    } else {
        throw std::invalid_argument("unknown triangle family: " + fam);
    }
    for (const auto& e : doc.at("entries")) {
        t.entries.emplace(
            std::make_pair(e.at("index").get<unsigned>(), e.at("k").get<unsigned>()),
            poly_from_json(e.at("poly")));
    }
    return t;
}

std::string report_doc(const DiscrepancyReport& report, Format format) {
    if (format == Format::json) {
        return report.to_json().dump(2) + "\n";
    }
    if (format == Format::latex) {
        std::ostringstream os;
        os << "% " << report.compared << " compared, " << report.matched
           << " matched\n\\begin{itemize}\n";
        for (const auto& e : report.entries) {
            os << "\\item " << e.subject() << ":";
            for (const auto& d : e.diffs) {
                os << " $\\beta^{" << d.beta_exp << "}$ printed $" << d.printed.str()
                   << "$ vs computed $" << d.computed.str() << "$;";
            }
            os << "\n";
        }
        os << "\\end{itemize}\n";
        return os.str();
    }
    return report.to_text();
}

}  // namespace jainmom::render
