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

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jainmom/combinatorics.hpp"
#include "jainmom/ratfunc.hpp"

namespace jainmom {

// A computed value failed to factor into its expected graded shape. This is a
// reportable finding about the value, never auto-repaired.
struct AnsatzViolation : std::runtime_error {
    explicit AnsatzViolation(const std::string& what) : std::runtime_error(what) {}
};

enum class MainVar { alpha, y_shifted };

/*
 * Graded decomposition value = p^prefix_p_exp * sum_k entries[k] * v^{D-k} * p^k
 * with D = entries.size() - 1. The entries carry their beta factors: for the
 * alpha form entries[k] = theta_k * beta^{k+1}, for the shifted form
 * entries[k] = phi_k * beta^k, for moments entries[k] = sigma_k.
 */
struct GradedForm {
    unsigned prefix_p_exp = 0;
    std::vector<BetaPoly> entries;

    RatFuncBeta assemble() const;
};

struct SeriesForm {
    unsigned r = 0;
    MainVar var = MainVar::alpha;
    RatFuncBeta value;
    GradedForm graded;
};

enum class TriangleFamily { theta, phi, sigma };

const char* family_name(TriangleFamily f);

struct CoeffTriangle {
    TriangleFamily family = TriangleFamily::theta;
    // (r or m, k) -> coefficient polynomial in beta
    std::map<std::pair<unsigned, unsigned>, BetaPoly> entries;

    // Extracts the beta^beta_exp coefficients of column k over increasing row
    // index, starting at the first row where the column exists. Requires every
    // extracted coefficient to be an integer.
    std::vector<Integer> column(unsigned k, unsigned beta_exp) const;
};

/*
 * Builds the series S(r, alpha, beta) by the recursion
 * S(r) = sum_k beta^k (alpha + beta k) S(r-1, alpha + beta k, beta) from the
 * base case S(1) = p, shifts to S(r, y + r beta, beta), and extracts the
 * theta/phi coefficient triangles from the graded forms. Results are memoized
 * per r; all returned references stay valid for the engine's lifetime.
 */
class SeriesEngine {
public:
    const SeriesForm& s_alpha(unsigned r);    // r >= 1
    const SeriesForm& s_shifted(unsigned r);  // r >= 1

    // theta_k^r for k = 1..r-1 (r >= 2).
    std::map<unsigned, BetaPoly> extract_theta(unsigned r);
    // phi_k^r for k = 1..r-1 (r >= 2).
    std::map<unsigned, BetaPoly> extract_phi(unsigned r);

    CoeffTriangle theta_triangle(unsigned r_max);
    CoeffTriangle phi_triangle(unsigned r_max);

private:
    const SeriesForm& s_alpha_locked(unsigned r);
    const SeriesForm& s_shifted_locked(unsigned r);

    std::map<unsigned, SeriesForm> alpha_;
    std::map<unsigned, SeriesForm> shifted_;
    std::mutex mu_;
};

/*
 * One recursion step: sum_{k>=0} beta^k (alpha + beta k) g(alpha + beta k),
 * computed exactly by collecting powers of k and substituting the closed form
 * of sum_k k^t beta^k.
 */
RatFuncBeta weighted_sum_transform(const RatFuncBeta& g);

// Validates and grades a series value of main-variable degree r-1 against the
// p^{r+k} pattern; throws AnsatzViolation with context on failure.
GradedForm grade_series(const RatFuncBeta& value, unsigned r, MainVar var);

}  // namespace jainmom
