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
#include "jainmom/combinatorics.hpp"

namespace jainmom {

Integer TriangleCache::at(unsigned n, int k) const {
    if (k < 0 || n >= rows_.size() ||
        static_cast<std::size_t>(k) >= rows_[n].size()) {
        return 0;
    }
    return rows_[n][static_cast<std::size_t>(k)];
}

void TriangleCache::extend_to(unsigned n) {
    if (rows_.empty()) {
        rows_.push_back({Integer(1)});  // every family starts from a single 1
    }
    while (rows_.size() <= n) {
        const auto row_n = static_cast<unsigned>(rows_.size());
        std::size_t len = 0;
        switch (family_) {
            case Family::binomial:
            case Family::stirling1:
            case Family::stirling2:
                len = row_n + 1;
                break;
            case Family::eulerian1:
            case Family::eulerian2:
                len = row_n;  // rows n >= 1 have n entries
                break;
        }
        std::vector<Integer> row(len);
        for (unsigned k = 0; k < len; ++k) {
            switch (family_) {
                case Family::binomial:
                    row[k] = at(row_n - 1, static_cast<int>(k) - 1) +
                             at(row_n - 1, static_cast<int>(k));
                    break;
                case Family::stirling1:
                    row[k] = Integer(row_n - 1) * at(row_n - 1, static_cast<int>(k)) +
                             at(row_n - 1, static_cast<int>(k) - 1);
                    break;
                case Family::stirling2:
                    row[k] = Integer(k) * at(row_n - 1, static_cast<int>(k)) +
                             at(row_n - 1, static_cast<int>(k) - 1);
                    break;
                case Family::eulerian1:
                    row[k] = Integer(k + 1) * at(row_n - 1, static_cast<int>(k)) +
                             Integer(row_n - k) * at(row_n - 1, static_cast<int>(k) - 1);
                    break;
                case Family::eulerian2:
                    row[k] = Integer(k + 1) * at(row_n - 1, static_cast<int>(k)) +
                             Integer(2 * row_n - 1 - k) *
                                 at(row_n - 1, static_cast<int>(k) - 1);
                    break;
            }
        }
        rows_.push_back(std::move(row));
    }
}

Integer TriangleCache::entry(unsigned n, unsigned k) {
    std::lock_guard lock(mu_);
    extend_to(n);
    return at(n, static_cast<int>(k));
}

std::vector<Integer> TriangleCache::row(unsigned n) {
    std::lock_guard lock(mu_);
    extend_to(n);
    return rows_[n];
}

TriangleCache& triangle_cache(TriangleCache::Family family) {
    static TriangleCache binomial_cache(TriangleCache::Family::binomial);
    static TriangleCache stirling1_cache(TriangleCache::Family::stirling1);
    static TriangleCache stirling2_cache(TriangleCache::Family::stirling2);
    static TriangleCache eulerian1_cache(TriangleCache::Family::eulerian1);
    static TriangleCache eulerian2_cache(TriangleCache::Family::eulerian2);
    switch (family) {
        case TriangleCache::Family::binomial:  return binomial_cache;
        case TriangleCache::Family::stirling1: return stirling1_cache;
        case TriangleCache::Family::stirling2: return stirling2_cache;
        case TriangleCache::Family::eulerian1: return eulerian1_cache;
        case TriangleCache::Family::eulerian2: return eulerian2_cache;
    }
    throw std::logic_error("unreachable triangle family");
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    return triangle_cache(TriangleCache::Family::binomial).entry(n, k);
}

Integer stirling2(unsigned m, unsigned r) {
    if (r > m) {
        return 0;
    }
    return triangle_cache(TriangleCache::Family::stirling2).entry(m, r);
}

Integer stirling1_unsigned(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    return triangle_cache(TriangleCache::Family::stirling1).entry(n, k);
}

namespace {

BetaPoly poly_from_row(std::vector<Integer> row) {
    std::vector<Rational> coeffs;
    coeffs.reserve(row.size());
    for (auto& v : row) {
        coeffs.emplace_back(v);
    }
    return BetaPoly::from_coeffs(std::move(coeffs));
}

}  // namespace

BetaPoly eulerian_poly_first(unsigned n) {
    return poly_from_row(triangle_cache(TriangleCache::Family::eulerian1).row(n));
}

BetaPoly eulerian_poly_second(unsigned n) {
    return poly_from_row(triangle_cache(TriangleCache::Family::eulerian2).row(n));
}

RatFuncBeta power_sum_closed(unsigned n) {
    if (n == 0) {
        // The k = 0 term contributes 1, so the n = 0 sum is the full
        // geometric series p, not x * A_0 * p.
        return RatFuncBeta::p_power(1);
    }
    const BetaPoly numerator =
        BetaPoly::monomial(1, Rational(1)) * eulerian_poly_first(n);
    return RatFuncBeta(BiPoly::from_beta(numerator), n + 1);
}

}  // namespace jainmom
