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

#include <mutex>
#include <vector>

#include "jainmom/beta_poly.hpp"
#include "jainmom/ratfunc.hpp"

namespace jainmom {

/*
 * Lazily grown triangle of exact integers for one combinatorial family.
 * Rows persist for the process lifetime; access is serialized, so concurrent
 * callers always see fully built rows.
 *
 * Row conventions:
 *   binomial   row n: C(n,0) .. C(n,n)
 *   stirling1  row n: c(n,0) .. c(n,n)         (unsigned first kind)
 *   stirling2  row n: S(n,0) .. S(n,n)
 *   eulerian1  row 0: {1}; row n >= 1: A(n,0) .. A(n,n-1)
 *   eulerian2  row 0: {1}; row n >= 1: T(n,0) .. T(n,n-1)
 */
class TriangleCache {
public:
    enum class Family { binomial, stirling1, stirling2, eulerian1, eulerian2 };

    explicit TriangleCache(Family family) : family_(family) {}

    Integer entry(unsigned n, unsigned k);
    std::vector<Integer> row(unsigned n);

private:
    void extend_to(unsigned n);  // caller holds mu_
    Integer at(unsigned n, int k) const;

    Family family_;
    std::vector<std::vector<Integer>> rows_;
    std::mutex mu_;
};

// Process-wide cache instance for a family.
TriangleCache& triangle_cache(TriangleCache::Family family);

Integer binomial(unsigned n, unsigned k);           // 0 when k > n
Integer stirling2(unsigned m, unsigned r);          // second kind
Integer stirling1_unsigned(unsigned n, unsigned k); // |s(n,k)|

// Eulerian polynomial A_n(x) (first kind); A_0 = 1, A_3 = 1 + 4x + x^2.
BetaPoly eulerian_poly_first(unsigned n);

// Second-order Eulerian polynomial B_n(x); B_2 = 1 + 2x, row sums (2n-1)!!.
BetaPoly eulerian_poly_second(unsigned n);

/*
 * Closed form of sum_{k>=0} k^n x^k as an element of Q[x][1/(1-x)], with the
 * series variable playing the beta slot of RatFuncBeta: x * A_n(x) * p^{n+1}
 * for n >= 1. The n = 0 sum includes the k = 0 term, so it is p rather than
 * x * p; that special case lives here, not in callers.
 */
RatFuncBeta power_sum_closed(unsigned n);

}  // namespace jainmom
