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
#include "jainmom/beta_poly.hpp"

#include <algorithm>

namespace jainmom {

void BetaPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

BetaPoly::BetaPoly(std::initializer_list<Rational> ascending) : c_(ascending) {
    trim();
}

BetaPoly::BetaPoly(const Rational& constant) {
    if (!constant.is_zero()) {
        c_.push_back(constant);
    }
}

BetaPoly BetaPoly::from_coeffs(std::vector<Rational> ascending) {
    BetaPoly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

BetaPoly BetaPoly::monomial(std::size_t deg, const Rational& coeff) {
    BetaPoly p;
    if (!coeff.is_zero()) {
        p.c_.assign(deg + 1, Rational());
        p.c_[deg] = coeff;
    }
    return p;
}

Rational BetaPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

BetaPoly BetaPoly::operator-() const {
    BetaPoly p;
    p.c_.reserve(c_.size());
    for (const auto& c : c_) {
        p.c_.push_back(-c);
    }
    return p;
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& o) {
    if (c_.size() < o.c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& o) {
    return *this += -o;
}

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    BetaPoly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            p.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    p.trim();
    return p;
}

BetaPoly operator*(const Rational& s, const BetaPoly& p) {
    if (s.is_zero()) {
        return {};
    }
    BetaPoly q;
    q.c_.reserve(p.c_.size());
    for (const auto& c : p.c_) {
        q.c_.push_back(s * c);
    }
    return q;
}

BetaPoly BetaPoly::pow(unsigned long e) const {
    BetaPoly acc = BetaPoly::one();
    for (unsigned long i = 0; i < e; ++i) {
        acc = acc * *this;
    }
    return acc;
}

bool BetaPoly::divisible_by_power(std::size_t n) const {
    if (is_zero()) {
        return true;
    }
    if (c_.size() < n) {
        return false;
    }
    return std::all_of(c_.begin(), c_.begin() + static_cast<long>(n),
                       [](const Rational& c) { return c.is_zero(); });
}

std::optional<BetaPoly> BetaPoly::divide_power(std::size_t n) const {
    if (!divisible_by_power(n)) {
        return std::nullopt;
    }
    if (is_zero()) {
        return BetaPoly();
    }
    BetaPoly q;
    q.c_.assign(c_.begin() + static_cast<long>(n), c_.end());
    return q;
}

BetaPoly BetaPoly::shift_up(std::size_t n) const {
    if (is_zero() || n == 0) {
        return n == 0 ? *this : BetaPoly();
    }
    BetaPoly p;
    p.c_.assign(n, Rational());
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

}  // namespace jainmom
