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
#include "jainmom/rational.hpp"

#include <ostream>

namespace jainmom {

Rational::Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}

Rational::Rational(const Integer& n, const Integer& d) {
    if (sgn(d) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(n, d);
    v_.canonicalize();  // gmp does not reduce num/den constructions itself
}

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    }
    if (sgn(mpq_class(q.get_den())) == 0) {
        throw std::domain_error("rational with zero denominator: '" + s + "'");
    }
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, unsigned long exp) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exp);
    return Rational(n, d);
}

}  // namespace jainmom
