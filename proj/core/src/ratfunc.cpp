/* Copyright 2026 The liegeo Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "liegeo/ratfunc.hpp"

namespace liegeo {

RationalFunction::RationalFunction(const RingPtr& ring)
    : num_(ring), den_(Poly::constant(ring, ring->coeffs.one())) {}

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.ring(), num_.field().one())) {}

RationalFunction::RationalFunction(Poly num, Poly den) {
    if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(den.ring(), den.field().one());
        num_ = std::move(num);
        return;
    }
    if (!den.is_constant()) {
        Poly g = gcd(num, den);
        if (!g.is_constant()) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
    }
    Scalar lc_inv = den.field().inv(den.leading_coeff());
    num_ = num.scale(lc_inv);
    den_ = den.scale(lc_inv);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_polynomial() && o.is_polynomial()) return RationalFunction(num_ + o.num_, den_, Normalized{});
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Normalized{}); }

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_polynomial() && o.is_polynomial()) {
        Poly n = num_ * o.num_;
        return RationalFunction(std::move(n), den_, Normalized{});
    }
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

int RationalFunction::cmp(const RationalFunction& o) const {
    int c = num_.cmp(o.num_);
    return c ? c : den_.cmp(o.den_);
}

size_t RationalFunction::hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
    std::string d = den_.terms().size() > 1 ? "(" + den_.str() + ")" : den_.str();
    return n + "/" + d;
}

}  // namespace liegeo
