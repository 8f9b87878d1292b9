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
// Reduced fractions of polynomials with a monic (grlex) denominator.

#ifndef LIEGEO_RATFUNC_HPP
#define LIEGEO_RATFUNC_HPP

#include <string>

#include "liegeo/poly.hpp"

namespace liegeo {

class RationalFunction {
public:
    explicit RationalFunction(const RingPtr& ring);
    explicit RationalFunction(Poly num);
    RationalFunction(Poly num, Poly den);  // normalizes; throws on den == 0

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    int cmp(const RationalFunction& o) const;
    size_t hash() const;

    std::string str() const;

private:
    struct Normalized {};
    RationalFunction(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

}  // namespace liegeo

#endif  // LIEGEO_RATFUNC_HPP
