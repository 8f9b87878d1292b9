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
// Exact ground fields: GF(p), Q, and rational-function fields over either.
//
// A Scalar is a bare value; all arithmetic goes through the Field that owns
// it.  FieldElement pairs the two for API boundaries that must detect mixing.

#ifndef LIEGEO_FIELD_HPP
#define LIEGEO_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "liegeo/error.hpp"

namespace liegeo {

using Rational = boost::multiprecision::cpp_rational;

class RationalFunction;
struct PolyRing;

struct Scalar {
    std::variant<int64_t, std::shared_ptr<const Rational>, std::shared_ptr<const RationalFunction>> v;

    Scalar() : v(int64_t{0}) {}
    explicit Scalar(int64_t x) : v(x) {}
    explicit Scalar(std::shared_ptr<const Rational> q) : v(std::move(q)) {}
    explicit Scalar(std::shared_ptr<const RationalFunction> f) : v(std::move(f)) {}
};

class Field {
public:
    enum class Kind { Prime, Rationals, RationalFunctions };

    static Field prime(int64_t p);
    static Field rationals();
    static Field rational_functions(const Field& base, const std::vector<std::string>& vars);
    static Field parse(std::string_view text);

    Field();  // GF(2)

    Kind kind() const;
    int64_t characteristic() const;
    bool is_finite() const { return kind() == Kind::Prime; }
    // Cardinality of a finite field; throws otherwise.
    int64_t size() const;
    const Field& base() const;  // rational-function fields only
    const std::vector<std::string>& variables() const;
    const std::shared_ptr<const PolyRing>& ring() const;  // k[t...] under k(t...)
    // Innermost non-rational-function field.
    const Field& prime_subfield() const;

    std::string str() const;
    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(int64_t n) const;
    Scalar from_rational(const Rational& q) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar pow(const Scalar& a, int64_t e) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;
    // Total order used for deterministic output.
    int cmp(const Scalar& a, const Scalar& b) const;
    size_t hash(const Scalar& a) const;

    std::string render(const Scalar& a) const;
    // Integer or p/q literal; range-checked against GF(p).
    Scalar parse_literal(std::string_view text) const;
    // Field expression with + - * / ^, parentheses, integer literals and the
    // field's variables, e.g. "(t + 1)/t".
    Scalar parse_expression(std::string_view text) const;

    // Map a scalar of a subfield (or the same field) into this one.
    Scalar coerce(const Field& from, const Scalar& a) const;
    bool contains_subfield(const Field& from) const;

    // Finite fields: elements indexed 0..p-1.
    Scalar element(int64_t index) const;
    int64_t index_of(const Scalar& a) const;

    // Rational-function fields: the variable t_i as a scalar.
    Scalar variable(size_t i) const;

    int64_t p_value(const Scalar& a) const { return std::get<int64_t>(a.v); }
    const Rational& q_value(const Scalar& a) const { return *std::get<std::shared_ptr<const Rational>>(a.v); }
    const RationalFunction& rf_value(const Scalar& a) const;

private:
    struct Data;
    explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

// Field-tagged scalar used where mixed fields must be rejected.
class FieldElement {
public:
    FieldElement(Field f, Scalar s) : field_(std::move(f)), value_(std::move(s)) {}

    const Field& field() const { return field_; }
    const Scalar& value() const { return value_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    bool operator==(const FieldElement& o) const;
    std::string str() const { return field_.render(value_); }

private:
    void check_same(const FieldElement& o) const;
    Field field_;
    Scalar value_;
};

bool is_prime(int64_t n);

}  // namespace liegeo

#endif  // LIEGEO_FIELD_HPP
