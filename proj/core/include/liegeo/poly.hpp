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
// Sparse multivariate polynomials over an exact field, grlex ordered.

#ifndef LIEGEO_POLY_HPP
#define LIEGEO_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liegeo/field.hpp"

namespace liegeo {

using Monomial = std::vector<uint32_t>;

struct PolyRing {
    std::vector<std::string> vars;
    Field coeffs;

    PolyRing(std::vector<std::string> v, Field f) : vars(std::move(v)), coeffs(std::move(f)) {}
    size_t arity() const { return vars.size(); }
    bool operator==(const PolyRing& o) const { return vars == o.vars && coeffs == o.coeffs; }
    std::string str() const;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, Field coeffs);
bool same_ring(const RingPtr& a, const RingPtr& b);

// Graded lexicographic comparison: -1, 0, 1.
int grlex_cmp(const Monomial& a, const Monomial& b);
uint32_t total_degree(const Monomial& m);

class Poly {
public:
    using Term = std::pair<Monomial, Scalar>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    static Poly constant(RingPtr ring, const Scalar& c);
    static Poly variable(RingPtr ring, size_t i);
    static Poly monomial(RingPtr ring, Monomial m, const Scalar& c);
    // Terms in any order; duplicates are combined and zeros dropped.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);
    static Poly parse(RingPtr ring, std::string_view text);

    const RingPtr& ring() const { return ring_; }
    const Field& field() const { return ring_->coeffs; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    int total_degree() const;  // -1 for zero
    int degree_in(size_t var) const;
    const Monomial& leading_monomial() const { return terms_.front().first; }
    const Scalar& leading_coeff() const { return terms_.front().second; }
    Scalar constant_term() const;
    Scalar coeff(const Monomial& m) const;
    // Largest variable index occurring, or -1.
    int main_variable() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scale(const Scalar& c) const;
    Poly mul_monomial(const Monomial& m, const Scalar& c) const;
    Poly pow(uint32_t e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Deterministic total order (term by term).
    int cmp(const Poly& o) const;
    size_t hash() const;

    // Exact quotient; throws InvalidArgument when the division leaves a remainder.
    Poly exact_div(const Poly& d) const;
    // Quotient and remainder by multivariate division with a single divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly monic() const;

    Scalar evaluate(const std::vector<Scalar>& point) const;
    // Evaluate with coefficients and point in a larger field.
    Scalar evaluate_in(const Field& target, const std::vector<Scalar>& point) const;
    Poly substitute(size_t var, const Poly& value) const;
    // Re-express in another ring whose variables include these (by name).
    Poly embed(const RingPtr& target) const;

    // Coefficients with respect to one variable: power -> coefficient poly.
    std::map<uint32_t, Poly> coefficients_in(size_t var) const;

    std::string str() const;

private:
    void check_ring(const Poly& o) const;
    RingPtr ring_;
    std::vector<Term> terms_;  // descending grlex, no zero coefficients
};

Poly gcd(const Poly& a, const Poly& b);
// gcd of the coefficients w.r.t. var (a poly free of var).
Poly content_in(const Poly& a, size_t var);

}  // namespace liegeo

#endif  // LIEGEO_POLY_HPP
