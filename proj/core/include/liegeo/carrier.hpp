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
// Lie algebras over a field with a designated copy of the coefficient
// algebra, presented on a (possibly infinite) graded basis.

#ifndef LIEGEO_CARRIER_HPP
#define LIEGEO_CARRIER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liegeo/field.hpp"
#include "liegeo/linalg.hpp"

namespace liegeo {

using BasisId = uint32_t;

// Sparse coordinate vector, sorted by basis id, no zero coefficients.
struct Element {
    std::vector<std::pair<BasisId, Scalar>> terms;

    bool is_zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }
};

// Accumulates a linear combination of basis elements.
class ElementBuilder {
public:
    explicit ElementBuilder(const Field& f) : field_(f) {}
    void add(BasisId id, const Scalar& c);
    void add(const Element& e, const Scalar& c);
    void add(const Element& e);
    Element finish();

private:
    const Field& field_;
    std::unordered_map<BasisId, Scalar> acc_;
};

class Carrier : public std::enable_shared_from_this<Carrier> {
public:
    explicit Carrier(Field f) : field_(std::move(f)) {}
    virtual ~Carrier() = default;
    Carrier(const Carrier&) = delete;
    Carrier& operator=(const Carrier&) = delete;

    const Field& field() const { return field_; }
    virtual std::string description() const = 0;

    // Basis.
    virtual int basis_degree(BasisId id) const = 0;
    virtual std::string basis_name(BasisId id) const = 0;
    // Canonical basis order (degree first).
    virtual bool basis_less(BasisId a, BasisId b) const = 0;
    // All basis elements of degree <= d, in canonical order.
    virtual std::vector<BasisId> window_basis(int d) const = 0;
    virtual bool finite_dimensional() const { return false; }
    // Largest basis degree of a finite-dimensional carrier.
    virtual int top_degree() const { return 0; }

    // The designated copy of the coefficient algebra.
    virtual size_t constant_count() const = 0;
    virtual Element constant(size_t i) const = 0;
    virtual std::string constant_name(size_t i) const = 0;

    // Generators and factorization for carriers that are free objects;
    // each non-generator basis element equals the bracket of its factors.
    virtual size_t generator_count() const { return 0; }
    virtual std::optional<BasisId> generator(size_t) const { return std::nullopt; }
    virtual std::optional<size_t> generator_index(BasisId) const { return std::nullopt; }
    virtual std::optional<std::pair<BasisId, BasisId>> factors(BasisId) const { return std::nullopt; }

    // Product of two basis elements (memoized).
    const Element& bracket_basis(BasisId a, BasisId b) const;
    // Bilinear product; max_degree drops homogeneous products above it.
    Element bracket(const Element& u, const Element& v, std::optional<int> max_degree = std::nullopt) const;

    Element basis_element(BasisId id) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scale(const Element& a, const Scalar& c) const;
    Element axpy(const Element& y, const Scalar& c, const Element& x) const;  // y + c x
    bool equal(const Element& a, const Element& b) const;
    int compare(const Element& a, const Element& b) const;  // canonical total order
    size_t hash(const Element& a) const;
    int degree(const Element& a) const;      // max basis degree, -1 for 0
    int min_degree(const Element& a) const;  // min basis degree, -1 for 0
    Scalar coefficient(const Element& a, BasisId id) const;

    std::string render(const Element& a) const;

    // Optional hard cap: products exceeding it without a truncation context
    // raise TruncationRequired.
    void set_degree_cap(std::optional<int> cap) { degree_cap_ = cap; }
    std::optional<int> degree_cap() const { return degree_cap_; }

    size_t memo_size() const;

protected:
    virtual Element compute_bracket_basis(BasisId a, BasisId b) const = 0;

private:
    Field field_;
    std::optional<int> degree_cap_;
    mutable std::shared_mutex memo_mutex_;
    mutable std::unordered_map<uint64_t, Element> memo_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

// Element tagged with its algebra, for API boundaries that must reject mixing.
class LieElement {
public:
    LieElement(CarrierPtr alg, Element e) : alg_(std::move(alg)), e_(std::move(e)) {}

    const CarrierPtr& algebra() const { return alg_; }
    const Element& element() const { return e_; }

    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator*(const Scalar& c) const;
    bool operator==(const LieElement& o) const;
    bool is_zero() const { return e_.is_zero(); }
    std::string str() const { return alg_->render(e_); }

private:
    friend LieElement bracket(const LieElement& u, const LieElement& v);
    CarrierPtr alg_;
    Element e_;
};

LieElement bracket(const LieElement& u, const LieElement& v);
void check_same_algebra(const Carrier& a, const Carrier& b);

// Coordinates of v in the span of basis, or nullopt (not in span).
std::optional<Vec> subspace_membership(const Carrier& alg, const Element& v, const std::vector<Element>& basis);
std::optional<Vec> subspace_membership(const LieElement& v, const std::vector<LieElement>& basis);
bool linearly_independent(const Carrier& alg, const std::vector<Element>& elems);

// Finite enumeration of the degree-<=d part of a carrier over GF(p).
// Element index = sum of coefficient_k * p^k, first basis element least
// significant.
class Window {
public:
    Window(CarrierPtr carrier, int degree);

    const Carrier& carrier() const { return *carrier_; }
    const CarrierPtr& carrier_ptr() const { return carrier_; }
    int degree() const { return degree_; }
    const std::vector<BasisId>& basis() const { return basis_; }
    size_t dimension() const { return basis_.size(); }
    uint64_t size() const { return size_; }
    Element element(uint64_t index) const;
    // Index of an element of the window; nullopt if outside.
    std::optional<uint64_t> index_of(const Element& e) const;
    bool contains(const Element& e) const { return index_of(e).has_value(); }
    std::vector<Element> elements() const;

private:
    CarrierPtr carrier_;
    int degree_;
    std::vector<BasisId> basis_;
    std::unordered_map<BasisId, size_t> position_;
    uint64_t p_;
    uint64_t size_;
};

// Upper bound on enumerable window sizes.
inline constexpr uint64_t kMaxWindowSize = uint64_t{1} << 40;

}  // namespace liegeo

#endif  // LIEGEO_CARRIER_HPP
