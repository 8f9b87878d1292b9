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
// Algebraic sets over windowed finite carriers: enumeration, radicals,
// closure, unions, products, decomposition and the co-presentation functors.

#ifndef LIEGEO_GEOMETRY_HPP
#define LIEGEO_GEOMETRY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/carrier.hpp"
#include "liegeo/metabelian.hpp"
#include "liegeo/terms.hpp"

namespace liegeo {

using Point = std::vector<Element>;
// Sorted point indices of an ambient space.
using PointSet = std::vector<uint64_t>;

inline constexpr uint64_t kDefaultPointBudget = uint64_t{1} << 22;
inline constexpr size_t kDefaultDecomposeBound = 12;

// LIEGEO_BUDGET if set and valid, else kDefaultPointBudget.
uint64_t default_point_budget();

CarrierPtr build_carrier(const CarrierSpec& spec, const AlgebraSpec& algebra);
// The declared carrier, or the coefficient algebra itself when it is free
// or free metabelian.
CarrierPtr default_carrier(const EquationSystem& sys);

// B^n restricted to a window of B, with the coordinate algebra A[X].
// Point index = sum of window_index(p_k) * |W|^k.
class Ambient {
public:
    Ambient(AlgebraSpec algebra, std::vector<std::string> vars, CarrierPtr carrier, int trunc);

    static std::shared_ptr<const Ambient> make(const EquationSystem& sys, CarrierPtr carrier, int trunc);

    const AlgebraSpec& algebra() const { return algebra_; }
    const Field& field() const { return algebra_.field; }
    const std::vector<std::string>& vars() const { return vars_; }
    size_t arity() const { return vars_.size(); }
    const Carrier& carrier() const { return window_.carrier(); }
    const CarrierPtr& carrier_ptr() const { return window_.carrier_ptr(); }
    const Window& window() const { return window_; }
    int trunc() const { return window_.degree(); }
    // Number of points; CapacityExceeded when not representable.
    uint64_t size() const { return size_; }

    Point point(uint64_t index) const;
    std::optional<uint64_t> index_of(const Point& p) const;
    std::string render_point(uint64_t index) const;
    PointSet all_points(uint64_t budget) const;

    // A[X]; generators are the constants followed by the variables.
    const Carrier& ax() const { return *ax_; }
    const std::shared_ptr<Carrier>& ax_ptr() const { return ax_; }
    Element lower(const TermPtr& t) const;
    // Images of the generators of A[X] under the evaluation at p.
    std::vector<Element> images(const Point& p) const;
    // Values of A[X] elements at p.
    std::vector<Element> evaluate(const std::vector<Element>& fs, const Point& p) const;
    bool vanishes(const std::vector<Element>& fs, const Point& p) const;

    bool same_space(const Ambient& o) const;

private:
    AlgebraSpec algebra_;
    std::vector<std::string> vars_;
    Window window_;
    uint64_t size_;
    std::shared_ptr<Carrier> ax_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

enum class Regime { Window, Polytope };
std::string regime_name(Regime r);

struct AlgebraicSet {
    AmbientPtr ambient;
    std::vector<Element> equations;  // in A[X]
    PointSet points;
    Regime regime = Regime::Window;

    size_t size() const { return points.size(); }
    bool contains(uint64_t index) const;
};

// V(S) by exhaustive enumeration of the window.
AlgebraicSet solve(const EquationSystem& sys, AmbientPtr ambient, uint64_t budget = default_point_budget());
AlgebraicSet solve(AmbientPtr ambient, std::vector<Element> equations, uint64_t budget = default_point_budget());
// Points of candidates at which every f vanishes.
PointSet vanishing_points(const Ambient& ambient, const std::vector<Element>& fs, const PointSet& candidates);

// Degree-bounded window of Rad(Y) in A[X], as a canonical echelon basis
// over the monomials of degree <= bound.
struct Radical {
    AmbientPtr ambient;
    int bound = 0;
    std::vector<BasisId> monomials;
    std::vector<Vec> rows;

    size_t dimension() const { return rows.size(); }
    std::vector<Element> elements() const;
    Vec coordinates(const Element& f) const;
    bool contains(const Element& f) const;
    // this ⊇ other
    bool includes(const Radical& other) const;
    bool operator==(const Radical& o) const;
};

Radical radical(AmbientPtr ambient, const PointSet& points, int bound);
inline Radical radical(const AlgebraicSet& y, int bound) { return radical(y.ambient, y.points, bound); }

struct ClosureResult {
    bool algebraic = false;
    PointSet closure;
};
// V(Rad(Y)) over the whole window.
ClosureResult closure(AmbientPtr ambient, const PointSet& points, int bound, uint64_t budget = default_point_budget());

// A-relative ideal of s in A[X]: left-normed [s, w1, ..., wk], k <= depth,
// with letters among the constants and s.
std::vector<Element> relative_ideal_span(const Carrier& alg, const Element& s, const std::vector<Element>& letters,
                                         int depth);

struct ZeroDivisorWitness {
    Element x;
    Element y;
};
// Nonzero x, y of the window whose relative ideals (to the given depth)
// multiply to zero; first pair in window order.
std::optional<ZeroDivisorWitness> zero_divisor_probe(const Window& window, int depth = 1);

// Equations for Z1 ∪ Z2: products of relative-ideal elements of the
// defining equations. NotADomain unless the probe finds no witness or
// override_domain is set.
std::vector<Element> union_system(const AlgebraicSet& z1, const AlgebraicSet& z2, int depth = 1,
                                  bool override_domain = false);

// Z1 × Z2 on disjoint variables; Z2's variables follow Z1's.
AlgebraicSet product(const AlgebraicSet& z1, const AlgebraicSet& z2);

// Irreducible components in the Zariski topology induced on Y, computed
// from degree-bounded radicals.
std::vector<PointSet> decompose(const AlgebraicSet& y, int bound, size_t max_points = kDefaultDecomposeBound);
// Longest chain of irreducible closed subsets.
int dimension(const AlgebraicSet& y, int bound, size_t max_points = kDefaultDecomposeBound);

// Dimension of a set whose coordinate algebra is F_r + M: the rank of M.
int64_t dimension(const ExtensionHandle& coordinate_algebra);

struct CoPresentation {
    AmbientPtr ambient;
    Radical radical;

    bool operator==(const CoPresentation& o) const { return radical == o.radical; }
};

CoPresentation functor_f(const AlgebraicSet& y, int bound);
AlgebraicSet functor_g(const CoPresentation& cp, uint64_t budget = default_point_budget());

// Polynomial map B^n -> B^m given by terms in the source variables.
struct PolynomialMap {
    AmbientPtr source;
    AmbientPtr target;
    std::vector<TermPtr> components;

    Point apply(uint64_t index) const;
    std::optional<uint64_t> apply_index(uint64_t index) const;
};

bool maps_into(const PolynomialMap& psi, const AlgebraicSet& y1, const AlgebraicSet& y2);
// f ↦ f(ψ): A[target vars] -> A[source vars].
std::vector<Element> transport(const PolynomialMap& psi, const std::vector<Element>& fs);

// Indices of a finite subsystem with the same solution set, by the greedy
// strictly descending chain.
std::vector<size_t> noetherian_probe(AmbientPtr ambient, const std::vector<Element>& equations,
                                     uint64_t budget = default_point_budget());

}  // namespace liegeo

#endif  // LIEGEO_GEOMETRY_HPP
