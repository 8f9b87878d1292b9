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
// Bounded geometry over a free Lie algebra F versus polynomial systems over
// the ground field: parallelepipeds (products of affine subspaces), the s_m
// equations, the translations f -> S_f and g -> f_g, and the one-variable
// classifier.

#ifndef LIEGEO_REDUCTION_HPP
#define LIEGEO_REDUCTION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liegeo/free_lie.hpp"
#include "liegeo/geometry.hpp"
#include "liegeo/poly.hpp"
#include "liegeo/terms.hpp"

namespace liegeo {

using FreeLiePtr = std::shared_ptr<const FreeLieAlgebra>;

// Expand an element into brackets of the generators (Const i for a_{i+1}).
TermPtr element_term(const Carrier& f, const Element& e);

// s_0(x) = x, s_1(x) = [x,v1],
// s_m(x) = [s_{m-1}(x; v1..v_{m-1}), s_{m-1}(v_m; v1..v_{m-1})].
TermPtr s_term(const std::vector<TermPtr>& basis, const TermPtr& x);
Element s_value(const Carrier& f, const std::vector<Element>& basis, const Element& x);
// Checked variant: DependentBasis unless the basis is independent.
TermPtr s_equation(const Carrier& f, const std::vector<Element>& basis, const TermPtr& x);
// s_m(x - c).
TermPtr s_affine(const Carrier& f, const std::vector<Element>& basis, const Element& shift, const TermPtr& x);

struct PolytopeFactor {
    std::vector<Element> basis;
    Element shift;
    size_t dim() const { return basis.size(); }
};

// (V_1 + c_1) × ... × (V_n + c_n) in F^n with k-coordinates y1..yM, block j
// holding the coordinates of factor j.
class Parallelepipedon {
public:
    Parallelepipedon(FreeLiePtr algebra, std::vector<PolytopeFactor> factors);
    // From the polytope statements of a system over a free coefficient algebra.
    static Parallelepipedon from_system(const EquationSystem& sys);

    const FreeLieAlgebra& algebra() const { return *algebra_; }
    const FreeLiePtr& algebra_ptr() const { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    const std::vector<PolytopeFactor>& factors() const { return factors_; }
    size_t arity() const { return factors_.size(); }
    size_t total_dim() const { return offsets_.back(); }
    size_t offset(size_t factor) const { return offsets_[factor]; }
    // k[y1..yM].
    const RingPtr& ring() const { return ring_; }
    std::vector<std::vector<size_t>> blocks() const;

    Point point(const std::vector<Scalar>& coords) const;
    std::optional<std::vector<Scalar>> coordinates(const Point& p) const;
    bool contains(const Point& p) const { return coordinates(p).has_value(); }

    // Finite k: tuples of k^M indexed with y1 least significant.
    uint64_t size() const;
    std::vector<Scalar> tuple(uint64_t index) const;
    uint64_t tuple_index(const std::vector<Scalar>& t) const;

    std::string str() const;

private:
    FreeLiePtr algebra_;
    std::vector<PolytopeFactor> factors_;
    std::vector<size_t> offsets_;
    RingPtr ring_;
};

// Polynomials over k in y1..yM, grouped into blocks per factor.
struct PolySystem {
    RingPtr ring;
    std::vector<std::vector<size_t>> blocks;
    std::vector<Poly> polys;

    // field <F>; block i: y..; one polynomial per line.
    std::string render() const;
    static PolySystem parse(std::string_view text);
};

struct SubspaceReport {
    bool equal = false;
    PointSet solutions;     // window indices of V(s_l(x - c))
    PointSet span;          // window indices of c + lin(basis)
    PointSet discrepancy;   // symmetric difference
};
// V(s_l(x - c)) enumerated over the window of F of the given degree.
SubspaceReport subspace_as_algebraic_set(FreeLiePtr f, const std::vector<Element>& basis, const Element& shift,
                                         int degree, uint64_t budget = default_point_budget());

// S_f: coefficients of f(p) at the generic point of P.
std::vector<Poly> lie_to_poly(const TermPtr& f, const Parallelepipedon& p, const Field& term_field);

struct LiftedPoly {
    TermPtr term;          // f_g in the variables x1..xn
    TermPtr anchor;        // a
    Element anchor_value;  // [a, b.., ..] in F
    std::vector<Element> b;  // b_y per coordinate y
};
inline constexpr int kAnchorDegreeSlack = 3;
// f_g with f_g(p) = g(coords(p)) * anchor_value. AnchorDegenerate when no
// candidate of degree <= 1 + max deg b + slack gives a nonzero product.
LiftedPoly poly_to_lie(const Poly& g, const Parallelepipedon& p, int slack = kAnchorDegreeSlack);

// S_k = union of S_f over the equations; V_k(S_k) = coords(V_F(sys) ∩ P).
PolySystem reduce_system(const EquationSystem& sys, const Parallelepipedon& p);
// S_F = {f_g} ∪ {s_m(x_j - c_j)}: V_F(S_F) = points of V_k(S_k).
EquationSystem lift_system(const PolySystem& s, const Parallelepipedon& p, const std::vector<std::string>& vars = {});

// Correspondence between P and k^M.
std::vector<std::vector<Scalar>> to_coordinates(const Parallelepipedon& p, const std::vector<Point>& points);
std::vector<Point> to_points(const Parallelepipedon& p, const std::vector<std::vector<Scalar>>& tuples);

// Finite k, exhaustive: tuple indices of V_k(s) and of V_F(equations) ∩ P.
PointSet solve_poly_system(const PolySystem& s, const Parallelepipedon& p, uint64_t budget = default_point_budget());
PointSet solve_in_polytope(const std::vector<TermPtr>& equations, const Field& term_field, const Parallelepipedon& p,
                           uint64_t budget = default_point_budget());

enum class OneVariableKind { WholeAlgebra, BoundedWithin, EmptyWithin, Unknown };
std::string one_variable_kind_name(OneVariableKind k);

struct OneVariableClass {
    OneVariableKind kind = OneVariableKind::Unknown;
    int search_degree = 0;
    std::optional<Parallelepipedon> bound;
    size_t solutions = 0;
    // The solutions found fill the bounding parallelepiped.
    bool exact = false;
};
OneVariableClass classify_one_variable(const EquationSystem& sys, int search_degree,
                                       uint64_t budget = default_point_budget());

struct RealisationReport {
    // Coordinates of each generator over the extended field, per factor.
    std::vector<std::vector<Scalar>> coordinates;
    PointSet specializations;  // tuple indices of P
    size_t skipped = 0;        // specializations with a vanishing denominator
    std::optional<bool> matches;
};
// generators: one element of F over ext = k(t1..tT) per factor.
RealisationReport bounded_realisation(const Parallelepipedon& p, const Field& ext, const std::vector<Element>& generators,
                                      const std::optional<PointSet>& claimed = std::nullopt,
                                      uint64_t budget = default_point_budget());

}  // namespace liegeo

#endif  // LIEGEO_REDUCTION_HPP
