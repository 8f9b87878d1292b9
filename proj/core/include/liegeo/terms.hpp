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
// Lie polynomials with constants: syntax trees, the system file format,
// evaluation at points and normal forms in A[X].

#ifndef LIEGEO_TERMS_HPP
#define LIEGEO_TERMS_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "liegeo/carrier.hpp"
#include "liegeo/module.hpp"

namespace liegeo {

enum class CoefficientKind { Zero, Free, Metabelian };

struct AlgebraSpec {
    CoefficientKind kind = CoefficientKind::Zero;
    int rank = 0;
    Field field;

    // Number of constants a1..ar.
    size_t constant_count() const { return kind == CoefficientKind::Zero ? 0 : static_cast<size_t>(rank); }
    std::vector<std::string> constant_names() const;
    std::string str() const;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Var, Const, Zero, Sum, ScalarMul, Bracket };

    Kind kind = Kind::Zero;
    size_t index = 0;  // Var: variable index; Const: constant index
    Scalar coeff;      // ScalarMul
    std::vector<TermPtr> children;

    static TermPtr var(size_t i);
    static TermPtr constant(size_t i);
    static TermPtr zero();
    static TermPtr sum(std::vector<TermPtr> children);
    static TermPtr scalar(Scalar c, TermPtr t);
    static TermPtr bracket(TermPtr l, TermPtr r);
    // a - b as Sum(a, ScalarMul(-1, b)).
    static TermPtr minus(const Field& f, TermPtr a, TermPtr b);
};

bool term_equal(const TermPtr& a, const TermPtr& b, const Field& f);
size_t term_size(const TermPtr& t);
// Largest number of nested brackets plus one (degree bound of the value).
int term_degree(const TermPtr& t);
std::set<size_t> term_variables(const TermPtr& t);
// Replace variables by terms (vars[i] for Var i); Var nodes beyond the list stay.
TermPtr substitute(const TermPtr& t, const std::vector<TermPtr>& vars);
// Re-index variables: Var i -> Var map[i].
TermPtr rename_variables(const TermPtr& t, const std::vector<size_t>& map);

struct PolytopeFactorSpec {
    std::vector<TermPtr> basis;
    TermPtr shift;  // closed term, Zero when absent
    std::vector<std::string> basis_names;
    std::string shift_name;
};

struct CarrierSpec {
    std::string kind;  // free | metabelian | abelian | heisenberg | nonqw
    int rank = 0;      // rank or dimension
    size_t module = 0;
    std::optional<int> trunc;
};

struct EquationSystem {
    AlgebraSpec algebra;
    std::vector<std::string> vars;
    std::vector<TermPtr> equations;
    std::vector<int> equation_lines;
    std::vector<std::pair<std::string, TermPtr>> lets;
    std::vector<PolytopeFactorSpec> polytope;
    std::optional<CarrierSpec> carrier;
    std::optional<ModulePresentation> module;

    const Field& field() const { return algebra.field; }
};

// Names used when rendering terms.
struct TermNames {
    std::vector<std::string> vars;
    std::vector<std::string> constants;
    Field field;

    static TermNames of(const EquationSystem& sys);
};

EquationSystem parse_system(std::string_view text);
// Parse a single term against an existing system's names.
TermPtr parse_term(std::string_view text, const EquationSystem& sys);

std::string render_term(const TermPtr& t, const TermNames& names);
std::string render_system(const EquationSystem& sys);

// Evaluation of terms at points of a carrier; constants map to the carrier's
// designated copy of the coefficient algebra. Results are memoized per node
// until the point changes.
class Evaluator {
public:
    Evaluator(const Carrier& carrier, const Field& term_field, std::optional<int> trunc = std::nullopt);

    void set_point(std::vector<Element> point);
    const std::vector<Element>& point() const { return point_; }
    Element eval(const TermPtr& t);

private:
    const Element& eval_node(const Term* t);

    const Carrier& carrier_;
    Field term_field_;
    std::optional<int> trunc_;
    std::vector<Element> point_;
    std::unordered_map<const Term*, Element> memo_;
};

Element evaluate(const TermPtr& t, const std::vector<Element>& point, const Carrier& carrier, const Field& term_field,
                 std::optional<int> trunc = std::nullopt);

// A[X] realized as a free (or free metabelian) algebra on the generators of A
// followed by the variables.
struct LoweredSystem {
    std::shared_ptr<Carrier> algebra;
    size_t constants = 0;
    size_t variables = 0;
    std::vector<Element> equations;

    size_t variable_generator(size_t i) const { return constants + i; }
};

LoweredSystem lower_to_carrier(const EquationSystem& sys);
// A[X] for a given algebra spec and variable names.
std::shared_ptr<Carrier> coordinate_algebra(const AlgebraSpec& spec, const std::vector<std::string>& vars);
// Normal form of a term in A[X].
Element lower_term(const TermPtr& t, const Carrier& ax, size_t constants, size_t variables, const Field& term_field);

// Homomorphism from a free (metabelian) algebra into a carrier, given by the
// images of the generators; evaluation follows the basis factorization.
class Homomorphism {
public:
    Homomorphism(const Carrier& source, const Carrier& target, std::vector<Element> images,
                 std::optional<int> trunc = std::nullopt);
    Element apply(const Element& e);
    Element apply_basis(BasisId id);

private:
    const Carrier& source_;
    const Carrier& target_;
    std::vector<Element> images_;
    std::optional<int> trunc_;
    std::unordered_map<BasisId, Element> memo_;
};

}  // namespace liegeo

#endif  // LIEGEO_TERMS_HPP
