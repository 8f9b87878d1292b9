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
// Free metabelian Lie algebras and direct extensions of their Fitting
// radical by free modules over R = k[x_1..x_r].
//
// Basis: generators a_i (degree 1); left-normed brackets
// [a_j, a_i, a_k1, ..., a_kt] with j > i <= k1 <= ... <= kt, stored as
// (j, i, monomial x_k1...x_kt) and of degree 2 + t; module elements g * m
// of degree 2 + |m|.

#ifndef LIEGEO_METABELIAN_HPP
#define LIEGEO_METABELIAN_HPP

#include <deque>
#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>
#include <string>
#include <vector>

#include "liegeo/carrier.hpp"
#include "liegeo/module.hpp"
#include "liegeo/poly.hpp"

namespace liegeo {

class MetabelianAlgebra : public Carrier {
public:
    enum class Kind { Linear, Fitting, Module };

    // names: generator names; the first `constants` generate the
    // coefficient algebra. module_rank adds a free module of that rank to
    // the Fitting radical.
    MetabelianAlgebra(Field f, std::vector<std::string> names, size_t constants, size_t module_rank = 0);
    static std::shared_ptr<MetabelianAlgebra> make(Field f, int rank, size_t module_rank = 0);
    static std::shared_ptr<MetabelianAlgebra> make(Field f, std::vector<std::string> names, size_t constants,
                                                   size_t module_rank = 0);

    int rank() const { return static_cast<int>(names_.size()); }
    size_t module_rank() const { return module_rank_; }
    const std::vector<std::string>& names() const { return names_; }

    std::string description() const override;
    int basis_degree(BasisId id) const override;
    std::string basis_name(BasisId id) const override;
    bool basis_less(BasisId a, BasisId b) const override;
    std::vector<BasisId> window_basis(int d) const override;

    size_t constant_count() const override { return constants_; }
    Element constant(size_t i) const override { return basis_element(static_cast<BasisId>(i)); }
    std::string constant_name(size_t i) const override { return names_.at(i); }

    size_t generator_count() const override { return names_.size(); }
    std::optional<BasisId> generator(size_t i) const override;
    std::optional<size_t> generator_index(BasisId id) const override;
    std::optional<std::pair<BasisId, BasisId>> factors(BasisId id) const override;

    Kind kind(BasisId id) const;
    // Fitting basis element [a_j, a_i] * m (0-based j > i, m over vars >= i).
    BasisId fitting_id(int j, int i, const Monomial& m) const;
    BasisId module_id(int g, const Monomial& m) const;
    Element generator_element(size_t i) const { return basis_element(static_cast<BasisId>(i)); }

    // Polynomial ring R = k[x1..xr] acting on the Fitting radical.
    const RingPtr& ring() const { return ring_; }

    // Linear part: coefficients of the generators.
    std::vector<Scalar> linear_part(const Element& u) const;
    bool in_fitting_by_linear_part(const Element& u) const;

    // Coordinates as R-module data.
    struct View {
        std::vector<Scalar> linear;
        std::map<std::pair<int, int>, Poly> fitting;  // (j, i) -> coefficient polynomial
        std::vector<Poly> module;
    };
    View view(const Element& u) const;
    // Inverse of view; fitting coefficients are rewritten into normal form.
    Element from_view(const View& v) const;
    // u * p for u in the Fitting radical (or module part).
    Element act(const Element& u, const Poly& p) const;

protected:
    Element compute_bracket_basis(BasisId a, BasisId b) const override;

private:
    struct Entry {
        Kind kind;
        int first, second;  // (j, i) or (g, -1)
        Monomial m;
        int degree;
    };
    BasisId intern(Kind k, int first, int second, const Monomial& m) const;
    const Entry& entry(BasisId id) const;
    // [a_j, a_i] * m rewritten into the basis.
    Element normalize(int j, int i, const Monomial& m) const;

    std::vector<std::string> names_;
    size_t constants_;
    size_t module_rank_;
    RingPtr ring_;
    mutable std::shared_mutex mutex_;
    mutable std::deque<Entry> entries_;
    mutable std::map<std::tuple<int, int, int, Monomial>, BasisId> ids_;
};

using MetabelianPtr = std::shared_ptr<MetabelianAlgebra>;

// True iff u lies in the Fitting radical. Cross-checks the linear-part test
// against the formula u a_i u = 0 for all i; disagreement raises
// InvariantViolation. In rank 1 the algebra is abelian and equals its
// Fitting radical.
bool is_in_fitting(const MetabelianAlgebra& alg, const Element& u);

// Linear independence modulo the Fitting radical, by exhaustive evaluation
// over all nonzero coefficient tuples and by linear-part rank.
bool phi_independent(const MetabelianAlgebra& alg, const std::vector<Element>& elems);

// Direct extension of the Fitting radical of the free metabelian algebra of
// rank r by a torsion-free module M.
class ExtensionHandle {
public:
    ExtensionHandle(int r, ModulePresentation m, int64_t module_rank, MetabelianPtr carrier)
        : rank_(r), module_(std::move(m)), module_rank_(module_rank), carrier_(std::move(carrier)) {}
    int rank() const { return rank_; }
    const ModulePresentation& module() const { return module_; }
    int64_t module_rank() const { return module_rank_; }
    // An enumerable carrier exists only when M is free (no relations).
    bool has_carrier() const { return carrier_ != nullptr; }
    const MetabelianPtr& carrier() const;
    std::string description() const;

private:
    int rank_;
    ModulePresentation module_;
    int64_t module_rank_;
    MetabelianPtr carrier_;
};

inline constexpr int kDefaultTorsionDegree = 4;

ExtensionHandle build_extension(const Field& field, int r, const ModulePresentation& m,
                                int torsion_degree = kDefaultTorsionDegree);

// Ring k[x1..xr] used for module presentations over a metabelian algebra.
RingPtr metabelian_ring(const Field& field, int r);

}  // namespace liegeo

#endif  // LIEGEO_METABELIAN_HPP
