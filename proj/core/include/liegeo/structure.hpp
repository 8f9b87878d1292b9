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
// Finite-dimensional Lie algebras given by structure constants.

#ifndef LIEGEO_STRUCTURE_HPP
#define LIEGEO_STRUCTURE_HPP

#include <memory>
#include <string>
#include <vector>

#include "liegeo/carrier.hpp"

namespace liegeo {

class StructureAlgebra : public Carrier {
public:
    struct Product {
        size_t left, right;
        Element value;  // [e_left, e_right]; the opposite product is implied
    };

    // Validates antisymmetry (implied) and the Jacobi identity.
    StructureAlgebra(Field f, std::string label, std::vector<std::string> names, std::vector<int> degrees,
                     const std::vector<Product>& products, std::vector<Element> constants,
                     std::vector<std::string> constant_names);

    static std::shared_ptr<StructureAlgebra> abelian(Field f, size_t dim);
    // x, y, z with [x, y] = z; constants x, y.
    static std::shared_ptr<StructureAlgebra> heisenberg(Field f);
    // a1, b1, a2, b2, c1, c2 with [a_i, b_i] = c_i, all other basic products
    // zero; constants a1, b1, a2, b2. Two-step nilpotent.
    static std::shared_ptr<StructureAlgebra> nonqw(Field f);

    size_t dimension() const { return names_.size(); }

    std::string description() const override { return label_ + " over " + field().str(); }
    int basis_degree(BasisId id) const override { return degrees_.at(id); }
    std::string basis_name(BasisId id) const override { return names_.at(id); }
    bool basis_less(BasisId a, BasisId b) const override;
    std::vector<BasisId> window_basis(int d) const override;
    bool finite_dimensional() const override { return true; }
    int top_degree() const override;

    size_t constant_count() const override { return constants_.size(); }
    Element constant(size_t i) const override { return constants_.at(i); }
    std::string constant_name(size_t i) const override { return constant_names_.at(i); }

protected:
    Element compute_bracket_basis(BasisId a, BasisId b) const override;

private:
    std::string label_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<std::vector<Element>> table_;
    std::vector<Element> constants_;
    std::vector<std::string> constant_names_;
};

}  // namespace liegeo

#endif  // LIEGEO_STRUCTURE_HPP
