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
// Polynomial matrices and finitely presented modules over k[x_1..x_r].

#ifndef LIEGEO_MODULE_HPP
#define LIEGEO_MODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "liegeo/poly.hpp"

namespace liegeo {

class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, size_t rows, size_t cols);

    const RingPtr& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Poly& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Poly& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    // Throws RingMismatch if an entry lives in another ring.
    void check_ring() const;
    std::string str() const;

private:
    RingPtr ring_;
    size_t rows_;
    size_t cols_;
    std::vector<Poly> a_;
};

// Rank over the fraction field, by fraction-free (Bareiss) elimination.
size_t fraction_field_rank(const PolyMatrix& m);

// Module R^g / N, N spanned by the relation columns (g rows).
struct ModulePresentation {
    RingPtr ring;
    size_t generators = 0;
    PolyMatrix relations;

    ModulePresentation(RingPtr r, size_t g);
    ModulePresentation(RingPtr r, size_t g, PolyMatrix rel);
    static ModulePresentation free_module(RingPtr r, size_t g) { return ModulePresentation(std::move(r), g); }
    void add_relation(const std::vector<Poly>& column);
    size_t relation_count() const { return relations.cols(); }
    std::string str() const;
};

int64_t module_rank(const ModulePresentation& pres);

struct TorsionWitness {
    std::vector<Poly> element;  // coordinates in the generators
    Poly annihilator;
};

// Looks for m outside N and nonzero f with deg f <= bound and f*m in N.
// Candidates m are the generators and sums of two generators.
std::optional<TorsionWitness> find_torsion(const ModulePresentation& pres, int degree_bound);

// All monomials of total degree <= d in n variables, grlex ascending.
std::vector<Monomial> monomials_up_to(size_t n, int d);

}  // namespace liegeo

#endif  // LIEGEO_MODULE_HPP
