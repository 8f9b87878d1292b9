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

#include "liegeo/structure.hpp"

#include <algorithm>

namespace liegeo {

StructureAlgebra::StructureAlgebra(Field f, std::string label, std::vector<std::string> names, std::vector<int> degrees,
                                   const std::vector<Product>& products, std::vector<Element> constants,
                                   std::vector<std::string> constant_names)
    : Carrier(std::move(f)),
      label_(std::move(label)),
      names_(std::move(names)),
      degrees_(std::move(degrees)),
      constants_(std::move(constants)),
      constant_names_(std::move(constant_names)) {
    size_t n = names_.size();
    if (degrees_.size() != n) fail(ErrorCode::InvalidArgument, "one degree per basis element");
    if (constants_.size() != constant_names_.size()) fail(ErrorCode::InvalidArgument, "one name per constant");
    table_.assign(n, std::vector<Element>(n));
    for (const auto& p : products) {
        if (p.left >= n || p.right >= n) fail(ErrorCode::InvalidArgument, "product index out of range");
        for (const auto& t : p.value.terms)
            if (t.first >= n) fail(ErrorCode::InvalidArgument, "product value outside the algebra");
        if (p.left == p.right) {
            if (!p.value.is_zero()) fail(ErrorCode::InvalidArgument, "[e, e] must vanish");
            continue;
        }
        table_[p.left][p.right] = p.value;
        table_[p.right][p.left] = neg(p.value);
    }
    // Jacobi on basis triples.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                auto e = [&](size_t x) { return basis_element(static_cast<BasisId>(x)); };
                Element s = bracket(e(i), bracket(e(j), e(k)));
                s = add(s, bracket(e(j), bracket(e(k), e(i))));
                s = add(s, bracket(e(k), bracket(e(i), e(j))));
                if (!s.is_zero()) fail(ErrorCode::InvalidArgument, "structure constants violate the Jacobi identity");
            }
}

Element StructureAlgebra::compute_bracket_basis(BasisId a, BasisId b) const { return table_.at(a).at(b); }

bool StructureAlgebra::basis_less(BasisId a, BasisId b) const {
    if (degrees_[a] != degrees_[b]) return degrees_[a] < degrees_[b];
    return a < b;
}

std::vector<BasisId> StructureAlgebra::window_basis(int d) const {
    std::vector<BasisId> out;
    for (BasisId i = 0; i < names_.size(); ++i)
        if (degrees_[i] <= d) out.push_back(i);
    std::sort(out.begin(), out.end(), [&](BasisId x, BasisId y) { return basis_less(x, y); });
    return out;
}

int StructureAlgebra::top_degree() const {
    int d = 0;
    for (int x : degrees_) d = std::max(d, x);
    return d;
}

std::shared_ptr<StructureAlgebra> StructureAlgebra::abelian(Field f, size_t dim) {
    std::vector<std::string> names;
    for (size_t i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
    return std::make_shared<StructureAlgebra>(std::move(f), "abelian(" + std::to_string(dim) + ")", names,
                                              std::vector<int>(dim, 1), std::vector<Product>{}, std::vector<Element>{},
                                              std::vector<std::string>{});
}

std::shared_ptr<StructureAlgebra> StructureAlgebra::heisenberg(Field f) {
    Scalar one = f.one();
    Element x{{{0, one}}}, y{{{1, one}}}, z{{{2, one}}};
    return std::make_shared<StructureAlgebra>(std::move(f), "heisenberg", std::vector<std::string>{"x", "y", "z"},
                                              std::vector<int>{1, 1, 2}, std::vector<Product>{{0, 1, z}},
                                              std::vector<Element>{x, y}, std::vector<std::string>{"x", "y"});
}

std::shared_ptr<StructureAlgebra> StructureAlgebra::nonqw(Field f) {
    Scalar one = f.one();
    auto e = [&](BasisId i) { return Element{{{i, one}}}; };
    std::vector<Product> products{{0, 1, e(4)}, {2, 3, e(5)}};
    return std::make_shared<StructureAlgebra>(
        std::move(f), "nonqw", std::vector<std::string>{"a1", "b1", "a2", "b2", "c1", "c2"},
        std::vector<int>{1, 1, 1, 1, 2, 2}, products, std::vector<Element>{e(0), e(1), e(2), e(3)},
        std::vector<std::string>{"a1", "b1", "a2", "b2"});
}

}  // namespace liegeo
