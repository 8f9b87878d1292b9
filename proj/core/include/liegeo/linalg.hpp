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
// Dense exact linear algebra over any Field.

#ifndef LIEGEO_LINALG_HPP
#define LIEGEO_LINALG_HPP

#include <optional>
#include <vector>

#include "liegeo/field.hpp"

namespace liegeo {

using Vec = std::vector<Scalar>;

class Matrix {
public:
    Matrix(Field f, size_t rows, size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void append_row(const Vec& row);
    Vec row(size_t r) const;

private:
    Field field_;
    size_t rows_;
    size_t cols_;
    std::vector<Scalar> a_;
};

struct Echelon {
    Matrix reduced;            // reduced row echelon form, zero rows removed
    std::vector<size_t> pivots;  // pivot column of each row
};

Echelon rref(Matrix m);
size_t rank(const Matrix& m);
// Basis of {v : m v = 0}, one vector per free column, in free-column order.
std::vector<Vec> nullspace(const Matrix& m);
// Some solution of m x = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Incrementally maintained row space in reduced echelon form.
class RowSpace {
public:
    RowSpace(Field f, size_t dim) : field_(std::move(f)), dim_(dim) {}

    // Reduces v against the basis; returns true when v enlarged the space.
    bool insert(Vec v);
    bool contains(const Vec& v) const;
    Vec reduce(Vec v) const;
    size_t size() const { return rows_.size(); }
    size_t dim() const { return dim_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    // Fully reduced canonical basis sorted by pivot column.
    std::vector<Vec> canonical_basis() const;
    const Field& field() const { return field_; }

private:
    Field field_;
    size_t dim_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace liegeo

#endif  // LIEGEO_LINALG_HPP
