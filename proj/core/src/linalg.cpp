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

#include "liegeo/linalg.hpp"

#include <algorithm>

namespace liegeo {

void Matrix::append_row(const Vec& row) {
    if (row.size() != cols_) fail(ErrorCode::InvalidArgument, "row length differs from column count");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

Vec Matrix::row(size_t r) const { return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }

Echelon rref(Matrix m) {
    const Field& f = m.field();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && f.is_zero(m.at(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar inv = f.inv(m.at(r, c));
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            Scalar factor = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) {
                if (f.is_zero(m.at(r, j))) continue;
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(f, 0, m.cols());
    for (size_t i = 0; i < r; ++i) out.append_row(m.row(i));
    return {std::move(out), std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
    const Field& f = m.field();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), f.zero());
        v[free] = f.one();
        for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    const Field& f = m.field();
    if (b.size() != m.rows()) fail(ErrorCode::InvalidArgument, "right-hand side length differs from row count");
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));
    Vec x(m.cols(), f.zero());
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced.at(i, m.cols());
    }
    return x;
}

Vec RowSpace::reduce(Vec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        size_t p = pivots_[i];
        if (field_.is_zero(v[p])) continue;
        Scalar factor = v[p];
        const Vec& r = rows_[i];
        for (size_t j = p; j < dim_; ++j)
            if (!field_.is_zero(r[j])) v[j] = field_.sub(v[j], field_.mul(factor, r[j]));
    }
    return v;
}

bool RowSpace::insert(Vec v) {
    if (v.size() != dim_) fail(ErrorCode::InvalidArgument, "vector length differs from space dimension");
    v = reduce(std::move(v));
    size_t p = 0;
    while (p < dim_ && field_.is_zero(v[p])) ++p;
    if (p == dim_) return false;
    Scalar inv = field_.inv(v[p]);
    for (size_t j = p; j < dim_; ++j) v[j] = field_.mul(v[j], inv);
    // Keep earlier rows reduced at the new pivot so reduce() stays one pass.
    for (auto& r : rows_) {
        if (field_.is_zero(r[p])) continue;
        Scalar factor = r[p];
        for (size_t j = p; j < dim_; ++j)
            if (!field_.is_zero(v[j])) r[j] = field_.sub(r[j], field_.mul(factor, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpace::contains(const Vec& v) const {
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [&](const Scalar& s) { return field_.is_zero(s); });
}

std::vector<Vec> RowSpace::canonical_basis() const {
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vec> out;
    for (auto i : order) out.push_back(rows_[i]);
    return out;
}

}  // namespace liegeo
