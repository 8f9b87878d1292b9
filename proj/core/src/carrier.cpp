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

#include "liegeo/carrier.hpp"

#include <algorithm>
#include <mutex>

namespace liegeo {

void ElementBuilder::add(BasisId id, const Scalar& c) {
    if (field_.is_zero(c)) return;
    auto it = acc_.find(id);
    if (it == acc_.end()) {
        acc_.emplace(id, c);
    } else {
        it->second = field_.add(it->second, c);
    }
}

void ElementBuilder::add(const Element& e, const Scalar& c) {
    if (field_.is_zero(c)) return;
    bool unit = field_.is_one(c);
    for (const auto& [id, x] : e.terms) add(id, unit ? x : field_.mul(x, c));
}

void ElementBuilder::add(const Element& e) {
    for (const auto& [id, x] : e.terms) add(id, x);
}

Element ElementBuilder::finish() {
    Element out;
    out.terms.reserve(acc_.size());
    for (auto& [id, c] : acc_)
        if (!field_.is_zero(c)) out.terms.emplace_back(id, std::move(c));
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    acc_.clear();
    return out;
}

const Element& Carrier::bracket_basis(BasisId a, BasisId b) const {
    uint64_t key = (static_cast<uint64_t>(a) << 32) | b;
    {
        std::shared_lock lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Element value = compute_bracket_basis(a, b);
    std::unique_lock lock(memo_mutex_);
    return memo_.emplace(key, std::move(value)).first->second;
}

size_t Carrier::memo_size() const {
    std::shared_lock lock(memo_mutex_);
    return memo_.size();
}

Element Carrier::bracket(const Element& u, const Element& v, std::optional<int> max_degree) const {
    if (u.is_zero() || v.is_zero()) return {};
    const Field& f = field_;
    ElementBuilder acc(f);
    for (const auto& [i, a] : u.terms) {
        int di = basis_degree(i);
        for (const auto& [j, b] : v.terms) {
            if (i == j) continue;
            int dj = basis_degree(j);
            if (max_degree && di + dj > *max_degree) continue;
            const Element& prod = bracket_basis(i, j);
            if (prod.is_zero()) continue;
            if (degree_cap_ && !max_degree && di + dj > *degree_cap_)
                fail(ErrorCode::TruncationRequired, "product of degree " + std::to_string(di + dj) +
                                                         " exceeds the carrier cap " + std::to_string(*degree_cap_));
            acc.add(prod, f.mul(a, b));
        }
    }
    return acc.finish();
}

Element Carrier::basis_element(BasisId id) const {
    Element e;
    e.terms.emplace_back(id, field_.one());
    return e;
}

Element Carrier::axpy(const Element& y, const Scalar& c, const Element& x) const {
    const Field& f = field_;
    if (f.is_zero(c) || x.is_zero()) return y;
    Element out;
    out.terms.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    bool unit = f.is_one(c);
    while (i < y.terms.size() || j < x.terms.size()) {
        if (j == x.terms.size() || (i < y.terms.size() && y.terms[i].first < x.terms[j].first)) {
            out.terms.push_back(y.terms[i++]);
        } else if (i == y.terms.size() || x.terms[j].first < y.terms[i].first) {
            out.terms.emplace_back(x.terms[j].first, unit ? x.terms[j].second : f.mul(c, x.terms[j].second));
            ++j;
        } else {
            Scalar s = f.add(y.terms[i].second, unit ? x.terms[j].second : f.mul(c, x.terms[j].second));
            if (!f.is_zero(s)) out.terms.emplace_back(y.terms[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

Element Carrier::add(const Element& a, const Element& b) const { return axpy(a, field_.one(), b); }
Element Carrier::sub(const Element& a, const Element& b) const { return axpy(a, field_.neg(field_.one()), b); }
Element Carrier::neg(const Element& a) const { return scale(a, field_.neg(field_.one())); }

Element Carrier::scale(const Element& a, const Scalar& c) const {
    if (field_.is_zero(c)) return {};
    Element out;
    out.terms.reserve(a.size());
    for (const auto& [id, x] : a.terms) out.terms.emplace_back(id, field_.mul(x, c));
    return out;
}

bool Carrier::equal(const Element& a, const Element& b) const {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a.terms[i].first != b.terms[i].first || !field_.eq(a.terms[i].second, b.terms[i].second)) return false;
    return true;
}

int Carrier::compare(const Element& a, const Element& b) const {
    // Compare coefficient vectors in canonical basis order, highest first.
    auto sorted = [&](const Element& e) {
        std::vector<const std::pair<BasisId, Scalar>*> v;
        for (const auto& t : e.terms) v.push_back(&t);
        std::sort(v.begin(), v.end(), [&](auto x, auto y) { return basis_less(y->first, x->first); });
        return v;
    };
    auto sa = sorted(a), sb = sorted(b);
    size_t i = 0, j = 0;
    while (i < sa.size() || j < sb.size()) {
        if (i == sa.size()) return -1;
        if (j == sb.size()) return 1;
        if (sa[i]->first != sb[j]->first) return basis_less(sa[i]->first, sb[j]->first) ? -1 : 1;
        int c = field_.cmp(sa[i]->second, sb[j]->second);
        if (c) return c;
        ++i;
        ++j;
    }
    return 0;
}

size_t Carrier::hash(const Element& a) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& [id, c] : a.terms) h = (h ^ (id + 0x9e3779b9 + (h << 6) + (h >> 2))) * 31 + field_.hash(c);
    return h;
}

int Carrier::degree(const Element& a) const {
    int d = -1;
    for (const auto& t : a.terms) d = std::max(d, basis_degree(t.first));
    return d;
}

int Carrier::min_degree(const Element& a) const {
    int d = -1;
    for (const auto& t : a.terms) {
        int x = basis_degree(t.first);
        d = d < 0 ? x : std::min(d, x);
    }
    return d;
}

Scalar Carrier::coefficient(const Element& a, BasisId id) const {
    auto it = std::lower_bound(a.terms.begin(), a.terms.end(), id, [](const auto& t, BasisId x) { return t.first < x; });
    if (it != a.terms.end() && it->first == id) return it->second;
    return field_.zero();
}

std::string Carrier::render(const Element& a) const {
    if (a.is_zero()) return "0";
    std::vector<const std::pair<BasisId, Scalar>*> v;
    for (const auto& t : a.terms) v.push_back(&t);
    std::sort(v.begin(), v.end(), [&](auto x, auto y) { return basis_less(x->first, y->first); });
    std::string s;
    bool first = true;
    for (auto t : v) {
        std::string coef = field_.render(t->second);
        bool negative = !coef.empty() && coef[0] == '-';
        if (negative) coef = coef.substr(1);
        if (field_.kind() == Field::Kind::RationalFunctions && coef.find_first_of("+-/ ") != std::string::npos)
            coef = "(" + coef + ")";
        if (first) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        std::string name = basis_name(t->first);
        s += coef == "1" ? name : coef + "*" + name;
    }
    return s;
}

void check_same_algebra(const Carrier& a, const Carrier& b) {
    if (&a != &b) fail(ErrorCode::AlgebraMismatch, a.description() + " vs " + b.description());
}

LieElement LieElement::operator+(const LieElement& o) const {
    check_same_algebra(*alg_, *o.alg_);
    return {alg_, alg_->add(e_, o.e_)};
}

LieElement LieElement::operator-(const LieElement& o) const {
    check_same_algebra(*alg_, *o.alg_);
    return {alg_, alg_->sub(e_, o.e_)};
}

LieElement LieElement::operator*(const Scalar& c) const { return {alg_, alg_->scale(e_, c)}; }

bool LieElement::operator==(const LieElement& o) const {
    check_same_algebra(*alg_, *o.alg_);
    return alg_->equal(e_, o.e_);
}

LieElement bracket(const LieElement& u, const LieElement& v) {
    check_same_algebra(*u.alg_, *v.alg_);
    return {u.alg_, u.alg_->bracket(u.e_, v.e_)};
}

std::optional<Vec> subspace_membership(const Carrier& alg, const Element& v, const std::vector<Element>& basis) {
    const Field& f = alg.field();
    std::vector<BasisId> rows;
    auto collect = [&](const Element& e) {
        for (const auto& t : e.terms) rows.push_back(t.first);
    };
    collect(v);
    for (const auto& b : basis) collect(b);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    Matrix m(f, rows.size(), basis.size());
    Vec rhs(rows.size(), f.zero());
    auto row_of = [&](BasisId id) { return static_cast<size_t>(std::lower_bound(rows.begin(), rows.end(), id) - rows.begin()); };
    for (size_t j = 0; j < basis.size(); ++j)
        for (const auto& [id, c] : basis[j].terms) m.at(row_of(id), j) = c;
    for (const auto& [id, c] : v.terms) rhs[row_of(id)] = c;
    if (basis.empty()) {
        if (v.is_zero()) return Vec{};
        return std::nullopt;
    }
    return solve(m, rhs);
}

std::optional<Vec> subspace_membership(const LieElement& v, const std::vector<LieElement>& basis) {
    std::vector<Element> b;
    for (const auto& x : basis) {
        check_same_algebra(*v.algebra(), *x.algebra());
        b.push_back(x.element());
    }
    return subspace_membership(*v.algebra(), v.element(), b);
}

bool linearly_independent(const Carrier& alg, const std::vector<Element>& elems) {
    std::vector<BasisId> cols;
    for (const auto& e : elems)
        for (const auto& t : e.terms) cols.push_back(t.first);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    RowSpace rs(alg.field(), cols.size());
    for (const auto& e : elems) {
        Vec v(cols.size(), alg.field().zero());
        for (const auto& [id, c] : e.terms)
            v[static_cast<size_t>(std::lower_bound(cols.begin(), cols.end(), id) - cols.begin())] = c;
        if (!rs.insert(std::move(v))) return false;
    }
    return true;
}

Window::Window(CarrierPtr carrier, int degree) : carrier_(std::move(carrier)), degree_(degree) {
    const Field& f = carrier_->field();
    if (!f.is_finite())
        fail(ErrorCode::InfiniteCarrier, "window over " + f.str() + " is not enumerable");
    basis_ = carrier_->window_basis(degree);
    for (size_t i = 0; i < basis_.size(); ++i) position_[basis_[i]] = i;
    p_ = static_cast<uint64_t>(f.size());
    size_ = 1;
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (size_ > kMaxWindowSize / p_)
            fail(ErrorCode::CapacityExceeded, "window of dimension " + std::to_string(basis_.size()) + " over " +
                                                  f.str() + " is too large to enumerate");
        size_ *= p_;
    }
}

Element Window::element(uint64_t index) const {
    const Field& f = carrier_->field();
    Element e;
    for (size_t k = 0; k < basis_.size() && index > 0; ++k) {
        uint64_t digit = index % p_;
        index /= p_;
        if (digit) e.terms.emplace_back(basis_[k], f.element(static_cast<int64_t>(digit)));
    }
    std::sort(e.terms.begin(), e.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return e;
}

std::optional<uint64_t> Window::index_of(const Element& e) const {
    const Field& f = carrier_->field();
    uint64_t index = 0;
    std::vector<uint64_t> pw(basis_.size(), 1);
    for (size_t k = 1; k < basis_.size(); ++k) pw[k] = pw[k - 1] * p_;
    for (const auto& [id, c] : e.terms) {
        auto it = position_.find(id);
        if (it == position_.end()) return std::nullopt;
        index += static_cast<uint64_t>(f.index_of(c)) * pw[it->second];
    }
    return index;
}

std::vector<Element> Window::elements() const {
    if (size_ > (uint64_t{1} << 24)) fail(ErrorCode::CapacityExceeded, "window too large to materialize");
    std::vector<Element> out;
    out.reserve(size_);
    for (uint64_t i = 0; i < size_; ++i) out.push_back(element(i));
    return out;
}

}  // namespace liegeo
