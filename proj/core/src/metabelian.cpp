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

#include "liegeo/metabelian.hpp"

#include <algorithm>
#include <mutex>

namespace liegeo {

namespace {

Monomial with_var(Monomial m, int k) {
    m[static_cast<size_t>(k)] += 1;
    return m;
}

// Monomials of exact total degree t in variables lo..n-1.
std::vector<Monomial> monomials_from(size_t n, size_t lo, int t) {
    std::vector<Monomial> out;
    for (const Monomial& tail : monomials_up_to(n - lo, t)) {
        if (static_cast<int>(total_degree(tail)) != t) continue;
        Monomial m(n, 0);
        std::copy(tail.begin(), tail.end(), m.begin() + static_cast<long>(lo));
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

RingPtr metabelian_ring(const Field& field, int r) {
    std::vector<std::string> vars;
    for (int i = 1; i <= r; ++i) vars.push_back("x" + std::to_string(i));
    return make_ring(std::move(vars), field);
}

MetabelianAlgebra::MetabelianAlgebra(Field f, std::vector<std::string> names, size_t constants, size_t module_rank)
    : Carrier(std::move(f)), names_(std::move(names)), constants_(constants), module_rank_(module_rank) {
    if (names_.empty()) fail(ErrorCode::InvalidArgument, "metabelian rank must be positive");
    if (constants_ > names_.size()) fail(ErrorCode::InvalidArgument, "more constants than generators");
    ring_ = metabelian_ring(field(), rank());
    Monomial one(names_.size(), 0);
    for (int i = 0; i < rank(); ++i) intern(Kind::Linear, i, -1, one);
}

std::shared_ptr<MetabelianAlgebra> MetabelianAlgebra::make(Field f, int rank, size_t module_rank) {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back("a" + std::to_string(i));
    return std::make_shared<MetabelianAlgebra>(std::move(f), std::move(names), static_cast<size_t>(rank), module_rank);
}

std::shared_ptr<MetabelianAlgebra> MetabelianAlgebra::make(Field f, std::vector<std::string> names, size_t constants,
                                                           size_t module_rank) {
    return std::make_shared<MetabelianAlgebra>(std::move(f), std::move(names), constants, module_rank);
}

std::string MetabelianAlgebra::description() const {
    std::string s = "metabelian(" + std::to_string(rank()) + ")";
    if (module_rank_) s += " + R^" + std::to_string(module_rank_);
    return s + " over " + field().str();
}

BasisId MetabelianAlgebra::intern(Kind k, int first, int second, const Monomial& m) const {
    auto key = std::make_tuple(static_cast<int>(k), first, second, m);
    {
        std::shared_lock lock(mutex_);
        auto it = ids_.find(key);
        if (it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    BasisId id = static_cast<BasisId>(entries_.size());
    int degree = k == Kind::Linear ? 1 : 2 + static_cast<int>(total_degree(m));
    entries_.push_back({k, first, second, m, degree});
    ids_.emplace(key, id);
    return id;
}

const MetabelianAlgebra::Entry& MetabelianAlgebra::entry(BasisId id) const {
    std::shared_lock lock(mutex_);
    if (id >= entries_.size()) fail(ErrorCode::InvalidArgument, "unknown basis element");
    return entries_[id];
}

BasisId MetabelianAlgebra::fitting_id(int j, int i, const Monomial& m) const {
    if (!(j > i && i >= 0 && j < rank()) || m.size() != names_.size())
        fail(ErrorCode::InvalidArgument, "not a Fitting basis element");
    for (int k = 0; k < i; ++k)
        if (m[static_cast<size_t>(k)]) fail(ErrorCode::InvalidArgument, "Fitting monomial not in normal form");
    return intern(Kind::Fitting, j, i, m);
}

BasisId MetabelianAlgebra::module_id(int g, const Monomial& m) const {
    if (g < 0 || static_cast<size_t>(g) >= module_rank_ || m.size() != names_.size())
        fail(ErrorCode::InvalidArgument, "not a module basis element");
    return intern(Kind::Module, g, -1, m);
}

MetabelianAlgebra::Kind MetabelianAlgebra::kind(BasisId id) const { return entry(id).kind; }

int MetabelianAlgebra::basis_degree(BasisId id) const { return entry(id).degree; }

std::string MetabelianAlgebra::basis_name(BasisId id) const {
    const Entry& e = entry(id);
    std::string s;
    switch (e.kind) {
        case Kind::Linear:
            return names_[static_cast<size_t>(e.first)];
        case Kind::Fitting:
            s = "[" + names_[static_cast<size_t>(e.first)] + "," + names_[static_cast<size_t>(e.second)] + "]";
            break;
        case Kind::Module:
            s = "u" + std::to_string(e.first + 1);
            break;
    }
    for (size_t k = 0; k < e.m.size(); ++k)
        for (uint32_t t = 0; t < e.m[k]; ++t) s = "[" + s + "," + names_[k] + "]";
    return s;
}

bool MetabelianAlgebra::basis_less(BasisId a, BasisId b) const {
    if (a == b) return false;
    const Entry& x = entry(a);
    const Entry& y = entry(b);
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.first != y.first) return x.first < y.first;
    if (x.second != y.second) return x.second < y.second;
    return x.m > y.m;  // x1 before x2
}

std::vector<BasisId> MetabelianAlgebra::window_basis(int d) const {
    std::vector<BasisId> out;
    if (d < 1) return out;
    size_t n = names_.size();
    for (int i = 0; i < rank(); ++i) out.push_back(static_cast<BasisId>(i));
    for (int t = 2; t <= d; ++t) {
        for (int i = 0; i < rank(); ++i) {
            auto monos = monomials_from(n, static_cast<size_t>(i), t - 2);
            for (int j = i + 1; j < rank(); ++j)
                for (const auto& m : monos) out.push_back(intern(Kind::Fitting, j, i, m));
        }
        for (size_t g = 0; g < module_rank_; ++g)
            for (const auto& m : monomials_from(n, 0, t - 2)) out.push_back(intern(Kind::Module, static_cast<int>(g), -1, m));
    }
    std::sort(out.begin(), out.end(), [&](BasisId a, BasisId b) { return basis_less(a, b); });
    return out;
}

std::optional<BasisId> MetabelianAlgebra::generator(size_t i) const {
    if (i >= names_.size()) return std::nullopt;
    return static_cast<BasisId>(i);
}

std::optional<size_t> MetabelianAlgebra::generator_index(BasisId id) const {
    if (id < names_.size()) return static_cast<size_t>(id);
    return std::nullopt;
}

std::optional<std::pair<BasisId, BasisId>> MetabelianAlgebra::factors(BasisId id) const {
    const Entry& e = entry(id);
    if (e.kind != Kind::Fitting) return std::nullopt;
    int last = -1;
    for (size_t k = 0; k < e.m.size(); ++k)
        if (e.m[k]) last = static_cast<int>(k);
    if (last < 0) return std::make_pair(static_cast<BasisId>(e.first), static_cast<BasisId>(e.second));
    Monomial m = e.m;
    m[static_cast<size_t>(last)] -= 1;
    return std::make_pair(intern(Kind::Fitting, e.first, e.second, m), static_cast<BasisId>(last));
}

Element MetabelianAlgebra::normalize(int j, int i, const Monomial& m) const {
    int k = -1;
    for (int t = 0; t < i; ++t)
        if (m[static_cast<size_t>(t)]) {
            k = t;
            break;
        }
    if (k < 0) return basis_element(intern(Kind::Fitting, j, i, m));
    // [a_j,a_i] x_k = [a_j,a_k] x_i - [a_i,a_k] x_j  (Jacobi), both in normal form.
    Monomial rest = m;
    rest[static_cast<size_t>(k)] -= 1;
    ElementBuilder b(field());
    b.add(intern(Kind::Fitting, j, k, with_var(rest, i)), field().one());
    b.add(intern(Kind::Fitting, i, k, with_var(rest, j)), field().neg(field().one()));
    return b.finish();
}

Element MetabelianAlgebra::compute_bracket_basis(BasisId a, BasisId b) const {
    const Entry x = entry(a);
    const Entry y = entry(b);
    if (x.kind == Kind::Linear && y.kind == Kind::Linear) {
        if (x.first == y.first) return {};
        Monomial one(names_.size(), 0);
        if (x.first > y.first) return basis_element(intern(Kind::Fitting, x.first, y.first, one));
        return neg(basis_element(intern(Kind::Fitting, y.first, x.first, one)));
    }
    if (y.kind == Kind::Linear) {
        if (x.kind == Kind::Fitting) return normalize(x.first, x.second, with_var(x.m, y.first));
        return basis_element(intern(Kind::Module, x.first, -1, with_var(x.m, y.first)));
    }
    if (x.kind == Kind::Linear) return neg(bracket_basis(b, a));
    return {};
}

std::vector<Scalar> MetabelianAlgebra::linear_part(const Element& u) const {
    std::vector<Scalar> out(names_.size(), field().zero());
    for (const auto& [id, c] : u.terms)
        if (id < names_.size()) out[id] = c;
    return out;
}

bool MetabelianAlgebra::in_fitting_by_linear_part(const Element& u) const {
    return std::none_of(u.terms.begin(), u.terms.end(), [&](const auto& t) { return t.first < names_.size(); });
}

MetabelianAlgebra::View MetabelianAlgebra::view(const Element& u) const {
    View v;
    v.linear = linear_part(u);
    v.module.assign(module_rank_, Poly(ring_));
    std::map<std::pair<int, int>, std::vector<Poly::Term>> fit;
    std::vector<std::vector<Poly::Term>> mod(module_rank_);
    for (const auto& [id, c] : u.terms) {
        const Entry& e = entry(id);
        if (e.kind == Kind::Fitting) fit[{e.first, e.second}].emplace_back(e.m, c);
        if (e.kind == Kind::Module) mod[static_cast<size_t>(e.first)].emplace_back(e.m, c);
    }
    for (auto& [key, terms] : fit) v.fitting.emplace(key, Poly::from_terms(ring_, std::move(terms)));
    for (size_t g = 0; g < module_rank_; ++g) v.module[g] = Poly::from_terms(ring_, std::move(mod[g]));
    return v;
}

Element MetabelianAlgebra::from_view(const View& v) const {
    ElementBuilder b(field());
    for (size_t i = 0; i < v.linear.size() && i < names_.size(); ++i) b.add(static_cast<BasisId>(i), v.linear[i]);
    for (const auto& [key, p] : v.fitting) {
        auto [j, i] = key;
        if (j == i) continue;
        bool flip = j < i;
        if (flip) std::swap(j, i);
        for (const auto& [m, c] : p.terms()) b.add(normalize(j, i, m), flip ? field().neg(c) : c);
    }
    for (size_t g = 0; g < v.module.size(); ++g)
        for (const auto& [m, c] : v.module[g].terms()) b.add(module_id(static_cast<int>(g), m), c);
    return b.finish();
}

Element MetabelianAlgebra::act(const Element& u, const Poly& p) const {
    ElementBuilder b(field());
    for (const auto& [id, c] : u.terms) {
        const Entry& e = entry(id);
        if (e.kind == Kind::Linear) fail(ErrorCode::InvalidArgument, "module action on an element outside Fit");
        for (const auto& [m, d] : p.terms()) {
            Monomial mm = e.m;
            for (size_t k = 0; k < mm.size(); ++k) mm[k] += m[k];
            Scalar s = field().mul(c, d);
            if (e.kind == Kind::Fitting)
                b.add(normalize(e.first, e.second, mm), s);
            else
                b.add(intern(Kind::Module, e.first, -1, mm), s);
        }
    }
    return b.finish();
}

bool is_in_fitting(const MetabelianAlgebra& alg, const Element& u) {
    bool fit_prime = true;
    for (int i = 0; i < alg.rank() && fit_prime; ++i) {
        Element a = alg.generator_element(static_cast<size_t>(i));
        fit_prime = alg.bracket(alg.bracket(u, a), u).is_zero();
    }
    if (alg.rank() == 1) return fit_prime;
    bool by_linear = alg.in_fitting_by_linear_part(u);
    if (by_linear != fit_prime)
        fail(ErrorCode::InvariantViolation, "Fitting membership disagrees with x a_i x = 0 for " + alg.render(u));
    return by_linear;
}

bool phi_independent(const MetabelianAlgebra& alg, const std::vector<Element>& elems) {
    const Field& f = alg.field();
    if (!f.is_finite()) fail(ErrorCode::InfiniteFieldUnsupported, "independence formula needs a finite field");
    size_t n = elems.size();
    uint64_t p = static_cast<uint64_t>(f.size());
    uint64_t total = 1;
    for (size_t i = 0; i < n; ++i) {
        if (total > (uint64_t{1} << 24) / p) fail(ErrorCode::CapacityExceeded, "too many coefficient tuples");
        total *= p;
    }
    // Formula path: no nonzero combination lies in Fit.
    bool formula = true;
    for (uint64_t idx = 1; idx < total && formula; ++idx) {
        Element comb;
        uint64_t x = idx;
        for (size_t i = 0; i < n; ++i, x /= p)
            if (x % p) comb = alg.axpy(comb, f.element(static_cast<int64_t>(x % p)), elems[i]);
        formula = !is_in_fitting(alg, comb);
    }
    // Rank path.
    bool by_rank;
    if (alg.rank() == 1) {
        by_rank = n == 0;
    } else {
        Matrix m(f, 0, static_cast<size_t>(alg.rank()));
        for (const auto& e : elems) m.append_row(alg.linear_part(e));
        by_rank = rank(m) == n;
    }
    if (formula != by_rank) fail(ErrorCode::InvariantViolation, "independence formula disagrees with linear-part rank");
    return by_rank;
}

const MetabelianPtr& ExtensionHandle::carrier() const {
    if (!carrier_)
        fail(ErrorCode::Unsupported, "enumerable carriers exist only for free extension modules: " + module_.str());
    return carrier_;
}

std::string ExtensionHandle::description() const {
    return "metabelian(" + std::to_string(rank_) + ") + " + module_.str() + " (rank " + std::to_string(module_rank_) + ")";
}

ExtensionHandle build_extension(const Field& field, int r, const ModulePresentation& m, int torsion_degree) {
    if (r < 1) fail(ErrorCode::InvalidArgument, "metabelian rank must be positive");
    RingPtr ring = metabelian_ring(field, r);
    if (!same_ring(ring, m.ring))
        fail(ErrorCode::RingMismatch, "module over " + m.ring->str() + ", expected " + ring->str());
    m.relations.check_ring();
    if (auto w = find_torsion(m, torsion_degree)) {
        std::string elem;
        for (size_t i = 0; i < w->element.size(); ++i) elem += (i ? ", " : "") + w->element[i].str();
        fail(ErrorCode::TorsionDetected, "(" + elem + ") is annihilated by " + w->annihilator.str());
    }
    bool free = true;
    for (size_t i = 0; i < m.generators && free; ++i)
        for (size_t j = 0; j < m.relation_count() && free; ++j) free = m.relations.at(i, j).is_zero();
    MetabelianPtr carrier;
    if (free) carrier = MetabelianAlgebra::make(field, r, m.generators);
    return ExtensionHandle(r, m, module_rank(m), std::move(carrier));
}

}  // namespace liegeo
