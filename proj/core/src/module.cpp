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

#include "liegeo/module.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "liegeo/linalg.hpp"

namespace liegeo {

PolyMatrix::PolyMatrix(RingPtr ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, Poly(ring_)) {}

void PolyMatrix::check_ring() const {
    for (const auto& p : a_)
        if (!same_ring(p.ring(), ring_))
            fail(ErrorCode::RingMismatch, "matrix entry over " + (p.ring() ? p.ring()->str() : std::string("?")) +
                                              ", declared ring " + ring_->str());
}

std::string PolyMatrix::str() const {
    std::string s;
    for (size_t i = 0; i < rows_; ++i) {
        s += "[";
        for (size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
        s += "]\n";
    }
    return s;
}

size_t fraction_field_rank(const PolyMatrix& input) {
    input.check_ring();
    PolyMatrix m = input;
    const RingPtr& ring = m.ring();
    Poly prev = Poly::constant(ring, ring->coeffs.one());
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // Prefer the sparsest nonzero pivot in this column.
        size_t piv = m.rows();
        for (size_t i = r; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            if (piv == m.rows() || m.at(i, c).terms().size() < m.at(piv, c).terms().size()) piv = i;
        }
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Poly pivot = m.at(r, c);
        for (size_t i = r + 1; i < m.rows(); ++i) {
            const Poly lead = m.at(i, c);
            for (size_t j = c + 1; j < m.cols(); ++j) {
                Poly v = pivot * m.at(i, j) - lead * m.at(r, j);
                m.at(i, j) = prev.is_constant() ? v.scale(ring->coeffs.inv(prev.leading_coeff())) : v.exact_div(prev);
            }
            m.at(i, c) = Poly(ring);
        }
        // Rows above the pivot row are untouched; their later columns stay as is.
        prev = pivot;
        ++r;
    }
    return r;
}

ModulePresentation::ModulePresentation(RingPtr r, size_t g)
    : ring(r), generators(g), relations(r, g, 0) {}

ModulePresentation::ModulePresentation(RingPtr r, size_t g, PolyMatrix rel)
    : ring(std::move(r)), generators(g), relations(std::move(rel)) {
    if (relations.rows() != generators)
        fail(ErrorCode::InvalidArgument, "relation matrix must have one row per generator");
    if (!same_ring(relations.ring(), ring)) fail(ErrorCode::RingMismatch, "relation matrix over another ring");
}

void ModulePresentation::add_relation(const std::vector<Poly>& column) {
    if (column.size() != generators) fail(ErrorCode::InvalidArgument, "relation length differs from generator count");
    PolyMatrix next(ring, generators, relations.cols() + 1);
    for (size_t i = 0; i < generators; ++i) {
        for (size_t j = 0; j < relations.cols(); ++j) next.at(i, j) = relations.at(i, j);
        next.at(i, relations.cols()) = column[i];
    }
    relations = std::move(next);
}

std::string ModulePresentation::str() const {
    std::string s = "R^" + std::to_string(generators) + " over " + ring->str();
    for (size_t j = 0; j < relations.cols(); ++j) {
        s += "; rel (";
        for (size_t i = 0; i < generators; ++i) s += (i ? ", " : "") + relations.at(i, j).str();
        s += ")";
    }
    return s;
}

int64_t module_rank(const ModulePresentation& pres) {
    if (!same_ring(pres.relations.ring(), pres.ring)) fail(ErrorCode::RingMismatch, "relation matrix over another ring");
    pres.relations.check_ring();
    return static_cast<int64_t>(pres.generators) - static_cast<int64_t>(fraction_field_rank(pres.relations));
}

std::vector<Monomial> monomials_up_to(size_t n, int d) {
    std::vector<Monomial> out;
    Monomial m(n, 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == n) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[i] = static_cast<uint32_t>(e);
            rec(i + 1, left - e);
        }
        m[i] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) < 0; });
    return out;
}

namespace {

// Unknowns: coefficients of f (optional) then of each h_j, monomials of degree <= d.
// Equations: f*m - sum h_j rel_j = 0, coefficientwise in every component.
struct BoundedSystem {
    Matrix mat;
    std::vector<Monomial> monos;
    size_t f_unknowns;
};

BoundedSystem build_system(const ModulePresentation& pres, const std::vector<Poly>& m, int d, bool with_f) {
    const Field& k = pres.ring->coeffs;
    auto monos = monomials_up_to(pres.ring->arity(), d);
    size_t nf = with_f ? monos.size() : 0;
    size_t unknowns = nf + monos.size() * pres.relation_count();
    // Collect equation rows keyed by (component, monomial).
    std::map<std::pair<size_t, Monomial>, Vec> rows;
    auto add = [&](size_t comp, const Poly& p, size_t col, bool negate) {
        for (const auto& [mono, c] : p.terms()) {
            auto key = std::make_pair(comp, mono);
            auto it = rows.find(key);
            if (it == rows.end()) it = rows.emplace(key, Vec(unknowns, k.zero())).first;
            it->second[col] = k.add(it->second[col], negate ? k.neg(c) : c);
        }
    };
    for (size_t u = 0; u < monos.size(); ++u) {
        for (size_t comp = 0; comp < pres.generators; ++comp) {
            if (with_f) add(comp, m[comp].mul_monomial(monos[u], k.one()), u, false);
            for (size_t j = 0; j < pres.relation_count(); ++j)
                add(comp, pres.relations.at(comp, j).mul_monomial(monos[u], k.one()), nf + j * monos.size() + u, true);
        }
    }
    Matrix mat(k, 0, unknowns);
    for (auto& [key, row] : rows) mat.append_row(row);
    return {std::move(mat), std::move(monos), nf};
}

bool in_submodule(const ModulePresentation& pres, const std::vector<Poly>& m, int d) {
    bool zero = std::all_of(m.begin(), m.end(), [](const Poly& p) { return p.is_zero(); });
    if (zero) return true;
    if (pres.relation_count() == 0) return false;
    // Solve m = sum h_j rel_j with deg h_j <= d.
    const Field& k = pres.ring->coeffs;
    auto monos = monomials_up_to(pres.ring->arity(), d);
    size_t unknowns = monos.size() * pres.relation_count();
    std::map<std::pair<size_t, Monomial>, std::pair<Vec, Scalar>> rows;
    auto row_for = [&](size_t comp, const Monomial& mono) -> std::pair<Vec, Scalar>& {
        auto key = std::make_pair(comp, mono);
        auto it = rows.find(key);
        if (it == rows.end()) it = rows.emplace(key, std::make_pair(Vec(unknowns, k.zero()), k.zero())).first;
        return it->second;
    };
    for (size_t comp = 0; comp < pres.generators; ++comp) {
        for (size_t j = 0; j < pres.relation_count(); ++j)
            for (size_t u = 0; u < monos.size(); ++u) {
                const Poly prod = pres.relations.at(comp, j).mul_monomial(monos[u], k.one());
                for (const auto& [mono, c] : prod.terms()) {
                    auto& row = row_for(comp, mono).first;
                    row[j * monos.size() + u] = k.add(row[j * monos.size() + u], c);
                }
            }
        for (const auto& [mono, c] : m[comp].terms()) row_for(comp, mono).second = c;
    }
    Matrix a(k, 0, unknowns);
    Vec b;
    for (auto& [key, rb] : rows) {
        a.append_row(rb.first);
        b.push_back(rb.second);
    }
    return solve(a, b).has_value();
}

}  // namespace

std::optional<TorsionWitness> find_torsion(const ModulePresentation& pres, int degree_bound) {
    const Field& k = pres.ring->coeffs;
    if (pres.relation_count() == 0) return std::nullopt;
    std::vector<std::vector<Poly>> candidates;
    auto unit = [&](size_t i) {
        std::vector<Poly> v(pres.generators, Poly(pres.ring));
        v[i] = Poly::constant(pres.ring, k.one());
        return v;
    };
    for (size_t i = 0; i < pres.generators; ++i) candidates.push_back(unit(i));
    for (size_t i = 0; i < pres.generators; ++i)
        for (size_t j = i + 1; j < pres.generators; ++j) {
            auto v = unit(i);
            v[j] = Poly::constant(pres.ring, k.one());
            candidates.push_back(v);
        }
    for (const auto& m : candidates) {
        if (in_submodule(pres, m, degree_bound)) continue;
        auto sys = build_system(pres, m, degree_bound, true);
        for (const auto& v : nullspace(sys.mat)) {
            std::vector<Poly::Term> fterms;
            for (size_t u = 0; u < sys.f_unknowns; ++u)
                if (!k.is_zero(v[u])) fterms.emplace_back(sys.monos[u], v[u]);
            if (fterms.empty()) continue;
            return TorsionWitness{m, Poly::from_terms(pres.ring, std::move(fterms))};
        }
    }
    return std::nullopt;
}

}  // namespace liegeo
