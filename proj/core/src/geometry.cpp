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

#include "liegeo/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>

#include "liegeo/free_lie.hpp"
#include "liegeo/metabelian.hpp"
#include "liegeo/structure.hpp"

namespace liegeo {

uint64_t default_point_budget() {
    const char* env = std::getenv("LIEGEO_BUDGET");
    if (!env) return kDefaultPointBudget;
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec != std::errc() || *ptr != '\0' || v == 0) return kDefaultPointBudget;
    return v;
}

CarrierPtr build_carrier(const CarrierSpec& spec, const AlgebraSpec& algebra) {
    const Field& f = algebra.field;
    if (spec.kind == "free") return FreeLieAlgebra::make(f, spec.rank);
    if (spec.kind == "metabelian") {
        if (spec.module == 0) return MetabelianAlgebra::make(f, spec.rank);
        auto ring = metabelian_ring(f, spec.rank);
        return build_extension(f, spec.rank, ModulePresentation::free_module(ring, spec.module)).carrier();
    }
    if (spec.kind == "abelian") return StructureAlgebra::abelian(f, static_cast<size_t>(spec.rank));
    if (spec.kind == "heisenberg") return StructureAlgebra::heisenberg(f);
    if (spec.kind == "nonqw") return StructureAlgebra::nonqw(f);
    fail(ErrorCode::InvalidArgument, "unknown carrier kind '" + spec.kind + "'");
}

CarrierPtr default_carrier(const EquationSystem& sys) {
    if (sys.carrier) return build_carrier(*sys.carrier, sys.algebra);
    switch (sys.algebra.kind) {
        case CoefficientKind::Free:
            return FreeLieAlgebra::make(sys.field(), sys.algebra.rank);
        case CoefficientKind::Metabelian:
            return MetabelianAlgebra::make(sys.field(), sys.algebra.rank);
        case CoefficientKind::Zero:
            break;
    }
    fail(ErrorCode::InvalidArgument, "a system over the zero algebra needs a carrier statement");
}

// ---------------------------------------------------------------------------
// Ambient

Ambient::Ambient(AlgebraSpec algebra, std::vector<std::string> vars, CarrierPtr carrier, int trunc)
    : algebra_(std::move(algebra)), vars_(std::move(vars)), window_(std::move(carrier), trunc), size_(1) {
    const Carrier& b = window_.carrier();
    if (!b.field().contains_subfield(algebra_.field))
        fail(ErrorCode::CarrierMismatch, b.description() + " is not an algebra over " + algebra_.field.str());
    if (b.constant_count() < algebra_.constant_count())
        fail(ErrorCode::CarrierMismatch, b.description() + " has no copy of the coefficient algebra " + algebra_.str());
    const uint64_t limit = uint64_t{1} << 62;
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (window_.size() != 0 && size_ > limit / window_.size())
            fail(ErrorCode::CapacityExceeded, "affine space too large to index");
        size_ *= window_.size();
    }
    if (algebra_.constant_count() + vars_.size() > 0) ax_ = coordinate_algebra(algebra_, vars_);
}

std::shared_ptr<const Ambient> Ambient::make(const EquationSystem& sys, CarrierPtr carrier, int trunc) {
    return std::make_shared<const Ambient>(sys.algebra, sys.vars, std::move(carrier), trunc);
}

Point Ambient::point(uint64_t index) const {
    Point p;
    p.reserve(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        p.push_back(window_.element(index % window_.size()));
        index /= window_.size();
    }
    return p;
}

std::optional<uint64_t> Ambient::index_of(const Point& p) const {
    if (p.size() != vars_.size()) return std::nullopt;
    uint64_t idx = 0, mul = 1;
    for (const auto& e : p) {
        auto k = window_.index_of(e);
        if (!k) return std::nullopt;
        idx += *k * mul;
        mul *= window_.size();
    }
    return idx;
}

std::string Ambient::render_point(uint64_t index) const {
    Point p = point(index);
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + carrier().render(p[i]);
    return s + ")";
}

PointSet Ambient::all_points(uint64_t budget) const {
    if (size_ > budget)
        fail(ErrorCode::CapacityExceeded, "window has " + std::to_string(size_) + " points, budget is " + std::to_string(budget));
    PointSet out(size_);
    for (uint64_t i = 0; i < size_; ++i) out[i] = i;
    return out;
}

Element Ambient::lower(const TermPtr& t) const {
    if (!ax_) {
        // No generators at all: every term is 0.
        return Element{};
    }
    return lower_term(t, *ax_, algebra_.constant_count(), vars_.size(), algebra_.field);
}

std::vector<Element> Ambient::images(const Point& p) const {
    std::vector<Element> out;
    for (size_t i = 0; i < algebra_.constant_count(); ++i) out.push_back(carrier().constant(i));
    out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<Element> Ambient::evaluate(const std::vector<Element>& fs, const Point& p) const {
    std::vector<Element> out;
    if (!ax_) {
        out.resize(fs.size());
        return out;
    }
    Homomorphism h(*ax_, carrier(), images(p));
    for (const auto& f : fs) out.push_back(h.apply(f));
    return out;
}

bool Ambient::vanishes(const std::vector<Element>& fs, const Point& p) const {
    if (!ax_ || fs.empty()) return true;
    Homomorphism h(*ax_, carrier(), images(p));
    for (const auto& f : fs)
        if (!h.apply(f).is_zero()) return false;
    return true;
}

bool Ambient::same_space(const Ambient& o) const {
    return carrier_ptr() == o.carrier_ptr() && trunc() == o.trunc() && vars_ == o.vars_ &&
           algebra_.kind == o.algebra_.kind && algebra_.rank == o.algebra_.rank && algebra_.field == o.algebra_.field;
}

std::string regime_name(Regime r) { return r == Regime::Window ? "window" : "polytope"; }

bool AlgebraicSet::contains(uint64_t index) const { return std::binary_search(points.begin(), points.end(), index); }

// ---------------------------------------------------------------------------
// Solving

AlgebraicSet solve(const EquationSystem& sys, AmbientPtr ambient, uint64_t budget) {
    if (sys.vars.size() != ambient->arity()) fail(ErrorCode::InvalidArgument, "system and space have different arity");
    AlgebraicSet out;
    out.ambient = ambient;
    for (const auto& t : sys.equations) out.equations.push_back(ambient->lower(t));
    PointSet all = ambient->all_points(budget);
    Evaluator ev(ambient->carrier(), sys.field());
    for (uint64_t idx : all) {
        ev.set_point(ambient->point(idx));
        bool ok = true;
        for (const auto& t : sys.equations)
            if (!ev.eval(t).is_zero()) {
                ok = false;
                break;
            }
        if (ok) out.points.push_back(idx);
    }
    return out;
}

AlgebraicSet solve(AmbientPtr ambient, std::vector<Element> equations, uint64_t budget) {
    AlgebraicSet out;
    out.ambient = ambient;
    out.equations = std::move(equations);
    out.points = vanishing_points(*ambient, out.equations, ambient->all_points(budget));
    return out;
}

PointSet vanishing_points(const Ambient& ambient, const std::vector<Element>& fs, const PointSet& candidates) {
    PointSet out;
    for (uint64_t idx : candidates)
        if (ambient.vanishes(fs, ambient.point(idx))) out.push_back(idx);
    return out;
}

// ---------------------------------------------------------------------------
// Radicals

namespace {

std::vector<BasisId> radical_monomials(const Ambient& ambient, int bound) {
    if (!ambient.ax_ptr() || bound < 1) fail(ErrorCode::EmptyWindow, "no monomials of degree <= " + std::to_string(bound));
    auto m = ambient.ax().window_basis(bound);
    if (m.empty()) fail(ErrorCode::EmptyWindow, "no monomials of degree <= " + std::to_string(bound));
    return m;
}

// Rows of the evaluation matrix at one point: one row per basis element of
// B, one column per monomial.
std::vector<Vec> evaluation_rows(const Ambient& ambient, const std::vector<BasisId>& monomials, const Point& p) {
    const Field& f = ambient.carrier().field();
    Homomorphism h(ambient.ax(), ambient.carrier(), ambient.images(p));
    std::map<BasisId, Vec> rows;
    for (size_t c = 0; c < monomials.size(); ++c) {
        Element v = h.apply_basis(monomials[c]);
        for (const auto& [id, coef] : v.terms) {
            auto it = rows.find(id);
            if (it == rows.end()) it = rows.emplace(id, Vec(monomials.size(), f.zero())).first;
            it->second[c] = coef;
        }
    }
    std::vector<Vec> out;
    for (auto& [id, row] : rows) out.push_back(std::move(row));
    return out;
}

RowSpace row_space(const Field& f, size_t dim, const std::vector<Vec>& rows) {
    RowSpace rs(f, dim);
    for (const auto& r : rows) rs.insert(r);
    return rs;
}

}  // namespace

Radical radical(AmbientPtr ambient, const PointSet& points, int bound) {
    Radical r;
    r.ambient = ambient;
    r.bound = bound;
    r.monomials = radical_monomials(*ambient, bound);
    const Field& f = ambient->carrier().field();
    size_t n = r.monomials.size();
    RowSpace eval(f, n);
    for (uint64_t idx : points) {
        if (eval.size() == n) break;
        for (auto& row : evaluation_rows(*ambient, r.monomials, ambient->point(idx))) eval.insert(std::move(row));
    }
    Matrix m(f, 0, n);
    for (const auto& row : eval.rows()) m.append_row(row);
    RowSpace kernel(f, n);
    for (auto& v : nullspace(m)) kernel.insert(std::move(v));
    r.rows = kernel.canonical_basis();
    return r;
}

std::vector<Element> Radical::elements() const {
    const Field& f = ambient->carrier().field();
    std::vector<Element> out;
    for (const auto& row : rows) {
        ElementBuilder b(f);
        for (size_t c = 0; c < row.size(); ++c)
            if (!f.is_zero(row[c])) b.add(monomials[c], row[c]);
        out.push_back(b.finish());
    }
    return out;
}

Vec Radical::coordinates(const Element& e) const {
    const Field& f = ambient->carrier().field();
    Vec v(monomials.size(), f.zero());
    for (const auto& [id, c] : e.terms) {
        auto it = std::find(monomials.begin(), monomials.end(), id);
        if (it == monomials.end()) fail(ErrorCode::InvalidArgument, "element exceeds the radical's degree bound");
        v[static_cast<size_t>(it - monomials.begin())] = c;
    }
    return v;
}

bool Radical::contains(const Element& e) const {
    for (const auto& [id, c] : e.terms)
        if (std::find(monomials.begin(), monomials.end(), id) == monomials.end()) return false;
    RowSpace rs = row_space(ambient->carrier().field(), monomials.size(), rows);
    return rs.contains(coordinates(e));
}

bool Radical::includes(const Radical& o) const {
    if (monomials != o.monomials) fail(ErrorCode::InvalidArgument, "radicals over different monomial windows");
    RowSpace rs = row_space(ambient->carrier().field(), monomials.size(), rows);
    for (const auto& r : o.rows)
        if (!rs.contains(r)) return false;
    return true;
}

bool Radical::operator==(const Radical& o) const {
    if (monomials != o.monomials || rows.size() != o.rows.size()) return false;
    const Field& f = ambient->carrier().field();
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t c = 0; c < rows[i].size(); ++c)
            if (!f.eq(rows[i][c], o.rows[i][c])) return false;
    return true;
}

ClosureResult closure(AmbientPtr ambient, const PointSet& points, int bound, uint64_t budget) {
    Radical r = radical(ambient, points, bound);
    ClosureResult out;
    out.closure = vanishing_points(*ambient, r.elements(), ambient->all_points(budget));
    PointSet sorted = points;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out.algebraic = out.closure == sorted;
    return out;
}

// ---------------------------------------------------------------------------
// Zero divisors and unions

std::vector<Element> relative_ideal_span(const Carrier& alg, const Element& s, const std::vector<Element>& letters,
                                         int depth) {
    std::vector<Element> out;
    if (s.is_zero()) return out;
    out.push_back(s);
    std::vector<Element> level{s};
    for (int d = 0; d < depth; ++d) {
        std::vector<Element> next;
        for (const auto& e : level)
            for (const auto& l : letters) {
                Element p = alg.bracket(e, l);
                if (!p.is_zero()) next.push_back(std::move(p));
            }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

namespace {

std::vector<Element> ideal_letters(const Carrier& alg, size_t constants, const Element& s) {
    std::vector<Element> letters;
    for (size_t i = 0; i < constants; ++i) letters.push_back(alg.constant(i));
    letters.push_back(s);
    return letters;
}

bool products_vanish(const Carrier& alg, const std::vector<Element>& a, const std::vector<Element>& b) {
    for (const auto& u : a)
        for (const auto& v : b)
            if (!alg.bracket(u, v).is_zero()) return false;
    return true;
}

}  // namespace

std::optional<ZeroDivisorWitness> zero_divisor_probe(const Window& window, int depth) {
    const Carrier& alg = window.carrier();
    const uint64_t n = window.size();
    if (n > (uint64_t{1} << 13)) fail(ErrorCode::CapacityExceeded, "window too large for the zero-divisor probe");
    auto elems = window.elements();
    std::vector<std::vector<Element>> spans(elems.size());
    for (size_t i = 1; i < elems.size(); ++i)
        spans[i] = relative_ideal_span(alg, elems[i], ideal_letters(alg, alg.constant_count(), elems[i]), depth);
    for (size_t i = 1; i < elems.size(); ++i)
        for (size_t j = i; j < elems.size(); ++j)
            if (products_vanish(alg, spans[i], spans[j])) return ZeroDivisorWitness{elems[i], elems[j]};
    return std::nullopt;
}

std::vector<Element> union_system(const AlgebraicSet& z1, const AlgebraicSet& z2, int depth, bool override_domain) {
    if (!z1.ambient->same_space(*z2.ambient)) fail(ErrorCode::CarrierMismatch, "union of sets in different spaces");
    const Ambient& amb = *z1.ambient;
    if (!override_domain) {
        if (auto w = zero_divisor_probe(amb.window(), depth))
            fail(ErrorCode::NotADomain, "zero divisors " + amb.carrier().render(w->x) + " and " +
                                            amb.carrier().render(w->y) + " in " + amb.carrier().description());
    }
    std::vector<Element> out;
    if (!amb.ax_ptr()) return out;
    const Carrier& ax = amb.ax();
    size_t r = amb.algebra().constant_count();
    for (const auto& s1 : z1.equations) {
        auto i1 = relative_ideal_span(ax, s1, ideal_letters(ax, r, s1), depth);
        for (const auto& s2 : z2.equations) {
            auto i2 = relative_ideal_span(ax, s2, ideal_letters(ax, r, s2), depth);
            for (const auto& f1 : i1)
                for (const auto& f2 : i2) {
                    Element p = ax.bracket(f1, f2);
                    if (!p.is_zero()) out.push_back(std::move(p));
                }
        }
    }
    std::sort(out.begin(), out.end(), [&](const Element& a, const Element& b) { return ax.compare(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end(), [&](const Element& a, const Element& b) { return ax.equal(a, b); }),
              out.end());
    return out;
}

AlgebraicSet product(const AlgebraicSet& z1, const AlgebraicSet& z2) {
    const Ambient& a1 = *z1.ambient;
    const Ambient& a2 = *z2.ambient;
    if (a1.carrier_ptr() != a2.carrier_ptr() || a1.trunc() != a2.trunc() || a1.algebra().kind != a2.algebra().kind ||
        a1.algebra().rank != a2.algebra().rank)
        fail(ErrorCode::CarrierMismatch, "product of sets over different carriers");
    std::vector<std::string> vars = a1.vars();
    for (std::string v : a2.vars()) {
        while (std::find(vars.begin(), vars.end(), v) != vars.end()) v += "_2";
        vars.push_back(v);
    }
    auto amb = std::make_shared<const Ambient>(a1.algebra(), vars, a1.carrier_ptr(), a1.trunc());
    AlgebraicSet out;
    out.ambient = amb;
    out.regime = z1.regime == Regime::Polytope && z2.regime == Regime::Polytope ? Regime::Polytope : Regime::Window;
    size_t r = a1.algebra().constant_count();
    auto embed = [&](const Ambient& src, size_t offset, const std::vector<Element>& fs) {
        if (!src.ax_ptr()) return;
        std::vector<Element> images;
        for (size_t i = 0; i < r; ++i) images.push_back(amb->ax().basis_element(*amb->ax().generator(i)));
        for (size_t i = 0; i < src.arity(); ++i)
            images.push_back(amb->ax().basis_element(*amb->ax().generator(r + offset + i)));
        Homomorphism h(src.ax(), amb->ax(), images);
        for (const auto& f : fs) out.equations.push_back(h.apply(f));
    };
    embed(a1, 0, z1.equations);
    embed(a2, a1.arity(), z2.equations);
    for (uint64_t j : z2.points)
        for (uint64_t i : z1.points) out.points.push_back(i + a1.size() * j);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

// Zariski topology induced on a small enumerated set: Z ⊆ Y is closed iff
// Z = {q ∈ Y : Rad(Z) ⊆ Rad(q)} within the degree bound.
class RelativeTopology {
public:
    RelativeTopology(const AlgebraicSet& y, int bound) : field_(y.ambient->carrier().field()) {
        auto monomials = radical_monomials(*y.ambient, bound);
        dim_ = monomials.size();
        for (uint64_t idx : y.points) rows_.push_back(evaluation_rows(*y.ambient, monomials, y.ambient->point(idx)));
        closure_.resize(size_t{1} << rows_.size());
        for (uint32_t mask = 0; mask < closure_.size(); ++mask) closure_[mask] = compute_closure(mask);
    }

    size_t points() const { return rows_.size(); }
    uint32_t closure(uint32_t mask) const { return closure_[mask]; }
    bool closed(uint32_t mask) const { return closure_[mask] == mask; }

    bool irreducible(uint32_t mask) const {
        if (mask == 0 || !closed(mask)) return false;
        for (uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
            if (closed(sub) && closure_[mask & ~sub] != mask) return false;
        return true;
    }

private:
    uint32_t compute_closure(uint32_t mask) const {
        RowSpace rs(field_, dim_);
        for (size_t i = 0; i < rows_.size(); ++i)
            if (mask >> i & 1u)
                for (const auto& r : rows_[i]) rs.insert(r);
        uint32_t out = mask;
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (mask >> i & 1u) continue;
            bool inside = std::all_of(rows_[i].begin(), rows_[i].end(), [&](const Vec& r) { return rs.contains(r); });
            if (inside) out |= 1u << i;
        }
        return out;
    }

    Field field_;
    size_t dim_ = 0;
    std::vector<std::vector<Vec>> rows_;
    std::vector<uint32_t> closure_;
};

PointSet mask_points(const AlgebraicSet& y, uint32_t mask) {
    PointSet out;
    for (size_t i = 0; i < y.points.size(); ++i)
        if (mask >> i & 1u) out.push_back(y.points[i]);
    return out;
}

std::vector<uint32_t> irreducible_masks(const RelativeTopology& top) {
    std::vector<uint32_t> out;
    uint32_t full = static_cast<uint32_t>((size_t{1} << top.points()) - 1);
    for (uint32_t m = 1; m <= full && m != 0; ++m)
        if (top.irreducible(m)) out.push_back(m);
    return out;
}

}  // namespace

std::vector<PointSet> decompose(const AlgebraicSet& y, int bound, size_t max_points) {
    if (y.points.size() > max_points || y.points.size() > 20)
        fail(ErrorCode::CapacityExceeded, "decomposition limited to " + std::to_string(std::min<size_t>(max_points, 20)) +
                                              " points, set has " + std::to_string(y.points.size()));
    if (y.points.empty()) return {};
    RelativeTopology top(y, bound);
    auto irr = irreducible_masks(top);
    std::vector<PointSet> out;
    for (uint32_t m : irr) {
        bool maximal = std::none_of(irr.begin(), irr.end(), [&](uint32_t o) { return o != m && (o & m) == m; });
        if (maximal) out.push_back(mask_points(y, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int dimension(const AlgebraicSet& y, int bound, size_t max_points) {
    if (y.points.size() > max_points || y.points.size() > 20)
        fail(ErrorCode::Unsupported, "chain search limited to " + std::to_string(std::min<size_t>(max_points, 20)) +
                                         " points; use the module-rank path for coordinate algebras of the form F_r + M");
    if (y.points.empty()) return -1;
    RelativeTopology top(y, bound);
    auto irr = irreducible_masks(top);
    std::sort(irr.begin(), irr.end(), [](uint32_t a, uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    std::map<uint32_t, int> chain;
    int best = 0;
    for (uint32_t m : irr) {
        int len = 0;
        for (const auto& [o, l] : chain)
            if (o != m && (o & m) == o) len = std::max(len, l + 1);
        chain[m] = len;
        best = std::max(best, len);
    }
    return best;
}

int64_t dimension(const ExtensionHandle& coordinate_algebra) { return coordinate_algebra.module_rank(); }

// ---------------------------------------------------------------------------
// Functors and morphisms

CoPresentation functor_f(const AlgebraicSet& y, int bound) { return {y.ambient, radical(y, bound)}; }

AlgebraicSet functor_g(const CoPresentation& cp, uint64_t budget) { return solve(cp.ambient, cp.radical.elements(), budget); }

Point PolynomialMap::apply(uint64_t index) const {
    Evaluator ev(source->carrier(), source->field());
    ev.set_point(source->point(index));
    Point out;
    for (const auto& c : components) out.push_back(ev.eval(c));
    return out;
}

std::optional<uint64_t> PolynomialMap::apply_index(uint64_t index) const { return target->index_of(apply(index)); }

bool maps_into(const PolynomialMap& psi, const AlgebraicSet& y1, const AlgebraicSet& y2) {
    for (uint64_t idx : y1.points) {
        auto img = psi.apply_index(idx);
        if (!img || !y2.contains(*img)) return false;
    }
    return true;
}

std::vector<Element> transport(const PolynomialMap& psi, const std::vector<Element>& fs) {
    if (psi.components.size() != psi.target->arity()) fail(ErrorCode::InvalidArgument, "one component per target variable");
    if (!psi.target->ax_ptr() || !psi.source->ax_ptr()) return std::vector<Element>(fs.size());
    const Carrier& src = psi.source->ax();
    size_t r = psi.source->algebra().constant_count();
    std::vector<Element> images;
    for (size_t i = 0; i < r; ++i) images.push_back(src.basis_element(*src.generator(i)));
    for (const auto& c : psi.components) images.push_back(psi.source->lower(c));
    Homomorphism h(psi.target->ax(), src, images);
    std::vector<Element> out;
    for (const auto& f : fs) out.push_back(h.apply(f));
    return out;
}

std::vector<size_t> noetherian_probe(AmbientPtr ambient, const std::vector<Element>& equations, uint64_t budget) {
    PointSet current = ambient->all_points(budget);
    std::vector<size_t> chosen;
    for (size_t i = 0; i < equations.size(); ++i) {
        PointSet next = vanishing_points(*ambient, {equations[i]}, current);
        if (next.size() < current.size()) {
            chosen.push_back(i);
            current = std::move(next);
        }
    }
    return chosen;
}

}  // namespace liegeo
