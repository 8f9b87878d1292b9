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
#include "liegeo/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "liegeo/error.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/ratfunc.hpp"

namespace liegeo {

namespace {

TermPtr basis_term(const Carrier& f, BasisId id) {
    if (auto g = f.generator_index(id)) return Term::constant(*g);
    auto fac = f.factors(id);
    if (!fac) fail(ErrorCode::InvariantViolation, "basis element without factorization");
    return Term::bracket(basis_term(f, fac->first), basis_term(f, fac->second));
}

void check_independent(const Carrier& f, const std::vector<Element>& basis) {
    if (!linearly_independent(f, basis)) fail(ErrorCode::DependentBasis, "factor basis is linearly dependent");
}

Element coerce_element(const Carrier& to, const Field& from, const Element& e) {
    ElementBuilder b(to.field());
    for (const auto& [id, c] : e.terms) b.add(id, to.field().coerce(from, c));
    return b.finish();
}

std::vector<Element> without(const std::vector<Element>& v, size_t i) {
    std::vector<Element> out;
    for (size_t k = 0; k < v.size(); ++k)
        if (k != i) out.push_back(v[k]);
    return out;
}

uint64_t checked_power(uint64_t base, size_t exp, uint64_t budget) {
    uint64_t n = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (base != 0 && n > budget / base) fail(ErrorCode::CapacityExceeded, "enumeration exceeds the budget");
        n *= base;
    }
    if (n > budget) fail(ErrorCode::CapacityExceeded, "enumeration exceeds the budget");
    return n;
}

}  // namespace

TermPtr element_term(const Carrier& f, const Element& e) {
    std::vector<TermPtr> parts;
    for (const auto& [id, c] : e.terms) {
        TermPtr t = basis_term(f, id);
        parts.push_back(f.field().is_one(c) ? t : Term::scalar(c, t));
    }
    return Term::sum(std::move(parts));
}

TermPtr s_term(const std::vector<TermPtr>& basis, const TermPtr& x) {
    if (basis.empty()) return x;
    if (basis.size() == 1) return Term::bracket(x, basis[0]);
    std::vector<TermPtr> head(basis.begin(), basis.end() - 1);
    return Term::bracket(s_term(head, x), s_term(head, basis.back()));
}

Element s_value(const Carrier& f, const std::vector<Element>& basis, const Element& x) {
    if (basis.empty()) return x;
    if (basis.size() == 1) return f.bracket(x, basis[0]);
    std::vector<Element> head(basis.begin(), basis.end() - 1);
    return f.bracket(s_value(f, head, x), s_value(f, head, basis.back()));
}

TermPtr s_equation(const Carrier& f, const std::vector<Element>& basis, const TermPtr& x) {
    check_independent(f, basis);
    std::vector<TermPtr> ts;
    for (const auto& v : basis) ts.push_back(element_term(f, v));
    return s_term(ts, x);
}

TermPtr s_affine(const Carrier& f, const std::vector<Element>& basis, const Element& shift, const TermPtr& x) {
    TermPtr arg = shift.is_zero() ? x : Term::minus(f.field(), x, element_term(f, shift));
    return s_equation(f, basis, arg);
}

// Parallelepipedon -------------------------------------------------------------

Parallelepipedon::Parallelepipedon(FreeLiePtr algebra, std::vector<PolytopeFactor> factors)
    : algebra_(std::move(algebra)), factors_(std::move(factors)) {
    offsets_.push_back(0);
    for (const auto& fac : factors_) {
        check_independent(*algebra_, fac.basis);
        offsets_.push_back(offsets_.back() + fac.dim());
    }
    std::vector<std::string> names;
    for (size_t i = 0; i < total_dim(); ++i) names.push_back("y" + std::to_string(i + 1));
    ring_ = make_ring(names, field());
}

Parallelepipedon Parallelepipedon::from_system(const EquationSystem& sys) {
    if (sys.algebra.kind != CoefficientKind::Free)
        fail(ErrorCode::UnsupportedCoefficientAlgebra, "parallelepipeds need a free coefficient algebra");
    if (sys.polytope.size() != sys.vars.size())
        fail(ErrorCode::InvalidArgument, "one polytope factor per variable required");
    auto f = FreeLieAlgebra::make(sys.field(), sys.algebra.rank);
    Evaluator ev(*f, sys.field());
    ev.set_point({});
    std::vector<PolytopeFactor> factors;
    for (const auto& spec : sys.polytope) {
        PolytopeFactor fac;
        for (const auto& t : spec.basis) fac.basis.push_back(ev.eval(t));
        fac.shift = ev.eval(spec.shift);
        factors.push_back(std::move(fac));
    }
    return Parallelepipedon(f, std::move(factors));
}

std::vector<std::vector<size_t>> Parallelepipedon::blocks() const {
    std::vector<std::vector<size_t>> out;
    for (size_t j = 0; j < factors_.size(); ++j) {
        std::vector<size_t> b;
        for (size_t i = offsets_[j]; i < offsets_[j + 1]; ++i) b.push_back(i);
        out.push_back(std::move(b));
    }
    return out;
}

Point Parallelepipedon::point(const std::vector<Scalar>& coords) const {
    if (coords.size() != total_dim()) fail(ErrorCode::InvalidArgument, "coordinate tuple of wrong length");
    Point p;
    for (size_t j = 0; j < factors_.size(); ++j) {
        Element e = factors_[j].shift;
        for (size_t i = 0; i < factors_[j].dim(); ++i)
            e = algebra_->axpy(e, coords[offsets_[j] + i], factors_[j].basis[i]);
        p.push_back(std::move(e));
    }
    return p;
}

std::optional<std::vector<Scalar>> Parallelepipedon::coordinates(const Point& p) const {
    if (p.size() != factors_.size()) fail(ErrorCode::InvalidArgument, "point of wrong arity");
    std::vector<Scalar> out;
    for (size_t j = 0; j < factors_.size(); ++j) {
        Element d = algebra_->sub(p[j], factors_[j].shift);
        if (factors_[j].dim() == 0) {
            if (!d.is_zero()) return std::nullopt;
            continue;
        }
        auto c = subspace_membership(*algebra_, d, factors_[j].basis);
        if (!c) return std::nullopt;
        out.insert(out.end(), c->begin(), c->end());
    }
    return out;
}

uint64_t Parallelepipedon::size() const {
    if (!field().is_finite()) fail(ErrorCode::InfiniteFieldUnsupported, "enumeration needs a finite field");
    return checked_power(static_cast<uint64_t>(field().size()), total_dim(), uint64_t{1} << 62);
}

std::vector<Scalar> Parallelepipedon::tuple(uint64_t index) const {
    const uint64_t q = static_cast<uint64_t>(field().size());
    std::vector<Scalar> t;
    for (size_t i = 0; i < total_dim(); ++i) {
        t.push_back(field().element(static_cast<int64_t>(index % q)));
        index /= q;
    }
    return t;
}

uint64_t Parallelepipedon::tuple_index(const std::vector<Scalar>& t) const {
    const uint64_t q = static_cast<uint64_t>(field().size());
    uint64_t idx = 0;
    for (size_t i = t.size(); i-- > 0;) idx = idx * q + static_cast<uint64_t>(field().index_of(t[i]));
    return idx;
}

std::string Parallelepipedon::str() const {
    std::string out;
    for (size_t j = 0; j < factors_.size(); ++j) {
        if (j) out += " x ";
        out += "(lin{";
        for (size_t i = 0; i < factors_[j].dim(); ++i) out += (i ? ", " : "") + algebra_->render(factors_[j].basis[i]);
        out += "} + " + algebra_->render(factors_[j].shift) + ")";
    }
    return out;
}

// PolySystem -------------------------------------------------------------------

std::string PolySystem::render() const {
    std::ostringstream out;
    out << "field " << ring->coeffs.str() << "\n";
    for (size_t b = 0; b < blocks.size(); ++b) {
        out << "block " << b + 1 << ":";
        for (size_t i = 0; i < blocks[b].size(); ++i) out << (i ? ", " : " ") << ring->vars[blocks[b][i]];
        out << "\n";
    }
    for (const auto& p : polys) out << p.str() << "\n";
    return out.str();
}

PolySystem PolySystem::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::optional<Field> field;
    std::vector<std::vector<std::string>> block_names;
    std::vector<std::pair<std::string, int>> poly_lines;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.rfind("field ", 0) == 0) {
            try {
                field = Field::parse(trim(line.substr(6)));
            } catch (const Error&) {
                throw SyntaxError(line_no, 7, "field spec");
            }
        } else if (line.rfind("block ", 0) == 0) {
            auto colon = line.find(':');
            if (colon == std::string::npos) throw SyntaxError(line_no, static_cast<int>(line.size()) + 1, "':'");
            int idx = 0;
            try {
                idx = std::stoi(line.substr(6, colon - 6));
            } catch (const std::exception&) {
                throw SyntaxError(line_no, 7, "block number");
            }
            if (idx != static_cast<int>(block_names.size()) + 1) throw SyntaxError(line_no, 7, "consecutive block number");
            std::vector<std::string> names;
            std::string rest = line.substr(colon + 1), cur;
            std::istringstream items(rest);
            while (std::getline(items, cur, ',')) {
                cur = trim(cur);
                if (!cur.empty()) names.push_back(cur);
            }
            block_names.push_back(std::move(names));
        } else {
            poly_lines.push_back({line, line_no});
        }
    }
    if (!field) throw SyntaxError(line_no + 1, 1, "field statement");
    PolySystem s;
    std::vector<std::string> vars;
    for (const auto& b : block_names) {
        std::vector<size_t> idx;
        for (const auto& n : b) {
            if (std::find(vars.begin(), vars.end(), n) != vars.end())
                fail(ErrorCode::InvalidArgument, "variable " + n + " declared twice");
            idx.push_back(vars.size());
            vars.push_back(n);
        }
        s.blocks.push_back(std::move(idx));
    }
    s.ring = make_ring(vars, *field);
    for (const auto& [text_line, no] : poly_lines) {
        try {
            s.polys.push_back(Poly::parse(s.ring, text_line));
        } catch (const SyntaxError& e) {
            throw SyntaxError(no, e.col(), e.expected());
        }
    }
    return s;
}

// Subspaces ----------------------------------------------------------------------

SubspaceReport subspace_as_algebraic_set(FreeLiePtr f, const std::vector<Element>& basis, const Element& shift,
                                         int degree, uint64_t budget) {
    check_independent(*f, basis);
    Window w(f, degree);
    for (const auto& v : basis)
        if (!w.contains(v)) fail(ErrorCode::WindowTooSmall, "basis vector " + f->render(v) + " outside the window");
    if (!w.contains(shift)) fail(ErrorCode::WindowTooSmall, "shift outside the window");
    if (w.size() > budget) fail(ErrorCode::CapacityExceeded, "window of " + std::to_string(w.size()) + " elements");
    SubspaceReport r;
    for (uint64_t i = 0; i < w.size(); ++i)
        if (s_value(*f, basis, f->sub(w.element(i), shift)).is_zero()) r.solutions.push_back(i);
    const Field& k = f->field();
    const uint64_t q = static_cast<uint64_t>(k.size());
    const uint64_t n = checked_power(q, basis.size(), budget);
    for (uint64_t t = 0; t < n; ++t) {
        Element e = shift;
        uint64_t c = t;
        for (const auto& v : basis) {
            e = f->axpy(e, k.element(static_cast<int64_t>(c % q)), v);
            c /= q;
        }
        r.span.push_back(*w.index_of(e));
    }
    std::sort(r.span.begin(), r.span.end());
    std::set_symmetric_difference(r.solutions.begin(), r.solutions.end(), r.span.begin(), r.span.end(),
                                  std::back_inserter(r.discrepancy));
    r.equal = r.discrepancy.empty();
    return r;
}

// f -> S_f ------------------------------------------------------------------------

std::vector<Poly> lie_to_poly(const TermPtr& f, const Parallelepipedon& p, const Field& term_field) {
    const Field& k = p.field();
    std::vector<Poly> out;
    if (p.total_dim() == 0) {
        Evaluator ev(p.algebra(), term_field);
        Point pt;
        for (const auto& fac : p.factors()) pt.push_back(fac.shift);
        ev.set_point(std::move(pt));
        for (const auto& [id, c] : ev.eval(f).terms) out.push_back(Poly::constant(p.ring(), c));
        return out;
    }
    Field kk = Field::rational_functions(k, p.ring()->vars);
    auto fk = FreeLieAlgebra::make(kk, p.algebra().rank());
    Point generic;
    for (size_t j = 0; j < p.arity(); ++j) {
        const auto& fac = p.factors()[j];
        Element e = coerce_element(*fk, k, fac.shift);
        for (size_t i = 0; i < fac.dim(); ++i)
            e = fk->axpy(e, kk.variable(p.offset(j) + i), coerce_element(*fk, k, fac.basis[i]));
        generic.push_back(std::move(e));
    }
    Evaluator ev(*fk, term_field);
    ev.set_point(std::move(generic));
    Element value = ev.eval(f);
    for (const auto& [id, c] : value.terms) {
        const RationalFunction& rf = kk.rf_value(c);
        if (!rf.is_polynomial()) fail(ErrorCode::InvariantViolation, "non-polynomial coefficient at the generic point");
        out.push_back(rf.num().embed(p.ring()));
    }
    return out;
}

// g -> f_g ------------------------------------------------------------------------

namespace {

// Left-normed words over rank letters of a given length, first two letters
// distinct, in lexicographic order.
std::vector<std::vector<int>> anchor_words(int rank, int length) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<size_t>(length), 0);
    while (true) {
        if (length == 1 || w[0] != w[1]) out.push_back(w);
        int i = length - 1;
        while (i >= 0 && ++w[static_cast<size_t>(i)] == rank) w[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace

LiftedPoly poly_to_lie(const Poly& g, const Parallelepipedon& p, int slack) {
    if (!same_ring(g.ring(), p.ring()) && !(*g.ring() == *p.ring()))
        fail(ErrorCode::RingMismatch, "polynomial ring differs from the parallelepiped's coordinates");
    const FreeLieAlgebra& f = p.algebra();
    const size_t m_total = p.total_dim();
    LiftedPoly out;
    // Per coordinate y: factor, f_y(x) and b_y.
    std::vector<size_t> factor_of(m_total);
    std::vector<TermPtr> f_terms(m_total);
    out.b.resize(m_total);
    for (size_t j = 0; j < p.arity(); ++j) {
        const auto& fac = p.factors()[j];
        for (size_t i = 0; i < fac.dim(); ++i) {
            size_t y = p.offset(j) + i;
            factor_of[y] = j;
            auto rest = without(fac.basis, i);
            f_terms[y] = s_affine(f, rest, fac.shift, Term::var(j));
            out.b[y] = s_value(f, rest, fac.basis[i]);
            if (out.b[y].is_zero()) fail(ErrorCode::AnchorDegenerate, "b vanishes for coordinate y" + std::to_string(y + 1));
        }
    }
    std::vector<uint32_t> max_exp(m_total, 0);
    int max_b = 0;
    for (size_t y = 0; y < m_total; ++y) {
        max_exp[y] = static_cast<uint32_t>(std::max(0, g.degree_in(y)));
        if (max_exp[y] > 0) max_b = std::max(max_b, f.degree(out.b[y]));
    }
    // Anchor: first candidate whose full product is nonzero.
    const int start = 1 + max_b;
    for (int d = start; d <= start + slack && out.anchor == nullptr; ++d) {
        for (const auto& w : anchor_words(f.rank(), d)) {
            Element prod = f.left_normed(w);
            for (size_t y = 0; y < m_total && !prod.is_zero(); ++y)
                for (uint32_t e = 0; e < max_exp[y]; ++e) prod = f.bracket(prod, out.b[y]);
            if (prod.is_zero()) continue;
            TermPtr a = Term::constant(static_cast<size_t>(w[0]));
            for (size_t i = 1; i < w.size(); ++i) a = Term::bracket(a, Term::constant(static_cast<size_t>(w[i])));
            out.anchor = a;
            out.anchor_value = std::move(prod);
            break;
        }
    }
    if (!out.anchor)
        fail(ErrorCode::AnchorDegenerate, "no anchor of degree " + std::to_string(start) + ".." +
                                              std::to_string(start + slack) + " gives a nonzero product");
    std::vector<TermPtr> b_terms(m_total);
    for (size_t y = 0; y < m_total; ++y)
        if (max_exp[y] > 0) b_terms[y] = element_term(f, out.b[y]);
    std::vector<TermPtr> parts;
    for (const auto& [mono, c] : g.terms()) {
        TermPtr t = out.anchor;
        for (size_t y = 0; y < m_total; ++y) {
            uint32_t i = y < mono.size() ? mono[y] : 0;
            for (uint32_t e = 0; e < i; ++e) t = Term::bracket(t, f_terms[y]);
            for (uint32_t e = i; e < max_exp[y]; ++e) t = Term::bracket(t, b_terms[y]);
        }
        parts.push_back(p.field().is_one(c) ? t : Term::scalar(c, t));
    }
    out.term = Term::sum(std::move(parts));
    return out;
}

// Systems ------------------------------------------------------------------------

namespace {

void sort_unique(const Field& k, std::vector<Poly>& ps) {
    for (auto& p : ps) {
        if (!p.is_zero() && !k.is_one(p.leading_coeff())) p = p.monic();
    }
    ps.erase(std::remove_if(ps.begin(), ps.end(), [](const Poly& p) { return p.is_zero(); }), ps.end());
    std::sort(ps.begin(), ps.end(), [](const Poly& a, const Poly& b) { return a.cmp(b) < 0; });
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}

}  // namespace

PolySystem reduce_system(const EquationSystem& sys, const Parallelepipedon& p) {
    if (sys.vars.size() != p.arity()) fail(ErrorCode::InvalidArgument, "system and parallelepiped arities differ");
    PolySystem out;
    out.ring = p.ring();
    out.blocks = p.blocks();
    for (const auto& eq : sys.equations) {
        auto sf = lie_to_poly(eq, p, sys.field());
        out.polys.insert(out.polys.end(), sf.begin(), sf.end());
    }
    sort_unique(p.field(), out.polys);
    return out;
}

EquationSystem lift_system(const PolySystem& s, const Parallelepipedon& p, const std::vector<std::string>& vars) {
    const FreeLieAlgebra& f = p.algebra();
    EquationSystem out;
    out.algebra.kind = CoefficientKind::Free;
    out.algebra.rank = f.rank();
    out.algebra.field = p.field();
    if (!vars.empty() && vars.size() != p.arity()) fail(ErrorCode::InvalidArgument, "one variable name per factor");
    for (size_t j = 0; j < p.arity(); ++j) out.vars.push_back(vars.empty() ? "x" + std::to_string(j + 1) : vars[j]);
    for (const auto& g : s.polys) {
        Poly gg = same_ring(g.ring(), p.ring()) ? g : g.embed(p.ring());
        if (gg.is_zero()) continue;
        out.equations.push_back(poly_to_lie(gg, p).term);
    }
    size_t named = 0;
    for (size_t j = 0; j < p.arity(); ++j) {
        const auto& fac = p.factors()[j];
        out.equations.push_back(s_affine(f, fac.basis, fac.shift, Term::var(j)));
        // Name the factor so the rendered file carries its polytope.
        PolytopeFactorSpec spec;
        for (const auto& v : fac.basis) {
            std::string name = "v" + std::to_string(++named);
            out.lets.emplace_back(name, element_term(f, v));
            spec.basis.push_back(out.lets.back().second);
            spec.basis_names.push_back(name);
        }
        if (fac.shift.is_zero()) {
            spec.shift = Term::zero();
        } else {
            spec.shift_name = "c" + std::to_string(j + 1);
            out.lets.emplace_back(spec.shift_name, element_term(f, fac.shift));
            spec.shift = out.lets.back().second;
        }
        out.polytope.push_back(std::move(spec));
    }
    out.equation_lines.assign(out.equations.size(), 0);
    return out;
}

std::vector<std::vector<Scalar>> to_coordinates(const Parallelepipedon& p, const std::vector<Point>& points) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& pt : points) {
        auto c = p.coordinates(pt);
        if (!c) fail(ErrorCode::PointOutsidePolytope, "point outside " + p.str());
        out.push_back(std::move(*c));
    }
    return out;
}

std::vector<Point> to_points(const Parallelepipedon& p, const std::vector<std::vector<Scalar>>& tuples) {
    std::vector<Point> out;
    for (const auto& t : tuples) out.push_back(p.point(t));
    return out;
}

PointSet solve_poly_system(const PolySystem& s, const Parallelepipedon& p, uint64_t budget) {
    const uint64_t n = p.size();
    if (n > budget) fail(ErrorCode::CapacityExceeded, "k^M has " + std::to_string(n) + " points");
    PointSet out;
    for (uint64_t i = 0; i < n; ++i) {
        auto t = p.tuple(i);
        bool zero = true;
        for (const auto& g : s.polys)
            if (!p.field().is_zero(g.evaluate(t))) {
                zero = false;
                break;
            }
        if (zero) out.push_back(i);
    }
    return out;
}

PointSet solve_in_polytope(const std::vector<TermPtr>& equations, const Field& term_field, const Parallelepipedon& p,
                           uint64_t budget) {
    const uint64_t n = p.size();
    if (n > budget) fail(ErrorCode::CapacityExceeded, "parallelepiped has " + std::to_string(n) + " points");
    Evaluator ev(p.algebra(), term_field);
    PointSet out;
    for (uint64_t i = 0; i < n; ++i) {
        ev.set_point(p.point(p.tuple(i)));
        bool zero = true;
        for (const auto& e : equations)
            if (!ev.eval(e).is_zero()) {
                zero = false;
                break;
            }
        if (zero) out.push_back(i);
    }
    return out;
}

// One variable --------------------------------------------------------------------

std::string one_variable_kind_name(OneVariableKind k) {
    switch (k) {
        case OneVariableKind::WholeAlgebra: return "whole";
        case OneVariableKind::BoundedWithin: return "bounded";
        case OneVariableKind::EmptyWithin: return "empty-within";
        case OneVariableKind::Unknown: return "unknown";
    }
    return "unknown";
}

OneVariableClass classify_one_variable(const EquationSystem& sys, int search_degree, uint64_t budget) {
    if (sys.vars.size() != 1) fail(ErrorCode::InvalidArgument, "classification needs exactly one variable");
    if (sys.algebra.kind != CoefficientKind::Free)
        fail(ErrorCode::UnsupportedCoefficientAlgebra, "classification needs a free coefficient algebra");
    if (search_degree < 1) fail(ErrorCode::EmptyWindow, "search degree must be positive");
    OneVariableClass out;
    out.search_degree = search_degree;
    auto f = FreeLieAlgebra::make(sys.field(), sys.algebra.rank);
    auto amb = std::make_shared<const Ambient>(sys.algebra, sys.vars, f, search_degree);
    bool all_zero = true;
    for (const auto& eq : sys.equations) all_zero = all_zero && amb->lower(eq).is_zero();
    if (all_zero) {
        out.kind = OneVariableKind::WholeAlgebra;
        return out;
    }
    auto y = solve(sys, amb, budget);
    out.solutions = y.size();
    if (y.points.empty()) {
        out.kind = OneVariableKind::EmptyWithin;
        return out;
    }
    // Solutions reaching the top degree may continue beyond the window.
    int top = 0;
    std::vector<Element> sols;
    for (uint64_t idx : y.points) {
        sols.push_back(amb->point(idx)[0]);
        top = std::max(top, f->degree(sols.back()));
    }
    if (top >= search_degree) {
        out.kind = OneVariableKind::Unknown;
        return out;
    }
    PolytopeFactor fac;
    fac.shift = sols.front();
    for (size_t i = 1; i < sols.size(); ++i) {
        auto b = fac.basis;
        b.push_back(f->sub(sols[i], fac.shift));
        if (linearly_independent(*f, b)) fac.basis = std::move(b);
    }
    out.bound = Parallelepipedon(f, {fac});
    out.kind = OneVariableKind::BoundedWithin;
    out.exact = out.bound->size() == static_cast<uint64_t>(sols.size());
    return out;
}

// Realisations --------------------------------------------------------------------

RealisationReport bounded_realisation(const Parallelepipedon& p, const Field& ext, const std::vector<Element>& generators,
                                      const std::optional<PointSet>& claimed, uint64_t budget) {
    const Field& k = p.field();
    if (ext.kind() != Field::Kind::RationalFunctions || ext.base() != k)
        fail(ErrorCode::InvalidArgument, "generators must live over k(t...) for the parallelepiped's k");
    if (generators.size() != p.arity()) fail(ErrorCode::InvalidArgument, "one generator per factor required");
    auto fk = FreeLieAlgebra::make(ext, p.algebra().rank());
    RealisationReport r;
    for (size_t j = 0; j < p.arity(); ++j) {
        const auto& fac = p.factors()[j];
        Element d = fk->sub(generators[j], coerce_element(*fk, k, fac.shift));
        std::vector<Element> basis;
        for (const auto& v : fac.basis) basis.push_back(coerce_element(*fk, k, v));
        std::optional<Vec> c;
        if (basis.empty()) {
            if (d.is_zero()) c = Vec{};
        } else {
            c = subspace_membership(*fk, d, basis);
        }
        if (!c) fail(ErrorCode::ShapeViolation, "generator " + std::to_string(j + 1) + " is not in the factor's span");
        r.coordinates.push_back(*c);
    }
    if (!k.is_finite()) return r;
    const size_t nt = ext.variables().size();
    const uint64_t q = static_cast<uint64_t>(k.size());
    const uint64_t n = checked_power(q, nt, budget);
    for (uint64_t s = 0; s < n; ++s) {
        std::vector<Scalar> tv;
        uint64_t c = s;
        for (size_t i = 0; i < nt; ++i) {
            tv.push_back(k.element(static_cast<int64_t>(c % q)));
            c /= q;
        }
        std::vector<Scalar> tuple;
        bool ok = true;
        for (const auto& coords : r.coordinates)
            for (const auto& x : coords) {
                const RationalFunction& rf = ext.rf_value(x);
                Scalar den = rf.den().evaluate(tv);
                if (k.is_zero(den)) {
                    ok = false;
                    break;
                }
                tuple.push_back(k.div(rf.num().evaluate(tv), den));
            }
        if (!ok) {
            ++r.skipped;
            continue;
        }
        r.specializations.push_back(p.tuple_index(tuple));
    }
    std::sort(r.specializations.begin(), r.specializations.end());
    r.specializations.erase(std::unique(r.specializations.begin(), r.specializations.end()), r.specializations.end());
    if (claimed) r.matches = *claimed == r.specializations;
    return r;
}

}  // namespace liegeo
