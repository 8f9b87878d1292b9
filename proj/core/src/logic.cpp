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
#include "liegeo/logic.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "liegeo/error.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/metabelian.hpp"

namespace liegeo {

namespace {

std::string join_terms(const std::vector<TermPtr>& ts, const TermNames& names, const std::string& rel,
                       const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i) out += sep;
        out += render_term(ts[i], names) + rel;
    }
    return out;
}

std::string prefix(const std::vector<std::string>& vars) {
    std::string out = "forall";
    for (const auto& v : vars) out += " " + v;
    return out + ". ";
}

int ready_level(const TermPtr& t) {
    auto vs = term_variables(t);
    return vs.empty() ? 0 : static_cast<int>(*vs.rbegin()) + 1;
}

void check_budget(uint64_t used, uint64_t budget) {
    if (used > budget) fail(ErrorCode::CapacityExceeded, "assignment budget of " + std::to_string(budget) + " exhausted");
}

std::vector<Element> window_elements(const Window& w, uint64_t budget) {
    if (w.size() > budget) fail(ErrorCode::CapacityExceeded, "window of " + std::to_string(w.size()) + " elements");
    return w.elements();
}

// Depth-first search over assignments; disjuncts are decided as soon as
// their variables are bound.
class SentenceSearch {
public:
    SentenceSearch(const UniversalSentence& s, const Window& w, const Field& term_field, uint64_t budget)
        : s_(s), ev_(w.carrier(), term_field), budget_(budget) {
        elems_ = window_elements(w, budget);
        zero_ = Element{};
        for (const auto& d : s.disjuncts) {
            int r = 0;
            for (const auto& t : d.equations) r = std::max(r, ready_level(t));
            for (const auto& t : d.disequations) r = std::max(r, ready_level(t));
            if (r > static_cast<int>(s.vars.size())) fail(ErrorCode::InvalidArgument, "unbound variable in sentence");
            ready_.push_back(r);
        }
        point_.assign(s.vars.size(), zero_);
    }

    Verdict run() {
        Verdict v;
        v.method = "exhaustive";
        v.holds = dfs(0);
        if (!v.holds) v.witness = point_;
        v.assignments = nodes_;
        return v;
    }

private:
    bool disjunct_true(size_t i) {
        const auto& d = s_.disjuncts[i];
        for (const auto& t : d.equations)
            if (!ev_.eval(t).is_zero()) return false;
        for (const auto& t : d.disequations)
            if (ev_.eval(t).is_zero()) return false;
        return true;
    }

    bool dfs(size_t level) {
        ev_.set_point(point_);
        for (size_t i = 0; i < ready_.size(); ++i)
            if (ready_[i] == static_cast<int>(level) && disjunct_true(i)) return true;
        if (level == point_.size()) return false;
        for (const auto& e : elems_) {
            point_[level] = e;
            check_budget(++nodes_, budget_);
            if (!dfs(level + 1)) return false;
        }
        point_[level] = zero_;
        return true;
    }

    const UniversalSentence& s_;
    Evaluator ev_;
    uint64_t budget_;
    std::vector<Element> elems_;
    std::vector<int> ready_;
    std::vector<Element> point_;
    Element zero_;
    uint64_t nodes_ = 0;
};

Verdict check_multilinear(const UniversalSentence& s, const Window& w, const Field& term_field, uint64_t budget) {
    if (s.disjuncts.size() != 1 || s.disjuncts[0].equations.size() != 1 || !s.disjuncts[0].disequations.empty())
        fail(ErrorCode::InvalidArgument, "multilinear check needs a single identity");
    const TermPtr& t = s.disjuncts[0].equations[0];
    const size_t n = s.vars.size();
    const size_t dim = w.dimension();
    std::vector<Element> basis;
    for (BasisId id : w.basis()) basis.push_back(w.carrier().basis_element(id));
    Evaluator ev(w.carrier(), term_field);
    Verdict v;
    v.method = "basis tuples";
    if (dim == 0) return v;
    std::vector<size_t> idx(n, 0);
    while (true) {
        check_budget(++v.assignments, budget);
        std::vector<Element> p;
        for (size_t k = 0; k < n; ++k) p.push_back(basis[idx[k]]);
        ev.set_point(p);
        if (!ev.eval(t).is_zero()) {
            v.holds = false;
            v.witness = p;
            return v;
        }
        size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] < dim) break;
            idx[k] = 0;
            if (k == 0) return v;
        }
        if (n == 0) return v;
    }
}

}  // namespace

std::string UniversalSentence::str(const Field& f) const {
    TermNames names{vars, constants, f};
    std::string out = prefix(vars);
    for (size_t i = 0; i < disjuncts.size(); ++i) {
        if (i) out += " | ";
        const auto& d = disjuncts[i];
        std::string body = join_terms(d.equations, names, " = 0", " & ");
        std::string neq = join_terms(d.disequations, names, " != 0", " & ");
        if (!body.empty() && !neq.empty()) body += " & ";
        body += neq;
        if (body.empty()) body = "true";
        out += disjuncts.size() > 1 && d.equations.size() + d.disequations.size() > 1 ? "(" + body + ")" : body;
    }
    if (disjuncts.empty()) out += "false";
    return out;
}

UniversalSentence QuasiIdentity::sentence() const {
    UniversalSentence s;
    s.vars = vars;
    s.constants = constants;
    s.disjuncts.push_back({{conclusion}, {}});
    for (const auto& r : premises) s.disjuncts.push_back({{}, {r}});
    return s;
}

std::string QuasiIdentity::str(const Field& f) const {
    TermNames names{vars, constants, f};
    std::string out = prefix(vars);
    if (!premises.empty()) out += join_terms(premises, names, " = 0", " & ") + " -> ";
    return out + render_term(conclusion, names) + " = 0";
}

Verdict check_sentence(const UniversalSentence& s, const Window& window, const Field& term_field, uint64_t budget,
                       bool multilinear) {
    if (multilinear) return check_multilinear(s, window, term_field, budget);
    SentenceSearch search(s, window, term_field, budget);
    return search.run();
}

Verdict check_sentence(const QuasiIdentity& q, const Window& window, const Field& term_field, uint64_t budget) {
    return check_sentence(q.sentence(), window, term_field, budget);
}

std::string render_witness(const Verdict& v, const Carrier& carrier, const std::vector<std::string>& vars) {
    if (!v.witness) return "";
    std::string out;
    for (size_t i = 0; i < v.witness->size(); ++i) {
        if (i) out += ", ";
        out += (i < vars.size() ? vars[i] : "x" + std::to_string(i + 1)) + "=" + carrier.render((*v.witness)[i]);
    }
    return out;
}

AxiomInstance phi1() {
    AxiomInstance a{AxiomId::Phi1, "Phi1", {}, std::nullopt, true};
    a.sentence.vars = {"x1", "x2", "x3", "x4"};
    auto v = [](size_t i) { return Term::var(i); };
    a.sentence.disjuncts.push_back({{Term::bracket(Term::bracket(v(0), v(1)), Term::bracket(v(2), v(3)))}, {}});
    return a;
}

AxiomInstance phi2() {
    QuasiIdentity q;
    q.vars = {"x", "y"};
    auto xy = Term::bracket(Term::var(0), Term::var(1));
    q.premises = {Term::bracket(xy, Term::var(0)), Term::bracket(xy, Term::var(1))};
    q.conclusion = xy;
    return AxiomInstance{AxiomId::Phi2, "Phi2", q.sentence(), std::nullopt, false};
}

AxiomInstance phi3() {
    AxiomInstance a{AxiomId::Phi3, "Phi3", {}, std::nullopt, false};
    a.sentence.vars = {"x", "y", "z"};
    auto x = Term::var(0), y = Term::var(1), z = Term::var(2);
    a.sentence.disjuncts = {{{x}, {}},
                            {{}, {Term::bracket(x, y)}},
                            {{}, {Term::bracket(x, z)}},
                            {{Term::bracket(y, z)}, {}}};
    return a;
}

AxiomInstance phi4(int r) {
    AxiomInstance a{AxiomId::Phi4, "Phi4", {}, std::nullopt, false};
    for (int i = 1; i <= r + 1; ++i) a.sentence.vars.push_back("x" + std::to_string(i));
    return a;
}

AxiomInstance phi5_prime(const Poly& f, const std::vector<std::string>& constants) {
    if (f.is_zero()) fail(ErrorCode::InvalidArgument, "zero polynomial");
    if (f.ring()->arity() > constants.size())
        fail(ErrorCode::InvalidArgument, "polynomial has more variables than there are constants");
    QuasiIdentity q;
    q.vars = {"z1", "z2"};
    q.constants = constants;
    auto z = Term::bracket(Term::var(0), Term::var(1));
    std::vector<TermPtr> parts;
    for (const auto& [m, c] : f.terms()) {
        TermPtr t = z;
        for (size_t i = 0; i < m.size(); ++i)
            for (uint32_t e = 0; e < m[i]; ++e) t = Term::bracket(t, Term::constant(i));
        parts.push_back(f.field().is_one(c) ? t : Term::scalar(c, t));
    }
    q.premises = {Term::sum(parts)};
    q.conclusion = z;
    AxiomInstance a{AxiomId::Phi5Prime, "Phi5'(" + f.str() + ")", q.sentence(), f, false};
    return a;
}

std::vector<bool> fitting_set(const Window& w) {
    const Carrier& b = w.carrier();
    auto elems = w.elements();
    std::vector<bool> fit(elems.size(), true);
    for (size_t i = 0; i < elems.size(); ++i)
        for (const auto& y : elems) {
            if (!b.bracket(b.bracket(elems[i], y), elems[i]).is_zero()) {
                fit[i] = false;
                break;
            }
        }
    return fit;
}

namespace {

Verdict phi4_by_rank(const MetabelianAlgebra& m, const Window& w, int r) {
    Verdict v;
    v.method = "linear-part rank";
    RowSpace span(m.field(), static_cast<size_t>(m.rank()));
    std::vector<Element> chosen;
    for (BasisId id : w.basis()) {
        ++v.assignments;
        Element e = m.basis_element(id);
        if (span.insert(m.linear_part(e))) chosen.push_back(e);
        if (chosen.size() == static_cast<size_t>(r) + 1) {
            v.holds = false;
            v.witness = chosen;
            return v;
        }
    }
    return v;
}

class Phi4Search {
public:
    Phi4Search(const Window& w, int r, uint64_t budget) : w_(w), n_(static_cast<size_t>(r) + 1), budget_(budget) {
        const uint64_t sz = w.size();
        if (sz > 0 && sz > budget / sz) fail(ErrorCode::CapacityExceeded, "window too large for the Fitting scan");
        elems_ = w.elements();
        fit_ = fitting_set(w);
        p_ = static_cast<uint64_t>(w.carrier().field().size());
    }

    Verdict run() {
        Verdict v;
        v.method = "exhaustive";
        std::vector<uint64_t> combos{0};  // index of the zero element
        v.holds = dfs(combos);
        if (!v.holds) {
            std::vector<Element> wit;
            for (auto i : tuple_) wit.push_back(elems_[i]);
            v.witness = wit;
        }
        v.assignments = nodes_;
        return v;
    }

    bool all_fitting() const { return std::all_of(fit_.begin(), fit_.end(), [](bool b) { return b; }); }

private:
    // combos: indices of all sums Σ α_i x_i over the current prefix.
    bool dfs(const std::vector<uint64_t>& combos) {
        if (tuple_.size() == n_) return false;
        const Carrier& b = w_.carrier();
        const Field& f = b.field();
        // Witnesses are sets of distinct elements; increasing tuples suffice
        // and the least one is also the least ordered tuple.
        for (uint64_t xi = tuple_.empty() ? 0 : tuple_.back() + 1; xi < elems_.size(); ++xi) {
            check_budget(++nodes_, budget_);
            std::vector<uint64_t> next = combos;
            bool hit = false;
            for (uint64_t a = 1; a < p_ && !hit; ++a) {
                Element ax = b.scale(elems_[xi], f.from_int(static_cast<int64_t>(a)));
                for (uint64_t c : combos) {
                    auto idx = w_.index_of(b.add(elems_[c], ax));
                    if (!idx) fail(ErrorCode::InvariantViolation, "window not closed under addition");
                    if (fit_[*idx]) {
                        hit = true;
                        break;
                    }
                    next.push_back(*idx);
                }
            }
            if (hit) continue;
            tuple_.push_back(xi);
            if (!dfs(next)) return false;
            tuple_.pop_back();
        }
        return true;
    }

    const Window& w_;
    size_t n_;
    uint64_t budget_;
    std::vector<Element> elems_;
    std::vector<bool> fit_;
    uint64_t p_ = 2;
    std::vector<uint64_t> tuple_;
    uint64_t nodes_ = 0;
};

}  // namespace

Verdict check_phi4(const Window& window, int r, uint64_t budget, bool force_exhaustive) {
    if (!window.carrier().field().is_finite())
        fail(ErrorCode::InfiniteFieldUnsupported, "the independence formula needs a finite field");
    if (r < 0) fail(ErrorCode::InvalidArgument, "negative rank");
    auto* m = dynamic_cast<const MetabelianAlgebra*>(&window.carrier());
    if (m && m->rank() >= 2 && !force_exhaustive) return phi4_by_rank(*m, window, r);
    Phi4Search search(window, r, budget);
    return search.run();
}

std::vector<AxiomVerdict> phi_suite(const Window& window, int r, const std::vector<Poly>& polys, uint64_t budget) {
    const Carrier& b = window.carrier();
    const Field& f = b.field();
    if (!f.is_finite()) fail(ErrorCode::InfiniteFieldUnsupported, "axiom suite needs a finite field");
    std::vector<AxiomVerdict> out;
    bool base_ok = true;
    for (const auto& ax : {phi1(), phi2(), phi3()}) {
        Verdict v = check_sentence(ax.sentence, window, f, budget, ax.multilinear);
        base_ok = base_ok && v.holds;
        out.push_back({ax.name, std::move(v), ""});
    }
    AxiomVerdict v4{"Phi4", check_phi4(window, r, budget), ""};
    if (!base_ok) v4.note = "Phi1-Phi3 do not all hold; verdict outside the intended scope";
    if (v4.verdict.method == "exhaustive" && v4.verdict.holds) {
        Phi4Search probe(window, r, budget);
        if (probe.all_fitting()) v4.note = "every element is in the Fitting set; holds vacuously";
    }
    out.push_back(std::move(v4));
    std::vector<std::string> consts;
    for (size_t i = 0; i < b.constant_count(); ++i) consts.push_back(b.constant_name(i));
    for (const auto& p : polys) {
        AxiomInstance ax = phi5_prime(p, consts);
        out.push_back({ax.name, check_sentence(ax.sentence, window, p.field(), budget), ""});
    }
    return out;
}

// Saturation -----------------------------------------------------------------

namespace {

class WindowIdeal {
public:
    WindowIdeal(const Carrier& ax, std::vector<BasisId> monomials)
        : ax_(ax), monomials_(std::move(monomials)), space_(ax.field(), monomials_.size()) {
        for (size_t i = 0; i < monomials_.size(); ++i) col_[monomials_[i]] = i;
        for (size_t g = 0; g < ax.generator_count(); ++g) gens_.push_back(ax.basis_element(*ax.generator(g)));
    }

    std::optional<Vec> coords(const Element& e) const {
        Vec v(monomials_.size(), ax_.field().zero());
        for (const auto& [id, c] : e.terms) {
            auto it = col_.find(id);
            if (it == col_.end()) return std::nullopt;
            v[it->second] = c;
        }
        return v;
    }

    bool contains(const Element& e) const {
        auto v = coords(e);
        return v && space_.contains(*v);
    }

    // Adds e and closes under brackets with generators; true if enlarged.
    bool add(const Element& e) {
        std::vector<Element> queue;
        auto push = [&](const Element& x) {
            auto v = coords(x);
            if (v && space_.insert(std::move(*v))) queue.push_back(x);
        };
        size_t before = space_.size();
        push(e);
        while (!queue.empty()) {
            Element x = std::move(queue.back());
            queue.pop_back();
            for (const auto& g : gens_) push(ax_.bracket(x, g));
        }
        return space_.size() > before;
    }

    const std::vector<BasisId>& monomials() const { return monomials_; }
    std::vector<Vec> rows() const { return space_.canonical_basis(); }

private:
    const Carrier& ax_;
    std::vector<BasisId> monomials_;
    std::unordered_map<BasisId, size_t> col_;
    std::vector<Element> gens_;
    RowSpace space_;
};

std::vector<BasisId> ideal_monomials(const Ambient& a, int bound) {
    if (!a.ax_ptr() || bound < 1) fail(ErrorCode::EmptyWindow, "no monomials of degree <= " + std::to_string(bound));
    auto m = a.ax().window_basis(bound);
    if (m.empty()) fail(ErrorCode::EmptyWindow, "no monomials of degree <= " + std::to_string(bound));
    return m;
}

Radical to_radical(AmbientPtr a, int bound, const WindowIdeal& id) {
    Radical r;
    r.ambient = std::move(a);
    r.bound = bound;
    r.monomials = id.monomials();
    r.rows = id.rows();
    return r;
}

}  // namespace

Radical ideal_window(AmbientPtr ambient, const std::vector<Element>& s, int bound) {
    WindowIdeal id(ambient->ax(), ideal_monomials(*ambient, bound));
    for (const auto& e : s) id.add(e);
    return to_radical(ambient, bound, id);
}

Saturation saturate_radical(AmbientPtr ambient, const std::vector<Element>& s, const std::vector<QuasiIdentity>& q,
                            int bound) {
    auto monomials = ideal_monomials(*ambient, bound);
    const Carrier& ax = ambient->ax();
    WindowIdeal id(ax, std::move(monomials));
    for (const auto& e : s) id.add(e);
    std::vector<Element> subs;
    for (BasisId m : id.monomials()) subs.push_back(ax.basis_element(m));
    Saturation out{{}, 0};
    Evaluator ev(ax, ambient->field());
    while (true) {
        std::vector<Element> found;
        for (const auto& qi : q) {
            const size_t n = qi.vars.size();
            if (qi.constants.size() > ambient->algebra().constant_count())
                fail(ErrorCode::CarrierMismatch, "quasi-identity uses constants outside the coefficient algebra");
            std::vector<size_t> idx(n, 0);
            bool done = subs.empty() && n > 0;
            while (!done) {
                std::vector<Element> p;
                for (size_t k = 0; k < n; ++k) p.push_back(subs[idx[k]]);
                ev.set_point(std::move(p));
                bool premises = true;
                for (const auto& r : qi.premises)
                    if (!id.contains(ev.eval(r))) {
                        premises = false;
                        break;
                    }
                if (premises) {
                    Element c = ev.eval(qi.conclusion);
                    if (id.coords(c) && !id.contains(c)) found.push_back(std::move(c));
                }
                size_t k = n;
                done = true;
                while (k > 0) {
                    --k;
                    if (++idx[k] < subs.size()) {
                        done = false;
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }
        bool grew = false;
        for (const auto& e : found) grew = id.add(e) || grew;
        if (!grew) break;
        ++out.steps;
    }
    out.ideal = to_radical(ambient, bound, id);
    return out;
}

std::vector<QuasiIdentity> enumerate_valid_quasi_identities(const Window& window, const AlgebraSpec& algebra,
                                                            const QuasiIdentityBounds& bounds, uint64_t budget) {
    std::vector<std::string> vars;
    for (size_t i = 0; i < bounds.vars; ++i) vars.push_back("x" + std::to_string(i + 1));
    auto consts = algebra.constant_names();
    std::vector<TermPtr> letters;
    for (size_t i = 0; i < bounds.vars; ++i) letters.push_back(Term::var(i));
    for (size_t i = 0; i < consts.size(); ++i) letters.push_back(Term::constant(i));
    // Left-normed atoms; length-2 prefixes use increasing letters.
    std::vector<TermPtr> atoms;
    std::vector<std::pair<TermPtr, size_t>> level;
    for (size_t i = 0; i < letters.size(); ++i) {
        atoms.push_back(letters[i]);
        level.push_back({letters[i], i});
    }
    for (size_t len = 2; len <= bounds.length; ++len) {
        std::vector<std::pair<TermPtr, size_t>> next;
        for (const auto& [t, last] : level)
            for (size_t i = 0; i < letters.size(); ++i) {
                if (len == 2 && i <= last) continue;
                TermPtr b = Term::bracket(t, letters[i]);
                atoms.push_back(b);
                next.push_back({b, i});
            }
        level = std::move(next);
    }
    // Premise sets: subsets of atoms with at most bounds.premises members.
    std::vector<std::vector<size_t>> premise_sets{{}};
    for (size_t k = 1; k <= bounds.premises; ++k) {
        std::vector<std::vector<size_t>> grown;
        for (const auto& ps : premise_sets) {
            if (ps.size() != k - 1) continue;
            for (size_t a = ps.empty() ? 0 : ps.back() + 1; a < atoms.size(); ++a) {
                auto n = ps;
                n.push_back(a);
                grown.push_back(std::move(n));
            }
        }
        premise_sets.insert(premise_sets.end(), grown.begin(), grown.end());
    }
    std::vector<QuasiIdentity> out;
    for (const auto& ps : premise_sets)
        for (size_t c = 0; c < atoms.size(); ++c) {
            if (std::find(ps.begin(), ps.end(), c) != ps.end()) continue;
            QuasiIdentity q;
            q.vars = vars;
            q.constants = consts;
            for (size_t i : ps) q.premises.push_back(atoms[i]);
            q.conclusion = atoms[c];
            if (check_sentence(q, window, algebra.field, budget).holds) out.push_back(std::move(q));
        }
    return out;
}

std::optional<uint64_t> discriminates(AmbientPtr ambient, const std::vector<Element>& relations,
                                      const std::vector<Element>& targets, uint64_t budget) {
    if (ambient->size() > budget)
        fail(ErrorCode::CapacityExceeded, "homomorphism search over " + std::to_string(ambient->size()) + " points");
    std::vector<Element> fs = relations;
    fs.insert(fs.end(), targets.begin(), targets.end());
    for (uint64_t i = 0; i < ambient->size(); ++i) {
        auto vals = ambient->evaluate(fs, ambient->point(i));
        bool ok = true;
        for (size_t k = 0; k < vals.size() && ok; ++k)
            ok = k < relations.size() ? vals[k].is_zero() : !vals[k].is_zero();
        if (ok) return i;
    }
    return std::nullopt;
}

namespace {

// Radical rows keyed by monomial names so that two coordinate algebras
// built independently compare.
std::map<std::string, size_t> name_columns(const Radical& r) {
    std::map<std::string, size_t> m;
    for (size_t i = 0; i < r.monomials.size(); ++i) m[r.ambient->ax().basis_name(r.monomials[i])] = i;
    return m;
}

bool same_radical(const Radical& a, const Radical& b) {
    auto ca = name_columns(a), cb = name_columns(b);
    if (ca.size() != cb.size() || a.rows.size() != b.rows.size()) return false;
    std::vector<size_t> perm(a.monomials.size());
    for (const auto& [name, i] : ca) {
        auto it = cb.find(name);
        if (it == cb.end()) return false;
        perm[it->second] = i;
    }
    const Field& f = a.ambient->carrier().field();
    RowSpace sa(f, a.monomials.size());
    for (const auto& r : a.rows) sa.insert(r);
    for (const auto& r : b.rows) {
        Vec v(a.monomials.size(), f.zero());
        for (size_t j = 0; j < r.size(); ++j) v[perm[j]] = f.coerce(b.ambient->carrier().field(), r[j]);
        if (!sa.contains(v)) return false;
    }
    return true;
}

}  // namespace

GeoEquivResult geo_equiv_probe(CarrierPtr b, int trunc_b, CarrierPtr c, int trunc_c,
                               const std::vector<EquationSystem>& corpus, int bound, uint64_t budget) {
    GeoEquivResult out;
    for (size_t i = 0; i < corpus.size(); ++i) {
        auto ab = Ambient::make(corpus[i], b, trunc_b);
        auto ac = Ambient::make(corpus[i], c, trunc_c);
        Radical rb = radical(solve(corpus[i], ab, budget), bound);
        Radical rc = radical(solve(corpus[i], ac, budget), bound);
        ++out.checked;
        if (!same_radical(rb, rc)) {
            out.equivalent = false;
            out.first_divergence = i;
            return out;
        }
    }
    return out;
}

}  // namespace liegeo
