// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "liegeo/free_lie.hpp"
#include "liegeo/geometry.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/logic.hpp"
#include "liegeo/metabelian.hpp"
#include "liegeo/module.hpp"
#include "liegeo/reduction.hpp"
#include "liegeo/structure.hpp"
#include "oracles/fraction_rank.hpp"
#include "oracles/free_assoc.hpp"
#include "oracles/metabelian_wreath.hpp"
#include "support/random.hpp"

using namespace liegeo;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << "s";
    return o.str();
}

AmbientPtr ambient_of(const EquationSystem& sys, int trunc) { return Ambient::make(sys, default_carrier(sys), trunc); }

PointSet random_subset(testgen::Rng& rng, uint64_t n, double p) {
    PointSet out;
    for (uint64_t i = 0; i < n; ++i)
        if (rng.coin(p)) out.push_back(i);
    return out;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

size_t intersection_dim(const Field& f, const std::vector<Vec>& u, const std::vector<Vec>& w, size_t n) {
    Matrix m(f, n, u.size() + w.size());
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t c = 0; c < n; ++c) m.at(c, i) = u[i][c];
    for (size_t j = 0; j < w.size(); ++j)
        for (size_t c = 0; c < n; ++c) m.at(c, u.size() + j) = f.neg(w[j][c]);
    return nullspace(m).size();
}

// Evaluate an element of A[X] under generator images, through the basis
// factorization only.
class HomEval {
public:
    HomEval(const Carrier& src, const Carrier& dst, std::vector<Element> images)
        : src_(src), dst_(dst), images_(std::move(images)) {}

    Element operator()(const Element& e) {
        Element out;
        for (const auto& [id, c] : e.terms) out = dst_.axpy(out, c, basis(id));
        return out;
    }

private:
    Element basis(BasisId id) {
        auto it = memo_.find(id);
        if (it != memo_.end()) return it->second;
        Element v;
        if (auto g = src_.generator_index(id)) {
            v = images_.at(*g);
        } else {
            auto fac = src_.factors(id);
            if (!fac) fail(ErrorCode::InvariantViolation, "basis element without factors");
            v = dst_.bracket(basis(fac->first), basis(fac->second));
        }
        memo_.emplace(id, v);
        return v;
    }

    const Carrier& src_;
    const Carrier& dst_;
    std::vector<Element> images_;
    std::map<BasisId, Element> memo_;
};

// 1 ---------------------------------------------------------------------------
Outcome free_lie_core() {
    auto t0 = Clock::now();
    auto f = FreeLieAlgebra::make(Field::rationals(), 2);
    std::vector<Element> basis;
    for (BasisId id : f->window_basis(5)) basis.push_back(f->basis_element(id));
    size_t anti = 0, jacobi = 0, assoc = 0, nonzero = 0;
    for (const auto& u : basis)
        for (const auto& v : basis) {
            Element uv = f->bracket(u, v);
            if (!f->add(uv, f->bracket(v, u)).is_zero()) ++anti;
            if (oracle::expand(*f, uv) != oracle::commutator(oracle::expand(*f, u), oracle::expand(*f, v))) ++assoc;
        }
    for (const auto& u : basis)
        for (const auto& v : basis)
            for (const auto& w : basis) {
                if (!f->bracket(f->bracket(u, v), w).is_zero()) ++nonzero;
                Element j = f->add(f->bracket(f->bracket(u, v), w),
                                   f->add(f->bracket(f->bracket(v, w), u), f->bracket(f->bracket(w, u), v)));
                if (!j.is_zero()) ++jacobi;
            }
    std::vector<size_t> dims(6, 0);
    for (BasisId id : f->window_basis(6)) ++dims[static_cast<size_t>(f->degree(f->basis_element(id)) - 1)];
    const std::vector<size_t> expected{2, 1, 2, 3, 6, 9};
    bool oracle_dims = true;
    for (int n = 1; n <= 6; ++n) oracle_dims = oracle_dims && oracle::count_lyndon(2, n) == dims[static_cast<size_t>(n - 1)];
    double s = seconds_since(t0);
    bool ok = anti == 0 && jacobi == 0 && assoc == 0 && dims == expected && oracle_dims && s < 10.0;
    std::ostringstream d;
    d << basis.size() << " basis elements; violations anti=" << anti << " jacobi=" << jacobi
      << " assoc-oracle=" << assoc << " (" << nonzero << " nonzero triple products); dims=(";
    for (size_t i = 0; i < dims.size(); ++i) d << (i ? "," : "") << dims[i];
    d << ") in " << fmt_seconds(s);
    return {ok, d.str()};
}

// 2 ---------------------------------------------------------------------------
Outcome radical_laws() {
    auto t0 = Clock::now();
    auto sys = parse_system("algebra metabelian rank=2 field=GF(2)\nvars x\n");
    auto amb = ambient_of(sys, 3);
    const Field& f = amb->field();
    const int bound = 3;
    testgen::Rng rng(2026);
    auto mons = amb->ax().window_basis(bound);
    size_t bad = 0;
    const int trials = 60;
    for (int it = 0; it < trials; ++it) {
        PointSet y1 = random_subset(rng, amb->size(), 0.25), y2 = random_subset(rng, amb->size(), 0.25);
        auto r1 = radical(amb, y1, bound), r2 = radical(amb, y2, bound);
        auto ru = radical(amb, set_union(y1, y2), bound);
        if (!(r1.includes(ru) && r2.includes(ru) &&
              intersection_dim(f, r1.rows, r2.rows, r1.monomials.size()) == ru.dimension()))
            ++bad;
        PointSet z;
        for (uint64_t p : y1)
            if (rng.coin()) z.push_back(p);
        if (!radical(amb, z, bound).includes(r1)) ++bad;
        std::vector<Element> s;
        for (int k = 0, n = static_cast<int>(rng.uniform(1, 2)); k < n; ++k) {
            ElementBuilder b(f);
            for (BasisId m : mons)
                if (rng.coin(0.3)) b.add(m, f.one());
            s.push_back(b.finish());
        }
        auto vs = solve(amb, s).points;
        auto rad = radical(amb, vs, bound);
        if (solve(amb, rad.elements()).points != vs) ++bad;
    }
    double sec = seconds_since(t0);
    return {bad == 0 && sec < 30.0, std::to_string(trials) + " random families, " + std::to_string(bad) +
                                        " violations in " + fmt_seconds(sec)};
}

// 3 ---------------------------------------------------------------------------
Outcome point_hom_correspondence() {
    struct Case {
        std::string text;
        int trunc;
    };
    std::vector<Case> cases;
    for (const char* eq : {"x - a1", "[x,a1]", "[x,a2]", "0", "a1", "[x,a1] + [x,a2]", "[[x,a1],a2]"})
        cases.push_back({std::string("algebra metabelian rank=2 field=GF(2)\nvars x\neq ") + eq + " = 0\n", 2});
    for (const char* eq : {"[x,y]", "x - y", "[[x,y],x]", "x"})
        cases.push_back({std::string("algebra zero field=GF(2)\nvars x, y\ncarrier heisenberg\neq ") + eq + " = 0\n", 2});
    size_t agree = 0;
    std::string first_bad;
    for (const auto& c : cases) {
        auto sys = parse_system(c.text);
        auto amb = ambient_of(sys, c.trunc);
        auto y = solve(sys, amb);
        auto rad = radical(y, 3).elements();
        const Window& w = amb->window();
        const Carrier& b = amb->carrier();
        const size_t nc = sys.algebra.constant_count();
        const size_t n = sys.vars.size();
        uint64_t homs = 0;
        std::vector<uint64_t> idx(n, 0);
        while (true) {
            std::vector<Element> images;
            for (size_t i = 0; i < nc; ++i) images.push_back(b.constant(i));
            for (size_t i = 0; i < n; ++i) images.push_back(w.element(idx[i]));
            HomEval h(amb->ax(), b, images);
            bool kills = true;
            for (const auto& r : rad)
                if (!h(r).is_zero()) {
                    kills = false;
                    break;
                }
            if (kills) ++homs;
            size_t k = 0;
            while (k < n && ++idx[k] == w.size()) idx[k++] = 0;
            if (k == n) break;
        }
        if (homs == y.size())
            ++agree;
        else if (first_bad.empty())
            first_bad = c.text;
    }
    return {agree == cases.size() && cases.size() >= 10,
            std::to_string(agree) + "/" + std::to_string(cases.size()) + " sets with |Y| = #Hom" +
                (first_bad.empty() ? "" : "; first mismatch: " + first_bad)};
}

// 4 ---------------------------------------------------------------------------
Outcome equivalence_functors() {
    std::vector<std::pair<std::string, int>> texts;
    for (const char* eq : {"x - a1", "[x,a1]", "[x,a2] + [x,a1]", "0", "a1", "[x,a2]", "[[x,a1],a2]", "x - [a2,a1]"})
        texts.push_back({std::string("algebra metabelian rank=2 field=GF(2)\nvars x\neq ") + eq + " = 0\n", 3});
    for (const char* eq : {"x - a2", "[x,a1]", "[x,[a1,a2]]", "0", "x - a1 - a2", "[x,a1] + [x,a2]"})
        texts.push_back({std::string("algebra free rank=2 field=GF(2)\nvars x\neq ") + eq + " = 0\n", 2});
    for (const char* eq : {"[x,y]", "x - y", "[[x,y],x]", "x", "0", "[x,y] + x"})
        texts.push_back({std::string("algebra zero field=GF(2)\nvars x, y\ncarrier heisenberg\neq ") + eq + " = 0\n", 2});
    size_t ok = 0;
    for (const auto& [text, trunc] : texts) {
        auto sys = parse_system(text);
        auto y = solve(sys, ambient_of(sys, trunc));
        auto cp = functor_f(y, 3);
        auto g = functor_g(cp);
        if (g.points == y.points && functor_f(g, 3) == cp) ++ok;
    }
    return {ok == texts.size() && texts.size() >= 20,
            std::to_string(ok) + "/" + std::to_string(texts.size()) + " sets with G(F(Y)) = Y and F(G(F(Y))) = F(Y)"};
}

// 5 ---------------------------------------------------------------------------
Outcome union_construction() {
    const std::string base = "algebra free rank=2 field=GF(2)\nvars x\n";
    auto amb = ambient_of(parse_system(base), 3);
    if (zero_divisor_probe(amb->window()).has_value()) return {false, "probe found zero divisors"};
    std::vector<std::string> eqs{"x - a1", "x - a2", "[x,a1]", "[x,a2]", "x - [a1,a2]", "[x,[a1,a2]]", "a1", "[x,a1] + [x,a2]"};
    size_t pairs = 0, ok = 0;
    for (size_t i = 0; i < eqs.size(); ++i)
        for (size_t j = i; j < eqs.size(); ++j) {
            auto z1 = solve(parse_system(base + "eq " + eqs[i] + " = 0\n"), amb);
            auto z2 = solve(parse_system(base + "eq " + eqs[j] + " = 0\n"), amb);
            ++pairs;
            if (solve(amb, union_system(z1, z2)).points == set_union(z1.points, z2.points)) ++ok;
        }
    return {ok == pairs && pairs >= 20, std::to_string(ok) + "/" + std::to_string(pairs) + " pairs exact on F(2)/GF(2) degree 3"};
}

// 6 ---------------------------------------------------------------------------
Outcome metabelian_axioms() {
    std::ostringstream d;
    bool ok = true;
    for (int p : {2, 3}) {
        Window w(MetabelianAlgebra::make(Field::prime(p), 2), 3);
        auto suite = phi_suite(w, 2, {});
        bool pass = suite.size() == 4;
        for (const auto& v : suite) pass = pass && v.verdict.holds;
        d << "GF(" << p << ") Phi1-4 " << (pass ? "pass" : "fail") << "; ";
        ok = ok && pass;
    }
    Field f2 = Field::prime(2);
    auto b = StructureAlgebra::nonqw(f2);
    Window w(b, 2);
    Verdict v2 = check_sentence(phi2().sentence, w, f2);
    bool phi2_ok = !v2.holds && v2.witness && b->render((*v2.witness)[0]) == "a1" && b->render((*v2.witness)[1]) == "b1";
    d << "nonqw Phi2 " << (v2.holds ? "holds" : "fails") << " witness "
      << (v2.witness ? render_witness(v2, *b, phi2().sentence.vars) : "-") << "; ";
    ok = ok && phi2_ok;
    // [x,a_i] = 0 & [x,b_i] = 0 -> [x,y] = 0 for i = 1, 2.
    for (size_t i : {0u, 2u}) {
        QuasiIdentity q;
        q.vars = {"x", "y"};
        q.constants = {"a1", "b1", "a2", "b2"};
        q.premises = {Term::bracket(Term::var(0), Term::constant(i)), Term::bracket(Term::var(0), Term::constant(i + 1))};
        q.conclusion = Term::bracket(Term::var(0), Term::var(1));
        Verdict v = check_sentence(q, w, f2);
        bool good = !v.holds && v.witness;
        if (good) {
            const auto& x = (*v.witness)[0];
            const auto& y = (*v.witness)[1];
            good = b->bracket(x, b->constant(i)).is_zero() && b->bracket(x, b->constant(i + 1)).is_zero() &&
                   !b->bracket(x, y).is_zero();
        }
        d << "QI(" << q.constants[i] << "," << q.constants[i + 1] << ") "
          << (v.witness ? render_witness(v, *b, q.vars) : "holds") << (i == 0 ? "; " : "");
        ok = ok && good;
    }
    return {ok, d.str()};
}

// 7 ---------------------------------------------------------------------------
Outcome fitting_agreement() {
    auto alg = MetabelianAlgebra::make(Field::prime(2), 2);
    Window w(alg, 3);
    auto elems = w.elements();
    const auto& ring = alg->ring();
    std::vector<oracle::Wreath> images;
    for (const auto& e : elems) images.push_back(oracle::wreath_image(*alg, e));
    size_t disagree = 0, fit = 0;
    for (size_t i = 0; i < elems.size(); ++i) {
        bool all = true, all_oracle = true;
        for (size_t j = 0; j < elems.size(); ++j) {
            if (!alg->bracket(alg->bracket(elems[i], elems[j]), elems[i]).is_zero()) all = false;
            auto uyu = oracle::wreath_bracket(oracle::wreath_bracket(images[i], images[j], ring), images[i], ring);
            if (!oracle::wreath_equal(uyu, oracle::wreath_zero(ring, 2), alg->field())) all_oracle = false;
        }
        bool fast = is_in_fitting(*alg, elems[i]);
        if (fast != all || fast != all_oracle) ++disagree;
        if (fast) ++fit;
    }
    return {disagree == 0, std::to_string(elems.size()) + " elements, " + std::to_string(fit) + " in Fit, " +
                               std::to_string(disagree) + " disagreements"};
}

// 8 ---------------------------------------------------------------------------
Outcome dimension_theorem() {
    bool ok = true;
    std::ostringstream d;
    for (const char* fs : {"GF(2)", "Q"}) {
        Field f = Field::parse(fs);
        d << fs << " dims";
        for (size_t s = 0; s <= 3; ++s) {
            auto h = build_extension(f, 2, ModulePresentation::free_module(metabelian_ring(f, 2), s));
            int64_t dim = dimension(h);
            d << " " << dim;
            ok = ok && dim == static_cast<int64_t>(s);
        }
        d << "; ";
    }
    testgen::Rng rng(88);
    auto ring = make_ring({"x1", "x2"}, Field::rationals());
    size_t match = 0;
    std::vector<int64_t> ranks;
    for (int t = 0; t < 10; ++t) {
        const size_t k = static_cast<size_t>(rng.uniform(1, 4));
        PolyMatrix a(ring, 4, k), b(ring, k, 4), m(ring, 4, 4);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < k; ++j) {
                a.at(i, j) = testgen::random_poly(rng, ring, 2, 2);
                b.at(j, i) = testgen::random_poly(rng, ring, 2, 2);
            }
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) {
                Poly s(ring);
                for (size_t l = 0; l < k; ++l) s = s + a.at(i, l) * b.at(l, j);
                m.at(i, j) = s;
            }
        int64_t got = module_rank(ModulePresentation(ring, 4, m));
        int64_t want = 4 - static_cast<int64_t>(oracle::fraction_rank(m));
        ranks.push_back(got);
        if (got == want) ++match;
    }
    ok = ok && match == 10;
    d << match << "/10 random 4x4 matrices match the fraction-field oracle (module ranks";
    for (auto r : ranks) d << " " << r;
    d << ")";
    return {ok, d.str()};
}

// 9 ---------------------------------------------------------------------------
Outcome reduction_iff() {
    auto t0 = Clock::now();
    size_t checked = 0, bad = 0;
    for (int q : {2, 3}) {
        auto f = FreeLieAlgebra::make(Field::prime(q), 2);
        const Field& k = f->field();
        Element a1 = f->generator_element(0), a2 = f->generator_element(1);
        Parallelepipedon p(f, {{{a1, f->bracket(a1, a2)}, Element{}}});
        std::vector<std::vector<Scalar>> tuples;
        std::vector<Point> pts;
        for (uint64_t i = 0; i < p.size(); ++i) {
            tuples.push_back(p.tuple(i));
            pts.push_back(p.point(tuples.back()));
        }
        // Monomials of degree <= 2 in y1, y2.
        std::vector<Monomial> monos;
        for (uint32_t e1 = 0; e1 <= 2; ++e1)
            for (uint32_t e2 = 0; e1 + e2 <= 2; ++e2) monos.push_back({e1, e2});
        uint64_t total = 1;
        for (size_t i = 0; i < monos.size(); ++i) total *= static_cast<uint64_t>(q);
        for (uint64_t code = 0; code < total; ++code) {
            std::vector<Poly::Term> terms;
            uint64_t c = code;
            for (const auto& m : monos) {
                terms.emplace_back(m, k.from_int(static_cast<int64_t>(c % static_cast<uint64_t>(q))));
                c /= static_cast<uint64_t>(q);
            }
            Poly g = Poly::from_terms(p.ring(), terms);
            auto lifted = poly_to_lie(g, p);
            Evaluator ev(*f, k);
            for (size_t i = 0; i < pts.size(); ++i) {
                ev.set_point(pts[i]);
                bool lie_zero = ev.eval(lifted.term).is_zero();
                auto coords = p.coordinates(pts[i]);
                bool poly_zero = coords && k.is_zero(g.evaluate(*coords));
                if (lie_zero != poly_zero) ++bad;
                ++checked;
            }
        }
    }
    // Round trip on every subset of the 9-point parallelepiped over GF(3).
    auto f3 = FreeLieAlgebra::make(Field::prime(3), 2);
    Element a1 = f3->generator_element(0), a2 = f3->generator_element(1);
    Parallelepipedon p3(f3, {{{a1, f3->bracket(a1, a2)}, Element{}}});
    size_t trips = 0, trip_bad = 0;
    for (uint32_t mask = 0; mask < (1u << p3.size()); ++mask) {
        std::vector<Point> yf;
        PointSet idx;
        for (uint64_t i = 0; i < p3.size(); ++i)
            if (mask & (1u << i)) {
                yf.push_back(p3.point(p3.tuple(i)));
                idx.push_back(i);
            }
        auto yk = to_coordinates(p3, yf);
        PointSet back_idx;
        for (const auto& t : yk) back_idx.push_back(p3.tuple_index(t));
        auto back = to_points(p3, yk);
        bool same = back_idx == idx && back.size() == yf.size();
        for (size_t i = 0; same && i < yf.size(); ++i) same = f3->equal(back[i][0], yf[i][0]);
        if (!same) ++trip_bad;
        ++trips;
    }
    double s = seconds_since(t0);
    return {bad == 0 && trip_bad == 0 && s < 60.0,
            std::to_string(checked) + " (g, p) pairs, " + std::to_string(bad) + " iff failures; " +
                std::to_string(trips) + " subset round trips, " + std::to_string(trip_bad) + " failures; " +
                fmt_seconds(s)};
}

// 10 --------------------------------------------------------------------------
Outcome subspace_as_algebraic_set_check() {
    auto f = FreeLieAlgebra::make(Field::prime(2), 2);
    Element a1 = f->generator_element(0), a2 = f->generator_element(1);
    Element a12 = f->bracket(a1, a2);
    std::vector<std::pair<Element, Element>> cases = {
        {a1, Element{}}, {a2, a1}, {a12, a1}, {f->add(a1, a2), a12}, {f->bracket(a12, a1), f->add(a2, a12)}};
    Window w(f, 4);
    size_t ok = 0;
    for (const auto& [v, c] : cases) {
        auto rep = subspace_as_algebraic_set(f, {v}, c, 4);
        PointSet direct;
        for (uint64_t i = 0; i < w.size(); ++i)
            if (f->bracket(f->sub(w.element(i), c), v).is_zero()) direct.push_back(i);
        PointSet line{*w.index_of(c), *w.index_of(f->add(c, v))};
        std::sort(line.begin(), line.end());
        if (rep.equal && rep.solutions == direct && direct == line) ++ok;
    }
    return {ok == cases.size(), std::to_string(ok) + "/" + std::to_string(cases.size()) +
                                    " lines c + lin{v} cut out exactly in the " + std::to_string(w.size()) +
                                    "-element window"};
}

// 11 --------------------------------------------------------------------------
Outcome one_variable_classifier() {
    const int degree = 4;
    const std::string head = "algebra free rank=2 field=GF(2)\nvars x\n";
    bool examples = true;
    {
        auto w = classify_one_variable(parse_system(head + "eq 0 = 0\n"), degree);
        auto p = classify_one_variable(parse_system(head + "eq x - a1 = 0\n"), degree);
        auto l = classify_one_variable(parse_system(head + "eq [x,a1] = 0\n"), degree);
        examples = w.kind == OneVariableKind::WholeAlgebra && p.kind == OneVariableKind::BoundedWithin &&
                   p.bound->total_dim() == 0 && l.kind == OneVariableKind::BoundedWithin &&
                   l.bound->str() == "(lin{a1} + 0)";
    }
    const std::vector<std::vector<std::string>> corpus = {
        {"0"},           {"x - a1"},          {"[x,a1]"},          {"[x,a2]"},
        {"[x,x]"},       {"[x,a1] - a2"},     {"a1"},              {"x - [a1,a2]"},
        {"[x,[a1,a2]]"}, {"[[x,a1],a2]"},     {"[x,a1] + [x,a2]"}, {"x - a1 - a2"},
        {"[x - a1, a2]"}, {"[x,[[a1,a2],a2]]"}, {"[x,[[[a1,a2],a2],a2]]"}, {"[x,a1] - [a2,a1]"},
        {"[[x,a1],x]"},  {"x + x"},           {"[x,a1] + [a1,x]"}, {"[x,a1]", "[x,a2]"}};
    auto f = FreeLieAlgebra::make(Field::prime(2), 2);
    Window w(f, degree);
    size_t ok = 0;
    std::map<std::string, int> tally;
    std::string first_bad;
    for (const auto& eqs : corpus) {
        std::string text = head;
        for (const auto& e : eqs) text += "eq " + e + " = 0\n";
        auto sys = parse_system(text);
        auto amb = ambient_of(sys, 1);
        bool zero = true;
        for (const auto& e : sys.equations) zero = zero && amb->lower(e).is_zero();
        std::vector<Element> sols;
        for (uint64_t i = 0; i < w.size(); ++i) {
            bool all = true;
            for (const auto& e : sys.equations) all = all && evaluate(e, {w.element(i)}, *f, sys.field()).is_zero();
            if (all) sols.push_back(w.element(i));
        }
        int top = 0;
        for (const auto& s : sols) top = std::max(top, f->degree(s));
        OneVariableKind want = zero           ? OneVariableKind::WholeAlgebra
                               : sols.empty() ? OneVariableKind::EmptyWithin
                               : top >= degree ? OneVariableKind::Unknown
                                               : OneVariableKind::BoundedWithin;
        auto got = classify_one_variable(sys, degree);
        bool good = got.kind == want;
        if (good && want == OneVariableKind::BoundedWithin) {
            for (const auto& s : sols) good = good && got.bound->contains({s});
            std::vector<Element> diffs;
            for (size_t i = 1; i < sols.size(); ++i) diffs.push_back(f->sub(sols[i], sols[0]));
            Matrix m(f->field(), diffs.size(), w.dimension());
            for (size_t i = 0; i < diffs.size(); ++i)
                for (const auto& [id, c] : diffs[i].terms)
                    m.at(i, static_cast<size_t>(std::find(w.basis().begin(), w.basis().end(), id) - w.basis().begin())) = c;
            good = good && got.bound->total_dim() == rank(m) && got.exact == (got.bound->size() == sols.size());
        }
        ++tally[one_variable_kind_name(got.kind)];
        if (good)
            ++ok;
        else if (first_bad.empty())
            first_bad = eqs[0];
    }
    std::ostringstream d;
    d << "examples " << (examples ? "ok" : "wrong") << "; " << ok << "/" << corpus.size() << " systems agree (";
    bool first = true;
    for (const auto& [k, n] : tally) {
        d << (first ? "" : ", ") << k << " " << n;
        first = false;
    }
    d << ")";
    if (!first_bad.empty()) d << "; first mismatch: " << first_bad;
    return {examples && ok == corpus.size(), d.str()};
}

// 12 --------------------------------------------------------------------------
Outcome saturation_vs_kernel() {
    const std::string text = "algebra zero field=GF(2)\nvars x, y\ncarrier heisenberg\n";
    auto sys = parse_system(text);
    auto a = ambient_of(sys, 2);
    if (a->window().size() > 16) return {false, "carrier window larger than 16"};
    auto corpus = enumerate_valid_quasi_identities(a->window(), sys.algebra, {3, 3, 1});
    const std::vector<std::vector<std::string>> systems = {{}, {"[x,y]"}, {"x"}, {"x - y"}, {"[[x,y],x]"}};
    size_t ok = 0;
    for (const auto& terms : systems) {
        std::vector<Element> s;
        for (const auto& t : terms) s.push_back(a->lower(parse_term(t, sys)));
        auto sat = saturate_radical(a, s, corpus, 3);
        auto rad = radical(solve(a, s), 3);
        if (sat.ideal == rad) ++ok;
    }
    return {ok == systems.size(), std::to_string(ok) + "/" + std::to_string(systems.size()) +
                                      " systems; corpus of " + std::to_string(corpus.size()) +
                                      " valid quasi-identities on the " + std::to_string(a->window().size()) +
                                      "-element Heisenberg carrier"};
}

// 13 --------------------------------------------------------------------------
struct Run {
    int status;
    std::string out;
};

Run run(const std::string& cmd) {
    Run r{-1, ""};
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

Outcome cli_determinism() {
    const std::string cli = LIEGEO_CLI_PATH;
    const std::string dir = LIEGEO_CORPUS_DIR;
    auto sysf = [&](const std::string& n) { return " --system " + dir + "/" + n; };
    const std::vector<std::string> window = {"point.eqs", "empty.eqs", "zero.eqs", "line.eqs", "two_points.eqs",
                                             "center.eqs", "mb_point.eqs", "mb_line.eqs", "ab_x.eqs", "ab_diag.eqs",
                                             "ab_comm.eqs", "ab_comm3.eqs"};
    const std::vector<std::string> polytope = {"subspace.eqs", "polytope_point.eqs", "plane.eqs"};
    std::vector<std::string> cmds;
    for (const auto& n : window) {
        cmds.push_back("solve" + sysf(n));
        cmds.push_back("radical" + sysf(n) + " --bound 2");
    }
    for (const auto& n : {"point.eqs", "two_points.eqs", "center.eqs", "mb_point.eqs", "ab_x.eqs"})
        cmds.push_back("decompose" + sysf(n));
    for (const auto& n : {"point.eqs", "empty.eqs", "zero.eqs", "line.eqs"}) cmds.push_back("classify1" + sysf(n) + " --bound 4");
    for (const auto& n : polytope) {
        cmds.push_back("solve" + sysf(n));
        cmds.push_back("reduce" + sysf(n));
    }
    cmds.push_back("lift" + sysf("plane.eqs") + " --poly " + dir + "/axes.poly");
    cmds.push_back("axioms --carrier mb --rank 2 --field \"GF(2)\" --trunc 3");
    cmds.push_back("axioms --carrier nonqw --trunc 2");
    cmds.push_back("geoeq --left abelian:2 --right heisenberg" + sysf("ab_x.eqs") + sysf("ab_diag.eqs") +
                   sysf("ab_comm.eqs") + sysf("ab_comm3.eqs"));
    cmds.push_back("dims" + sysf("module.eqs"));
    cmds.push_back("dims --module 2");
    size_t runs = 0, differ = 0, failed = 0;
    std::string first_bad;
    for (const auto& c : cmds)
        for (const char* format : {"text", "machine"}) {
            std::string full = cli + " " + c + " --format " + format;
            Run r1 = run(full), r2 = run(full);
            ++runs;
            if (r1.status != 0 || r2.status != 0) {
                ++failed;
                if (first_bad.empty()) first_bad = c + " (exit " + std::to_string(r1.status) + ")";
            } else if (r1.out != r2.out) {
                ++differ;
                if (first_bad.empty()) first_bad = c;
            }
        }
    std::string d = std::to_string(runs) + " command/format pairs run twice, " + std::to_string(differ) +
                    " differ, " + std::to_string(failed) + " failed";
    if (!first_bad.empty()) d += "; first: " + first_bad;
    return {differ == 0 && failed == 0, d};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"free-Lie core correctness", free_lie_core},
        {"radical laws", radical_laws},
        {"point-homomorphism correspondence", point_hom_correspondence},
        {"equivalence functors", equivalence_functors},
        {"union construction", union_construction},
        {"metabelian axioms", metabelian_axioms},
        {"Fit/Fit' agreement", fitting_agreement},
        {"dimension via module rank", dimension_theorem},
        {"parallelepiped reduction iff-property", reduction_iff},
        {"subspace as algebraic set", subspace_as_algebraic_set_check},
        {"one-variable classifier", one_variable_classifier},
        {"saturation vs kernel", saturation_vs_kernel},
        {"CLI determinism", cli_determinism},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1 < 10 ? " " : "") << i + 1 << " "
                  << criteria[i].first << ": " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<size_t>(failures)) << "/" << criteria.size() << " criteria pass"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
