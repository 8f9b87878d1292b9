#include <gtest/gtest.h>

#include <functional>

#include "liegeo/reduction.hpp"
#include "support/random.hpp"

using namespace liegeo;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvariantViolation;
}

struct Ctx {
    FreeLiePtr f;
    Element a1, a2, a3;
};

Ctx ctx(int p, int rank = 2) {
    Ctx c;
    auto f = FreeLieAlgebra::make(Field::prime(p), rank);
    c.f = f;
    c.a1 = f->generator_element(0);
    c.a2 = f->generator_element(1);
    if (rank > 2) c.a3 = f->generator_element(2);
    return c;
}

TermNames names(const Ctx& c, std::vector<std::string> vars = {"x"}) {
    std::vector<std::string> consts;
    for (size_t i = 0; i < c.f->constant_count(); ++i) consts.push_back(c.f->constant_name(i));
    return TermNames{std::move(vars), std::move(consts), c.f->field()};
}

// All polynomials in the ring with exponents <= max per variable and total
// degree <= deg.
std::vector<Poly> all_polys(const RingPtr& ring, int deg) {
    std::vector<Monomial> monos;
    const size_t n = ring->arity();
    std::function<void(size_t, Monomial&, int)> rec = [&](size_t i, Monomial& m, int left) {
        if (i == n) {
            monos.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[i] = static_cast<uint32_t>(e);
            rec(i + 1, m, left - e);
        }
        m[i] = 0;
    };
    Monomial m(n, 0);
    rec(0, m, deg);
    const Field& k = ring->coeffs;
    const uint64_t q = static_cast<uint64_t>(k.size());
    uint64_t total = 1;
    for (size_t i = 0; i < monos.size(); ++i) total *= q;
    std::vector<Poly> out;
    for (uint64_t code = 0; code < total; ++code) {
        std::vector<Poly::Term> terms;
        uint64_t c = code;
        for (const auto& mono : monos) {
            terms.emplace_back(mono, k.element(static_cast<int64_t>(c % q)));
            c /= q;
        }
        out.push_back(Poly::from_terms(ring, terms));
    }
    return out;
}

}  // namespace

TEST(SEquations, Shapes) {
    auto c = ctx(2, 3);
    auto x = Term::var(0);
    EXPECT_EQ(render_term(s_equation(*c.f, {c.a1}, x), names(c)), "[x,a1]");
    EXPECT_EQ(render_term(s_equation(*c.f, {c.a1, c.a2}, x), names(c)), "[[x,a1],[a2,a1]]");
    EXPECT_EQ(render_term(s_equation(*c.f, {}, x), names(c)), "x");
    std::vector<Element> basis = {c.a1, c.a2, c.a3};
    for (size_t m = 1; m <= 3; ++m) {
        std::vector<Element> b(basis.begin(), basis.begin() + static_cast<long>(m));
        for (const auto& v : b) EXPECT_TRUE(s_value(*c.f, b, v).is_zero());
        EXPECT_FALSE(s_value(*c.f, b, c.f->bracket(c.a1, c.a2)).is_zero());
    }
    EXPECT_EQ(code_of([&] { s_equation(*c.f, {c.a1, c.f->scale(c.a1, c.f->field().one())}, x); }),
              ErrorCode::DependentBasis);
    auto aff = s_affine(*c.f, {c.a1}, c.f->bracket(c.a1, c.a2), x);
    EXPECT_EQ(render_term(aff, names(c)), "[x - [a1,a2],a1]");
}

TEST(SEquations, RandomBasesVanishOnSpan) {
    testgen::Rng rng(31);
    auto c = ctx(3, 3);
    auto mons = c.f->window_basis(2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Element> basis;
        size_t m = static_cast<size_t>(rng.uniform(1, 3));
        while (basis.size() < m) {
            ElementBuilder b(c.f->field());
            for (BasisId id : mons) b.add(id, testgen::random_scalar(rng, c.f->field()));
            auto cand = basis;
            cand.push_back(b.finish());
            if (linearly_independent(*c.f, cand)) basis = cand;
        }
        Element comb;
        for (const auto& v : basis) comb = c.f->axpy(comb, testgen::random_scalar(rng, c.f->field()), v);
        EXPECT_TRUE(s_value(*c.f, basis, comb).is_zero());
    }
}

TEST(Subspace, Examples) {
    auto c = ctx(2);
    auto r1 = subspace_as_algebraic_set(c.f, {c.a1}, Element{}, 3);
    EXPECT_TRUE(r1.equal);
    EXPECT_EQ(r1.solutions.size(), 2u);
    auto r2 = subspace_as_algebraic_set(c.f, {c.a1, c.a2}, Element{}, 3);
    EXPECT_TRUE(r2.equal);
    EXPECT_EQ(r2.solutions.size(), 4u);
    Element sh = c.f->bracket(c.a1, c.a2);
    auto r3 = subspace_as_algebraic_set(c.f, {c.a1}, sh, 3);
    EXPECT_TRUE(r3.equal);
    Window w(c.f, 3);
    ASSERT_EQ(r3.solutions.size(), 2u);
    EXPECT_TRUE(c.f->equal(w.element(r3.solutions[0]), sh) || c.f->equal(w.element(r3.solutions[1]), sh));
    EXPECT_EQ(code_of([&] { subspace_as_algebraic_set(c.f, {c.a1}, c.f->bracket(sh, c.a1), 2); }),
              ErrorCode::WindowTooSmall);
    EXPECT_EQ(code_of([&] { subspace_as_algebraic_set(c.f, {c.a1, c.a1}, Element{}, 2); }), ErrorCode::DependentBasis);
}

TEST(Subspace, RandomSubspacesAreCutOut) {
    testgen::Rng rng(5);
    auto c = ctx(2);
    Window w(c.f, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Element> basis;
        size_t m = static_cast<size_t>(rng.uniform(1, 3));
        while (basis.size() < m) {
            Element e = w.element(static_cast<uint64_t>(rng.uniform(1, static_cast<int64_t>(w.size()) - 1)));
            auto cand = basis;
            cand.push_back(e);
            if (linearly_independent(*c.f, cand)) basis = cand;
        }
        Element sh = w.element(static_cast<uint64_t>(rng.uniform(0, static_cast<int64_t>(w.size()) - 1)));
        auto r = subspace_as_algebraic_set(c.f, basis, sh, 3);
        EXPECT_TRUE(r.equal) << trial;
    }
}

TEST(LieToPoly, Examples) {
    auto c = ctx(3);
    Parallelepipedon p(c.f, {{{c.a1}, Element{}}});
    auto x = Term::var(0);
    EXPECT_TRUE(lie_to_poly(Term::bracket(x, Term::constant(0)), p, c.f->field()).empty());
    auto s = lie_to_poly(Term::bracket(x, Term::constant(1)), p, c.f->field());
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].str(), "y1");
    // Point factor: a constant check.
    Parallelepipedon pt(c.f, {{{}, c.a1}});
    EXPECT_TRUE(lie_to_poly(Term::minus(c.f->field(), x, Term::constant(0)), pt, c.f->field()).empty());
    auto bad = lie_to_poly(Term::minus(c.f->field(), x, Term::constant(1)), pt, c.f->field());
    EXPECT_EQ(bad.size(), 2u);
}

TEST(PolyToLie, Examples) {
    auto c = ctx(3);
    Parallelepipedon p(c.f, {{{c.a1}, Element{}}});
    const Field& k = c.f->field();
    auto eval_all = [&](const std::vector<TermPtr>& eqs) { return solve_in_polytope(eqs, k, p); };
    auto s1 = s_affine(*c.f, {c.a1}, Element{}, Term::var(0));
    auto l1 = poly_to_lie(Poly::parse(p.ring(), "y1"), p);
    EXPECT_FALSE(l1.anchor_value.is_zero());
    auto v1 = eval_all({l1.term, s1});
    ASSERT_EQ(v1.size(), 1u);
    EXPECT_TRUE(p.point(p.tuple(v1[0]))[0].is_zero());
    auto l2 = poly_to_lie(Poly::parse(p.ring(), "y1 - 1"), p);
    auto v2 = eval_all({l2.term, s1});
    ASSERT_EQ(v2.size(), 1u);
    EXPECT_TRUE(c.f->equal(p.point(p.tuple(v2[0]))[0], c.a1));
    auto l0 = poly_to_lie(Poly(p.ring()), p);
    EXPECT_EQ(l0.term->kind, Term::Kind::Zero);
    EXPECT_EQ(eval_all({l0.term, s1}).size(), 3u);
}

// f_g(p) = 0 iff g(coords p) = 0 for every g of degree <= 2 in <= 2 variables.
TEST(PolyToLie, IffAllSmallPolynomials) {
    for (int q : {2, 3}) {
        auto c = ctx(q);
        const Field& k = c.f->field();
        std::vector<Parallelepipedon> ps = {Parallelepipedon(c.f, {{{c.a1}, c.a2}}),
                                           Parallelepipedon(c.f, {{{c.a1, c.a2}, Element{}}}),
                                           Parallelepipedon(c.f, {{{c.a1, c.f->bracket(c.a1, c.a2)}, Element{}}}),
                                           Parallelepipedon(c.f, {{{c.a1}, Element{}}, {{c.a2}, c.a1}})};
        for (const auto& p : ps) {
            std::vector<Point> pts;
            std::vector<std::vector<Scalar>> tuples;
            for (uint64_t i = 0; i < p.size(); ++i) {
                tuples.push_back(p.tuple(i));
                pts.push_back(p.point(tuples.back()));
            }
            size_t checked = 0;
            for (const auto& g : all_polys(p.ring(), 2)) {
                auto lifted = poly_to_lie(g, p);
                Evaluator ev(p.algebra(), k);
                for (size_t i = 0; i < pts.size(); ++i) {
                    ev.set_point(pts[i]);
                    Element v = ev.eval(lifted.term);
                    Element expect = c.f->scale(lifted.anchor_value, g.evaluate(tuples[i]));
                    ASSERT_TRUE(c.f->equal(v, expect)) << g.str() << " over GF(" << q << ") " << p.str();
                    ASSERT_EQ(v.is_zero(), k.is_zero(g.evaluate(tuples[i])));
                    ++checked;
                }
            }
            EXPECT_GT(checked, 0u);
        }
    }
}

TEST(Correspond, Examples) {
    auto c2 = ctx(2);
    Element sh = c2.f->bracket(c2.a1, c2.a2);
    Parallelepipedon p1(c2.f, {{{c2.a1}, sh}});
    auto t = to_coordinates(p1, {{sh}});
    ASSERT_EQ(t.size(), 1u);
    EXPECT_TRUE(c2.f->field().is_zero(t[0][0]));
    EXPECT_EQ(code_of([&] { to_coordinates(p1, {{c2.a2}}); }), ErrorCode::PointOutsidePolytope);

    Parallelepipedon p2(c2.f, {{{c2.a1, c2.a2}, Element{}}});
    const Field& k = c2.f->field();
    auto pts = to_points(p2, {{k.one(), k.zero()}, {k.zero(), k.one()}});
    EXPECT_TRUE(c2.f->equal(pts[0][0], c2.a1));
    EXPECT_TRUE(c2.f->equal(pts[1][0], c2.a2));

    testgen::Rng rng(8);
    auto c3 = ctx(3);
    Parallelepipedon p3(c3.f, {{{c3.a1, c3.f->bracket(c3.a1, c3.a2)}, c3.a2}, {{c3.a2}, Element{}}});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<Scalar>> tuples;
        for (int i = 0; i < 5; ++i)
            tuples.push_back(p3.tuple(static_cast<uint64_t>(rng.uniform(0, static_cast<int64_t>(p3.size()) - 1))));
        auto back = to_coordinates(p3, to_points(p3, tuples));
        for (size_t i = 0; i < tuples.size(); ++i) EXPECT_EQ(p3.tuple_index(back[i]), p3.tuple_index(tuples[i]));
        auto pts3 = to_points(p3, back);
        for (size_t i = 0; i < pts3.size(); ++i) EXPECT_TRUE(p3.contains(pts3[i]));
    }
    for (uint64_t i = 0; i < p3.size(); ++i) EXPECT_EQ(p3.tuple_index(*p3.coordinates(p3.point(p3.tuple(i)))), i);
}

TEST(ReduceLift, Examples) {
    auto sys = parse_system(
        "algebra free rank=2 field=GF(3)\nvars x\nlet c = [a1,a2]\neq [x - c, a1] = 0\npolytope factor basis=a1 shift=c\n");
    auto p = Parallelepipedon::from_system(sys);
    EXPECT_TRUE(reduce_system(sys, p).polys.empty());
    auto sys2 = parse_system(
        "algebra free rank=2 field=GF(3)\nvars x\nlet c = [a1,a2]\neq x - (a1 + c) = 0\npolytope factor basis=a1 shift=c\n");
    auto r2 = reduce_system(sys2, p);
    ASSERT_EQ(r2.polys.size(), 1u);
    EXPECT_EQ(r2.polys[0].str(), "y1 + 2");

    auto c = ctx(3);
    Parallelepipedon plane(c.f, {{{c.a1, c.a2}, Element{}}});
    PolySystem sk{plane.ring(), plane.blocks(), {Poly::parse(plane.ring(), "y1*y2")}};
    auto lifted = lift_system(sk, plane);
    auto vf = solve_in_polytope(lifted.equations, lifted.field(), plane);
    EXPECT_EQ(vf, solve_poly_system(sk, plane));
    EXPECT_EQ(vf.size(), 5u);
    for (uint64_t i : vf) {
        auto t = plane.tuple(i);
        EXPECT_TRUE(c.f->field().is_zero(t[0]) || c.f->field().is_zero(t[1]));
    }
    // The lifted system cuts out exactly the axes in a window of F.
    auto amb = std::make_shared<const Ambient>(lifted.algebra, lifted.vars, c.f, 1);
    auto y = solve(lifted, amb);
    EXPECT_EQ(y.size(), 5u);
    // reduce ∘ lift keeps V_k.
    auto again = reduce_system(lifted, plane);
    EXPECT_EQ(solve_poly_system(again, plane), solve_poly_system(sk, plane));
    // The rendered system parses back.
    auto text = render_system(lifted);
    auto reparsed = parse_system(text);
    EXPECT_EQ(solve_in_polytope(reparsed.equations, reparsed.field(), plane), vf);
    EXPECT_EQ(Parallelepipedon::from_system(reparsed).str(), plane.str());
}

TEST(ReduceLift, RandomRoundTrips) {
    testgen::Rng rng(1234);
    auto c = ctx(3);
    Parallelepipedon p(c.f, {{{c.a1}, c.a2}, {{c.a2}, Element{}}});
    for (int trial = 0; trial < 8; ++trial) {
        PolySystem sk{p.ring(), p.blocks(), {}};
        for (int i = 0; i < 2; ++i) sk.polys.push_back(testgen::random_poly(rng, p.ring(), 2, 3));
        auto vk = solve_poly_system(sk, p);
        auto lifted = lift_system(sk, p);
        EXPECT_EQ(solve_in_polytope(lifted.equations, lifted.field(), p), vk);
        EXPECT_EQ(solve_poly_system(reduce_system(lifted, p), p), vk);
    }
}

TEST(PolySystemFormat, RoundTripAndErrors) {
    auto c = ctx(3);
    Parallelepipedon p(c.f, {{{c.a1}, Element{}}, {{c.a1, c.a2}, Element{}}});
    PolySystem s{p.ring(), p.blocks(), {Poly::parse(p.ring(), "y1*y2 - y3^2"), Poly::parse(p.ring(), "y1 + 2")}};
    auto text = s.render();
    EXPECT_EQ(text, "field GF(3)\nblock 1: y1\nblock 2: y2, y3\ny1*y2 + 2*y3^2\ny1 + 2\n");
    auto back = PolySystem::parse(text);
    EXPECT_EQ(back.blocks, s.blocks);
    ASSERT_EQ(back.polys.size(), 2u);
    EXPECT_EQ(back.polys[0].str(), s.polys[0].str());
    EXPECT_EQ(code_of([] { PolySystem::parse("block 1: y1\ny1\n"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { PolySystem::parse("field GF(3)\nblock 2: y1\n"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { PolySystem::parse("field GF(3)\nblock 1: y1\ny1 +\n"); }), ErrorCode::SyntaxError);
}

TEST(Classify, Examples) {
    auto whole = classify_one_variable(parse_system("algebra free rank=2 field=GF(2)\nvars x\neq 0 = 0\n"), 3);
    EXPECT_EQ(whole.kind, OneVariableKind::WholeAlgebra);
    auto also_whole =
        classify_one_variable(parse_system("algebra free rank=2 field=GF(2)\nvars x\neq [x,x] = 0\n"), 3);
    EXPECT_EQ(also_whole.kind, OneVariableKind::WholeAlgebra);

    auto pt = classify_one_variable(parse_system("algebra free rank=2 field=GF(2)\nvars x\neq x - a1 = 0\n"), 3);
    ASSERT_EQ(pt.kind, OneVariableKind::BoundedWithin);
    EXPECT_EQ(pt.bound->total_dim(), 0u);
    EXPECT_EQ(pt.bound->algebra().render(pt.bound->factors()[0].shift), "a1");
    EXPECT_TRUE(pt.exact);

    auto line = classify_one_variable(parse_system("algebra free rank=2 field=GF(2)\nvars x\neq [x,a1] = 0\n"), 3);
    ASSERT_EQ(line.kind, OneVariableKind::BoundedWithin);
    EXPECT_EQ(line.bound->str(), "(lin{a1} + 0)");
    EXPECT_TRUE(line.exact);

    auto empty =
        classify_one_variable(parse_system("algebra free rank=2 field=GF(2)\nvars x\neq [x,a1] - a2 = 0\n"), 3);
    EXPECT_EQ(empty.kind, OneVariableKind::EmptyWithin);
    EXPECT_EQ(empty.search_degree, 3);

    auto top = classify_one_variable(parse_system("algebra free rank=2 field=GF(2)\nvars x\neq [x,[a1,a2]] = 0\n"), 2);
    EXPECT_EQ(top.kind, OneVariableKind::Unknown);
    auto deeper =
        classify_one_variable(parse_system("algebra free rank=2 field=GF(2)\nvars x\neq [x,[a1,a2]] = 0\n"), 3);
    EXPECT_EQ(deeper.kind, OneVariableKind::BoundedWithin);

    EXPECT_EQ(code_of([] { classify_one_variable(parse_system("algebra free rank=2 field=GF(2)\nvars x, y\n"), 2); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] {
                  classify_one_variable(parse_system("algebra metabelian rank=2 field=GF(2)\nvars x\neq x = 0\n"), 2);
              }),
              ErrorCode::UnsupportedCoefficientAlgebra);
}

TEST(Classify, NeverWholeForNonzeroNormalForm) {
    testgen::Rng rng(606);
    const std::string head = "algebra free rank=2 field=GF(2)\nvars x\n";
    const std::vector<std::string> atoms = {"x", "a1", "a2", "[x,a1]", "[x,a2]", "[a1,a2]", "[[x,a1],a2]", "[x,[x,a1]]"};
    for (int trial = 0; trial < 30; ++trial) {
        std::string eq;
        for (const auto& a : atoms)
            if (rng.coin(0.3)) eq += (eq.empty() ? "" : " + ") + a;
        if (eq.empty()) eq = "0";
        auto sys = parse_system(head + "eq " + eq + " = 0\n");
        auto cls = classify_one_variable(sys, 2);
        auto amb = std::make_shared<const Ambient>(sys.algebra, sys.vars, FreeLieAlgebra::make(sys.field(), 2), 2);
        bool zero = amb->lower(sys.equations[0]).is_zero();
        EXPECT_EQ(cls.kind == OneVariableKind::WholeAlgebra, zero) << eq;
        if (zero) EXPECT_NE(cls.kind, OneVariableKind::BoundedWithin);
    }
}

TEST(Realisation, Examples) {
    auto c = ctx(2);
    const Field& k = c.f->field();
    Field kt = Field::rational_functions(k, {"t"});
    auto fk = FreeLieAlgebra::make(kt, 2);
    Parallelepipedon line(c.f, {{{c.a1}, Element{}}});
    Element xi = fk->scale(fk->generator_element(0), kt.variable(0));
    PointSet all = {0, 1};
    auto r = bounded_realisation(line, kt, {xi}, all);
    EXPECT_EQ(r.specializations, all);
    EXPECT_EQ(r.matches, std::optional<bool>(true));

    Parallelepipedon plane(c.f, {{{c.a1, c.a2}, Element{}}});
    Element pt = fk->add(fk->generator_element(0), fk->generator_element(1));
    auto r2 = bounded_realisation(plane, kt, {pt});
    ASSERT_EQ(r2.specializations.size(), 1u);
    EXPECT_EQ(r2.specializations[0], plane.tuple_index({k.one(), k.one()}));

    Element bad = fk->bracket(fk->generator_element(0), fk->generator_element(1));
    EXPECT_EQ(code_of([&] { bounded_realisation(plane, kt, {bad}); }), ErrorCode::ShapeViolation);

    // 1/t skips t = 0.
    Element inv = fk->scale(fk->generator_element(0), kt.parse_expression("1/t"));
    auto r3 = bounded_realisation(line, kt, {inv}, PointSet{1});
    EXPECT_EQ(r3.skipped, 1u);
    EXPECT_EQ(r3.matches, std::optional<bool>(true));
}
