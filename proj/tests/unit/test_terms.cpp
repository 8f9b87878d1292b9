#include <gtest/gtest.h>

#include <functional>

#include "liegeo/free_lie.hpp"
#include "liegeo/metabelian.hpp"
#include "liegeo/structure.hpp"
#include "liegeo/terms.hpp"
#include "support/random.hpp"

using namespace liegeo;

namespace {

EquationSystem sys_of(const std::string& text) { return parse_system(text); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvariantViolation;
}

TermPtr random_term(testgen::Rng& rng, const EquationSystem& sys, int depth) {
    const Field& f = sys.field();
    int pick = static_cast<int>(rng.uniform(0, depth <= 0 ? 2 : 6));
    switch (pick) {
        case 0:
            if (!sys.vars.empty()) return Term::var(static_cast<size_t>(rng.uniform(0, static_cast<int64_t>(sys.vars.size()) - 1)));
            [[fallthrough]];
        case 1:
            if (sys.algebra.constant_count())
                return Term::constant(static_cast<size_t>(rng.uniform(0, static_cast<int64_t>(sys.algebra.constant_count()) - 1)));
            return Term::var(0);
        case 2:
            return rng.coin(0.2) ? Term::zero() : Term::var(0);
        case 3: {
            std::vector<TermPtr> kids;
            int n = static_cast<int>(rng.uniform(2, 3));
            for (int i = 0; i < n; ++i) kids.push_back(random_term(rng, sys, depth - 1));
            return Term::sum(kids);
        }
        case 4: {
            Scalar c = testgen::random_scalar(rng, f);
            if (f.kind() == Field::Kind::RationalFunctions && rng.coin())
                c = f.div(f.add(f.variable(0), f.one()), f.add(f.variable(0), f.from_int(2)));
            return Term::scalar(c, random_term(rng, sys, depth - 1));
        }
        default:
            return Term::bracket(random_term(rng, sys, depth - 1), random_term(rng, sys, depth - 1));
    }
}

std::vector<Element> random_point(testgen::Rng& rng, const Carrier& c, size_t n, int max_degree) {
    auto basis = c.window_basis(max_degree);
    std::vector<Element> p;
    for (size_t i = 0; i < n; ++i) {
        ElementBuilder b(c.field());
        for (int k = 0; k < 3; ++k)
            b.add(basis[static_cast<size_t>(rng.uniform(0, static_cast<int64_t>(basis.size()) - 1))],
                  testgen::random_scalar(rng, c.field()));
        p.push_back(b.finish());
    }
    return p;
}

}  // namespace

TEST(ParseSystem, SpecExamples) {
    auto s = sys_of("algebra free rank=2 field=GF(3)\nvars x\neq [x, a1] = 0\n");
    ASSERT_EQ(s.equations.size(), 1u);
    const auto& t = s.equations[0];
    ASSERT_EQ(t->kind, Term::Kind::Bracket);
    EXPECT_EQ(t->children[0]->kind, Term::Kind::Var);
    EXPECT_EQ(t->children[1]->kind, Term::Kind::Const);
    EXPECT_EQ(t->children[1]->index, 0u);
    EXPECT_EQ(s.equation_lines[0], 3);

    auto s2 = sys_of("algebra free rank=2 field=GF(3)\nvars x\neq [x,a1] + 2*[x,a2] = 0\n");
    const auto& u = s2.equations[0];
    ASSERT_EQ(u->kind, Term::Kind::Sum);
    ASSERT_EQ(u->children.size(), 2u);
    EXPECT_EQ(u->children[1]->kind, Term::Kind::ScalarMul);
    EXPECT_TRUE(s2.field().eq(u->children[1]->coeff, s2.field().from_int(2)));
    EXPECT_EQ(u->children[1]->children[0]->kind, Term::Kind::Bracket);

    auto s3 = sys_of("algebra free rank=2 field=GF(2)\nvars x\neq x - a1 = 0\n");
    TermPtr expect = Term::minus(s3.field(), Term::var(0), Term::constant(0));
    EXPECT_TRUE(term_equal(s3.equations[0], expect, s3.field()));
}

TEST(ParseSystem, CommentsBlankLinesAndOptionalStatements) {
    auto s = sys_of(R"(# header
algebra metabelian rank=2 field=Q   # trailing

vars x, y
let v = [a2,a1]
eq [x, v] - 3/2*y = 0
polytope factor basis=v,a1 shift=a2
carrier metabelian rank=2 trunc=4
module gens=2
rel x2, -x1
)");
    EXPECT_EQ(s.algebra.kind, CoefficientKind::Metabelian);
    EXPECT_EQ(s.vars, (std::vector<std::string>{"x", "y"}));
    ASSERT_EQ(s.polytope.size(), 1u);
    EXPECT_EQ(s.polytope[0].basis.size(), 2u);
    ASSERT_TRUE(s.carrier.has_value());
    EXPECT_EQ(*s.carrier->trunc, 4);
    ASSERT_TRUE(s.module.has_value());
    EXPECT_EQ(s.module->relation_count(), 1u);
    auto again = parse_system(render_system(s));
    EXPECT_EQ(render_system(again), render_system(s));
}

TEST(ParseSystem, Errors) {
    try {
        parse_system("algebra free rank=2 field=GF(3)\nvars x\neq [x, a1 = 0\n");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.col(), 11);
    }
    EXPECT_EQ(code_of([] { parse_system("algebra free rank=2 field=GF(3)\nvars x\neq [y, a1] = 0\n"); }),
              ErrorCode::UnknownSymbol);
    EXPECT_EQ(code_of([] { parse_system("algebra free rank=2 field=GF(3)\nvars x\neq [x, a3] = 0\n"); }),
              ErrorCode::UnknownSymbol);
    EXPECT_EQ(code_of([] { parse_system("algebra zero field=GF(3)\nvars x\neq 5*x = 0\n"); }),
              ErrorCode::FieldLiteralOutOfRange);
    EXPECT_EQ(code_of([] { parse_system("algebra free rank=2 field=GF(3)\nvars x\neq [x, a1]\n"); }),
              ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_system("vars x\n"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_system("algebra zero field=GF(2)\nvars x y\n"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_system("algebra free field=GF(3)\n"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_system("algebra zero field=GF(3)\nvars x\neq 2 + x = 0\n"); }), ErrorCode::SyntaxError);
}

TEST(ParseSystem, RationalFunctionScalars) {
    auto s = sys_of("algebra zero field=Q(t)\nvars x, y\neq {t^2 - 1}*x + {1/(t+1)}*[x,y] = 0\n");
    const Field& f = s.field();
    const auto& t = s.equations[0];
    Scalar tv = f.variable(0);
    EXPECT_TRUE(f.eq(t->children[0]->coeff, f.sub(f.mul(tv, tv), f.one())));
    EXPECT_TRUE(f.eq(t->children[1]->coeff, f.inv(f.add(tv, f.one()))));
    EXPECT_EQ(code_of([] { parse_system("algebra zero field=Q(t)\nvars x\neq {s}*x = 0\n"); }), ErrorCode::UnknownSymbol);
}

TEST(ParseSystem, RenderRoundTripRandomCorpus) {
    testgen::Rng rng(21);
    for (const char* header : {"algebra free rank=2 field=GF(3)\nvars x, y\n", "algebra metabelian rank=1 field=Q\nvars x\n",
                               "algebra zero field=GF(2)\nvars x, y, z\n", "algebra free rank=1 field=Q(t)\nvars x\n"}) {
        auto sys = parse_system(header);
        auto names = TermNames::of(sys);
        for (int i = 0; i < 200; ++i) {
            TermPtr t = random_term(rng, sys, 4);
            std::string text = render_term(t, names);
            TermPtr back = parse_term(text, sys);
            ASSERT_TRUE(term_equal(t, back, sys.field())) << text << " -> " << render_term(back, names);
            EXPECT_EQ(render_term(back, names), text);
        }
    }
}

TEST(Evaluate, SpecExamples) {
    auto sys = sys_of("algebra free rank=2 field=GF(2)\nvars x\neq x - a1 = 0\neq [x, a1] = 0\n");
    auto f2 = FreeLieAlgebra::make(sys.field(), 2);
    Element a1 = f2->generator_element(0), a2 = f2->generator_element(1);
    Element a21 = f2->bracket(a2, a1);
    EXPECT_TRUE(f2->equal(evaluate(sys.equations[0], {f2->add(a21, a1)}, *f2, sys.field()), a21));
    EXPECT_TRUE(evaluate(sys.equations[1], {a1}, *f2, sys.field()).is_zero());
    EXPECT_TRUE(f2->equal(evaluate(Term::constant(1), {a1}, *f2, sys.field()), a2));
}

TEST(Evaluate, Errors) {
    auto sys = sys_of("algebra free rank=3 field=GF(3)\nvars x\neq [x, a3] = 0\n");
    auto small = FreeLieAlgebra::make(sys.field(), 2);
    EXPECT_EQ(code_of([&] { evaluate(sys.equations[0], {small->generator_element(0)}, *small, sys.field()); }),
              ErrorCode::CarrierMismatch);
    auto other = FreeLieAlgebra::make(Field::prime(5), 3);
    EXPECT_EQ(code_of([&] { evaluate(sys.equations[0], {other->generator_element(0)}, *other, sys.field()); }),
              ErrorCode::CarrierMismatch);
    auto capped = FreeLieAlgebra::make(sys.field(), 3);
    capped->set_degree_cap(1);
    EXPECT_EQ(code_of([&] { evaluate(sys.equations[0], {capped->generator_element(0)}, *capped, sys.field()); }),
              ErrorCode::TruncationRequired);
    EXPECT_TRUE(evaluate(sys.equations[0], {capped->generator_element(0)}, *capped, sys.field(), 1).is_zero());
}

TEST(Evaluate, IsAHomomorphismRandom) {
    testgen::Rng rng(33);
    for (const char* header : {"algebra free rank=2 field=GF(3)\nvars x, y\n", "algebra metabelian rank=2 field=Q\nvars x, y\n"}) {
        auto sys = parse_system(header);
        std::shared_ptr<Carrier> car;
        if (sys.algebra.kind == CoefficientKind::Free)
            car = FreeLieAlgebra::make(sys.field(), 3);
        else
            car = MetabelianAlgebra::make(sys.field(), 3);
        for (int i = 0; i < 40; ++i) {
            TermPtr f = random_term(rng, sys, 3), g = random_term(rng, sys, 3);
            auto p = random_point(rng, *car, 2, 2);
            Element ef = evaluate(f, p, *car, sys.field()), eg = evaluate(g, p, *car, sys.field());
            EXPECT_TRUE(car->equal(evaluate(Term::sum({f, g}), p, *car, sys.field()), car->add(ef, eg)));
            EXPECT_TRUE(car->equal(evaluate(Term::bracket(f, g), p, *car, sys.field()), car->bracket(ef, eg)));
            Scalar c = testgen::random_scalar(rng, sys.field());
            EXPECT_TRUE(car->equal(evaluate(Term::scalar(c, f), p, *car, sys.field()), car->scale(ef, c)));
        }
        // Nonzero constants stay nonzero.
        for (size_t a = 0; a < sys.algebra.constant_count(); ++a)
            EXPECT_FALSE(evaluate(Term::constant(a), {}, *car, sys.field()).is_zero());
    }
}

TEST(Evaluate, ConstantsGoThroughDesignatedCopy) {
    auto sys = sys_of("algebra free rank=2 field=GF(2)\nvars x\n");
    auto h = StructureAlgebra::heisenberg(sys.field());
    Element v = evaluate(Term::bracket(Term::constant(0), Term::constant(1)), {}, *h, sys.field());
    EXPECT_EQ(h->render(v), "z");
}

TEST(Lowering, SpecExamples) {
    auto a = lower_to_carrier(sys_of("algebra free rank=2 field=Q\nvars x\neq [x,a1] = 0\n"));
    EXPECT_EQ(a.algebra->generator_count(), 3u);
    EXPECT_EQ(a.algebra->description(), "free(3) over Q");
    EXPECT_EQ(a.algebra->render(a.equations[0]), "-[a1,x]");
    EXPECT_EQ(a.algebra->constant_count(), 2u);

    auto z = lower_to_carrier(sys_of("algebra zero field=GF(2)\nvars x, y\neq [x,y] = 0\n"));
    EXPECT_EQ(z.algebra->generator_count(), 2u);
    EXPECT_EQ(z.algebra->constant_count(), 0u);
    EXPECT_EQ(z.algebra->render(z.equations[0]), "[x,y]");

    auto m = lower_to_carrier(sys_of("algebra metabelian rank=2 field=GF(3)\nvars x\neq [[[x,a1],a2],a1] - [[[x,a1],a1],a2] = 0\n"));
    EXPECT_EQ(m.algebra->generator_count(), 3u);
    EXPECT_NE(dynamic_cast<MetabelianAlgebra*>(m.algebra.get()), nullptr);
    // Elements of the derived algebra commute under the action.
    EXPECT_TRUE(m.equations[0].is_zero());
}

TEST(Lowering, UniversalPropertyRandom) {
    // Evaluating a normal form through the homomorphism A[X] -> B agrees with
    // evaluating the term directly.
    testgen::Rng rng(44);
    for (const char* header : {"algebra free rank=2 field=GF(3)\nvars x\n", "algebra metabelian rank=2 field=GF(5)\nvars x\n"}) {
        auto sys = parse_system(header);
        auto ax = coordinate_algebra(sys.algebra, sys.vars);
        std::shared_ptr<Carrier> target;
        if (sys.algebra.kind == CoefficientKind::Free)
            target = FreeLieAlgebra::make(sys.field(), 3);
        else
            target = MetabelianAlgebra::make(sys.field(), 3);
        for (int i = 0; i < 30; ++i) {
            TermPtr t = random_term(rng, sys, 4);
            auto p = random_point(rng, *target, 1, 2);
            std::vector<Element> images{target->constant(0), target->constant(1), p[0]};
            Homomorphism h(*ax, *target, images);
            Element nf = lower_term(t, *ax, 2, 1, sys.field());
            EXPECT_TRUE(target->equal(h.apply(nf), evaluate(t, p, *target, sys.field())));
        }
    }
}

TEST(Terms, DegreeVariablesSubstitution) {
    auto sys = sys_of("algebra free rank=1 field=Q\nvars x, y\neq [[x,a1],y] + x = 0\n");
    const auto& t = sys.equations[0];
    EXPECT_EQ(term_degree(t), 3);
    EXPECT_EQ(term_variables(t), (std::set<size_t>{0, 1}));
    TermPtr s = substitute(t, {Term::constant(0), nullptr});
    EXPECT_EQ(term_variables(s), (std::set<size_t>{1}));
    EXPECT_EQ(render_term(s, TermNames::of(sys)), "[[a1,a1],y] + a1");
    TermPtr r = rename_variables(t, {1, 0});
    EXPECT_EQ(render_term(r, TermNames::of(sys)), "[[y,a1],x] + y");
    EXPECT_EQ(term_size(t), 7u);
}
