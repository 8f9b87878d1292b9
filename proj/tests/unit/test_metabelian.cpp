#include <gtest/gtest.h>

#include "liegeo/metabelian.hpp"
#include "oracles/metabelian_wreath.hpp"
#include "support/random.hpp"

using namespace liegeo;

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Element random_element(testgen::Rng& rng, const Carrier& alg, int max_degree, int terms) {
    auto basis = alg.window_basis(max_degree);
    ElementBuilder b(alg.field());
    for (int i = 0; i < terms; ++i)
        b.add(basis[static_cast<size_t>(rng.uniform(0, static_cast<int64_t>(basis.size()) - 1))],
              testgen::random_scalar(rng, alg.field()));
    return b.finish();
}

bool fit_exhaustive(const MetabelianAlgebra& alg, const Window& w, const Element& x) {
    for (uint64_t i = 0; i < w.size(); ++i)
        if (!alg.bracket(alg.bracket(x, w.element(i)), x).is_zero()) return false;
    return true;
}

}  // namespace

TEST(MetabelianBracket, SpecExamples) {
    auto alg = MetabelianAlgebra::make(Field::prime(3), 3);
    Element a1 = alg->generator_element(0), a2 = alg->generator_element(1), a3 = alg->generator_element(2);
    EXPECT_TRUE(alg->bracket(a1, a1).is_zero());
    Element e21 = alg->bracket(a2, a1);
    Element p = alg->bracket(e21, a1);
    auto v = alg->view(p);
    ASSERT_EQ(v.fitting.size(), 1u);
    EXPECT_EQ(v.fitting.begin()->first, std::make_pair(1, 0));
    EXPECT_EQ(v.fitting.begin()->second.str(), "x1");
    EXPECT_EQ(alg->render(p), "[[a2,a1],a1]");
    EXPECT_TRUE(alg->equal(p, alg->act(e21, Poly::variable(alg->ring(), 0))));
    Element j = alg->bracket(a1, alg->bracket(a2, a3));
    j = alg->add(j, alg->bracket(a2, alg->bracket(a3, a1)));
    j = alg->add(j, alg->bracket(a3, alg->bracket(a1, a2)));
    EXPECT_TRUE(j.is_zero());
    // Products of two Fitting elements vanish.
    EXPECT_TRUE(alg->bracket(e21, alg->bracket(a3, a1)).is_zero());
}

TEST(MetabelianBracket, DimensionsMatchFormula) {
    for (int r : {2, 3}) {
        auto alg = MetabelianAlgebra::make(Field::prime(2), r);
        std::vector<long long> count(6, 0);
        for (BasisId id : alg->window_basis(5)) count[static_cast<size_t>(alg->basis_degree(id))]++;
        EXPECT_EQ(count[1], r);
        for (int n = 2; n <= 5; ++n) EXPECT_EQ(count[static_cast<size_t>(n)], (n - 1) * binom(r + n - 2, n)) << r << " " << n;
    }
}

TEST(MetabelianBracket, WreathOracleHomomorphismAndFaithfulness) {
    for (const char* fs : {"GF(3)", "Q"}) {
        for (int r : {2, 3}) {
            auto alg = MetabelianAlgebra::make(Field::parse(fs), r);
            auto basis = alg->window_basis(4);
            for (BasisId u : basis)
                for (BasisId v : basis) {
                    Element eu = alg->basis_element(u), ev = alg->basis_element(v);
                    auto lhs = oracle::wreath_image(*alg, alg->bracket(eu, ev));
                    auto rhs = oracle::wreath_bracket(oracle::wreath_image(*alg, eu), oracle::wreath_image(*alg, ev),
                                                      alg->ring());
                    ASSERT_TRUE(oracle::wreath_equal(lhs, rhs, alg->field()))
                        << alg->basis_name(u) << " " << alg->basis_name(v);
                }
            // Images of the basis are linearly independent.
            std::map<std::pair<size_t, Monomial>, size_t> coords;
            std::vector<std::vector<std::pair<size_t, Scalar>>> rows;
            for (BasisId id : basis) {
                auto w = oracle::wreath_image(*alg, alg->basis_element(id));
                std::vector<std::pair<size_t, Scalar>> row;
                for (size_t i = 0; i < w.lin.size(); ++i) row.emplace_back(coords.emplace(std::make_pair(1000 + i, Monomial{}), coords.size()).first->second, w.lin[i]);
                for (size_t i = 0; i < w.t.size(); ++i)
                    for (const auto& [m, c] : w.t[i].terms()) row.emplace_back(coords.emplace(std::make_pair(i, m), coords.size()).first->second, c);
                rows.push_back(row);
            }
            Matrix m(alg->field(), 0, coords.size());
            for (const auto& row : rows) {
                Vec v(coords.size(), alg->field().zero());
                for (const auto& [k, c] : row) v[k] = alg->field().add(v[k], c);
                m.append_row(v);
            }
            EXPECT_EQ(rank(m), basis.size());
        }
    }
}

TEST(MetabelianBracket, JacobiAndMetabelianIdentityRandom) {
    testgen::Rng rng(5);
    for (const char* fs : {"GF(2)", "GF(3)", "Q"}) {
        auto alg = MetabelianAlgebra::make(Field::parse(fs), 3);
        for (int it = 0; it < 50; ++it) {
            Element u = random_element(rng, *alg, 3, 3), v = random_element(rng, *alg, 3, 3),
                    w = random_element(rng, *alg, 2, 3), z = random_element(rng, *alg, 2, 3);
            EXPECT_TRUE(alg->equal(alg->bracket(u, v), alg->neg(alg->bracket(v, u))));
            Element j = alg->bracket(u, alg->bracket(v, w));
            j = alg->add(j, alg->bracket(v, alg->bracket(w, u)));
            j = alg->add(j, alg->bracket(w, alg->bracket(u, v)));
            EXPECT_TRUE(j.is_zero());
            EXPECT_TRUE(alg->bracket(alg->bracket(u, v), alg->bracket(w, z)).is_zero());
        }
    }
}

TEST(MetabelianBracket, FactorsReproduceBasis) {
    auto alg = MetabelianAlgebra::make(Field::prime(5), 3);
    for (BasisId id : alg->window_basis(5)) {
        auto f = alg->factors(id);
        if (!f) continue;
        EXPECT_TRUE(alg->equal(alg->bracket(alg->basis_element(f->first), alg->basis_element(f->second)),
                               alg->basis_element(id)));
    }
}

TEST(Fitting, SpecExamples) {
    auto alg = MetabelianAlgebra::make(Field::prime(2), 2);
    Element a1 = alg->generator_element(0), a2 = alg->generator_element(1);
    Element e21 = alg->bracket(a2, a1);
    EXPECT_FALSE(is_in_fitting(*alg, a1));
    EXPECT_TRUE(is_in_fitting(*alg, e21));
    EXPECT_FALSE(is_in_fitting(*alg, alg->add(a1, e21)));
}

TEST(Fitting, AgreesWithExhaustiveFormulaOnWindow) {
    auto alg = MetabelianAlgebra::make(Field::prime(2), 2);
    Window w(alg, 3);
    ASSERT_EQ(w.size(), 32u);
    for (uint64_t i = 0; i < w.size(); ++i) {
        Element x = w.element(i);
        EXPECT_EQ(is_in_fitting(*alg, x), fit_exhaustive(*alg, w, x)) << alg->render(x);
    }
}

TEST(Fitting, PhiIndependent) {
    auto alg = MetabelianAlgebra::make(Field::prime(2), 2);
    Element a1 = alg->generator_element(0), a2 = alg->generator_element(1);
    Element e21 = alg->bracket(a2, a1);
    EXPECT_TRUE(phi_independent(*alg, {a1, a2}));
    EXPECT_FALSE(phi_independent(*alg, {a1, a1}));
    EXPECT_TRUE(phi_independent(*alg, {alg->add(a1, e21), a2}));
    EXPECT_FALSE(phi_independent(*alg, {a1, e21}));
    auto q = MetabelianAlgebra::make(Field::rationals(), 2);
    try {
        phi_independent(*q, {q->generator_element(0)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InfiniteFieldUnsupported);
    }
}

TEST(MetabelianAxioms, Phi2AndPhi3OnWindow) {
    auto alg = MetabelianAlgebra::make(Field::prime(2), 2);
    Window w(alg, 3);
    auto elems = w.elements();
    for (const auto& x : elems)
        for (const auto& y : elems) {
            Element xy = alg->bracket(x, y);
            bool premise = alg->bracket(xy, x).is_zero() && alg->bracket(xy, y).is_zero();
            if (premise) EXPECT_TRUE(xy.is_zero()) << alg->render(x) << " " << alg->render(y);
        }
    for (const auto& x : elems) {
        if (x.is_zero()) continue;
        std::vector<const Element*> cent;
        for (const auto& y : elems)
            if (alg->bracket(x, y).is_zero()) cent.push_back(&y);
        for (auto y : cent)
            for (auto z : cent) EXPECT_TRUE(alg->bracket(*y, *z).is_zero());
    }
}

TEST(Extension, FreeModuleOfRankOne) {
    Field f = Field::prime(2);
    auto ring = metabelian_ring(f, 2);
    auto h = build_extension(f, 2, ModulePresentation::free_module(ring, 1));
    EXPECT_EQ(h.module_rank(), 1);
    ASSERT_TRUE(h.has_carrier());
    const auto& alg = *h.carrier();
    Element u = alg.basis_element(alg.module_id(0, Monomial{0, 0}));
    Element a1 = alg.generator_element(0), a2 = alg.generator_element(1);
    EXPECT_TRUE(is_in_fitting(alg, u));
    EXPECT_TRUE(alg.bracket(u, u).is_zero());
    EXPECT_TRUE(alg.bracket(u, alg.bracket(a2, a1)).is_zero());
    // Module action by x_i is bracketing with a_i.
    Element ux1 = alg.bracket(u, a1);
    EXPECT_TRUE(alg.equal(ux1, alg.basis_element(alg.module_id(0, Monomial{1, 0}))));
    EXPECT_TRUE(alg.equal(alg.act(u, Poly::parse(alg.ring(), "x1*x2")), alg.bracket(ux1, a2)));
    EXPECT_TRUE(alg.equal(alg.bracket(ux1, a2), alg.bracket(alg.bracket(u, a2), a1)));
    // Window of degree 3: 5 from the algebra, 3 from the module.
    EXPECT_EQ(alg.window_basis(3).size(), 8u);
}

TEST(Extension, ZeroModuleAndIdeal) {
    Field f = Field::rationals();
    auto ring = metabelian_ring(f, 2);
    auto zero = build_extension(f, 2, ModulePresentation::free_module(ring, 0));
    EXPECT_EQ(zero.module_rank(), 0);
    EXPECT_EQ(zero.carrier()->window_basis(3).size(), MetabelianAlgebra::make(f, 2)->window_basis(3).size());

    ModulePresentation ideal(ring, 2);
    ideal.add_relation({Poly::parse(ring, "x2"), Poly::parse(ring, "-x1")});
    auto h = build_extension(f, 2, ideal);
    EXPECT_EQ(h.module_rank(), 1);
    EXPECT_FALSE(h.has_carrier());
    try {
        h.carrier();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Unsupported);
    }
}

TEST(Extension, TorsionDetected) {
    Field f = Field::prime(3);
    auto ring = metabelian_ring(f, 2);
    ModulePresentation tors(ring, 1);
    tors.add_relation({Poly::parse(ring, "x1 + x2")});
    try {
        build_extension(f, 2, tors);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TorsionDetected);
    }
    auto other = metabelian_ring(f, 3);
    EXPECT_THROW(build_extension(f, 2, ModulePresentation::free_module(other, 1)), Error);
}
