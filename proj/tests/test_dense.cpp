#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <yanglab/module.hpp>

#include "test_support.hpp"

using namespace yanglab;
using yanglab::test::make_dense;

TEST_CASE("dense validation") {
    CHECK_NOTHROW(DenseModule(Rational(1), Rational(9), QuadScalar(0)));
    CHECK_THROWS_WITH_AS(DenseModule(Rational(1), Rational(16), QuadScalar(0)),
                         doctest::Contains("k = 1"), validation_error);
    CHECK_THROWS_WITH_AS(DenseModule(Rational(3), Rational(2), QuadScalar(0)),
                         doctest::Contains("mu not in (0,2]"), validation_error);
    CHECK_THROWS_AS(DenseModule(Rational(0), Rational(2), QuadScalar(0)), validation_error);
    // mu = 2, tau = 9: weight 3 + 2k hits sqrt(tau) = 3 at k = 0
    CHECK_THROWS_AS(DenseModule(Rational(2), Rational(9), QuadScalar(0)), validation_error);
    // b_mu from a foreign extension
    FieldContext q5{Rational(5)};
    CHECK_THROWS_AS(DenseModule(Rational(1), Rational(2), QuadScalar::sqrt_radicand(q5)),
                    validation_error);
}

TEST_CASE("ladder coefficients a(k)") {
    auto m = make_dense(Rational(1), Rational(9), QuadScalar(0));
    CHECK(m->a_coeff(0) == QuadScalar(Rational(5, 4)));
    CHECK(m->a_coeff(-1) == QuadScalar(Rational(9, 4)));
    for (long k = -10; k <= 10; ++k) {
        CHECK(!m->a_coeff(k).is_zero());
        // a(k-1) - a(k) = mu + 2k
        CHECK(m->a_coeff(k - 1) - m->a_coeff(k) == QuadScalar(Rational(1 + 2 * k)));
    }
}

TEST_CASE("H_1 eigenvalues b(k)") {
    auto m = make_dense(Rational(1), Rational(9), QuadScalar(0));
    CHECK(m->b_coeff(0) == QuadScalar(0));
    CHECK(m->b_coeff(1) == QuadScalar(Rational(17, 2)));
    CHECK(m->b_coeff(-1) == QuadScalar(Rational(-5, 2)));

    auto irr = make_dense(Rational(1, 2), Rational(2), QuadScalar(Rational(0), Rational(1), FieldContext(Rational(2))));
    CHECK(irr->b_coeff(0) == irr->b_origin());
}

TEST_CASE("b second difference is 6 and the cross-relation holds") {
    const Rational mus[] = {Rational(1, 2), Rational(1), Rational(2)};
    const Rational taus[] = {Rational(9), Rational(25), Rational(2)};
    for (const Rational& mu : mus) {
        for (const Rational& tau : taus) {
            std::shared_ptr<DenseModule> m;
            try {
                m = make_dense(mu, tau, QuadScalar(Rational(2, 3)));
            } catch (const validation_error&) {
                continue;  // (mu, tau) combinations with vanishing a(k)
            }
            QuadScalar mu_s(mu, Rational(0), m->context());
            for (long k = -10; k <= 10; ++k) {
                CHECK(m->b_coeff(k) - m->b_coeff(k - 1) * QuadScalar(2) + m->b_coeff(k - 2) ==
                      QuadScalar(6));
                // (mu+2k)(b(k-1)+a(k-1)) = (mu+2k-2)(b(k)+a(k)-mu-2k)
                QuadScalar w(mu + Rational(2 * k), Rational(0), m->context());
                CHECK((m->b_coeff(k - 1) + m->a_coeff(k - 1)) * w ==
                      (m->b_coeff(k) + m->a_coeff(k) - w) * (w - QuadScalar(2)));
            }
        }
    }
}

TEST_CASE("mu = 2: b and a cancel at weight zero") {
    auto m = make_dense(Rational(2), Rational(2), QuadScalar(Rational(7, 5)));
    CHECK(m->b_coeff(-1) == -m->a_coeff(-1));
}

TEST_CASE("primitive ladder actions") {
    auto m = make_dense(Rational(1), Rational(9), QuadScalar(0));
    for (long k : {-3L, 0L, 2L}) {
        CHECK(m->primitive_act(GeneratorSymbol::xminus(0), BasisIndex(k)) ==
              WeightVector::unit(BasisIndex(k - 1)));
    }
    CHECK(m->primitive_act(GeneratorSymbol::xplus(0), BasisIndex(0)) ==
          WeightVector::unit(BasisIndex(1), QuadScalar(Rational(5, 4))));
    CHECK(m->primitive_act(GeneratorSymbol::h(1), BasisIndex(1)) ==
          WeightVector::unit(BasisIndex(1), QuadScalar(Rational(17, 2))));
}

TEST_CASE("level-1 closed forms at the origin") {
    auto m = make_dense(Rational(1), Rational(9), QuadScalar(0));
    CHECK(dense_x1_closed_form(*m, -1, 0) ==
          WeightVector::unit(BasisIndex(-1), QuadScalar(Rational(5, 4))));
    CHECK(dense_x1_closed_form(*m, +1, 0) ==
          WeightVector::unit(BasisIndex(1), QuadScalar(Rational(45, 16))));
}

TEST_CASE("engine derivation matches the level-1 closed forms") {
    auto mods = {make_dense(Rational(1), Rational(9), QuadScalar(0)),
                 make_dense(Rational(1, 2), Rational(2), QuadScalar(Rational(1, 3))),
                 make_dense(Rational(2), Rational(3), QuadScalar(Rational(-7, 4)))};
    for (const auto& m : mods) {
        for (long k = -5; k <= 5; ++k) {
            CHECK(apply_generator(*m, GeneratorSymbol::xplus(1), BasisIndex(k)) ==
                  dense_x1_closed_form(*m, +1, k));
            CHECK(apply_generator(*m, GeneratorSymbol::xminus(1), BasisIndex(k)) ==
                  dense_x1_closed_form(*m, -1, k));
        }
    }
}

TEST_CASE("derived H_1 agrees with the diagonal primitive") {
    auto m = make_dense(Rational(1), Rational(9), QuadScalar(0));
    for (long k = -4; k <= 4; ++k) {
        WeightVector e = WeightVector::unit(BasisIndex(k));
        WeightVector derived =
            apply_generator(*m, GeneratorSymbol::xplus(1), apply_generator(*m, GeneratorSymbol::xminus(0), e)) -
            apply_generator(*m, GeneratorSymbol::xminus(0), apply_generator(*m, GeneratorSymbol::xplus(1), e));
        CHECK(derived == m->primitive_act(GeneratorSymbol::h(1), BasisIndex(k)));
    }
}

TEST_CASE("derived H_k stays diagonal on the ladder") {
    auto m = make_dense(Rational(1, 2), Rational(2), QuadScalar(Rational(1, 3)));
    for (long j = -3; j <= 3; ++j) {
        for (unsigned k = 0; k <= 4; ++k) {
            WeightVector out = apply_generator(*m, GeneratorSymbol::h(k), BasisIndex(j));
            if (out.is_zero()) continue;  // the zero scalar is still a scalar
            CHECK(out.support_size() == 1);
            CHECK(out.terms().begin()->first == BasisIndex(j));
        }
    }
}
