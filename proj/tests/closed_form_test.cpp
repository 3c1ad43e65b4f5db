#include "fibsum/closed_form.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fibsum;
using fibsum::testing::make_poly;
using fibsum::testing::pell_golden;

TEST(BuildMatrix, GeneralEntries) {
    for (std::int64_t a = 1; a <= 5; ++a) {
        for (std::int64_t b = 1; b <= 5; ++b) {
            const auto m = build_matrix_general(0, a, b);
            EXPECT_EQ(m.dim(), 1u);
            EXPECT_EQ(m.at(1, 1), Rational(a + b - 1));
        }
    }

    const auto m1 = build_matrix_general(1, 2, 1);
    EXPECT_EQ(m1.at(1, 1), 2);
    EXPECT_EQ(m1.at(1, 2), 4);
    EXPECT_EQ(m1.at(2, 1), 0);
    EXPECT_EQ(m1.at(2, 2), 2);

    // (2^{j-i} b + a) C(j-1, i-1) at i=1, j=3 for (a,b) = (1,1)
    EXPECT_EQ(build_matrix_general(2, 1, 1).at(1, 3), 5);

    EXPECT_THROW(build_matrix_general(1, 0, 1), std::invalid_argument);
    EXPECT_THROW(build_matrix_general(kMaxWeightDegree + 1, 2, 1), std::invalid_argument);
}

TEST(BuildMatrix, PellMatchesGeneralAtTwoOne) {
    EXPECT_EQ(build_matrix_pell(0).at(1, 1), 2);
    for (std::size_t d = 0; d <= 10; ++d) {
        EXPECT_EQ(build_matrix_pell(d), build_matrix_general(d, 2, 1));
    }
    EXPECT_EQ(build_matrix_pell(1).determinant(), 4);
}

TEST(BuildMatrix, DeterminantLaws) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::int64_t> ab(1, 20);
    for (int i = 0; i < 25; ++i) {
        const std::int64_t a = ab(rng), b = ab(rng);
        for (std::size_t d = 0; d <= 10; ++d) {
            EXPECT_EQ(build_matrix_general(d, a, b).determinant(),
                      Rational(pow(Integer(a) + b - 1, unsigned(d + 1))));
            EXPECT_EQ(build_matrix_pell(d).determinant(), Rational(pow2(d + 1)));
        }
    }
}

TEST(UpperTriangular, ShapeIsEnforced) {
    UpperTriangular m(2);
    EXPECT_THROW(m.set(2, 1, Rational(1)), std::invalid_argument);
    m.set(2, 1, Rational(0));  // explicit zero below the diagonal is fine
    EXPECT_THROW(m.at(0, 1), std::out_of_range);
    EXPECT_THROW(m.at(1, 3), std::out_of_range);
}

TEST(RhsVector, SmallCases) {
    EXPECT_EQ(rhs_vector(0), (std::vector<Rational>{Rational(2)}));
    EXPECT_EQ(rhs_vector(1), (std::vector<Rational>{Rational(4), Rational(2)}));
    EXPECT_EQ(rhs_vector(2), (std::vector<Rational>{Rational(8), Rational(8), Rational(2)}));
}

TEST(SolveCoefficients, KnownSystems) {
    const auto pell_d1 = solve_coefficients(build_matrix_pell(1), rhs_vector(1));
    EXPECT_EQ(pell_d1.d, 1u);
    EXPECT_EQ(pell_d1.values, (std::vector<Rational>{Rational(0), Rational(1)}));

    const auto fib_d0 = solve_coefficients(build_matrix_general(0, 1, 1), rhs_vector(0));
    EXPECT_EQ(fib_d0.values, (std::vector<Rational>{Rational(2)}));
}

TEST(SolveCoefficients, LastEntryAndExactResidual) {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::int64_t> ab(1, 12);
    std::uniform_int_distribution<std::size_t> dd(0, 8);
    for (int i = 0; i < 30; ++i) {
        const std::int64_t a = ab(rng), b = ab(rng);
        const std::size_t d = dd(rng);
        const auto m = build_matrix_general(d, a, b);
        const auto rhs = rhs_vector(d);
        const auto tuple = solve_coefficients(m, rhs);
        EXPECT_EQ(tuple.values.back(), make_rational(2, Integer(a) + b - 1));
        for (std::size_t row = 1; row <= m.dim(); ++row) {
            Rational acc(0);
            for (std::size_t col = 1; col <= m.dim(); ++col) {
                acc += m.at(row, col) * tuple.values[col - 1];
            }
            EXPECT_EQ(acc, rhs[row - 1]);
        }
    }
}

TEST(SolveCoefficients, SignalsSingularAndBadShape) {
    UpperTriangular m(2);
    m.set(1, 1, Rational(1));
    m.set(1, 2, Rational(3));
    // diagonal entry (2,2) left zero
    EXPECT_THROW(solve_coefficients(m, {Rational(1), Rational(1)}), std::domain_error);
    EXPECT_THROW(solve_coefficients(build_matrix_pell(1), {Rational(1)}),
                 std::invalid_argument);
}

TEST(MonomialTriple, PellCases) {
    const auto t1 = monomial_triple(1, pell_params());
    EXPECT_EQ(t1.F, Poly({0, 1}));
    EXPECT_EQ(t1.G, Poly({-1, -1}));
    EXPECT_TRUE(t1.H.is_zero());
    EXPECT_EQ(t1.weight, Poly::monomial(1));

    const auto t2 = monomial_triple(2, pell_params());
    EXPECT_EQ(t2.F, Poly({1, 0, 1}));
    EXPECT_EQ(t2.G, Poly({0, -2, -1}));
    EXPECT_EQ(t2.H, Poly({-1}));
}

TEST(MonomialTriple, FibonacciConstantWeight) {
    const auto t = monomial_triple(0, fibonacci_params());
    EXPECT_EQ(t.F, Poly({2}));
    EXPECT_TRUE(t.G.is_zero());
    EXPECT_EQ(t.H, Poly({-2}));

    // 2*sum F_{k-1} = 2 F_{n+1} - 2, i.e. sum_{k=1..n} F_{k-1} = F_{n+1} - 1
    const auto s = terms(fibonacci_params(), 31);
    Integer sum = 0;
    for (std::size_t n = 1; n <= 30; ++n) {
        sum += s[n - 1];
        EXPECT_EQ(sum, s[n + 1] - 1);
    }
}

TEST(MonomialTriple, StructuralInvariants) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 15; ++i) {
        const SeqParams p = fibsum::testing::random_params(rng);
        for (std::size_t d = 0; d <= 8; ++d) {
            const auto t = monomial_triple(d, p);
            ASSERT_TRUE(t.H.is_zero() || t.H.degree() == 0u);
            ASSERT_EQ(t.F.degree(), d);
            EXPECT_EQ(t.F.leading(), make_rational(2, Integer(p.a) + p.b - 1));
        }
    }
}

TEST(MonomialTriple, RatioConditionPolynomialIdentities) {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::int64_t> ab(1, 12);
    for (int i = 0; i < 10; ++i) {
        const std::int64_t a = ab(rng), b = ab(rng);
        const SeqParams p = SeqParams::create(a, b, 0, 1);
        for (std::size_t d = 0; d <= 8; ++d) {
            const auto t = monomial_triple(d, p);
            const Poly f_next = t.F.shifted(Rational(1));
            // F(x) - G(x+1) = a F(x+1)
            EXPECT_EQ(t.F - t.G.shifted(Rational(1)), Rational(a) * f_next);
            // 2(x+1)^d + G(x) = b F(x+1)
            EXPECT_EQ(Rational(2) * Poly::monomial(d).shifted(Rational(1)) + t.G,
                      Rational(b) * f_next);
        }
    }
}

TEST(GeneralTriple, CombinesMonomialTriples) {
    const Poly x2{0, 0, 1};
    EXPECT_EQ(general_triple(x2, pell_params()), monomial_triple(2, pell_params()));

    const auto t = general_triple(Poly{0, 1, 1}, pell_params());  // x^2 + x
    EXPECT_EQ(t.F, Poly({1, 1, 1}));
    EXPECT_EQ(t.G, Poly({-1, -3, -1}));
    EXPECT_EQ(t.H, Poly({-1}));

    const auto zero = general_triple(Poly{}, pell_params());
    EXPECT_TRUE(zero.F.is_zero());
    EXPECT_TRUE(zero.G.is_zero());
    EXPECT_TRUE(zero.H.is_zero());
}

TEST(GeneralTriple, LinearInTheWeight) {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 10; ++i) {
        const SeqParams params = fibsum::testing::random_params(rng);
        const Poly p = fibsum::testing::random_weight(rng, 4);
        const Poly q = fibsum::testing::random_weight(rng, 4);
        const Rational alpha = make_rational(3, 2), beta = Rational(-2);
        const auto combined = general_triple(alpha * p + beta * q, params);
        const auto tp = general_triple(p, params);
        const auto tq = general_triple(q, params);
        EXPECT_EQ(combined.F, alpha * tp.F + beta * tq.F);
        EXPECT_EQ(combined.G, alpha * tp.G + beta * tq.G);
        EXPECT_EQ(combined.H, alpha * tp.H + beta * tq.H);
    }
}

TEST(GeneralTriple, BaseCaseHoldsAtOne) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 25; ++i) {
        const SeqParams params = fibsum::testing::random_params(rng);
        const Poly p = fibsum::testing::random_weight(rng, 5);
        const auto t = general_triple(p, params);
        const auto s = terms(params, 2);
        const Rational rhs =
            t.F(Rational(1)) * s[2] + t.G(Rational(1)) * s[1] + t.H(Rational(1));
        EXPECT_EQ(rhs, 2 * p(Rational(1)) * s[0]);
    }
}

TEST(FamilySample, CanonicalAndFreeMembers) {
    const SeqParams p = SeqParams::create(1, 2, 1, 2);
    const Poly one{1};
    const auto canonical = general_triple(one, p);
    EXPECT_EQ(family_sample(one, p, canonical.F), canonical);

    const auto other = family_sample(one, p, Poly{0, 1});
    EXPECT_EQ(other.F, Poly({0, 1}));
    EXPECT_NE(other, canonical);

    const auto zero_member = family_sample(one, p, Poly{});
    EXPECT_TRUE(zero_member.F.is_zero());
    EXPECT_NE(zero_member, canonical);
}

TEST(FamilySample, RejectsNonDegenerate) {
    EXPECT_THROW(family_sample(Poly{1}, pell_params(), Poly{0, 1}), NonDegenerateError);
}

TEST(GoldenTable, MonomialTriplesMatchFrozenVectors) {
    for (std::size_t d = 0; d < pell_golden().size(); ++d) {
        const auto t = monomial_triple(d, pell_params());
        EXPECT_EQ(t.F, make_poly(pell_golden()[d].F)) << "d=" << d;
        EXPECT_EQ(t.G, make_poly(pell_golden()[d].G)) << "d=" << d;
        EXPECT_EQ(t.H, make_poly(pell_golden()[d].H)) << "d=" << d;
    }
}
