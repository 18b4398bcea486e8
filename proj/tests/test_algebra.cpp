#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qinv/errors.hpp"
#include "qinv/laurent.hpp"
#include "qinv/root_scalar.hpp"

using namespace qinv;

TEST(Laurent, LoopValueAndPrinting)
{
    const auto d = loop_value();
    EXPECT_EQ(d.to_string(), "-1*A^-2 + -1*A^2");
    EXPECT_EQ(LaurentPoly(1).to_string(), "1");
    EXPECT_EQ(LaurentPoly().to_string(), "0");
    EXPECT_EQ(LaurentPoly::A(-4).to_t_string(), "1*t^1");
    EXPECT_EQ(LaurentPoly::A(2).to_t_string(), "1*t^(-1/2)");
}

TEST(Laurent, QuantumIntegers)
{
    // [2] = A^2 + A^-2 = -delta
    EXPECT_EQ(quantum_integer(2), -loop_value());
    // [m+1] = [2][m] - [m-1]
    for (int m = 2; m < 12; ++m)
        EXPECT_EQ(quantum_integer(m + 1), quantum_integer(2) * quantum_integer(m) - quantum_integer(m - 1)) << m;
}

TEST(Laurent, ExactDivision)
{
    const auto a = quantum_integer(3) * quantum_integer(5).shifted(7);
    auto q = a.divide_exact(quantum_integer(3));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, quantum_integer(5).shifted(7));
    EXPECT_FALSE(quantum_integer(5).divide_exact(quantum_integer(2)));
}

TEST(Laurent, OverflowIsReported)
{
    auto big = LaurentPoly(std::int64_t{1} << 62);
    EXPECT_THROW(big * LaurentPoly(4), ArithmeticOverflow);
}

TEST(RootScalar, LoopValueAtLevelOne)
{
    RootContext ctx(1);
    EXPECT_EQ(poly_eval_at_root(loop_value(), ctx), RootScalar::from_int(-1, ctx));
    EXPECT_EQ(poly_eval_at_root(LaurentPoly::A(6), ctx), RootScalar::from_int(-1, ctx));
    EXPECT_EQ(poly_eval_at_root(LaurentPoly::A(12), ctx), RootScalar::from_int(1, ctx));
}

TEST(RootScalar, QuantumIntegerSymmetry)
{
    for (int k = 1; k <= 10; ++k) {
        RootContext ctx(k);
        const int r = ctx.rank();
        EXPECT_TRUE(quantum_integer(r, ctx).is_zero()) << k;
        for (int m = 1; m < r; ++m) {
            EXPECT_EQ(quantum_integer(m, ctx), quantum_integer(r - m, ctx)) << k << " " << m;
            const double expect = std::sin(M_PI * m / r) / std::sin(M_PI / r);
            EXPECT_NEAR(quantum_integer(m, ctx).to_complex().real(), expect, 1e-12);
            EXPECT_NEAR(quantum_integer(m, ctx).to_complex().imag(), 0.0, 1e-12);
        }
    }
}

TEST(RootScalar, SqrtTwoAtLevelTwo)
{
    RootContext ctx(2);
    const auto two = quantum_integer(2, ctx);
    EXPECT_NEAR(two.to_complex().real(), std::sqrt(2.0), 1e-14);
    EXPECT_EQ(two * two, RootScalar::from_int(2, ctx));
}

TEST(RootScalar, FieldAxiomsOnRandomElements)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5), expo(-30, 30);
    for (int k : {1, 2, 3, 5, 8}) {
        RootContext ctx(k);
        RootContext fl = ctx.with_mode(Mode::floating);
        for (int trial = 0; trial < 20; ++trial) {
            auto rnd = [&] {
                LaurentPoly p;
                for (int t = 0; t < 4; ++t)
                    p += LaurentPoly::monomial(coef(rng), expo(rng));
                return p;
            };
            const auto p = rnd(), q = rnd();
            const auto x = poly_eval_at_root(p, ctx), y = poly_eval_at_root(q, ctx);
            // evaluation is a ring homomorphism
            EXPECT_EQ(x * y, poly_eval_at_root(p * q, ctx));
            EXPECT_EQ(x + y, poly_eval_at_root(p + q, ctx));
            EXPECT_TRUE(approx_equal((x * y).to_float(), poly_eval_at_root(p * q, fl), 1e-9));
            if (!y.is_zero()) {
                EXPECT_EQ((x / y) * y, x);
                EXPECT_TRUE(approx_equal((x / y).to_float(), x.to_float() / y.to_float(), 1e-8));
            }
        }
    }
}

TEST(RootScalar, InverseOfZeroThrows)
{
    RootContext ctx(3);
    EXPECT_THROW(RootScalar(ctx).inverse(), std::domain_error);
}

TEST(RootScalar, HalfPowers)
{
    RootContext ctx(2);
    auto four = RootScalar::from_int(4, ctx);
    EXPECT_EQ(scalar_power(four, 1, 2), RootScalar::from_int(2, ctx));
    // sqrt(2) = [2] lives in the level-2 field
    EXPECT_EQ(scalar_power(RootScalar::from_int(2, ctx), 1, 2), quantum_integer(2, ctx));
    // sqrt(5) is not in Q(zeta_12)
    RootContext ctx1(1);
    EXPECT_THROW(scalar_power(RootScalar::from_int(5, ctx1), 1, 2), InexactHalfPower);
    auto f = scalar_power(RootScalar::from_int(2, ctx1.with_mode(Mode::floating)), 1, 2);
    EXPECT_NEAR(f.to_complex().real(), 1.41421356237, 1e-10);
    EXPECT_THROW(scalar_power(RootScalar(ctx1), -1), ZeroToNegativePower);
    // principal branch of a negative real
    auto m = scalar_power(RootScalar::from_int(-4, ctx1.with_mode(Mode::floating)), 1, 2);
    EXPECT_NEAR(m.to_complex().imag(), 2.0, 1e-12);
    EXPECT_NEAR(m.to_complex().real(), 0.0, 1e-12);
}

TEST(RootScalar, Formatting)
{
    EXPECT_EQ(format_complex({2.0, 0.0}), "2.000000000000+0.000000000000*i");
    EXPECT_EQ(format_complex({-0.5, -1e-15}), "-0.500000000000+0.000000000000*i");
    EXPECT_EQ(format_complex({0.0, -1.25}), "0.000000000000-1.250000000000*i");
}
