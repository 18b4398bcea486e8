#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qinv/errors.hpp"
#include "qinv/fixtures.hpp"
#include "qinv/fourman.hpp"
#include "qinv/rtw.hpp"

using namespace qinv;

namespace
{

using cd = std::complex<double>;

// Plain complex arithmetic, no shared code with the library.
struct Oracle
{
    int k;
    cd a;
    explicit Oracle(int level) : k(level), a(std::polar(1.0, std::numbers::pi / (2.0 * (level + 2)))) {}
    cd q(int m) const { return (std::pow(a, 2 * m) - std::pow(a, -2 * m)) / (a * a - 1.0 / (a * a)); }
    double sgn(int n) const { return n % 2 == 0 ? 1.0 : -1.0; }
    cd w(int n) const { return sgn(n) * q(n + 1); }
    cd unknot(int n) const { return sgn(n) * q(n + 1); }
    cd theta(int n) const { return sgn(n) * std::pow(a, n * (n + 2)); }
    cd hopf(int n, int m) const { return sgn(n + m) * q((n + 1) * (m + 1)); }
    cd hopf_block() const
    {
        cd s = 0;
        for (int n = 0; n <= k; n += 2)
            for (int m = 0; m <= k; ++m)
                s += w(n) * w(m) * hopf(n, m);
        return s;
    }
    // S1 x S3: one dotted 0-unknot; nu = 1.
    cd s1s3() const
    {
        cd num = 0, op = 0;
        for (int m = 0; m <= k; ++m)
            num += w(m) * unknot(m);
        for (int n = 0; n <= k; n += 2)
            op += w(n) * unknot(n);
        return num / op;
    }
    // CP2: one undotted +1-unknot; nu = 0, exponent 1/2.
    cd cp2() const
    {
        cd num = 0;
        for (int n = 0; n <= k; n += 2)
            num += w(n) * unknot(n) * theta(n);
        return num / std::sqrt(hopf_block());
    }
};

Diagram load(const char* name)
{
    return fixtures::get(name);
}

} // namespace

TEST(Omega, Weights)
{
    const auto w0 = omega_weights(RootContext(0));
    ASSERT_EQ(w0.entries.size(), 1u);
    EXPECT_EQ(w0.entries[0].second, RootScalar::from_int(1, RootContext(0)));
    const auto w1 = omega_weights(RootContext(1));
    ASSERT_EQ(w1.entries.size(), 2u);
    EXPECT_EQ(w1.entries[1].second, RootScalar::from_int(-1, RootContext(1)));
    const auto w2 = omega_weights(RootContext(2), Parity::even);
    ASSERT_EQ(w2.entries.size(), 2u);
    EXPECT_EQ(w2.entries[1].first, 2);
    EXPECT_EQ(w2.entries[1].second, quantum_integer(3, RootContext(2)));
    for (int k = 0; k <= 6; ++k)
        EXPECT_EQ(omega_weights(RootContext(k), Parity::even).entries.size(), static_cast<std::size_t>(k / 2 + 1));
}

TEST(Rtw, Anchors)
{
    for (int k = 1; k <= 4; ++k) {
        const RootContext ctx(k);
        const auto one = RootScalar::from_int(1, ctx);
        EXPECT_EQ(rtw_invariant(Diagram(), ctx), one);
        EXPECT_EQ(rtw_invariant(load("s3_plus"), ctx), one);
        EXPECT_EQ(rtw_invariant(load("s3_minus"), ctx), one);
        const double s = std::sin(std::numbers::pi / (k + 2));
        double closed = 0;
        for (int n = 0; n <= k; ++n)
            closed += std::pow(std::sin((n + 1) * std::numbers::pi / (k + 2)), 2) / (s * s);
        EXPECT_NEAR(std::abs(rtw_invariant(load("s1s2"), ctx).to_complex() - cd(closed, 0)), 0.0, 1e-10) << k;
    }
    EXPECT_EQ(rtw_invariant(load("s1s2"), RootContext(1)), RootScalar::from_int(2, RootContext(1)));
}

TEST(Rtw, BarredUnknot)
{
    for (int n = 0; n <= 3; ++n) {
        const Diagram d = load("barred_unknot").with_metadata(0, 0, false, true, n);
        for (int k = std::max(n, 1); k <= 4; ++k) {
            const RootContext ctx(k);
            RootScalar expected = quantum_integer(n + 1, ctx);
            if (n % 2)
                expected = -expected;
            EXPECT_EQ(rtw_invariant(d, ctx), expected) << n << " " << k;
        }
    }
    EXPECT_THROW(rtw_invariant(load("barred_unknot"), RootContext(1)), ColorOutOfRange);
}

TEST(Rtw, FirstKirbyMove)
{
    for (const auto& e : fixtures::surgery()) {
        const Diagram d = fixtures::get(e.name);
        int lowest = 1;
        for (const auto& c : d.components())
            lowest = std::max(lowest, c.color.value_or(0));
        for (int k = lowest; k <= 4; ++k) {
            const RootContext ctx(k);
            const auto z = rtw_invariant(d, ctx);
            EXPECT_EQ(rtw_invariant(blow_up(d, 1), ctx), z) << e.name << " " << k;
            EXPECT_EQ(rtw_invariant(blow_up(d, -1), ctx), z) << e.name << " " << k;
        }
    }
}

TEST(Rtw, SlidePairs)
{
    for (const auto& p : fixtures::kirby_pairs()) {
        const auto report = kirby_equiv_check(fixtures::get(p.first), fixtures::get(p.second), {1, 2, 3, 4});
        for (const auto& row : report.rows)
            EXPECT_TRUE(row.equal) << p.first << " vs " << p.second << " at " << row.level << ": "
                                   << row.first.to_string() << " vs " << row.second.to_string();
        EXPECT_TRUE(report.equivalent());
    }
}

TEST(Rtw, DistinguishesLensSpaces)
{
    const auto report = kirby_equiv_check(load("lens2"), load("lens3"), {1, 2});
    EXPECT_FALSE(report.equivalent());
}

TEST(Rtw, DisjointUnionMultiplies)
{
    for (int k = 1; k <= 3; ++k) {
        const RootContext ctx(k);
        const Diagram a = load("lens3"), b = load("poincare");
        EXPECT_EQ(rtw_invariant(disjoint_union(a, b), ctx), rtw_invariant(a, ctx) * rtw_invariant(b, ctx));
    }
}

TEST(Rtw, FloatMatchesExactAndIsOrderIndependent)
{
    const Diagram d = load("whitehead_1_0");
    const RootContext ctx(3);
    const auto exact = rtw_invariant(d, ctx);
    InvariantOptions serial, parallel;
    serial.threads = 1;
    parallel.threads = 4;
    const auto f1 = rtw_invariant(d, ctx.with_mode(Mode::floating), serial);
    const auto f2 = rtw_invariant(d, ctx.with_mode(Mode::floating), parallel);
    EXPECT_TRUE(approx_equal(f1, exact.to_float(), 1e-9));
    EXPECT_TRUE(approx_equal(f1, f2, 1e-9));
    EXPECT_EQ(rtw_invariant(d, ctx, parallel), exact);
}

TEST(Rtw, Limits)
{
    EXPECT_THROW(rtw_invariant(load("s1s2"), RootContext(7)), ResourceLimit);
    EXPECT_THROW(rtw_invariant(load("s1s3"), RootContext(1)), ValidationError);
}

TEST(Broda, HopfBlock)
{
    EXPECT_EQ(hopf_block(RootContext(0)), RootScalar::from_int(1, RootContext(0)));
    EXPECT_EQ(hopf_block(RootContext(1)), RootScalar::from_int(2, RootContext(1)));
    for (int k = 2; k <= 4; ++k)
        EXPECT_NEAR(std::abs(hopf_block(RootContext(k)).to_complex() - Oracle(k).hopf_block()), 0.0, 1e-9);
}

TEST(Broda, Anchors)
{
    for (int k = 0; k <= 4; ++k) {
        const auto v = broda_invariant(Diagram(), RootContext(k));
        EXPECT_EQ(v.value, RootScalar::from_int(1, RootContext(k)));
        EXPECT_FALSE(v.principal_branch);
    }
    EXPECT_EQ(broda_invariant(load("s1s3"), RootContext(1)).value, RootScalar::from_int(2, RootContext(1)));
    const auto cp2 = broda_invariant(load("cp2"), RootContext(1));
    EXPECT_NEAR(std::abs(cp2.value.to_complex() - cd(1.0 / std::sqrt(2.0), 0)), 0.0, 1e-12);
    for (int k = 1; k <= 3; ++k) {
        const Oracle o(k);
        EXPECT_NEAR(std::abs(broda_invariant(load("s1s3"), RootContext(k)).value.to_complex() - o.s1s3()), 0.0, 1e-9);
        EXPECT_NEAR(std::abs(broda_invariant(load("cp2"), RootContext(k)).value.to_complex() - o.cp2()), 0.0, 1e-9);
    }
}

TEST(Broda, MovePairs)
{
    for (const auto& p : fixtures::fourman_pairs()) {
        const auto report = fourman_equiv_check(fixtures::get(p.first), fixtures::get(p.second), {1, 2, 3});
        for (const auto& row : report.rows)
            EXPECT_TRUE(row.equal) << p.first << " vs " << p.second << " at " << row.level << ": "
                                   << row.first.to_string() << " vs " << row.second.to_string();
    }
}

TEST(Broda, DisjointUnionMultiplies)
{
    for (int k = 1; k <= 3; ++k) {
        const RootContext ctx(k, Mode::floating);
        const Diagram a = load("cp2"), b = load("s1s3");
        const auto ab = broda_invariant(disjoint_union(a, b), ctx).value;
        EXPECT_TRUE(approx_equal(ab, broda_invariant(a, ctx).value * broda_invariant(b, ctx).value, 1e-9));
    }
}

TEST(Broda, RejectsBarred)
{
    EXPECT_THROW(broda_invariant(load("barred_unknot"), RootContext(2)), ValidationError);
}
