#include <gtest/gtest.h>

#include "qinv/cabling.hpp"
#include "qinv/errors.hpp"
#include "qinv/fixtures.hpp"
#include "qinv/skein.hpp"

using namespace qinv;

namespace
{

LaurentPoly value_of(const RationalValue& v)
{
    auto r = v.reduced();
    EXPECT_TRUE(r.has_value()) << v.numerator << " / " << v.denominator;
    return r.value_or(LaurentPoly());
}

LaurentPoly sign_pow(int n)
{
    return LaurentPoly(n % 2 == 0 ? 1 : -1);
}

// Framing set to the blackboard framing, so no curls are added.
Diagram blackboard(const Diagram& d)
{
    Diagram out = d;
    for (std::size_t i = 0; i < d.component_count(); ++i)
        out = out.with_metadata(i, d.self_writhe(i), false, false, std::nullopt);
    return out;
}

Diagram framed_unknot(int framing)
{
    return fixtures::get("unknot").with_metadata(0, framing, false, false, std::nullopt);
}

Diagram hopf(int f1, int f2)
{
    return fixtures::get("hopf").with_metadata(0, f1, false, false, std::nullopt).with_metadata(1, f2, false, false,
                                                                                               std::nullopt);
}

} // namespace

TEST(TemperleyLieb, GeneratorRelations)
{
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i) {
            const auto e = TLDiagram::generator(n, i);
            EXPECT_TRUE(e.is_planar());
            auto [ee, loops] = compose(e, e);
            EXPECT_EQ(ee, e);
            EXPECT_EQ(loops, 1);
            if (i + 1 < n) {
                const auto f = TLDiagram::generator(n, i + 1);
                auto [ef, l1] = compose(e, f);
                auto [efe, l2] = compose(ef, e);
                EXPECT_EQ(efe, e);
                EXPECT_EQ(l1 + l2, 0);
            }
        }
    auto [id, loops] = compose(TLDiagram::identity(3), TLDiagram::identity(3));
    EXPECT_EQ(id, TLDiagram::identity(3));
    EXPECT_EQ(loops, 0);
}

TEST(JonesWenzl, SecondProjector)
{
    // JW_2 = 1 + e_1 / [2] when a circle is -[2].
    const auto& jw = jones_wenzl(2);
    JWElement expected;
    expected.n = 2;
    expected.denominator = quantum_integer(2);
    expected.terms = {{TLDiagram::identity(2), quantum_integer(2)}, {TLDiagram::generator(2, 1), LaurentPoly(1)}};
    EXPECT_TRUE(same_element(jw, expected));
}

TEST(JonesWenzl, TermCountIsCatalan)
{
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(jones_wenzl(n).terms.size(), catalan[n]) << n;
        for (const auto& [d, c] : jones_wenzl(n).terms)
            EXPECT_TRUE(d.is_planar());
    }
}

TEST(JonesWenzl, IdempotentAndKilledByGenerators)
{
    for (int n = 1; n <= 4; ++n) {
        const auto& f = jones_wenzl(n);
        EXPECT_TRUE(same_element(compose(f, f), f)) << n;
        for (int i = 1; i < n; ++i) {
            const auto e = as_element(TLDiagram::generator(n, i));
            const auto fe = compose(f, e);
            const auto ef = compose(e, f);
            for (const auto& [d, c] : fe.terms)
                EXPECT_TRUE(c.is_zero());
            for (const auto& [d, c] : ef.terms)
                EXPECT_TRUE(c.is_zero());
        }
    }
}

TEST(JonesWenzl, OutOfRange)
{
    EXPECT_THROW(jones_wenzl(13), ColorOutOfRange);
    EXPECT_THROW(jones_wenzl(-1), ColorOutOfRange);
}

TEST(Colored, Unknot)
{
    for (int n = 0; n <= 4; ++n)
        EXPECT_EQ(value_of(colored_bracket(framed_unknot(0), {n})), sign_pow(n) * quantum_integer(n + 1)) << n;
}

TEST(Colored, TwistEigenvalue)
{
    for (int n = 0; n <= 3; ++n)
        for (int f : {-2, -1, 1, 2}) {
            const auto v = value_of(colored_bracket(framed_unknot(f), {n}));
            LaurentPoly theta = f > 0 ? twist_eigenvalue(n).pow(static_cast<unsigned>(f))
                                      : twist_eigenvalue(n).inverted_variable().pow(static_cast<unsigned>(-f));
            EXPECT_EQ(v, theta * sign_pow(n) * quantum_integer(n + 1)) << n << " " << f;
        }
}

TEST(Colored, KinksAgreeWithTwistFactor)
{
    CableOptions twist;
    twist.framing = FramingMethod::twist_factor;
    for (const char* name : {"trefoil", "figure_eight", "hopf"}) {
        Diagram d = fixtures::get(name);
        for (std::size_t i = 0; i < d.component_count(); ++i)
            d = d.with_metadata(i, static_cast<int>(i) - 1, false, false, std::nullopt);
        for (int n = 1; n <= 2; ++n) {
            std::vector<int> colors(d.component_count(), n);
            EXPECT_EQ(value_of(colored_bracket(d, colors)), value_of(colored_bracket(d, colors, twist))) << name;
        }
    }
}

TEST(Colored, HopfClosedForm)
{
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
            EXPECT_EQ(value_of(colored_bracket(hopf(0, 0), {n, m})),
                      sign_pow(n + m) * quantum_integer((n + 1) * (m + 1)))
                << n << " " << m;
}

TEST(Colored, ColorOneIsTheBracket)
{
    for (const char* name : {"trefoil", "figure_eight", "whitehead", "borromean", "knot_6_2"}) {
        const Diagram d = blackboard(fixtures::get(name));
        std::vector<int> ones(d.component_count(), 1);
        EXPECT_EQ(value_of(colored_bracket(d, ones)), bracket(d)) << name;
    }
    // Framing 0 on the left trefoil needs three positive curls.
    const Diagram t = fixtures::get("trefoil");
    EXPECT_EQ(value_of(colored_bracket(t, {1})), bracket(with_kinks(t, 0, 3)));
}

TEST(Colored, ColorZeroComponentIsInvisible)
{
    const Diagram w = blackboard(fixtures::get("whitehead"));
    // Dropping either component of the Whitehead link leaves an unknot with curls.
    for (int c : {0, 1}) {
        std::vector<int> colors{1, 1};
        colors[static_cast<std::size_t>(c)] = 0;
        const int other = 1 - c;
        const auto v = value_of(colored_bracket(w, colors));
        LaurentPoly expected = loop_value();
        const int f = w.self_writhe(static_cast<std::size_t>(other));
        expected *= f >= 0 ? twist_eigenvalue(1).pow(static_cast<unsigned>(f))
                           : twist_eigenvalue(1).inverted_variable().pow(static_cast<unsigned>(-f));
        EXPECT_EQ(v, expected);
    }
    const Diagram b = fixtures::get("borromean");
    EXPECT_EQ(value_of(colored_bracket(b, {0, 2, 0})), quantum_integer(3));
    EXPECT_EQ(value_of(colored_bracket(b, {0, 0, 0})), LaurentPoly(1));
}

TEST(Colored, ExpandMatchesNetwork)
{
    const Diagram d = hopf(1, -1);
    const auto c = cable(d, {2, 1});
    LaurentPoly sum;
    for (const auto& [diagram, coeff] : c.expand())
        sum += coeff * bracket(diagram);
    EXPECT_EQ(sum, c.factor * evaluate_network(c.network, LaurentRing{}));
    EXPECT_EQ(c.box_colors, std::vector<int>{2});
}

TEST(Colored, RootMatchesGeneric)
{
    const Diagram d = fixtures::get("trefoil");
    for (int level : {2, 3, 4}) {
        const RootContext ctx(level);
        for (int n = 1; n <= level; ++n) {
            const auto generic = value_of(colored_bracket(d, {n}));
            const auto at_root = colored_bracket(d, {n}, ctx);
            EXPECT_EQ(at_root, poly_eval_at_root(generic, ctx)) << level << " " << n;
            const auto fl = colored_bracket(d, {n}, ctx.with_mode(Mode::floating));
            EXPECT_TRUE(approx_equal(fl, at_root.to_float(), 1e-9));
        }
    }
}

TEST(Colored, Limits)
{
    const Diagram h = hopf(0, 0);
    EXPECT_THROW(colored_bracket(h, {6, 1}), ColorOutOfRange);
    EXPECT_THROW(colored_bracket(h, {-1, 1}), ColorOutOfRange);
    EXPECT_THROW(colored_bracket(h, {1}), ValidationError);
    EXPECT_THROW(colored_bracket(h, {3, 1}, RootContext(2)), ColorOutOfRange);
    CableOptions small;
    small.max_crossings = 3;
    EXPECT_THROW(cable(h, {2, 1}, small), ResourceLimit);
    EXPECT_NO_THROW(cable(h, {1, 1}, small));
}
