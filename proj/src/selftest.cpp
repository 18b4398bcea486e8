#include "qinv/selftest.hpp"

#include <sstream>

#include "qinv/cabling.hpp"
#include "qinv/fixtures.hpp"
#include "qinv/fourman.hpp"
#include "qinv/rtw.hpp"
#include "qinv/skein.hpp"

namespace qinv
{

namespace
{

SuiteResult bracket_oracle()
{
    for (const auto& e : fixtures::links()) {
        const Diagram d = fixtures::get(e.name);
        if (bracket(d) != bracket_bruteforce(d))
            return {false, "sweep and state sum differ on " + e.name};
    }
    return {true, std::to_string(fixtures::links().size()) + " fixtures"};
}

SuiteResult skein()
{
    int triples = 0;
    for (const char* name : {"trefoil", "figure_eight", "whitehead", "knot_6_2"}) {
        const Diagram d = fixtures::get(name);
        for (std::size_t i = 0; i < d.crossing_count(); ++i) {
            const auto t = skein_triple_at(d, i);
            if (!check_skein(t.plus, t.minus, t.zero).residual.is_zero())
                return {false, std::string("nonzero residual on ") + name + " crossing " + std::to_string(i)};
            ++triples;
        }
    }
    return {true, std::to_string(triples) + " triples"};
}

SuiteResult colored()
{
    for (int n = 0; n <= 4; ++n)
        for (int f = -1; f <= 1; ++f) {
            const Component c{1, f, false, false, std::nullopt, {}};
            const auto v = colored_bracket(Diagram({c}, {}), {n}).reduced();
            LaurentPoly expected = quantum_integer(n + 1) * LaurentPoly(n % 2 ? -1 : 1);
            if (f > 0)
                expected *= twist_eigenvalue(n);
            if (f < 0)
                expected *= twist_eigenvalue(n).inverted_variable();
            if (!v || *v != expected)
                return {false, "unknot color " + std::to_string(n) + " framing " + std::to_string(f)};
        }
    return {true, "colors 0..4, framings -1..1"};
}

SuiteResult kirby()
{
    for (const auto& p : fixtures::kirby_pairs())
        if (!kirby_equiv_check(fixtures::get(p.first), fixtures::get(p.second), {1, 2}).equivalent())
            return {false, p.first + " vs " + p.second};
    for (const char* name : {"poincare", "lens3", "s1s2_barred_meridian"}) {
        const Diagram d = fixtures::get(name);
        for (int sign : {1, -1})
            if (!kirby_equiv_check(d, blow_up(d, sign), {1, 2}).equivalent())
                return {false, std::string("blow-up of ") + name};
    }
    return {true, "levels 1, 2"};
}

SuiteResult anchors()
{
    for (int k = 1; k <= 3; ++k) {
        const RootContext ctx(k);
        const auto one = RootScalar::from_int(1, ctx);
        if (rtw_invariant(Diagram(), ctx) != one || rtw_invariant(fixtures::get("s3_plus"), ctx) != one)
            return {false, "Z(S3) != 1 at level " + std::to_string(k)};
        if (broda_invariant(Diagram(), ctx).value != one)
            return {false, "I(S4) != 1 at level " + std::to_string(k)};
    }
    if (rtw_invariant(fixtures::get("s1s2"), RootContext(1)) != RootScalar::from_int(2, RootContext(1)))
        return {false, "Z(S1xS2) != 2 at level 1"};
    return {true, "levels 1..3"};
}

SuiteResult fourman()
{
    for (const auto& p : fixtures::fourman_pairs())
        if (!fourman_equiv_check(fixtures::get(p.first), fixtures::get(p.second), {1, 2}).equivalent())
            return {false, p.first + " vs " + p.second};
    return {true, "levels 1, 2"};
}

SuiteResult signature()
{
    const struct
    {
        std::vector<std::vector<long long>> rows;
        Inertia expected;
    } cases[] = {
        {{{1, 2}, {2, 1}}, {1, 1, 0}},
        {{{0, 1}, {1, 0}}, {1, 1, 0}},
        {{{0, 0}, {0, 0}}, {0, 0, 2}},
        {{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}, {3, 0, 0}},
        {{{1, 1}, {1, 1}}, {1, 0, 1}},
    };
    for (const auto& c : cases)
        if (signature_nullity(LinkingMatrix::from_rows(c.rows)) != c.expected)
            return {false, LinkingMatrix::from_rows(c.rows).to_string()};
    return {true, "5 matrices"};
}

} // namespace

const std::vector<Suite>& selftest_suites()
{
    static const std::vector<Suite> suites = {
        {"bracket-oracle", "sweep bracket equals the full state sum", bracket_oracle},
        {"skein", "skein residual vanishes", skein},
        {"colored", "colored unknot and twist eigenvalues", colored},
        {"signature", "inertia of small matrices", signature},
        {"anchors", "S3, S4 and S1xS2 values", anchors},
        {"kirby", "slide pairs and blow-ups", kirby},
        {"fourman", "4D move pairs", fourman},
    };
    return suites;
}

} // namespace qinv
