// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "qinv/cabling.hpp"
#include "qinv/fixtures.hpp"
#include "qinv/fourman.hpp"
#include "qinv/rtw.hpp"
#include "qinv/skein.hpp"
#include "random_diagrams.hpp"

using namespace qinv;

namespace
{

using Clock = std::chrono::steady_clock;
using cd = std::complex<double>;

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail.str("");
        pass = false;
        detail << why << "; ";
    }
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Direct complex evaluation, independent of the library's arithmetic.
struct Direct
{
    int k;
    cd a;
    explicit Direct(int level) : k(level), a(std::polar(1.0, std::numbers::pi / (2.0 * (level + 2)))) {}
    cd q(int m) const { return (std::pow(a, 2 * m) - std::pow(a, -2 * m)) / (a * a - 1.0 / (a * a)); }
    double sgn(int n) const { return n % 2 == 0 ? 1.0 : -1.0; }
    cd omega(int n) const { return sgn(n) * q(n + 1); }
    cd unknot(int n, int framing) const
    {
        return sgn(n) * q(n + 1) * std::pow(sgn(n) * std::pow(a, n * (n + 2)), framing);
    }
    cd hopf(int n, int m) const { return sgn(n + m) * q((n + 1) * (m + 1)); }
    // Sum over all colorings of a one-component special link.
    cd single(int framing, bool dotted) const
    {
        cd s = 0;
        for (int n = 0; n <= k; ++n)
            if (dotted || n % 2 == 0)
                s += omega(n) * unknot(n, framing);
        return s;
    }
    cd hopf_block() const
    {
        cd s = 0;
        for (int n = 0; n <= k; ++n)
            for (int m = 0; m <= k; ++m)
                if (n % 2 == 0)
                    s += omega(n) * omega(m) * hopf(n, m);
        return s;
    }
};

Outcome criterion1()
{
    Outcome o;
    const auto t0 = Clock::now();
    int count = 0;
    for (const char* name :
         {"unknot", "hopf", "trefoil", "figure_eight", "cinquefoil", "knot_6_2", "whitehead", "borromean"}) {
        const Diagram d = fixtures::get(name);
        if (bracket(d) != bracket_bruteforce(d))
            o.fail(std::string("mismatch on ") + name);
        ++count;
    }
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const Diagram d = testing::random_diagram(rng, 8);
        if (bracket(d) != bracket_bruteforce(d))
            o.fail("mismatch on random diagram " + std::to_string(i));
        ++count;
    }
    const double s = seconds_since(t0);
    if (s >= 10)
        o.fail("took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail << count << " diagrams agree exactly in " << s << " s";
    return o;
}

Outcome criterion2()
{
    Outcome o;
    int triples = 0;
    for (const char* name : {"trefoil", "figure_eight", "cinquefoil", "whitehead", "knot_6_2"})
        for (std::size_t i : {std::size_t{0}, std::size_t{2}}) {
            const auto t = skein_triple_at(fixtures::get(name), i);
            if (!check_skein(t.plus, t.minus, t.zero).residual.is_zero())
                o.fail(std::string("residual on ") + name);
            ++triples;
        }
    if (o.pass)
        o.detail << triples << " distinct triples, residual 0";
    return o;
}

Outcome criterion3()
{
    Outcome o;
    auto unknot = [](int framing) { return Diagram({Component{1, framing, false, false, std::nullopt, {}}}, {}); };
    for (int n = 0; n <= 4; ++n) {
        const auto v = colored_bracket(unknot(0), {n}).reduced();
        if (!v || *v != LaurentPoly(n % 2 ? -1 : 1) * quantum_integer(n + 1))
            o.fail("unknot color " + std::to_string(n));
    }
    for (int n = 0; n <= 3; ++n) {
        const LaurentPoly theta = LaurentPoly::monomial(n % 2 ? -1 : 1, n * (n + 2));
        const auto base = *colored_bracket(unknot(0), {n}).reduced();
        for (int f : {-2, -1, 1, 2}) {
            const auto v = colored_bracket(unknot(f), {n}).reduced();
            const LaurentPoly factor = f > 0 ? theta.pow(static_cast<unsigned>(f))
                                             : theta.inverted_variable().pow(static_cast<unsigned>(-f));
            if (!v || *v != factor * base)
                o.fail("twist color " + std::to_string(n) + " framing " + std::to_string(f));
        }
    }
    if (o.pass)
        o.detail << "(-1)^n[n+1] for n<=4, twist covariance for n<=3, exact";
    return o;
}

Outcome criterion4()
{
    Outcome o;
    double worst = 0;
    int blowups = 0;
    for (const auto& e : fixtures::surgery()) {
        const Diagram d = fixtures::get(e.name);
        int lowest = 1;
        for (const auto& c : d.components())
            lowest = std::max(lowest, c.color.value_or(0));
        for (int k = lowest; k <= 4; ++k) {
            const auto t0 = Clock::now();
            const auto r = kirby_equiv_check(d, blow_up(d, 1), {k});
            const auto r2 = kirby_equiv_check(d, blow_up(d, -1), {k});
            worst = std::max(worst, seconds_since(t0) / 2);
            if (!r.equivalent() || !r2.equivalent())
                o.fail("blow-up of " + e.name + " at k=" + std::to_string(k));
            blowups += 2;
        }
    }
    int pairs = 0;
    for (const auto& p : fixtures::kirby_pairs()) {
        for (int k = 1; k <= 4; ++k) {
            const auto t0 = Clock::now();
            const auto r = kirby_equiv_check(fixtures::get(p.first), fixtures::get(p.second), {k});
            worst = std::max(worst, seconds_since(t0));
            if (!r.equivalent())
                o.fail(p.first + " vs " + p.second + " at k=" + std::to_string(k));
        }
        ++pairs;
    }
    if (worst >= 60)
        o.fail("slowest (pair, k) took " + std::to_string(worst) + " s");
    if (o.pass)
        o.detail << blowups << " blow-ups and " << pairs << " slide pairs equal for k=1..4; slowest " << worst << " s";
    return o;
}

Outcome criterion5()
{
    Outcome o;
    double worst = 0;
    for (int k = 1; k <= 4; ++k) {
        const RootContext ctx(k);
        const auto one = RootScalar::from_int(1, ctx);
        if (rtw_invariant(Diagram(), ctx) != one || rtw_invariant(fixtures::get("s3_plus"), ctx) != one)
            o.fail("Z(S3) != 1 at k=" + std::to_string(k));
        const double s = std::sin(std::numbers::pi / (k + 2));
        double closed = 0;
        for (int n = 0; n <= k; ++n)
            closed += std::pow(std::sin((n + 1) * std::numbers::pi / (k + 2)), 2) / (s * s);
        const double diff = std::abs(rtw_invariant(fixtures::get("s1s2"), ctx).to_complex() - cd(closed, 0));
        worst = std::max(worst, diff);
        if (diff >= 1e-10)
            o.fail("Z(S1xS2) off by " + std::to_string(diff) + " at k=" + std::to_string(k));
    }
    if (o.pass)
        o.detail << "Z(S3)=1 exactly; Z(S1xS2) max deviation " << worst << " for k<=4";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    for (int n = 0; n <= 3; ++n) {
        const Diagram d({Component{1, 0, false, true, n, {}}}, {});
        for (int k = std::max(n, 1); k <= 4; ++k) {
            const RootContext ctx(k);
            RootScalar expected = quantum_integer(n + 1, ctx);
            if (n % 2)
                expected = -expected;
            if (rtw_invariant(d, ctx) != expected)
                o.fail("color " + std::to_string(n) + " at k=" + std::to_string(k));
        }
    }
    if (o.pass)
        o.detail << "barred unknot gives (-1)^n[n+1] exactly for n<=3";
    return o;
}

Outcome criterion7()
{
    Outcome o;
    for (int k = 0; k <= 4; ++k)
        if (broda_invariant(Diagram(), RootContext(k)).value != RootScalar::from_int(1, RootContext(k)))
            o.fail("I(S4) != 1 at k=" + std::to_string(k));
    double worst = 0;
    for (int k = 1; k <= 3; ++k) {
        const Direct x(k);
        // S1xS3: one dotted 0-unknot, nu=1, exponent 0.
        const cd s1s3 = x.single(0, true) / x.single(0, false);
        // CP2: one +1 unknot, nu=0, exponent 1/2.
        const cd cp2 = x.single(1, false) / std::sqrt(x.hopf_block());
        const double d1 = std::abs(broda_invariant(fixtures::get("s1s3"), RootContext(k)).value.to_complex() - s1s3);
        const double d2 = std::abs(broda_invariant(fixtures::get("cp2"), RootContext(k)).value.to_complex() - cp2);
        worst = std::max({worst, d1, d2});
        if (d1 >= 1e-9 || d2 >= 1e-9)
            o.fail("direct summation differs at k=" + std::to_string(k));
    }
    if (o.pass)
        o.detail << "I(S4)=1 for k<=4; S1xS3 and CP2 max deviation " << worst << " for k<=3";
    return o;
}

Outcome criterion8()
{
    Outcome o;
    int pairs = 0;
    double worst = 0;
    for (const auto& p : fixtures::fourman_pairs()) {
        const auto r = fourman_equiv_check(fixtures::get(p.first), fixtures::get(p.second), {1, 2, 3});
        for (const auto& row : r.rows) {
            worst = std::max(worst, std::abs(row.first.to_complex() - row.second.to_complex()));
            if (!row.equal)
                o.fail(p.first + " vs " + p.second + " at k=" + std::to_string(row.level));
        }
        ++pairs;
    }
    if (o.pass)
        o.detail << pairs << " pairs equal for k<=3; max |delta| " << worst;
    return o;
}

Outcome criterion9()
{
    Outcome o;
    std::mt19937 rng(2025);
    int checked = 0;
    while (checked < 200) {
        const int n = 1 + static_cast<int>(rng() % 6);
        LinkingMatrix m(static_cast<std::size_t>(n));
        Eigen::MatrixXd e(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const int v = static_cast<int>(rng() % 9) - 4;
                m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), v);
                e(i, j) = e(j, i) = v;
            }
        const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(e).eigenvalues();
        if ((ev.array().abs() < 1e-8).any())
            continue;
        const Inertia expect{static_cast<int>((ev.array() > 0).count()), static_cast<int>((ev.array() < 0).count()),
                             0};
        if (signature_nullity(m) != expect)
            o.fail("disagreement on " + m.to_string());
        ++checked;
    }
    int constructed = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 5;
        Eigen::MatrixXi b = Eigen::MatrixXi::Identity(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                b(i, j) = static_cast<int>(rng() % 5) - 2;
        Eigen::VectorXi diag(n);
        int zeros = 0;
        for (int i = 0; i < n; ++i) {
            diag(i) = static_cast<int>(rng() % 5) - 2;
            zeros += diag(i) == 0;
        }
        const Eigen::MatrixXi a = b.transpose() * diag.asDiagonal() * b;
        LinkingMatrix m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), a(i, j));
        if (signature_nullity(m).nullity != zeros)
            o.fail("wrong nullity on " + m.to_string());
        constructed += zeros > 0;
    }
    if (o.pass)
        o.detail << checked << " random matrices agree; " << constructed << " singular constructions correct";
    return o;
}

Outcome criterion10()
{
    Outcome o;
    const Diagram d = fixtures::get("braid12");
    double fast = 1e9, slow = 1e9;
    for (int rep = 0; rep < 20; ++rep) {
        auto t0 = Clock::now();
        const auto a = bracket(d);
        fast = std::min(fast, seconds_since(t0));
        t0 = Clock::now();
        const auto b = bracket_bruteforce(d);
        slow = std::min(slow, seconds_since(t0));
        if (a != b)
            o.fail("values differ");
    }
    const double ratio = slow / fast;
    if (ratio < 20)
        o.fail("speedup only " + std::to_string(ratio) + "x");
    if (fast >= 5)
        o.fail("sweep took " + std::to_string(fast) + " s");
    if (o.pass)
        o.detail << "12 crossings: sweep " << fast * 1e3 << " ms, state sum " << slow * 1e3 << " ms, " << ratio
                 << "x";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"bracket oracle", criterion1},
        {"skein relation", criterion2},
        {"colored unknot", criterion3},
        {"kirby invariance", criterion4},
        {"3-manifold anchors", criterion5},
        {"embedded links", criterion6},
        {"4-manifold anchors", criterion7},
        {"4-manifold moves", criterion8},
        {"signature and nullity", criterion9},
        {"performance", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
