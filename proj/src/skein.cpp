#include "qinv/skein.hpp"

#include <numeric>

#include "qinv/errors.hpp"

namespace qinv
{

PlanarNetwork to_network(const Diagram& d)
{
    PlanarNetwork net;
    const int x = net.add_kind(crossing_kind());
    for (const auto& c : d.crossings())
        net.add_vertex(x, {c.arcs.begin(), c.arcs.end()});
    for (std::size_t i = 0; i < d.component_count(); ++i) {
        const auto& arcs = d.components()[i].arcs;
        bool touches = false;
        for (const auto& c : d.crossings())
            for (int a : c.arcs)
                touches = touches || (!arcs.empty() && a == arcs.front());
        if (!touches)
            net.add_free_loops(1);
    }
    return net;
}

LaurentPoly bracket(const Diagram& d, std::size_t max_crossings)
{
    if (d.crossing_count() > max_crossings)
        throw ResourceLimit("diagram has " + std::to_string(d.crossing_count()) + " crossings, cap is " +
                            std::to_string(max_crossings));
    return evaluate_network(to_network(d), LaurentRing{});
}

LaurentPoly bracket_bruteforce(const Diagram& d)
{
    const std::size_t c = d.crossing_count();
    if (c > 16)
        throw ResourceLimit("brute-force bracket is limited to 16 crossings");
    const int arcs = d.max_arc();
    int free_loops = 0;
    {
        std::vector<bool> used(static_cast<std::size_t>(arcs) + 1, false);
        for (const auto& x : d.crossings())
            for (int a : x.arcs)
                used[static_cast<std::size_t>(a)] = true;
        for (const auto& comp : d.components())
            if (comp.arcs.empty() || !used[static_cast<std::size_t>(comp.arcs.front())])
                ++free_loops;
    }
    const LaurentPoly delta = loop_value();
    std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
    for (std::size_t i = 0; i < 2 * c + 2 + static_cast<std::size_t>(free_loops); ++i)
        delta_pow.push_back(delta_pow.back() * delta);

    LaurentPoly total;
    std::vector<int> parent(static_cast<std::size_t>(arcs) + 1);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a)
            a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        return a;
    };
    for (std::uint32_t state = 0; state < (1u << c); ++state) {
        std::iota(parent.begin(), parent.end(), 0);
        int loops = 0;
        int a_count = 0;
        std::vector<bool> present(parent.size(), false);
        for (std::size_t i = 0; i < c; ++i) {
            const auto& x = d.crossings()[i].arcs;
            const bool a_smoothing = !((state >> i) & 1u);
            a_count += a_smoothing;
            auto unite = [&](int p, int q) {
                const int rp = find(p), rq = find(q);
                if (rp != rq)
                    parent[static_cast<std::size_t>(rp)] = rq;
            };
            if (a_smoothing) {
                unite(x[0], x[1]);
                unite(x[2], x[3]);
            } else {
                unite(x[0], x[3]);
                unite(x[1], x[2]);
            }
            for (int a : x)
                present[static_cast<std::size_t>(a)] = true;
        }
        for (int a = 1; a <= arcs; ++a)
            if (present[static_cast<std::size_t>(a)] && find(a) == a)
                ++loops;
        const int exponent = a_count - (static_cast<int>(c) - a_count);
        total.add_scaled(delta_pow[static_cast<std::size_t>(loops + free_loops)], 1, exponent);
    }
    return total;
}

namespace
{

LaurentPoly writhe_factor(int w)
{
    // (-A^3)^(-w)
    return LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
}

} // namespace

LaurentPoly normalized_bracket(const Diagram& d, std::size_t max_crossings)
{
    return writhe_factor(d.writhe()) * bracket(d, max_crossings);
}

LaurentPoly jones(const Diagram& d, std::size_t max_crossings)
{
    if (d.empty())
        throw ValidationError("the Jones polynomial of the empty diagram is undefined");
    auto q = normalized_bracket(d, max_crossings).divide_exact(loop_value());
    if (!q)
        throw ArithmeticOverflow("bracket is not divisible by the loop value");
    return *q;
}

SkeinCheck check_skein(const Diagram& d_plus, const Diagram& d_minus, const Diagram& d_zero)
{
    const auto& xp = d_plus.crossings();
    const auto& xm = d_minus.crossings();
    if (xp.size() != xm.size() || d_plus.component_count() != d_minus.component_count())
        throw SiteMismatch("d+ and d- must have the same crossings and components");
    std::size_t site = xp.size();
    for (std::size_t i = 0; i < xp.size(); ++i) {
        if (xp[i] == xm[i])
            continue;
        if (site != xp.size())
            throw SiteMismatch("d+ and d- differ at more than one crossing");
        site = i;
    }
    if (site == xp.size())
        throw SiteMismatch("d+ and d- do not differ at any crossing");
    if (xp[site].sign != 1)
        throw SiteMismatch("the crossing of d+ at the skein site is not positive");
    if (switch_crossing(d_plus, site).crossings()[site] != xm[site])
        throw SiteMismatch("d- is not d+ with the site crossing switched");

    SkeinCheck out;
    out.site = site;
    out.alpha = LaurentPoly::A(4);
    out.beta = -LaurentPoly::A(-4);
    out.gamma = LaurentPoly::A(2) - LaurentPoly::A(-2);
    out.residual = out.alpha * normalized_bracket(d_plus) + out.beta * normalized_bracket(d_minus) +
                   out.gamma * normalized_bracket(d_zero);
    return out;
}

SkeinTriple skein_triple_at(const Diagram& d, std::size_t i)
{
    Diagram plus = d.crossings().at(i).sign > 0 ? d : switch_crossing(d, i);
    Diagram minus = switch_crossing(plus, i);
    Diagram zero = oriented_smoothing(plus, i);
    return {std::move(plus), std::move(minus), std::move(zero)};
}

} // namespace qinv
