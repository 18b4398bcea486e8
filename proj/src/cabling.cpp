#include "qinv/cabling.hpp"

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "qinv/errors.hpp"

namespace qinv
{

TLDiagram TLDiagram::identity(int n)
{
    TLDiagram d;
    d.n = n;
    d.match.resize(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        d.match[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(n + i);
        d.match[static_cast<std::size_t>(n + i)] = static_cast<std::int8_t>(i);
    }
    return d;
}

TLDiagram TLDiagram::generator(int n, int i)
{
    if (i < 1 || i >= n)
        throw std::invalid_argument("TL generator index out of range");
    TLDiagram d = identity(n);
    auto& m = d.match;
    m[static_cast<std::size_t>(i - 1)] = static_cast<std::int8_t>(i);
    m[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i - 1);
    m[static_cast<std::size_t>(n + i - 1)] = static_cast<std::int8_t>(n + i);
    m[static_cast<std::size_t>(n + i)] = static_cast<std::int8_t>(n + i - 1);
    return d;
}

std::pair<TLDiagram, int> compose(const TLDiagram& top, const TLDiagram& bottom)
{
    if (top.n != bottom.n)
        throw std::invalid_argument("TL diagrams of different sizes");
    const int n = top.n;
    TLDiagram out;
    out.n = n;
    out.match.assign(static_cast<std::size_t>(2 * n), -1);
    std::vector<char> mid_seen(static_cast<std::size_t>(n), 0);
    // External points: 0..n-1 bottom of `bottom`, n..2n-1 top of `top`.
    auto follow = [&](int ext) {
        bool in_bottom = ext < n;
        int pt = ext;
        while (true) {
            const TLDiagram& d = in_bottom ? bottom : top;
            const int q = d.match[static_cast<std::size_t>(pt)];
            if (in_bottom) {
                if (q < n)
                    return q;
                mid_seen[static_cast<std::size_t>(q - n)] = 1;
                in_bottom = false;
                pt = q - n;
            } else {
                if (q >= n)
                    return q;
                mid_seen[static_cast<std::size_t>(q)] = 1;
                in_bottom = true;
                pt = n + q;
            }
        }
    };
    for (int e = 0; e < 2 * n; ++e) {
        if (out.match[static_cast<std::size_t>(e)] != -1)
            continue;
        const int f = follow(e);
        out.match[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(f);
        out.match[static_cast<std::size_t>(f)] = static_cast<std::int8_t>(e);
    }
    int loops = 0;
    for (int m0 = 0; m0 < n; ++m0) {
        if (mid_seen[static_cast<std::size_t>(m0)])
            continue;
        ++loops;
        // Around the loop: cap in `top`, cup in `bottom`.
        int m = m0;
        do {
            mid_seen[static_cast<std::size_t>(m)] = 1;
            const int a = top.match[static_cast<std::size_t>(m)];
            mid_seen[static_cast<std::size_t>(a)] = 1;
            m = bottom.match[static_cast<std::size_t>(n + a)] - n;
        } while (m != m0);
    }
    return {std::move(out), loops};
}

TLDiagram TLDiagram::with_extra_strand() const
{
    TLDiagram d;
    d.n = n + 1;
    d.match.resize(static_cast<std::size_t>(2 * d.n));
    auto remap = [&](int p) { return p < n ? p : p + 1; };
    for (int p = 0; p < 2 * n; ++p)
        d.match[static_cast<std::size_t>(remap(p))] = static_cast<std::int8_t>(remap(match[static_cast<std::size_t>(p)]));
    d.match[static_cast<std::size_t>(n)] = static_cast<std::int8_t>(2 * n + 1);
    d.match[static_cast<std::size_t>(2 * n + 1)] = static_cast<std::int8_t>(n);
    return d;
}

bool TLDiagram::is_planar() const
{
    // Boundary circle order: bottom left to right, then top right to left.
    std::vector<int> pos(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        pos[static_cast<std::size_t>(i)] = i;
        pos[static_cast<std::size_t>(n + i)] = 2 * n - 1 - i;
    }
    for (int p = 0; p < 2 * n; ++p)
        for (int q = 0; q < 2 * n; ++q) {
            const int a = pos[static_cast<std::size_t>(p)], b = pos[static_cast<std::size_t>(match[static_cast<std::size_t>(p)])];
            const int c = pos[static_cast<std::size_t>(q)], d = pos[static_cast<std::size_t>(match[static_cast<std::size_t>(q)])];
            const int lo1 = std::min(a, b), hi1 = std::max(a, b), lo2 = std::min(c, d), hi2 = std::max(c, d);
            if (lo1 < lo2 && lo2 < hi1 && hi1 < hi2)
                return false;
        }
    return true;
}

namespace
{

using TermMap = std::map<TLDiagram, LaurentPoly>;

LaurentPoly delta_power(int k)
{
    return loop_value().pow(static_cast<unsigned>(k));
}

JWElement from_map(int n, LaurentPoly den, const TermMap& m)
{
    JWElement e;
    e.n = n;
    e.denominator = std::move(den);
    for (const auto& [d, c] : m)
        if (!c.is_zero())
            e.terms.emplace_back(d, c);
    return e;
}

/// Divide numerators and denominator by [m] while all divide exactly.
void simplify(JWElement& e, int up_to)
{
    for (int m = up_to; m >= 2; --m) {
        const auto qm = quantum_integer(m);
        while (true) {
            auto den = e.denominator.divide_exact(qm);
            if (!den)
                break;
            std::vector<LaurentPoly> nums;
            bool ok = true;
            for (const auto& [d, c] : e.terms) {
                auto q = c.divide_exact(qm);
                if (!q) {
                    ok = false;
                    break;
                }
                nums.push_back(std::move(*q));
            }
            if (!ok)
                break;
            e.denominator = std::move(*den);
            for (std::size_t i = 0; i < nums.size(); ++i)
                e.terms[i].second = std::move(nums[i]);
        }
    }
    // Keep the leading coefficient of the denominator positive.
    if (!e.denominator.is_zero() && e.denominator.coeff(e.denominator.max_exponent()) < 0) {
        e.denominator = -e.denominator;
        for (auto& [d, c] : e.terms)
            c = -c;
    }
}

JWElement build_jw(int n, const JWElement& prev)
{
    if (n == 0) {
        JWElement e;
        e.n = 0;
        e.terms.emplace_back(TLDiagram::identity(0), LaurentPoly(1));
        return e;
    }
    if (n == 1)
        return as_element(TLDiagram::identity(1));
    // P = JW_{n-1} (x) 1 over denominator D.
    TermMap p;
    for (const auto& [d, c] : prev.terms)
        p[d.with_extra_strand()] += c;
    const auto& den = prev.denominator;
    const TLDiagram e = TLDiagram::generator(n, n - 1);
    TermMap pe;
    for (const auto& [d, c] : p) {
        auto [de, loops] = compose(d, e);
        pe[de] += c * delta_power(loops);
    }
    TermMap pep;
    for (const auto& [x, cx] : pe)
        for (const auto& [y, cy] : p) {
            auto [xy, loops] = compose(x, y);
            pep[xy] += cx * cy * delta_power(loops);
        }
    // JW_n = ([n] D P + [n-1] PeP) / ([n] D^2)
    const auto qn = quantum_integer(n), qn1 = quantum_integer(n - 1);
    TermMap out;
    for (const auto& [d, c] : p)
        out[d] += qn * den * c;
    for (const auto& [d, c] : pep)
        out[d] += qn1 * c;
    JWElement r = from_map(n, qn * den * den, out);
    simplify(r, n);
    return r;
}

constexpr int kMaxJW = 12;

} // namespace

JWElement as_element(const TLDiagram& d)
{
    JWElement e;
    e.n = d.n;
    e.terms.emplace_back(d, LaurentPoly(1));
    return e;
}

const JWElement& jones_wenzl(int n)
{
    if (n < 0 || n > kMaxJW)
        throw ColorOutOfRange("Jones-Wenzl projector size " + std::to_string(n) + " is outside 0.." +
                              std::to_string(kMaxJW));
    static std::array<JWElement, kMaxJW + 1> table;
    static std::array<std::once_flag, kMaxJW + 1> flags;
    std::call_once(flags[static_cast<std::size_t>(n)], [n] {
        table[static_cast<std::size_t>(n)] = build_jw(n, n >= 2 ? jones_wenzl(n - 1) : JWElement{});
    });
    return table[static_cast<std::size_t>(n)];
}

JWElement compose(const JWElement& x, const JWElement& y)
{
    TermMap m;
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) {
            auto [ab, loops] = compose(a, b);
            m[ab] += ca * cb * delta_power(loops);
        }
    return from_map(x.n, x.denominator * y.denominator, m);
}

bool same_element(const JWElement& x, const JWElement& y)
{
    if (x.n != y.n)
        return false;
    TermMap m;
    for (const auto& [d, c] : x.terms)
        m[d] += c * y.denominator;
    for (const auto& [d, c] : y.terms)
        m[d] -= c * x.denominator;
    for (const auto& [d, c] : m)
        if (!c.is_zero())
            return false;
    return true;
}

LaurentPoly twist_eigenvalue(int n)
{
    return LaurentPoly::monomial(n % 2 == 0 ? 1 : -1, n * (n + 2));
}

namespace
{

struct UnionFind
{
    std::vector<int> parent;
    int make()
    {
        parent.push_back(static_cast<int>(parent.size()));
        return static_cast<int>(parent.size()) - 1;
    }
    int find(int a)
    {
        while (parent[static_cast<std::size_t>(a)] != a)
            a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        return a;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[static_cast<std::size_t>(a)] = b;
    }
};

VertexKind jw_kind(int n)
{
    const auto& jw = jones_wenzl(n);
    VertexKind k;
    k.ports = 2 * n;
    for (const auto& [d, c] : jw.terms) {
        VertexKind::Resolution r;
        for (int p = 0; p < 2 * n; ++p)
            if (p < d.match[static_cast<std::size_t>(p)])
                r.pairs.push_back({p, d.match[static_cast<std::size_t>(p)]});
        r.weight = c;
        k.resolutions.push_back(std::move(r));
    }
    return k;
}

} // namespace

CabledLink cable(const Diagram& input, const std::vector<int>& colors, const CableOptions& options)
{
    if (colors.size() != input.component_count())
        throw ValidationError("expected " + std::to_string(input.component_count()) + " colors, got " +
                              std::to_string(colors.size()));
    for (int c : colors)
        if (c < 0 || c > options.max_color)
            throw ColorOutOfRange("color " + std::to_string(c) + " is outside 0.." + std::to_string(options.max_color));

    CabledLink out;
    Diagram d = input;
    for (std::size_t i = 0; i < d.component_count(); ++i) {
        if (colors[i] == 0)
            continue;
        const int missing = d.components()[i].framing - d.self_writhe(i);
        if (missing == 0)
            continue;
        if (options.framing == FramingMethod::kinks)
            d = with_kinks(d, i, missing);
        else
            out.factor *= missing > 0 ? twist_eigenvalue(colors[i]).pow(static_cast<unsigned>(missing))
                                      : twist_eigenvalue(colors[i]).inverted_variable().pow(static_cast<unsigned>(-missing));
    }

    std::size_t cabled = 0;
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
        auto [u, o] = d.crossing_components(x);
        cabled += static_cast<std::size_t>(colors[u]) * static_cast<std::size_t>(colors[o]);
    }
    out.crossings = cabled;
    if (cabled > options.max_crossings)
        throw ResourceLimit("cable has " + std::to_string(cabled) + " crossings, cap is " +
                            std::to_string(options.max_crossings));

    UnionFind uf;
    // Arc copies; the box arc of each component is split into P (tail side)
    // and Q (head side). Crossingless components get a virtual arc.
    const int virtual_base = d.max_arc() + 1;
    std::map<std::pair<int, int>, int> plain, tail_side, head_side;
    std::vector<int> box_arc(d.component_count(), 0);
    std::vector<char> has_crossing(d.component_count(), 0);
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
        auto [u, o] = d.crossing_components(x);
        has_crossing[u] = has_crossing[o] = 1;
    }
    for (std::size_t i = 0; i < d.component_count(); ++i) {
        const auto& comp = d.components()[i];
        const int n = colors[i];
        if (n == 0)
            continue;
        std::vector<int> arcs = comp.arcs;
        if (arcs.empty())
            arcs = {virtual_base + static_cast<int>(i)};
        box_arc[i] = arcs.front();
        for (int a : arcs)
            for (int s = 0; s < n; ++s) {
                if (a == box_arc[i]) {
                    tail_side[{a, s}] = uf.make();
                    head_side[{a, s}] = uf.make();
                } else {
                    plain[{a, s}] = uf.make();
                }
            }
    }
    // Label of copy s of arc a seen from a crossing slot.
    auto label = [&](int a, int s, bool incoming) {
        if (auto it = plain.find({a, s}); it != plain.end())
            return it->second;
        return incoming ? head_side.at({a, s}) : tail_side.at({a, s});
    };

    struct Mini
    {
        std::array<int, 4> arcs;
    };
    std::vector<Mini> minis;
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
        const auto& cr = d.crossings()[x];
        auto [u, o] = d.crossing_components(x);
        const int ni = colors[u], nj = colors[o];
        if (ni == 0 && nj == 0)
            continue;
        const auto& a = cr.arcs;
        // Under copy s runs south to north at x = s; segments indexed by rank in y.
        std::vector<std::vector<int>> under(static_cast<std::size_t>(ni));
        for (int s = 0; s < ni; ++s) {
            auto& seg = under[static_cast<std::size_t>(s)];
            seg.push_back(label(a[0], s, true));
            for (int k = 1; k < nj; ++k)
                seg.push_back(uf.make());
            seg.push_back(label(a[2], s, false));
            if (nj == 0)
                uf.unite(seg.front(), seg.back());
        }
        // Over copy t: west to east at y = -t when positive, east to west at y = +t when negative.
        const bool positive = cr.sign > 0;
        std::vector<std::vector<int>> over(static_cast<std::size_t>(nj));
        for (int t = 0; t < nj; ++t) {
            auto& seg = over[static_cast<std::size_t>(t)];
            seg.push_back(positive ? label(a[3], t, true) : label(a[1], t, true));
            for (int k = 1; k < ni; ++k)
                seg.push_back(uf.make());
            seg.push_back(positive ? label(a[1], t, false) : label(a[3], t, false));
            if (ni == 0)
                uf.unite(seg.front(), seg.back());
        }
        for (int s = 0; s < ni; ++s)
            for (int t = 0; t < nj; ++t) {
                const int rank = positive ? nj - 1 - t : t; // position of over copy t in ascending y
                const int south = under[static_cast<std::size_t>(s)][static_cast<std::size_t>(rank)];
                const int north = under[static_cast<std::size_t>(s)][static_cast<std::size_t>(rank + 1)];
                const int p = positive ? s : ni - 1 - s; // travel index along over copy t
                const auto& seg = over[static_cast<std::size_t>(t)];
                const int before = seg[static_cast<std::size_t>(p)], after = seg[static_cast<std::size_t>(p + 1)];
                const int west = positive ? before : after;
                const int east = positive ? after : before;
                minis.push_back({{south, east, north, west}});
            }
    }

    // Boxes: bottom ports take the tail side, top ports the head side.
    struct Box
    {
        int color;
        std::vector<int> ports;
    };
    std::vector<Box> boxes;
    for (std::size_t i = 0; i < d.component_count(); ++i) {
        const int n = colors[i];
        if (n == 0)
            continue;
        const int a = box_arc[i];
        if (!has_crossing[i])
            for (int s = 0; s < n; ++s)
                uf.unite(tail_side.at({a, s}), head_side.at({a, s}));
        if (n == 1) {
            uf.unite(tail_side.at({a, 0}), head_side.at({a, 0}));
            continue;
        }
        Box b{n, {}};
        for (int s = 0; s < n; ++s)
            b.ports.push_back(tail_side.at({a, s}));
        for (int s = 0; s < n; ++s)
            b.ports.push_back(head_side.at({a, s}));
        boxes.push_back(std::move(b));
    }

    // Final arc labels are union-find roots, shifted to be positive.
    std::vector<char> at_vertex(uf.parent.size(), 0);
    const int xkind = out.network.add_kind(crossing_kind());
    for (const auto& m : minis) {
        std::vector<int> arcs;
        for (int lbl : m.arcs) {
            const int r = uf.find(lbl);
            at_vertex[static_cast<std::size_t>(r)] = 1;
            arcs.push_back(r + 1);
        }
        out.network.add_vertex(xkind, std::move(arcs));
    }
    std::map<int, int> kind_of_color;
    for (const auto& b : boxes) {
        auto it = kind_of_color.find(b.color);
        if (it == kind_of_color.end())
            it = kind_of_color.emplace(b.color, out.network.add_kind(jw_kind(b.color))).first;
        std::vector<int> arcs;
        for (int lbl : b.ports) {
            const int r = uf.find(lbl);
            at_vertex[static_cast<std::size_t>(r)] = 1;
            arcs.push_back(r + 1);
        }
        out.network.add_vertex(it->second, std::move(arcs));
        out.denominator *= jones_wenzl(b.color).denominator;
        out.box_colors.push_back(b.color);
    }
    // Copies that met no vertex close up on their own.
    int loops = 0;
    for (int lbl = 0; lbl < static_cast<int>(uf.parent.size()); ++lbl)
        if (uf.find(lbl) == lbl && !at_vertex[static_cast<std::size_t>(lbl)])
            ++loops;
    out.network.add_free_loops(loops);
    return out;
}

std::vector<std::pair<Diagram, LaurentPoly>> CabledLink::expand(std::size_t max_terms) const
{
    const auto& vs = network.vertices();
    std::vector<std::size_t> box_vertices;
    std::vector<std::array<int, 4>> crossings;
    for (std::size_t v = 0; v < vs.size(); ++v) {
        if (vs[v].kind == 0) // crossings are always kind 0
            crossings.push_back({vs[v].arcs[0], vs[v].arcs[1], vs[v].arcs[2], vs[v].arcs[3]});
        else
            box_vertices.push_back(v);
    }
    std::size_t total = 1;
    for (std::size_t v : box_vertices) {
        total *= network.kinds()[static_cast<std::size_t>(vs[v].kind)].resolutions.size();
        if (total > max_terms)
            throw ResourceLimit("cable expansion exceeds " + std::to_string(max_terms) + " terms");
    }
    std::vector<std::pair<Diagram, LaurentPoly>> out;
    std::vector<std::size_t> choice(box_vertices.size(), 0);
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t rest = t;
        LaurentPoly coeff = factor;
        std::map<int, int> parent;
        std::function<int(int)> find = [&](int a) {
            auto it = parent.find(a);
            if (it == parent.end() || it->second == a)
                return a;
            return it->second = find(it->second);
        };
        std::set<int> box_arcs;
        for (std::size_t b = 0; b < box_vertices.size(); ++b) {
            const auto& v = vs[box_vertices[b]];
            const auto& kind = network.kinds()[static_cast<std::size_t>(v.kind)];
            const auto& res = kind.resolutions[rest % kind.resolutions.size()];
            rest /= kind.resolutions.size();
            coeff *= res.weight;
            for (auto [p, q] : res.pairs) {
                const int ra = find(v.arcs[static_cast<std::size_t>(p)]);
                const int rb = find(v.arcs[static_cast<std::size_t>(q)]);
                box_arcs.insert(v.arcs[static_cast<std::size_t>(p)]);
                box_arcs.insert(v.arcs[static_cast<std::size_t>(q)]);
                if (ra != rb)
                    parent[ra] = rb;
            }
        }
        auto xs = crossings;
        std::set<int> present;
        for (auto& x : xs)
            for (auto& a : x) {
                a = find(a);
                present.insert(a);
            }
        std::set<int> closed;
        for (int a : box_arcs)
            if (!present.count(find(a)))
                closed.insert(find(a));
        out.emplace_back(Diagram::from_unoriented(xs, network.free_loops() + static_cast<int>(closed.size())),
                         std::move(coeff));
    }
    return out;
}

RationalValue colored_bracket(const Diagram& d, const std::vector<int>& colors, const CableOptions& options)
{
    const auto c = cable(d, colors, options);
    return {c.factor * evaluate_network(c.network, LaurentRing{}), c.denominator};
}

RootScalar evaluate_cable(const CabledLink& c, const RootContext& ctx)
{
    const RootScalar den = poly_eval_at_root(c.denominator, ctx);
    const RootScalar factor = poly_eval_at_root(c.factor, ctx);
    if (den.is_zero())
        throw ColorOutOfRange("Jones-Wenzl denominator vanishes at level " + std::to_string(ctx.level));
    if (ctx.mode == Mode::floating) {
        const auto v = evaluate_network(c.network, ComplexRing(ctx.level));
        return RootScalar::from_complex(v, ctx) * factor / den;
    }
    const CycloRing ring(ctx.level);
    return ring.to_scalar(evaluate_network(c.network, ring), ctx) * factor / den;
}

RootScalar colored_bracket(const Diagram& d, const std::vector<int>& colors, const RootContext& ctx,
                           const CableOptions& options)
{
    for (int c : colors)
        if (c > ctx.level)
            throw ColorOutOfRange("color " + std::to_string(c) + " exceeds level " + std::to_string(ctx.level));
    return evaluate_cable(cable(d, colors, options), ctx);
}

} // namespace qinv
