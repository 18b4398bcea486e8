#include "qinv/planar.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace qinv
{

VertexKind crossing_kind()
{
    VertexKind k;
    k.ports = 4;
    // A-smoothing joins a-b and c-d, B-smoothing joins a-d and b-c.
    k.resolutions.push_back({{{0, 1}, {2, 3}}, LaurentPoly::A(1)});
    k.resolutions.push_back({{{0, 3}, {1, 2}}, LaurentPoly::A(-1)});
    return k;
}

int PlanarNetwork::add_kind(VertexKind kind)
{
    kinds_.push_back(std::move(kind));
    return static_cast<int>(kinds_.size()) - 1;
}

void PlanarNetwork::add_vertex(int kind, std::vector<int> arcs)
{
    if (kind < 0 || static_cast<std::size_t>(kind) >= kinds_.size())
        throw std::invalid_argument("unknown vertex kind");
    if (static_cast<int>(arcs.size()) != kinds_[static_cast<std::size_t>(kind)].ports)
        throw std::invalid_argument("vertex port count does not match its kind");
    vertices_.push_back({kind, std::move(arcs)});
}

void PlanarNetwork::check() const
{
    int top = 0;
    for (const auto& v : vertices_)
        for (int a : v.arcs) {
            if (a <= 0)
                throw ValidationError("network arc labels must be positive");
            top = std::max(top, a);
        }
    std::vector<int> uses(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& v : vertices_)
        for (int a : v.arcs)
            ++uses[static_cast<std::size_t>(a)];
    for (int a = 1; a <= top; ++a)
        if (uses[static_cast<std::size_t>(a)] != 0 && uses[static_cast<std::size_t>(a)] != 2)
            throw ValidationError("network arc " + std::to_string(a) + " has " +
                                  std::to_string(uses[static_cast<std::size_t>(a)]) + " ends");
}

namespace
{

bool add_overflows(__int128 a, __int128 b, __int128& r) { return __builtin_add_overflow(a, b, &r); }
bool mul_overflows(__int128 a, __int128 b, __int128& r) { return __builtin_mul_overflow(a, b, &r); }

__int128 cadd(__int128 a, __int128 b)
{
    __int128 r;
    if (add_overflows(a, b, r))
        throw ArithmeticOverflow("cyclotomic coefficient overflow");
    return r;
}

__int128 cmul(__int128 a, __int128 b)
{
    __int128 r;
    if (mul_overflows(a, b, r))
        throw ArithmeticOverflow("cyclotomic coefficient overflow");
    return r;
}

RootScalar::Int to_big(__int128 v)
{
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    RootScalar::Int out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? RootScalar::Int(-out) : out;
}

} // namespace

CycloRing::CycloRing(int level) : level_(level), order_(4 * (level + 2))
{
    phi_ = cyclotomic_polynomial(order_);
    degree_ = static_cast<int>(phi_.size()) - 1;
    if (degree_ > kCapacity)
        throw ResourceLimit("level " + std::to_string(level) + " exceeds the cyclotomic ring capacity");
    power_table_.resize(static_cast<std::size_t>(order_));
    Elem cur = one();
    for (int e = 0; e < order_; ++e) {
        power_table_[static_cast<std::size_t>(e)] = cur;
        // multiply by z and reduce
        Elem nxt{};
        for (int i = degree_ - 1; i >= 0; --i)
            nxt.c[static_cast<std::size_t>(i + 1)] = cur.c[static_cast<std::size_t>(i)];
        const __int128 top = nxt.c[static_cast<std::size_t>(degree_)];
        nxt.c[static_cast<std::size_t>(degree_)] = 0;
        for (int j = 0; j < degree_; ++j)
            nxt.c[static_cast<std::size_t>(j)] -= top * phi_[static_cast<std::size_t>(j)];
        cur = nxt;
    }
}

CycloRing::Elem CycloRing::one() const
{
    Elem e{};
    e.c[0] = 1;
    return e;
}

CycloRing::Elem CycloRing::from_poly(const LaurentPoly& p) const
{
    Elem out{};
    for (const auto& [e, c] : p.terms()) {
        const int idx = ((e % order_) + order_) % order_;
        const auto& zp = power_table_[static_cast<std::size_t>(idx)];
        for (int i = 0; i < degree_; ++i)
            out.c[static_cast<std::size_t>(i)] = cadd(out.c[static_cast<std::size_t>(i)], cmul(c, zp.c[static_cast<std::size_t>(i)]));
    }
    return out;
}

CycloRing::Elem CycloRing::mul(const Elem& a, const Elem& b) const
{
    std::array<__int128, 2 * kCapacity> t{};
    for (int i = 0; i < degree_; ++i) {
        const __int128 ai = a.c[static_cast<std::size_t>(i)];
        if (ai == 0)
            continue;
        for (int j = 0; j < degree_; ++j) {
            const __int128 bj = b.c[static_cast<std::size_t>(j)];
            if (bj != 0)
                t[static_cast<std::size_t>(i + j)] = cadd(t[static_cast<std::size_t>(i + j)], cmul(ai, bj));
        }
    }
    for (int i = 2 * degree_ - 2; i >= degree_; --i) {
        const __int128 top = t[static_cast<std::size_t>(i)];
        if (top == 0)
            continue;
        for (int j = 0; j < degree_; ++j)
            if (phi_[static_cast<std::size_t>(j)] != 0)
                t[static_cast<std::size_t>(i - degree_ + j)] =
                    cadd(t[static_cast<std::size_t>(i - degree_ + j)], cmul(-top, phi_[static_cast<std::size_t>(j)]));
    }
    Elem out{};
    std::copy(t.begin(), t.begin() + degree_, out.c.begin());
    return out;
}

void CycloRing::add(Elem& acc, const Elem& x) const
{
    for (int i = 0; i < degree_; ++i)
        acc.c[static_cast<std::size_t>(i)] = cadd(acc.c[static_cast<std::size_t>(i)], x.c[static_cast<std::size_t>(i)]);
}

bool CycloRing::is_zero(const Elem& x) const
{
    for (int i = 0; i < degree_; ++i)
        if (x.c[static_cast<std::size_t>(i)] != 0)
            return false;
    return true;
}

RootScalar CycloRing::to_scalar(const Elem& x, const RootContext& ctx) const
{
    if (ctx.level != level_)
        throw std::invalid_argument("ring level does not match context");
    std::vector<RootScalar::Int> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i)
        coeffs.push_back(to_big(x.c[static_cast<std::size_t>(i)]));
    return RootScalar::from_exact(std::move(coeffs), 1, ctx);
}

ComplexRing::ComplexRing(int level) : order_(4 * (level + 2)) {}

ComplexRing::Elem ComplexRing::from_poly(const LaurentPoly& p) const
{
    Elem out{};
    for (const auto& [e, c] : p.terms()) {
        const int idx = ((e % order_) + order_) % order_;
        out += static_cast<double>(c) * std::polar(1.0, 2.0 * std::numbers::pi * idx / order_);
    }
    return out;
}

std::vector<std::size_t> sweep_order(const PlanarNetwork& net)
{
    const auto& vs = net.vertices();
    const std::size_t n = vs.size();
    int top = 0;
    for (const auto& v : vs)
        for (int a : v.arcs)
            top = std::max(top, a);
    // arc -> the (up to two) vertices it touches
    std::vector<std::array<int, 2>> touching(static_cast<std::size_t>(top) + 1, {-1, -1});
    for (std::size_t v = 0; v < n; ++v)
        for (int a : vs[v].arcs) {
            auto& t = touching[static_cast<std::size_t>(a)];
            (t[0] < 0 ? t[0] : t[1]) = static_cast<int>(v);
        }
    std::vector<char> open(touching.size(), 0), used(n, 0);
    std::vector<std::size_t> order;
    order.reserve(n);
    // Change in frontier size if v were absorbed next; self arcs never reach the frontier.
    auto score = [&](std::size_t v) {
        int delta = 0;
        for (int a : vs[v].arcs) {
            const auto& t = touching[static_cast<std::size_t>(a)];
            if (t[0] == t[1])
                continue;
            delta += open[static_cast<std::size_t>(a)] ? -1 : 1;
        }
        return delta;
    };
    std::vector<std::size_t> cand;
    std::size_t lowest_unused = 0;
    for (std::size_t step = 0; step < n; ++step) {
        cand.clear();
        for (std::size_t v : order)
            for (int a : vs[v].arcs)
                if (open[static_cast<std::size_t>(a)])
                    for (int w : touching[static_cast<std::size_t>(a)])
                        if (w >= 0 && !used[static_cast<std::size_t>(w)])
                            cand.push_back(static_cast<std::size_t>(w));
        if (cand.empty()) {
            while (used[lowest_unused])
                ++lowest_unused;
            cand.push_back(lowest_unused);
        }
        std::size_t best = n;
        int best_score = 0;
        for (std::size_t v : cand) {
            const int s = score(v);
            if (best == n || s < best_score || (s == best_score && v < best)) {
                best = v;
                best_score = s;
            }
        }
        used[best] = 1;
        order.push_back(best);
        for (int a : vs[best].arcs) {
            const auto& t = touching[static_cast<std::size_t>(a)];
            if (t[0] != t[1])
                open[static_cast<std::size_t>(a)] ^= 1;
        }
    }
    return order;
}

namespace detail
{

std::vector<StepPlan> plan_sweep(const PlanarNetwork& net, SweepStats& stats)
{
    const auto order = sweep_order(net);
    std::vector<int> frontier; // arc at each slot
    std::vector<StepPlan> plans;
    plans.reserve(order.size());
    for (std::size_t v : order) {
        const auto& vx = net.vertices()[v];
        const int m = static_cast<int>(vx.arcs.size());
        StepPlan p;
        p.vertex = v;
        p.old_frontier = static_cast<int>(frontier.size());
        p.port_old.assign(static_cast<std::size_t>(m), -1);
        p.port_self.assign(static_cast<std::size_t>(m), -1);
        p.port_new.assign(static_cast<std::size_t>(m), -1);
        p.old_keep.assign(frontier.size(), -1);
        std::vector<bool> closes(frontier.size(), false);
        for (int i = 0; i < m; ++i) {
            const int a = vx.arcs[static_cast<std::size_t>(i)];
            auto it = std::find(frontier.begin(), frontier.end(), a);
            if (it != frontier.end()) {
                const int q = static_cast<int>(it - frontier.begin());
                p.port_old[static_cast<std::size_t>(i)] = q;
                closes[static_cast<std::size_t>(q)] = true;
                continue;
            }
            for (int j = 0; j < m; ++j)
                if (j != i && vx.arcs[static_cast<std::size_t>(j)] == a)
                    p.port_self[static_cast<std::size_t>(i)] = j;
        }
        std::vector<int> next;
        for (std::size_t q = 0; q < frontier.size(); ++q)
            if (!closes[q]) {
                p.old_keep[q] = static_cast<int>(next.size());
                next.push_back(frontier[q]);
            }
        for (int i = 0; i < m; ++i)
            if (p.port_old[static_cast<std::size_t>(i)] < 0 && p.port_self[static_cast<std::size_t>(i)] < 0) {
                p.port_new[static_cast<std::size_t>(i)] = static_cast<int>(next.size());
                next.push_back(vx.arcs[static_cast<std::size_t>(i)]);
            }
        if (next.size() > 250)
            throw ResourceLimit("sweep frontier exceeds 250 arcs");
        p.new_frontier = static_cast<int>(next.size());
        stats.max_frontier = std::max(stats.max_frontier, next.size());
        frontier = std::move(next);
        plans.push_back(std::move(p));
    }
    return plans;
}

int trace_step(const StepPlan& plan, const std::string& partner, const VertexKind::Resolution& res, std::string& out)
{
    const int f = plan.old_frontier;
    const int m = static_cast<int>(plan.port_old.size());
    const int nodes = f + m;
    // Up to two neighbours per node.
    thread_local std::vector<std::array<int, 2>> nb;
    thread_local std::vector<int> deg;
    thread_local std::vector<char> seen;
    thread_local std::vector<int> newpos;
    nb.assign(static_cast<std::size_t>(nodes), {-1, -1});
    deg.assign(static_cast<std::size_t>(nodes), 0);
    seen.assign(static_cast<std::size_t>(nodes), 0);
    newpos.assign(static_cast<std::size_t>(nodes), -1);
    auto link = [&](int a, int b) {
        nb[static_cast<std::size_t>(a)][static_cast<std::size_t>(deg[static_cast<std::size_t>(a)]++)] = b;
        nb[static_cast<std::size_t>(b)][static_cast<std::size_t>(deg[static_cast<std::size_t>(b)]++)] = a;
    };
    for (int i = 0; i < f; ++i) {
        const int j = static_cast<unsigned char>(partner[static_cast<std::size_t>(i)]);
        if (i < j)
            link(i, j);
        newpos[static_cast<std::size_t>(i)] = plan.old_keep[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < m; ++i) {
        const int q = plan.port_old[static_cast<std::size_t>(i)];
        const int s = plan.port_self[static_cast<std::size_t>(i)];
        if (q >= 0)
            link(q, f + i);
        else if (s > i)
            link(f + i, f + s);
        newpos[static_cast<std::size_t>(f + i)] = plan.port_new[static_cast<std::size_t>(i)];
    }
    for (const auto& [a, b] : res.pairs)
        link(f + a, f + b);

    out.assign(static_cast<std::size_t>(plan.new_frontier), '\0');
    for (int start = 0; start < nodes; ++start) {
        if (newpos[static_cast<std::size_t>(start)] < 0 || seen[static_cast<std::size_t>(start)])
            continue;
        int prev = -1, cur = start;
        seen[static_cast<std::size_t>(cur)] = 1;
        while (true) {
            const auto& n2 = nb[static_cast<std::size_t>(cur)];
            const int nxt = (cur != start && n2[0] == prev) ? n2[1] : n2[0];
            prev = cur;
            cur = nxt;
            seen[static_cast<std::size_t>(cur)] = 1;
            if (newpos[static_cast<std::size_t>(cur)] >= 0)
                break;
        }
        out[static_cast<std::size_t>(newpos[static_cast<std::size_t>(start)])] =
            static_cast<char>(newpos[static_cast<std::size_t>(cur)]);
        out[static_cast<std::size_t>(newpos[static_cast<std::size_t>(cur)])] =
            static_cast<char>(newpos[static_cast<std::size_t>(start)]);
    }
    int loops = 0;
    for (int start = 0; start < nodes; ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        ++loops;
        int prev = -1, cur = start;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            const auto& n2 = nb[static_cast<std::size_t>(cur)];
            const int nxt = (n2[0] == prev && prev != -1) ? n2[1] : n2[0];
            prev = cur;
            cur = nxt;
        } while (cur != start);
    }
    return loops;
}

} // namespace detail

} // namespace qinv
