#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qinv/errors.hpp"
#include "qinv/laurent.hpp"
#include "qinv/root_scalar.hpp"

namespace qinv
{

/**
 * A vertex type: `ports` endpoints and the ways of pairing them up, each
 * with a weight. A crossing has two resolutions; a Jones-Wenzl box of size
 * n has one per Temperley-Lieb diagram on 2n points.
 */
struct VertexKind
{
    struct Resolution
    {
        std::vector<std::pair<int, int>> pairs; // port index pairs
        LaurentPoly weight;
    };
    int ports = 0;
    std::vector<Resolution> resolutions;
};

/// The two smoothings of a crossing, ports in PD order.
VertexKind crossing_kind();

/**
 * Graph of vertices joined by arcs. Every arc label must occur at exactly
 * two ports. Closed circles with no vertex are counted in `free_loops`.
 */
class PlanarNetwork
{
  public:
    struct Vertex
    {
        int kind = 0;
        std::vector<int> arcs; // arc at each port
    };

    int add_kind(VertexKind kind);
    void add_vertex(int kind, std::vector<int> arcs);
    void add_free_loops(int n) { free_loops_ += n; }

    const std::vector<VertexKind>& kinds() const noexcept { return kinds_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    int free_loops() const noexcept { return free_loops_; }

    /// Throws ValidationError unless every arc has two ends.
    void check() const;

  private:
    std::vector<VertexKind> kinds_;
    std::vector<Vertex> vertices_;
    int free_loops_ = 0;
};

/// Exact integer polynomials in A.
struct LaurentRing
{
    using Elem = LaurentPoly;
    Elem from_poly(const LaurentPoly& p) const { return p; }
    Elem one() const { return LaurentPoly(1); }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    void add(Elem& acc, const Elem& x) const { acc += x; }
    bool is_zero(const Elem& x) const { return x.is_zero(); }
};

/**
 * Z[z]/Phi_{4r}(z) with overflow-checked 128-bit coefficients. A lightweight
 * stand-in for exact RootScalar inside the hot loop.
 */
class CycloRing
{
  public:
    static constexpr int kCapacity = 32;
    struct Elem
    {
        std::array<__int128, kCapacity> c{};
    };

    explicit CycloRing(int level);

    int degree() const noexcept { return degree_; }
    Elem from_poly(const LaurentPoly& p) const;
    Elem one() const;
    Elem mul(const Elem& a, const Elem& b) const;
    void add(Elem& acc, const Elem& x) const;
    bool is_zero(const Elem& x) const;
    RootScalar to_scalar(const Elem& x, const RootContext& ctx) const;

  private:
    int level_;
    int order_;
    int degree_;
    std::vector<std::int64_t> phi_;       // monic, constant term first
    std::vector<Elem> power_table_;        // z^e reduced, e in [0, order)
};

/// Floating evaluation at A = exp(i*pi/(2r)).
class ComplexRing
{
  public:
    using Elem = std::complex<double>;
    explicit ComplexRing(int level);
    Elem from_poly(const LaurentPoly& p) const;
    Elem one() const { return {1.0, 0.0}; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    void add(Elem& acc, const Elem& x) const { acc += x; }
    bool is_zero(const Elem& x) const { return x == Elem{}; }

  private:
    int order_;
};

/// Order in which the sweep absorbs vertices; greedily keeps the frontier small.
std::vector<std::size_t> sweep_order(const PlanarNetwork& net);

struct SweepStats
{
    std::size_t max_states = 0;
    std::size_t max_frontier = 0;
};

namespace detail
{

/// Per-vertex data for a sweep step that does not depend on the state.
struct StepPlan
{
    std::size_t vertex = 0;
    int old_frontier = 0;
    std::vector<int> port_old;     // old frontier position hit by each port, -1 if none
    std::vector<int> port_self;    // partner port of a self-arc, -1 if none
    std::vector<int> old_keep;     // new position of each surviving old frontier slot, -1 if it closes here
    std::vector<int> port_new;     // new position of each port that opens an arc, -1 otherwise
    int new_frontier = 0;
};

std::vector<StepPlan> plan_sweep(const PlanarNetwork& net, SweepStats& stats);

/**
 * Connect state + resolution and trace. `partner` is indexed by old frontier
 * slot; writes the new matching into `out` and returns the number of closed
 * loops.
 */
int trace_step(const StepPlan& plan, const std::string& partner, const VertexKind::Resolution& res,
               std::string& out);

} // namespace detail

/**
 * Sum over all resolutions of every vertex of the product of weights times
 * delta^(closed loops), by sweeping vertices in sweep_order and merging
 * partial states that leave the same connectivity on the frontier.
 */
template <class Ring>
typename Ring::Elem evaluate_network(const PlanarNetwork& net, const Ring& ring, std::size_t state_cap = 4'000'000,
                                     SweepStats* stats_out = nullptr)
{
    using Elem = typename Ring::Elem;
    net.check();
    SweepStats stats;
    const auto plan = detail::plan_sweep(net, stats);

    // Resolution weights and loop powers in the target ring.
    std::vector<std::vector<Elem>> weights(net.kinds().size());
    for (std::size_t k = 0; k < net.kinds().size(); ++k)
        for (const auto& r : net.kinds()[k].resolutions)
            weights[k].push_back(ring.from_poly(r.weight));
    std::vector<Elem> delta_pow{ring.one()};
    const Elem delta = ring.from_poly(loop_value());
    auto delta_power = [&](int n) -> const Elem& {
        while (static_cast<int>(delta_pow.size()) <= n)
            delta_pow.push_back(ring.mul(delta_pow.back(), delta));
        return delta_pow[static_cast<std::size_t>(n)];
    };

    std::unordered_map<std::string, Elem> states;
    states.emplace(std::string(), ring.one());
    std::unordered_map<std::string, Elem> next;
    std::string key;
    for (const auto& step : plan) {
        const auto& vertex = net.vertices()[step.vertex];
        const auto& kind = net.kinds()[static_cast<std::size_t>(vertex.kind)];
        next.clear();
        next.reserve(states.size() * 2);
        for (const auto& [partner, value] : states) {
            for (std::size_t r = 0; r < kind.resolutions.size(); ++r) {
                const auto& w = weights[static_cast<std::size_t>(vertex.kind)][r];
                if (ring.is_zero(w))
                    continue;
                const int loops = detail::trace_step(step, partner, kind.resolutions[r], key);
                Elem term = ring.mul(value, w);
                if (loops > 0)
                    term = ring.mul(term, delta_power(loops));
                auto it = next.find(key);
                if (it == next.end())
                    next.emplace(key, std::move(term));
                else
                    ring.add(it->second, term);
            }
        }
        states.swap(next);
        stats.max_states = std::max(stats.max_states, states.size());
        if (states.size() > state_cap)
            throw ResourceLimit("state sweep exceeded " + std::to_string(state_cap) + " frontier states");
    }
    if (stats_out)
        *stats_out = stats;
    Elem result{};
    if (auto it = states.find(std::string()); it != states.end())
        result = it->second;
    return ring.mul(result, delta_power(net.free_loops()));
}

} // namespace qinv
