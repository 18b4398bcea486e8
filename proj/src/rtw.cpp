#include "qinv/rtw.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "qinv/errors.hpp"

namespace qinv
{

namespace detail
{

void check_level(const RootContext& ctx, const InvariantOptions& options)
{
    if (ctx.level < 0)
        throw ValidationError("level must be nonnegative");
    if (ctx.level > options.max_level)
        throw ResourceLimit("level " + std::to_string(ctx.level) + " is above the cap " +
                            std::to_string(options.max_level));
}

} // namespace detail

OmegaWeights omega_weights(const RootContext& ctx, Parity parity)
{
    OmegaWeights w;
    w.level = ctx.level;
    w.parity = parity;
    for (int n = 0; n <= ctx.level; ++n) {
        if (parity == Parity::even && n % 2 != 0)
            continue;
        RootScalar v = quantum_integer(n + 1, ctx);
        if (n % 2 != 0)
            v = -v;
        w.entries.emplace_back(n, std::move(v));
    }
    return w;
}

namespace
{

/// Runs body(i) for i in [0, count) on a few threads; rethrows the first failure.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = count;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace

RootScalar omega_insertion(const Diagram& d, const std::vector<std::optional<Parity>>& filters,
                           const RootContext& ctx, const InvariantOptions& options)
{
    detail::check_level(ctx, options);
    if (filters.size() != d.component_count())
        throw ValidationError("one filter per component expected");

    CableOptions cable_options;
    cable_options.max_color = options.max_level;
    cable_options.max_crossings = options.max_crossings;
    cable_options.framing = FramingMethod::twist_factor;

    const OmegaWeights all = omega_weights(ctx, Parity::all);
    const OmegaWeights even = omega_weights(ctx, Parity::even);
    std::vector<const OmegaWeights*> sets;
    std::vector<int> fixed(d.component_count(), 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < d.component_count(); ++i) {
        if (filters[i]) {
            sets.push_back(*filters[i] == Parity::even ? &even : &all);
            total *= sets.back()->entries.size();
        } else {
            const auto& c = d.components()[i];
            fixed[i] = c.color.value_or(0);
            if (fixed[i] > ctx.level)
                throw ColorOutOfRange("color " + std::to_string(fixed[i]) + " of component " +
                                      std::to_string(c.id) + " exceeds level " + std::to_string(ctx.level));
            sets.push_back(nullptr);
        }
    }

    std::vector<std::optional<RootScalar>> terms(total);
    parallel_for(total, options.threads, [&](std::size_t index) {
        std::vector<int> colors = fixed;
        RootScalar weight = RootScalar::from_int(1, ctx);
        std::size_t rest = index;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (!sets[i])
                continue;
            const auto& e = sets[i]->entries[rest % sets[i]->entries.size()];
            rest /= sets[i]->entries.size();
            colors[i] = e.first;
            weight *= e.second;
        }
        terms[index] = weight * evaluate_cable(cable(d, colors, cable_options), ctx);
    });
    RootScalar sum = RootScalar::from_int(0, ctx);
    for (const auto& t : terms)
        sum += *t;
    return sum;
}

RootScalar omega_expectation(const Diagram& d, const RootContext& ctx, const InvariantOptions& options)
{
    if (d.has_dotted())
        throw ValidationError("surgery presentations have no dotted components");
    std::vector<std::optional<Parity>> filters;
    for (const auto& c : d.components())
        filters.push_back(c.barred ? std::nullopt : std::optional(Parity::all));
    return omega_insertion(d, filters, ctx, options);
}

RootScalar omega_unknot(int framing, Parity parity, const RootContext& ctx, const InvariantOptions& options)
{
    const Component c{1, framing, false, false, std::nullopt, {}};
    return omega_insertion(Diagram({c}, {}), {parity}, ctx, options);
}

RootScalar rtw_invariant(const Diagram& d, const RootContext& ctx, const InvariantOptions& options)
{
    const RootScalar numerator = omega_expectation(d, ctx, options);
    std::vector<std::size_t> surgery;
    for (std::size_t i = 0; i < d.component_count(); ++i)
        if (!d.components()[i].barred)
            surgery.push_back(i);
    const Inertia in = signature_nullity(linking_matrix(d).submatrix(surgery));
    RootScalar result = numerator;
    if (in.b_plus > 0) {
        const RootScalar wp = omega_unknot(1, Parity::all, ctx, options);
        if (wp.is_zero())
            throw DegenerateNormalizer("<omega+> vanishes at level " + std::to_string(ctx.level));
        result /= scalar_power(wp, in.b_plus);
    }
    if (in.b_minus > 0) {
        const RootScalar wm = omega_unknot(-1, Parity::all, ctx, options);
        if (wm.is_zero())
            throw DegenerateNormalizer("<omega-> vanishes at level " + std::to_string(ctx.level));
        result /= scalar_power(wm, in.b_minus);
    }
    return result;
}

bool EquivReport::equivalent() const
{
    for (const auto& r : rows)
        if (!r.equal)
            return false;
    return true;
}

EquivReport kirby_equiv_check(const Diagram& a, const Diagram& b, const std::vector<int>& levels, Mode mode,
                              double tolerance, const InvariantOptions& options)
{
    return detail::compare_levels(levels, mode, tolerance, [&](int which, const RootContext& ctx) {
        return rtw_invariant(which == 0 ? a : b, ctx, options);
    });
}

} // namespace qinv
