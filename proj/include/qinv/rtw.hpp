#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qinv/cabling.hpp"
#include "qinv/diagram.hpp"
#include "qinv/root_scalar.hpp"

namespace qinv
{

/// Default cap on the level; the color sum has (k+1)^N terms.
inline constexpr int kMaxLevel = 6;

enum class Parity
{
    all,
    even ///< even colors only
};

/// Colors 0..k (or the even ones) with weight (-1)^n [n+1] at the level root.
struct OmegaWeights
{
    int level = 0;
    Parity parity = Parity::all;
    std::vector<std::pair<int, RootScalar>> entries;
};

OmegaWeights omega_weights(const RootContext& ctx, Parity parity = Parity::all);

struct InvariantOptions
{
    int max_level = kMaxLevel;
    std::size_t max_crossings = 256; ///< per cabled term
    unsigned threads = 0;            ///< 0 = hardware concurrency
};

/**
 * Sum over colorings of the product of weights times the colored bracket.
 * filters[i] is the weight set on component i; nullopt keeps the component's
 * own fixed color. Terms are summed in a fixed order, so exact results do
 * not depend on scheduling.
 */
RootScalar omega_insertion(const Diagram& d, const std::vector<std::optional<Parity>>& filters,
                           const RootContext& ctx, const InvariantOptions& options = {});

/// Full omega on every non-barred component; barred ones keep their colors.
RootScalar omega_expectation(const Diagram& d, const RootContext& ctx, const InvariantOptions& options = {});

/// omega_expectation of the unknot framed `framing` (0, +1 or -1 in practice).
RootScalar omega_unknot(int framing, Parity parity, const RootContext& ctx, const InvariantOptions& options = {});

/**
 * omega_expectation / (<w+>^b+ <w->^b-) with b+- from the linking matrix of
 * the non-barred components. Throws DegenerateNormalizer.
 */
RootScalar rtw_invariant(const Diagram& d, const RootContext& ctx, const InvariantOptions& options = {});

struct EquivRow
{
    int level = 0;
    RootScalar first{RootContext()};
    RootScalar second{RootContext()};
    bool exact = true; ///< false when the comparison fell back to floating point
    bool equal = false;
};

struct EquivReport
{
    std::vector<EquivRow> rows;
    bool equivalent() const;
};

/**
 * rtw_invariant of both presentations at each level. Exact mode falls back to
 * floating point per level on ArithmeticOverflow; `tolerance` applies then.
 */
EquivReport kirby_equiv_check(const Diagram& a, const Diagram& b, const std::vector<int>& levels,
                              Mode mode = Mode::exact, double tolerance = 1e-9,
                              const InvariantOptions& options = {});

namespace detail
{

/// ResourceLimit above the level cap.
void check_level(const RootContext& ctx, const InvariantOptions& options);

/// Shared per-level comparison used by both equivalence checks.
template <class F>
EquivReport compare_levels(const std::vector<int>& levels, Mode mode, double tolerance, F&& invariant);

} // namespace detail

} // namespace qinv

#include "qinv/detail/compare_levels.hpp"
