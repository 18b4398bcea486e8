#pragma once

#include "qinv/errors.hpp"
#include "qinv/rtw.hpp"

namespace qinv::detail
{

template <class F>
EquivReport compare_levels(const std::vector<int>& levels, Mode mode, double tolerance, F&& invariant)
{
    EquivReport report;
    for (int k : levels) {
        EquivRow row;
        row.level = k;
        const RootContext ctx(k, mode, tolerance);
        try {
            row.first = invariant(0, ctx);
            row.second = invariant(1, ctx);
            row.exact = row.first.is_exact() && row.second.is_exact();
        } catch (const ArithmeticOverflow&) {
            const auto fl = ctx.with_mode(Mode::floating);
            row.first = invariant(0, fl);
            row.second = invariant(1, fl);
            row.exact = false;
        }
        row.equal = row.exact ? row.first == row.second
                              : approx_equal(row.first.to_float(), row.second.to_float(), tolerance);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace qinv::detail
