#pragma once

#include <vector>

#include "qinv/diagram.hpp"
#include "qinv/root_scalar.hpp"
#include "qinv/rtw.hpp"

namespace qinv
{

/// Even omega on one component of the 0-framed Hopf link, full omega on the other.
RootScalar hopf_block(const RootContext& ctx, const InvariantOptions& options = {});

struct BrodaValue
{
    RootScalar value{RootContext()};
    /// The normalizer needed a square root with no exact form; value is floating
    /// point on the principal branch.
    bool principal_branch = false;
};

/**
 * Even omega on undotted components, full omega on dotted ones, divided by
 * <even omega on a 0-unknot>^nu * hopf_block^((N + dotted - nu)/2), with nu
 * the nullity of the full linking matrix. Throws ValidationError for barred
 * components, DegenerateNormalizer.
 */
BrodaValue broda_invariant(const Diagram& d, const RootContext& ctx, const InvariantOptions& options = {});

EquivReport fourman_equiv_check(const Diagram& a, const Diagram& b, const std::vector<int>& levels,
                                Mode mode = Mode::exact, double tolerance = 1e-9,
                                const InvariantOptions& options = {});

} // namespace qinv
