#include "qinv/fourman.hpp"

#include "qinv/errors.hpp"
#include "qinv/fixtures.hpp"

namespace qinv
{

RootScalar hopf_block(const RootContext& ctx, const InvariantOptions& options)
{
    static const Diagram hopf = fixtures::get("hopf");
    return omega_insertion(hopf, {Parity::even, Parity::all}, ctx, options);
}

BrodaValue broda_invariant(const Diagram& d, const RootContext& ctx, const InvariantOptions& options)
{
    if (d.has_barred())
        throw ValidationError("special links have no barred components");
    std::vector<std::optional<Parity>> filters;
    for (const auto& c : d.components())
        filters.push_back(c.dotted ? Parity::all : Parity::even);
    const RootScalar numerator = omega_insertion(d, filters, ctx, options);

    const int nu = signature_nullity(linking_matrix(d)).nullity;
    const int twice_exponent = static_cast<int>(d.component_count()) - nu;

    BrodaValue out;
    RootScalar denominator = RootScalar::from_int(1, ctx);
    if (nu > 0) {
        const RootScalar op = omega_unknot(0, Parity::even, ctx, options);
        if (op.is_zero())
            throw DegenerateNormalizer("even omega on the unknot vanishes at level " + std::to_string(ctx.level));
        denominator *= scalar_power(op, nu);
    }
    if (twice_exponent != 0) {
        const RootScalar hb = hopf_block(ctx, options);
        if (hb.is_zero())
            throw DegenerateNormalizer("Hopf block vanishes at level " + std::to_string(ctx.level));
        try {
            denominator *= scalar_power(hb, twice_exponent, 2);
        } catch (const InexactHalfPower&) {
            denominator = denominator.to_float() * scalar_power(hb.to_float(), twice_exponent, 2);
            out.principal_branch = true;
        }
    }
    out.value = out.principal_branch ? numerator.to_float() / denominator : numerator / denominator;
    return out;
}

EquivReport fourman_equiv_check(const Diagram& a, const Diagram& b, const std::vector<int>& levels, Mode mode,
                                double tolerance, const InvariantOptions& options)
{
    return detail::compare_levels(levels, mode, tolerance, [&](int which, const RootContext& ctx) {
        return broda_invariant(which == 0 ? a : b, ctx, options).value;
    });
}

} // namespace qinv
