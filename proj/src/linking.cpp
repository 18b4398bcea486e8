#include <boost/multiprecision/cpp_int.hpp>

#include "qinv/diagram.hpp"

namespace qinv
{

namespace
{
using Rational = boost::multiprecision::cpp_rational;
}

Inertia signature_nullity(const LinkingMatrix& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j);

    Inertia out;
    // Symmetric elimination: pivot on a nonzero diagonal entry, or on a
    // hyperbolic 2x2 block when the remaining diagonal is zero.
    std::vector<bool> done(n, false);
    std::size_t remaining = n;
    auto eliminate = [&](std::size_t p) {
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || i == p || a[i][p] == 0)
                continue;
            const Rational f = a[i][p] / a[p][p];
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j])
                    a[i][j] -= f * a[p][j];
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j])
                    a[j][i] = a[i][j];
        }
        (a[p][p] > 0 ? out.b_plus : out.b_minus) += 1;
        done[p] = true;
        --remaining;
    };
    while (remaining > 0) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n && pivot == n; ++i)
            if (!done[i] && a[i][i] != 0)
                pivot = i;
        if (pivot != n) {
            eliminate(pivot);
            continue;
        }
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!done[i] && !done[j] && a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n)
            break; // what is left is zero
        // Congruence by I + e_j e_i^T: row i += row j, then column i += column j.
        // The new (i,i) entry is 2*a[i][j], nonzero.
        for (std::size_t k = 0; k < n; ++k)
            if (!done[k])
                a[pi][k] += a[pj][k];
        for (std::size_t k = 0; k < n; ++k)
            if (!done[k])
                a[k][pi] += a[k][pj];
        eliminate(pi);
    }
    out.nullity = static_cast<int>(remaining);
    return out;
}

} // namespace qinv
