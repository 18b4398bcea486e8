#pragma once

#include <cstddef>

#include "qinv/diagram.hpp"
#include "qinv/laurent.hpp"
#include "qinv/planar.hpp"

namespace qinv
{

inline constexpr std::size_t kDefaultMaxCrossings = 256;

/// Crossings as vertices, crossingless components as free loops.
PlanarNetwork to_network(const Diagram& d);

/**
 * Kauffman bracket with <empty> = 1 and loop value -A^2 - A^-2, by a
 * frontier sweep that merges partial smoothings with equal connectivity.
 * Throws ResourceLimit above `max_crossings`.
 */
LaurentPoly bracket(const Diagram& d, std::size_t max_crossings = kDefaultMaxCrossings);

/// Every one of the 2^c smoothings, one at a time. At most 16 crossings.
LaurentPoly bracket_bruteforce(const Diagram& d);

/// (-A^3)^(-w) <d>; the writhe-normalized bracket.
LaurentPoly normalized_bracket(const Diagram& d, std::size_t max_crossings = kDefaultMaxCrossings);

/// Jones polynomial in A, unknot = 1. Use to_t_string() for the t = A^-4 form.
LaurentPoly jones(const Diagram& d, std::size_t max_crossings = kDefaultMaxCrossings);

struct SkeinCheck
{
    LaurentPoly alpha;
    LaurentPoly beta;
    LaurentPoly gamma;
    LaurentPoly residual;
    std::size_t site = 0;
};

/**
 * alpha*f(d+) + beta*f(d-) + gamma*f(d0) with f the normalized bracket.
 * d+ and d- must agree except at one crossing, positive in d+.
 * Throws SiteMismatch.
 */
SkeinCheck check_skein(const Diagram& d_plus, const Diagram& d_minus, const Diagram& d_zero);

/// The triple (d with crossing i made positive, made negative, smoothed).
struct SkeinTriple
{
    Diagram plus;
    Diagram minus;
    Diagram zero;
};
SkeinTriple skein_triple_at(const Diagram& d, std::size_t i);

} // namespace qinv
