#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qinv/diagram.hpp"
#include "qinv/laurent.hpp"
#include "qinv/planar.hpp"
#include "qinv/root_scalar.hpp"

namespace qinv
{

/**
 * Crossingless pairing of 2n points: bottom points 0..n-1 left to right,
 * top points n..2n-1 left to right. match[p] is the partner of p.
 */
struct TLDiagram
{
    int n = 0;
    std::vector<std::int8_t> match;

    static TLDiagram identity(int n);
    /// e_i joins strands i-1 and i at the bottom and at the top (1 <= i < n).
    static TLDiagram generator(int n, int i);

    /// `top` stacked on `bottom`; second is the number of closed loops.
    friend std::pair<TLDiagram, int> compose(const TLDiagram& top, const TLDiagram& bottom);
    /// One more straight strand on the right.
    TLDiagram with_extra_strand() const;
    bool is_planar() const;

    auto operator<=>(const TLDiagram&) const = default;
};

/**
 * JW_n = (1/denominator) * sum of numerator * diagram. Coefficients are
 * exact: the denominator is a product of quantum integers.
 */
struct JWElement
{
    int n = 0;
    LaurentPoly denominator{1};
    std::vector<std::pair<TLDiagram, LaurentPoly>> terms;
};

/// Cached; n <= 12. Built by Wenzl's recursion.
const JWElement& jones_wenzl(int n);

/// x composed on top of y, over the common denominator x.den * y.den.
JWElement compose(const JWElement& x, const JWElement& y);
/// Single-term element from a TL diagram.
JWElement as_element(const TLDiagram& d);
/// True when both elements are the same rational combination.
bool same_element(const JWElement& x, const JWElement& y);

enum class FramingMethod
{
    kinks,       ///< explicit curls in the diagram, then cabled
    twist_factor ///< blackboard cable times theta_n per missing curl
};

struct CableOptions
{
    int max_color = 5;
    std::size_t max_crossings = 256;
    FramingMethod framing = FramingMethod::kinks;
};

/// (-1)^n A^{n(n+2)}: a curl on a JW_n-decorated cable.
LaurentPoly twist_eigenvalue(int n);

/**
 * The cable of a colored framed diagram as a network of crossings and
 * Jones-Wenzl boxes. value = factor * sweep(network) / denominator.
 */
struct CabledLink
{
    PlanarNetwork network;
    LaurentPoly factor{1};
    LaurentPoly denominator{1};
    std::size_t crossings = 0;
    std::vector<int> box_colors;

    /// Each box replaced by one of its diagrams: a formal sum of plain diagrams
    /// with coefficients over `denominator` (factor already applied). Throws
    /// ResourceLimit above `max_terms`.
    std::vector<std::pair<Diagram, LaurentPoly>> expand(std::size_t max_terms = 4096) const;
};

/**
 * Each component of color n becomes n blackboard parallels with one JW_n box;
 * colour 0 components are dropped. Framing is realized per options.
 * Throws ColorOutOfRange, ResourceLimit.
 */
CabledLink cable(const Diagram& d, const std::vector<int>& colors, const CableOptions& options = {});

/// A rational function in A.
struct RationalValue
{
    LaurentPoly numerator;
    LaurentPoly denominator{1};

    /// numerator / denominator when it divides exactly.
    std::optional<LaurentPoly> reduced() const { return numerator.divide_exact(denominator); }
};

/// <d; colors> over generic A.
RationalValue colored_bracket(const Diagram& d, const std::vector<int>& colors, const CableOptions& options = {});

/// <d; colors> at the level root; colors above the level throw ColorOutOfRange.
RootScalar colored_bracket(const Diagram& d, const std::vector<int>& colors, const RootContext& ctx,
                           const CableOptions& options = {});

/// Evaluate an already-built cable at the level root.
RootScalar evaluate_cable(const CabledLink& c, const RootContext& ctx);

} // namespace qinv
