#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qinv/diagram.hpp"

namespace qinv::fixtures
{

struct Entry
{
    std::string name;
    std::string text;
};

/// Link diagrams: unknot, unlink2, hopf, trefoil, trefoil_right, figure_eight,
/// cinquefoil, knot_6_2, whitehead, borromean, braid12.
const std::vector<Entry>& links();

/// Named surgery presentations (framed, possibly barred).
const std::vector<Entry>& surgery();

/// Named special links with dotted components.
const std::vector<Entry>& special();

/// Looks a name up in all three tables. Throws std::out_of_range.
Diagram get(std::string_view name);
const std::string& text(std::string_view name);

struct Pair
{
    std::string first;
    std::string second;
    std::string note;
};

/// Presentations related by Kirby moves (same 3-manifold).
const std::vector<Pair>& kirby_pairs();

/// Special links related by moves of the 4-dimensional calculus.
const std::vector<Pair>& fourman_pairs();

} // namespace qinv::fixtures
