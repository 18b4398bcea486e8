#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qinv
{

/**
 * One link component. `arcs` lists the arc labels in the component's cyclic
 * order (arc i runs into arc i+1); an empty list is a crossingless circle
 * written `arcs=loop`. A single arc that appears in no crossing is also a
 * crossingless circle.
 */
struct Component
{
    int id = 0;
    int framing = 0;
    bool dotted = false;
    bool barred = false;
    std::optional<int> color;
    std::vector<int> arcs;

    friend bool operator==(const Component&, const Component&) = default;
};

/**
 * PD crossing: arc labels counterclockwise starting from the incoming
 * under-strand, so the under-strand runs slot 0 -> slot 2. The over-strand
 * runs slot 3 -> slot 1 when sign is +1 and slot 1 -> slot 3 when sign is -1.
 */
struct Crossing
{
    std::array<int, 4> arcs{};
    int sign = 1;

    int incoming_over_slot() const noexcept { return sign > 0 ? 3 : 1; }
    bool is_incoming(int slot) const noexcept { return slot == 0 || slot == incoming_over_slot(); }

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

class Diagram
{
  public:
    /// The empty diagram.
    Diagram() = default;

    /// Parse the line-oriented text format. Throws SyntaxError, ValidationError.
    static Diagram parse(std::string_view text);
    static Diagram load(const std::string& path);

    /**
     * Build from oriented crossings plus `free_loops` crossingless circles.
     * Components are recovered by tracing; arcs are renumbered 1..n along
     * them. Metadata is default (framing 0, undotted, unbarred).
     */
    static Diagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0);

    /**
     * Same, but orientations are chosen here: each tuple only needs slots 0
     * and 2 on the under-strand, listed counterclockwise.
     */
    static Diagram from_unoriented(const std::vector<std::array<int, 4>>& crossings, int free_loops = 0);

    /// Validating constructor for already-oriented data.
    Diagram(std::vector<Component> components, std::vector<Crossing> crossings);

    std::string serialize() const;

    const std::vector<Component>& components() const noexcept { return components_; }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    std::size_t component_count() const noexcept { return components_.size(); }
    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    std::size_t arc_count() const noexcept;
    bool empty() const noexcept { return components_.empty(); }
    bool has_dotted() const noexcept;
    bool has_barred() const noexcept;

    /// Index into components() of the component carrying `arc`.
    std::size_t component_of_arc(int arc) const;
    /// Component index of the under- and over-strand of crossing i.
    std::pair<std::size_t, std::size_t> crossing_components(std::size_t i) const;
    int max_arc() const noexcept;
    int max_component_id() const noexcept;

    /// Signed crossing sum of the drawn diagram.
    int writhe() const noexcept;
    /// Signed sum over crossings of component i with itself (its blackboard framing).
    int self_writhe(std::size_t component) const;

    /// Copy with one component's metadata replaced; revalidated.
    Diagram with_metadata(std::size_t component, int framing, bool dotted, bool barred,
                          std::optional<int> color) const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

  private:
    void validate();

    std::vector<Component> components_;
    std::vector<Crossing> crossings_;
    std::vector<int> arc_component_; // indexed by arc label, -1 if unused
};

/// Symmetric integer matrix of framings (diagonal) and linking numbers.
class LinkingMatrix
{
  public:
    LinkingMatrix() = default;
    explicit LinkingMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
    static LinkingMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t size() const noexcept { return n_; }
    long long at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, long long v);
    LinkingMatrix submatrix(std::span<const std::size_t> indices) const;
    LinkingMatrix operator-() const;

    std::string to_string() const;

    friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<long long> entries_;
};

struct Inertia
{
    int b_plus = 0;
    int b_minus = 0;
    int nullity = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Framings on the diagonal (0 for dotted), half the signed inter-component crossing sum off it.
LinkingMatrix linking_matrix(const Diagram& d);

/// Exact inertia by rational congruence diagonalization.
Inertia signature_nullity(const LinkingMatrix& m);

/// d plus a disjoint unknot framed `sign` (+1 or -1).
Diagram blow_up(const Diagram& d, int sign);

/// Over/under exchanged at every crossing; framings negated.
Diagram mirror(const Diagram& d);

/// Side-by-side union; arcs and ids of `b` are shifted past those of `a`.
Diagram disjoint_union(const Diagram& a, const Diagram& b);

/// `count` Reidemeister-I curls (sign of count) inserted on component i.
Diagram with_kinks(const Diagram& d, std::size_t component, int count);

/// Over/under exchanged at crossing i only.
Diagram switch_crossing(const Diagram& d, std::size_t i);

/// Orientation-respecting smoothing of crossing i (metadata reset to defaults).
Diagram oriented_smoothing(const Diagram& d, std::size_t i);

/// Closure of a braid word on `strands` strands; letter +j is sigma_j, -j its inverse.
Diagram braid_closure(int strands, const std::vector<int>& word);

} // namespace qinv
