#pragma once

// Derives decoration endpoints from the concatenation constraints of a
// substitution, checks concatenation on supertiles, and enumerates every
// connected curve that the mu2 cell layout admits.

#include "fibcurve/prototiles.hpp"
#include "fibcurve/substitution.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fibcurve {

// Endpoint pair for each "+" label; "-" labels read them backwards.
struct DecorationSystem {
    std::array<Decoration, kBaseLabelCount> plus{};
    // For problems with free child indices: (parent, resolved child) per free slot.
    std::vector<std::pair<Label, Label>> resolved_children;

    Decoration operator()(const Label& l) const {
        const Decoration d = plus[l.base().ordinal()];
        return l.is_plus() ? d : d.reversed();
    }

    friend bool operator==(const DecorationSystem&, const DecorationSystem&) = default;
    friend auto operator<=>(const DecorationSystem&, const DecorationSystem&) = default;
};

// The table baked into decoration_endpoints().
DecorationSystem reference_system();

struct ChildSlot {
    Color color;
    // Empty when the index is an unknown of the problem.
    std::optional<int> index;
    Sign sign;
    Point2 offset;
};

struct ParentRow {
    Label parent;
    std::vector<ChildSlot> children;
};

struct SolverProblem {
    // "+" parents only; "-" rows follow by reversal.
    std::vector<ParentRow> rows;

    // free_d_indices leaves the index of every D child of an A row open.
    static SolverProblem from_nu_table(const NuTable& table, bool free_d_indices = false);
};

struct SolverStats {
    std::size_t nodes = 0;
};

// Complete backtracking enumeration; solutions are returned sorted.
// variable_order permutes the unknowns (12 label unknowns, then free slots in row order);
// an empty order means the natural one.
std::vector<DecorationSystem> solve_decorations(const SolverProblem& problem,
                                                const std::vector<int>& variable_order = {},
                                                SolverStats* stats = nullptr);

int solver_variable_count(const SolverProblem& problem);

// ---- concatenation on patches ------------------------------------------

struct ConcatenationReport {
    bool ok = false;
    std::size_t tiles = 0;
    // Index i such that tile i does not hand over to tile i + 1, or the
    // boundary tile when a global endpoint is wrong.
    std::optional<std::size_t> first_violation;
    Point2 start;
    Point2 end;
    std::string message;
};

Point2 decoration_start(const PlacedTile& t, const DecorationSystem& system);
Point2 decoration_end(const PlacedTile& t, const DecorationSystem& system);

// The decorations of patch = omega^k(seed) chain end-to-start and run from
// phi^k * start(seed) to phi^k * end(seed).
ConcatenationReport verify_concatenation(const Patch& patch, const Label& seed,
                                         const DecorationSystem& system = reference_system());

struct OrderReport {
    bool ok = false;
    std::vector<Label> order;
    std::string message;
};

// Every tile appears once and consecutive tiles are joined by their decorations.
OrderReport induced_order(const Patch& patch, const DecorationSystem& system = reference_system());

// ---- exhaustive search over the mu2 layout -------------------------------

struct TileType {
    Color color;
    Decoration dec;

    friend bool operator==(const TileType&, const TileType&) = default;
    friend auto operator<=>(const TileType&, const TileType&) = default;
    std::string to_string() const;
};

struct CellVisit {
    TileType type;
    Point2 offset;
};

using Expansion = std::vector<CellVisit>;

// Orderings of the mu2 cells of t.color with decorations that chain from
// phi*start to phi*end and visit edge-adjacent cells consecutively.
std::vector<Expansion> connected_expansions(const TileType& t);

// A seed type with one expansion chosen for every type reachable from it.
struct CurveSystem {
    TileType seed;
    std::map<TileType, std::vector<TileType>> choice;

    std::string key() const;
};

struct UniquenessReport {
    std::vector<CurveSystem> systems;
    // Orbits under {identity, diagonal reflection, reversal, both}.
    std::vector<std::vector<std::size_t>> classes;
    // Number of different type -> expansion maps among the systems.
    std::size_t distinct_maps = 0;
    // Index in systems of the curve generated by omega from A1+, if found.
    std::optional<std::size_t> omega_index;
};

UniquenessReport enumerate_connected_systems();

// The curve system read off omega from seed A1+.
CurveSystem omega_curve_system();

}  // namespace fibcurve
