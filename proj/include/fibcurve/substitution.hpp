#pragma once

// Geometric substitutions: the Fibonacci substitution on intervals, its
// Cartesian square on four rectangle colors, and the decorated substitution
// omega on the 24 prototiles. Patches are kept in curve order.

#include "fibcurve/golden.hpp"
#include "fibcurve/prototiles.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace fibcurve {

// ---- one-dimensional Fibonacci substitution ------------------------------

// A -> AB, B -> A on intervals of length phi (A) and 1 (B).
struct FibonacciRule {
    std::string apply(const std::string& word) const;
    std::string iterate(const std::string& word, int k) const;
    GoldenInt length(const std::string& word) const;
    static GoldenInt letter_length(char c);
    GoldenInt expansion() const { return GoldenInt::phi(); }
};

FibonacciRule rule_mu1();

// ---- Cartesian square of the Fibonacci substitution ---------------------

struct ColorCell {
    Color color;
    Point2 offset;
};

// Cells of the (unscaled) supertile of a color: A -> A,C,B,D; B -> A,C; C -> A,B; D -> A.
std::vector<ColorCell> mu2_cells(Color c);

// ---- decorated substitution ---------------------------------------------

enum class Mirror { None, AcrossYAxis, AcrossXAxis, AntiDiagonal };

struct PlacedTile {
    Label label;
    // Lower-left corner of the placed rectangle.
    Point2 translation;
    Mirror mirror = Mirror::None;

    GoldenRat width() const;
    GoldenRat height() const;
    Rect rect() const { return {translation, width(), height()}; }

    friend bool operator==(const PlacedTile&, const PlacedTile&) = default;
};

struct Patch {
    std::vector<PlacedTile> tiles;
    Rect support;
    int level = 0;

    std::size_t size() const { return tiles.size(); }
    friend bool operator==(const Patch&, const Patch&) = default;
};

struct RuleChild {
    Label label;
    Point2 offset;
};

using RuleRow = std::vector<RuleChild>;

// One-dimensional reading of a rule: child labels per parent, p1..p24 order.
using NuTable = std::array<std::vector<Label>, kLabelCount>;

// The nu listing exactly as printed (two rows disagree with the decorations).
NuTable printed_nu_table();
// The printed listing with A1+ -> ..D4+.. and A2+ -> ..D3-.. (and their reversals).
NuTable corrected_nu_table();

// Whether every "-" row is the reversed, sign-flipped "+" row.
bool reversal_consistent(const NuTable& table);

class SubstitutionRule {
public:
    // Places each child on the cell of its color in the parent's mu2 layout.
    static SubstitutionRule from_nu_table(const NuTable& table);

    const RuleRow& row(const Label& l) const { return rows_[l.ordinal()]; }
    NuTable nu_table() const;
    GoldenInt expansion() const { return GoldenInt::phi(); }

private:
    std::array<RuleRow, kLabelCount> rows_;
};

const SubstitutionRule& rule_omega();

// One substitution step: every tile (L, t) becomes row(L) + phi*t, in order.
Patch apply(const Patch& patch, const SubstitutionRule& rule = rule_omega());

Patch single_tile_patch(const Label& seed);

// omega^k(seed) built by row expansion with a per-(label, level) cache.
class SupertileBuilder {
public:
    explicit SupertileBuilder(const SubstitutionRule& rule = rule_omega()) : rule_(rule) {}

    Patch build(const Label& seed, int k);
    // Tile count of omega^k(seed) from the cached row structure.
    BigInt count(const Label& seed, int k);

private:
    using Tiles = std::vector<PlacedTile>;
    std::shared_ptr<const Tiles> tiles(const Label& seed, int k);

    const SubstitutionRule& rule_;
    std::map<std::pair<int, int>, std::shared_ptr<const Tiles>> cache_;
    std::map<std::pair<int, int>, BigInt> counts_;
};

// Throws std::invalid_argument for k < 0.
Patch supertile(const Label& seed, int k, const SubstitutionRule& rule = rule_omega());

// No two tiles of the patch have overlapping interiors (sweep over x).
bool interiors_disjoint(const Patch& patch);

std::vector<Label> nu_word(const Label& seed, int k, const SubstitutionRule& rule = rule_omega());

// ---- counting ------------------------------------------------------------

using CountMatrix = std::array<std::array<int, kLabelCount>, kLabelCount>;
using CountVector = std::array<BigInt, kLabelCount>;

// M[i][j] = number of times p_j occurs in omega(p_i).
CountMatrix count_matrix(const SubstitutionRule& rule = rule_omega());

// (M^T)^k e_seed, exactly.
CountVector count_vector(const CountMatrix& m, const Label& seed, int k);
CountVector label_counts(const Patch& patch);

struct EigenEstimate {
    double value = 0.0;
    int iterations = 0;
};

// Power iteration on M; throws std::runtime_error without convergence.
EigenEstimate dominant_eigenvalue(const CountMatrix& m, double tol = 1e-14, int max_iterations = 10000);

}  // namespace fibcurve
