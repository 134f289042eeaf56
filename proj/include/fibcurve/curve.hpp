#pragma once

// The Fibonacci space-filling curve F : [0,1] -> [0,1]^2.
//
// Level k pairs the rectangles J^k_i of phi^(-k-1) omega^k(A1+) (in curve
// order) with consecutive closed intervals I^k_i of [0,1] whose lengths are
// the rectangle areas. F(x) is the intersection of the rectangles paired with
// a nested chain of intervals containing x. Every bound here is exact in
// Z[phi]; floating point only appears in reported error bounds and in the
// floating-point preimage query.

#include "fibcurve/golden.hpp"
#include "fibcurve/prototiles.hpp"
#include "fibcurve/substitution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fibcurve {

inline constexpr int kDefaultDepth = 32;

struct PartitionLevel {
    int k = 0;
    std::vector<Rect> rects;
    std::vector<Label> labels;
    // c_0 = 0 < c_1 < ... < c_N = 1; I^k_i = [cuts[i-1], cuts[i]].
    std::vector<GoldenInt> cuts;

    std::size_t size() const { return rects.size(); }
    GoldenInt length(std::size_t i) const { return cuts[i + 1] - cuts[i]; }
};

// Throws std::invalid_argument for k < 0.
PartitionLevel partition(int k);

// x = p/q in [0,1], kept in lowest terms with q > 0.
class ParamRational {
public:
    ParamRational(BigInt p, BigInt q);

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    double to_double() const;
    std::string to_string() const;

    // "P/Q" or an integer; throws std::invalid_argument on bad text or a value outside [0,1].
    static ParamRational parse(const std::string& text);

    friend bool operator==(const ParamRational&, const ParamRational&) = default;

private:
    BigInt p_;
    BigInt q_;
};

// sign(c - x), exactly.
int compare_cut(const GoldenInt& c, const ParamRational& x);

// 1-based index of the leftmost level-k interval containing x.
std::size_t locate(const ParamRational& x, const PartitionLevel& level);
std::size_t locate(const ParamRational& x, int k);

struct ChainLink {
    int level = 0;
    // 1-based index of J^level in curve order.
    BigInt index;
    Label label;
    Rect rect;
    // I^level = [lo, hi]
    GoldenInt lo;
    GoldenInt hi;
};

struct EvalResult {
    std::vector<ChainLink> chain;
    Rect box;
    Point2 center;
    // sqrt(2) * phi^-depth, the diameter of the largest level-depth rectangle.
    double error_bound = 0.0;
};

// Which interval a shared endpoint belongs to during descent.
enum class TieBreak { Left, Right };

// Descends the hierarchy, restricting each level to the children of the
// previous rectangle. Ties at shared interval endpoints go left by default. depth >= 1.
EvalResult eval(const ParamRational& x, int depth = kDefaultDepth, TieBreak tie = TieBreak::Left);
// Same for a parameter in Z[phi], e.g. a cut point; throws std::invalid_argument outside [0,1].
EvalResult eval(const GoldenInt& x, int depth = kDefaultDepth, TieBreak tie = TieBreak::Left);

struct PreimageResult {
    ParamRational x{0, 1};
    std::vector<ChainLink> chain;
};

// Greedy descent that picks, at each level, the first child rectangle containing
// y (bounds rounded outward to doubles). Returns a rational strictly inside the
// final interval. Throws std::invalid_argument when y is outside the unit square.
PreimageResult preimage(double yx, double yy, int depth = kDefaultDepth);
// Same with exact containment tests.
PreimageResult preimage_exact(const Point2& y, int depth = kDefaultDepth);

// A rational strictly inside the open interval (lo, hi); lo < hi.
ParamRational rational_between(const GoldenInt& lo, const GoldenInt& hi);

// Consecutive rectangles share an edge of positive length.
bool connectedness_check(const std::vector<Rect>& rects);
bool connectedness_check(const Patch& patch);
bool connectedness_check(int k);

struct ContinuityModulus {
    GoldenInt g;  // max interval length at level k
    double h = 0.0;  // max rectangle diameter at level k
};

// g_k = phi^-2k, h_k = sqrt(2) phi^-k.
ContinuityModulus continuity_modulus(int k);
// The same two quantities measured directly on a partition.
ContinuityModulus measured_modulus(const PartitionLevel& level);

double h_bound(int k);

}  // namespace fibcurve
