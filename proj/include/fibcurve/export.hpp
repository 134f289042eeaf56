#pragma once

// Deterministic emitters for patches and approximating polygons: SVG for
// pictures, JSON for exact data, CSV for plotting.

#include "fibcurve/curve.hpp"
#include "fibcurve/decoration_solver.hpp"
#include "fibcurve/golden.hpp"
#include "fibcurve/substitution.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fibcurve {

inline constexpr const char* kPatchSchema = "fibcurve-patch-v1";

struct Polyline {
    std::vector<Point2> vertices;
    friend bool operator==(const Polyline&, const Polyline&) = default;
};

// Centers of the level-k rectangles in curve order; k >= 1.
Polyline polygon(int k);

// Drops vertices lying on the segment joining their neighbours.
std::vector<std::array<double, 2>> merge_collinear(const std::vector<std::array<double, 2>>& pts);

struct TessellationOptions {
    // Adds the mirror images across x = 0, y = 0 and x = -y.
    bool reflect = false;
};

// omega^(2m)(A1+) anchored at the origin; m >= 1.
Patch tessellate(int m, const TessellationOptions& options = {});

struct SvgStyle {
    double pixels_per_unit = 400.0;
    double margin = 10.0;
    double stroke_width = 2.0;
    bool fill_tiles = true;
    bool draw_decorations = true;
    bool draw_labels = false;
    // Fill colors for A, B, C, D.
    std::array<std::string, 4> palette{"#f4d35e", "#83c5be", "#ee964b", "#c9ada7"};
};

// Palette from "A=#rrggbb,B=...," or four comma-separated colors; nullopt on bad text.
std::optional<std::array<std::string, 4>> parse_palette(const std::string& text);

std::string to_svg(const Patch& patch, const SvgStyle& style = {},
                   const DecorationSystem& system = reference_system());
// frame rectangles are outlined under the polyline.
std::string to_svg(const Polyline& line, const SvgStyle& style = {}, const std::vector<Rect>& frame = {});

// polygon(k) drawn over the level-k rectangles.
std::string polygon_svg(int k, const SvgStyle& style = {});

std::string to_json(const Patch& patch, const DecorationSystem* system = nullptr);
// Throws std::invalid_argument on malformed documents.
Patch patch_from_json(const std::string& text);

// Header "i,x,y"; i is 1-based.
std::string to_csv(const Polyline& line);

// Fixed-precision (12 decimals) rendering used by every emitter.
std::string format_fixed(double v);

}  // namespace fibcurve
