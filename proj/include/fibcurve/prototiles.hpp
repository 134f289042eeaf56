#pragma once

// The 24 decorated rectangle prototiles p1..p24.
//
// Colors fix the support: A = [0,phi]^2, B = [0,phi]x[0,1], C = [0,1]x[0,phi],
// D = [0,1]^2. Each tile carries an oriented decoration between two corners of
// its support; the "-" tile is the "+" tile traversed backwards.

#include "fibcurve/golden.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace fibcurve {

enum class Color { A, B, C, D };
enum class Sign { Plus, Minus };
enum class Corner { BL, BR, TR, TL };

inline constexpr std::array<Color, 4> kColors{Color::A, Color::B, Color::C, Color::D};
inline constexpr std::array<Corner, 4> kCorners{Corner::BL, Corner::BR, Corner::TR, Corner::TL};

char color_char(Color c);
std::string_view corner_name(Corner c);

// Number of decoration indices available for a color (4 for A and D, 2 for B and C).
int index_count(Color c);

struct Label {
    Color color = Color::A;
    int index = 1;
    Sign sign = Sign::Plus;

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label& l, const Label& r) { return l.ordinal() <=> r.ordinal(); }

    // Position 0..23 in the order p1..p24 (all "+" tiles, then all "-" tiles).
    int ordinal() const;
    static Label from_ordinal(int i);

    Label reversed() const { return {color, index, sign == Sign::Plus ? Sign::Minus : Sign::Plus}; }
    Label base() const { return {color, index, Sign::Plus}; }
    bool is_plus() const { return sign == Sign::Plus; }

    // "A1+", "D3-"
    std::string to_string() const;
    static std::optional<Label> parse(std::string_view text);
};

inline constexpr int kLabelCount = 24;
inline constexpr int kBaseLabelCount = 12;

std::array<Label, kLabelCount> all_labels();

GoldenInt tile_width(Color c);
GoldenInt tile_height(Color c);

struct Prototile {
    Label label;
    GoldenInt width;
    GoldenInt height;
};

// p1..p24 in order.
std::array<Prototile, kLabelCount> prototile_set();

Color color_project(const Label& label);

// Exact coordinates of a corner of the [0,w]x[0,h] rectangle.
Point2 corner_point(Corner c, const GoldenRat& w, const GoldenRat& h);
Point2 corner_point(Corner c, Color color);

struct Decoration {
    Corner start = Corner::BL;
    Corner end = Corner::BR;

    Decoration reversed() const { return {end, start}; }
    friend bool operator==(const Decoration&, const Decoration&) = default;
    friend auto operator<=>(const Decoration&, const Decoration&) = default;
};

// The reference endpoint table (reproduced by the decoration solver).
Decoration decoration_endpoints(const Label& label);

}  // namespace fibcurve
