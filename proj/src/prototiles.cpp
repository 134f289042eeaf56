#include "fibcurve/prototiles.hpp"

#include <stdexcept>

namespace fibcurve {

namespace {

// Offset of each color block inside the "+" half of p1..p24.
int color_offset(Color c) {
    switch (c) {
        case Color::A: return 0;
        case Color::B: return 4;
        case Color::C: return 6;
        case Color::D: return 8;
    }
    return 0;
}

}  // namespace

char color_char(Color c) { return "ABCD"[static_cast<int>(c)]; }

std::string_view corner_name(Corner c) {
    switch (c) {
        case Corner::BL: return "BL";
        case Corner::BR: return "BR";
        case Corner::TR: return "TR";
        case Corner::TL: return "TL";
    }
    return "?";
}

int index_count(Color c) { return (c == Color::A || c == Color::D) ? 4 : 2; }

int Label::ordinal() const {
    return (sign == Sign::Plus ? 0 : kBaseLabelCount) + color_offset(color) + index - 1;
}

Label Label::from_ordinal(int i) {
    if (i < 0 || i >= kLabelCount) throw std::out_of_range("label ordinal");
    Label l;
    l.sign = i < kBaseLabelCount ? Sign::Plus : Sign::Minus;
    int r = i % kBaseLabelCount;
    for (Color c : {Color::D, Color::C, Color::B, Color::A}) {
        if (r >= color_offset(c)) {
            l.color = c;
            l.index = r - color_offset(c) + 1;
            break;
        }
    }
    return l;
}

std::string Label::to_string() const {
    std::string s;
    s += color_char(color);
    s += static_cast<char>('0' + index);
    s += sign == Sign::Plus ? '+' : '-';
    return s;
}

std::optional<Label> Label::parse(std::string_view text) {
    if (text.size() != 3) return std::nullopt;
    Label l;
    switch (text[0]) {
        case 'A': l.color = Color::A; break;
        case 'B': l.color = Color::B; break;
        case 'C': l.color = Color::C; break;
        case 'D': l.color = Color::D; break;
        default: return std::nullopt;
    }
    if (text[1] < '1' || text[1] > '0' + index_count(l.color)) return std::nullopt;
    l.index = text[1] - '0';
    if (text[2] == '+')
        l.sign = Sign::Plus;
    else if (text[2] == '-')
        l.sign = Sign::Minus;
    else
        return std::nullopt;
    return l;
}

std::array<Label, kLabelCount> all_labels() {
    std::array<Label, kLabelCount> out;
    for (int i = 0; i < kLabelCount; ++i) out[i] = Label::from_ordinal(i);
    return out;
}

GoldenInt tile_width(Color c) {
    return (c == Color::A || c == Color::B) ? GoldenInt::phi() : GoldenInt(1);
}

GoldenInt tile_height(Color c) {
    return (c == Color::A || c == Color::C) ? GoldenInt::phi() : GoldenInt(1);
}

std::array<Prototile, kLabelCount> prototile_set() {
    std::array<Prototile, kLabelCount> out;
    for (int i = 0; i < kLabelCount; ++i) {
        Label l = Label::from_ordinal(i);
        out[i] = {l, tile_width(l.color), tile_height(l.color)};
    }
    return out;
}

Color color_project(const Label& label) { return label.color; }

Point2 corner_point(Corner c, const GoldenRat& w, const GoldenRat& h) {
    switch (c) {
        case Corner::BL: return {0, 0};
        case Corner::BR: return {w, 0};
        case Corner::TR: return {w, h};
        case Corner::TL: return {0, h};
    }
    return {0, 0};
}

Point2 corner_point(Corner c, Color color) {
    return corner_point(c, tile_width(color), tile_height(color));
}

Decoration decoration_endpoints(const Label& label) {
    using enum Corner;
    Decoration d;
    switch (label.color) {
        case Color::A:
        case Color::D: {
            // A_i and D_i run around the square the same way.
            static constexpr std::array<Decoration, 4> kSquare{
                Decoration{BL, BR}, Decoration{BR, TR}, Decoration{TR, TL}, Decoration{TL, BL}};
            d = kSquare[label.index - 1];
            break;
        }
        case Color::B:
            d = label.index == 1 ? Decoration{BL, TR} : Decoration{BR, TL};
            break;
        case Color::C:
            d = label.index == 1 ? Decoration{BR, TL} : Decoration{BL, TR};
            break;
    }
    return label.is_plus() ? d : d.reversed();
}

}  // namespace fibcurve
