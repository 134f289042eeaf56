#include "fibcurve/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace fibcurve {

// ---- one-dimensional -----------------------------------------------------

std::string FibonacciRule::apply(const std::string& word) const {
    std::string out;
    out.reserve(word.size() * 2);
    for (char c : word) {
        if (c == 'A')
            out += "AB";
        else if (c == 'B')
            out += 'A';
        else
            throw std::invalid_argument("Fibonacci word letters are A and B");
    }
    return out;
}

std::string FibonacciRule::iterate(const std::string& word, int k) const {
    std::string w = word;
    for (int i = 0; i < k; ++i) w = apply(w);
    return w;
}

GoldenInt FibonacciRule::letter_length(char c) { return c == 'A' ? GoldenInt::phi() : GoldenInt(1); }

GoldenInt FibonacciRule::length(const std::string& word) const {
    GoldenInt len;
    for (char c : word) len += letter_length(c);
    return len;
}

FibonacciRule rule_mu1() { return {}; }

// ---- mu2 -------------------------------------------------------------------

std::vector<ColorCell> mu2_cells(Color c) {
    const GoldenRat phi = GoldenInt::phi();
    switch (c) {
        case Color::A:
            return {{Color::A, {0, 0}}, {Color::C, {phi, 0}}, {Color::B, {0, phi}}, {Color::D, {phi, phi}}};
        case Color::B:
            return {{Color::A, {0, 0}}, {Color::C, {phi, 0}}};
        case Color::C:
            return {{Color::A, {0, 0}}, {Color::B, {0, phi}}};
        case Color::D:
            return {{Color::A, {0, 0}}};
    }
    return {};
}

// ---- placed tiles --------------------------------------------------------

GoldenRat PlacedTile::width() const {
    return mirror == Mirror::AntiDiagonal ? tile_height(label.color) : tile_width(label.color);
}

GoldenRat PlacedTile::height() const {
    return mirror == Mirror::AntiDiagonal ? tile_width(label.color) : tile_height(label.color);
}

// ---- nu tables -----------------------------------------------------------

namespace {

std::vector<Label> row_of(std::initializer_list<const char*> names) {
    std::vector<Label> out;
    for (const char* n : names) out.push_back(*Label::parse(n));
    return out;
}

void set_row(NuTable& t, const char* parent, std::initializer_list<const char*> children) {
    t[Label::parse(parent)->ordinal()] = row_of(children);
}

}  // namespace

NuTable printed_nu_table() {
    NuTable t;
    set_row(t, "A1+", {"A4-", "B1+", "D2+", "C1-"});
    set_row(t, "A2+", {"C1+", "A3+", "B1+", "D1-"});
    set_row(t, "A3+", {"D2-", "C2-", "A2+", "B2+"});
    set_row(t, "A4+", {"B2-", "D1+", "C2-", "A1-"});
    set_row(t, "B1+", {"A1+", "C2+"});
    set_row(t, "B2+", {"C1+", "A3+"});
    set_row(t, "C1+", {"A2+", "B2+"});
    set_row(t, "C2+", {"A4-", "B1+"});
    set_row(t, "D1+", {"A1+"});
    set_row(t, "D2+", {"A2+"});
    set_row(t, "D3+", {"A3+"});
    set_row(t, "D4+", {"A4+"});
    set_row(t, "A1-", {"C1+", "D2-", "B1-", "A4+"});
    set_row(t, "A2-", {"D1+", "B1-", "A3-", "C1-"});
    set_row(t, "A3-", {"B2-", "A2-", "C2+", "D2+"});
    set_row(t, "A4-", {"A1+", "C2+", "D1-", "B2+"});
    set_row(t, "B1-", {"C2-", "A1-"});
    set_row(t, "B2-", {"A3-", "C1-"});
    set_row(t, "C1-", {"B2-", "A2-"});
    set_row(t, "C2-", {"B1-", "A4+"});
    set_row(t, "D1-", {"A1-"});
    set_row(t, "D2-", {"A2-"});
    set_row(t, "D3-", {"A3-"});
    set_row(t, "D4-", {"A4-"});
    return t;
}

NuTable corrected_nu_table() {
    NuTable t = printed_nu_table();
    set_row(t, "A1+", {"A4-", "B1+", "D4+", "C1-"});
    set_row(t, "A1-", {"C1+", "D4-", "B1-", "A4+"});
    set_row(t, "A2+", {"C1+", "A3+", "B1+", "D3-"});
    set_row(t, "A2-", {"D3+", "B1-", "A3-", "C1-"});
    return t;
}

bool reversal_consistent(const NuTable& table) {
    for (const Label& l : all_labels()) {
        if (!l.is_plus()) continue;
        const auto& fwd = table[l.ordinal()];
        const auto& bwd = table[l.reversed().ordinal()];
        if (fwd.size() != bwd.size()) return false;
        for (std::size_t i = 0; i < fwd.size(); ++i)
            if (bwd[fwd.size() - 1 - i] != fwd[i].reversed()) return false;
    }
    return true;
}

// ---- rule ----------------------------------------------------------------

SubstitutionRule SubstitutionRule::from_nu_table(const NuTable& table) {
    SubstitutionRule rule;
    for (const Label& parent : all_labels()) {
        const auto cells = mu2_cells(parent.color);
        const auto& children = table[parent.ordinal()];
        if (children.size() != cells.size())
            throw std::invalid_argument("row " + parent.to_string() + " does not match the mu2 layout");
        RuleRow row;
        for (const Label& child : children) {
            const ColorCell* cell = nullptr;
            for (const auto& c : cells)
                if (c.color == child.color) cell = &c;
            if (cell == nullptr)
                throw std::invalid_argument("row " + parent.to_string() + " has a child of the wrong color");
            for (const auto& prev : row)
                if (prev.label.color == child.color)
                    throw std::invalid_argument("row " + parent.to_string() + " repeats a color");
            row.push_back({child, cell->offset});
        }
        rule.rows_[parent.ordinal()] = std::move(row);
    }
    return rule;
}

NuTable SubstitutionRule::nu_table() const {
    NuTable t;
    for (int i = 0; i < kLabelCount; ++i)
        for (const auto& c : rows_[i]) t[i].push_back(c.label);
    return t;
}

const SubstitutionRule& rule_omega() {
    static const SubstitutionRule rule = SubstitutionRule::from_nu_table(corrected_nu_table());
    return rule;
}

// ---- patches -------------------------------------------------------------

Patch single_tile_patch(const Label& seed) {
    Patch p;
    p.tiles.push_back({seed, {0, 0}});
    p.support = p.tiles.front().rect();
    p.level = 0;
    return p;
}

Patch apply(const Patch& patch, const SubstitutionRule& rule) {
    const GoldenRat phi = GoldenInt::phi();
    Patch out;
    out.level = patch.level + 1;
    out.support = {phi * patch.support.origin, phi * patch.support.width, phi * patch.support.height};
    for (const auto& t : patch.tiles) {
        if (t.mirror != Mirror::None) throw std::invalid_argument("apply: mirrored tiles are not substituted");
        const Point2 base = phi * t.translation;
        for (const auto& c : rule.row(t.label)) out.tiles.push_back({c.label, base + c.offset});
    }
    return out;
}

std::shared_ptr<const SupertileBuilder::Tiles> SupertileBuilder::tiles(const Label& seed, int k) {
    const auto key = std::make_pair(seed.ordinal(), k);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    auto out = std::make_shared<Tiles>();
    if (k == 0) {
        out->push_back({seed, {0, 0}});
    } else {
        const GoldenRat scale = phi_pow(k - 1);
        for (const auto& c : rule_.row(seed)) {
            auto sub = tiles(c.label, k - 1);
            const Point2 shift = scale * c.offset;
            for (const auto& t : *sub) out->push_back({t.label, t.translation + shift});
        }
    }
    cache_.emplace(key, out);
    return out;
}

Patch SupertileBuilder::build(const Label& seed, int k) {
    if (k < 0) throw std::invalid_argument("supertile level must be non-negative");
    Patch p;
    p.level = k;
    p.tiles = *tiles(seed, k);
    const GoldenRat scale = phi_pow(k);
    p.support = {{0, 0}, scale * GoldenRat(tile_width(seed.color)), scale * GoldenRat(tile_height(seed.color))};
    return p;
}

BigInt SupertileBuilder::count(const Label& seed, int k) {
    if (k < 0) throw std::invalid_argument("supertile level must be non-negative");
    if (k == 0) return 1;
    const auto key = std::make_pair(seed.ordinal(), k);
    if (auto it = counts_.find(key); it != counts_.end()) return it->second;
    BigInt n = 0;
    for (const auto& c : rule_.row(seed)) n += count(c.label, k - 1);
    counts_.emplace(key, n);
    return n;
}

Patch supertile(const Label& seed, int k, const SubstitutionRule& rule) {
    SupertileBuilder builder(rule);
    return builder.build(seed, k);
}

bool interiors_disjoint(const Patch& patch) {
    std::vector<Rect> rects;
    rects.reserve(patch.size());
    for (const auto& t : patch.tiles) rects.push_back(t.rect());
    std::sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& b) { return a.x0() < b.x0(); });
    for (std::size_t i = 0; i < rects.size(); ++i) {
        const GoldenRat right = rects[i].x1();
        for (std::size_t j = i + 1; j < rects.size() && rects[j].x0() < right; ++j)
            if (interiors_overlap(rects[i], rects[j])) return false;
    }
    return true;
}

std::vector<Label> nu_word(const Label& seed, int k, const SubstitutionRule& rule) {
    std::vector<Label> word{seed};
    for (int i = 0; i < k; ++i) {
        std::vector<Label> next;
        next.reserve(word.size() * 3);
        for (const auto& l : word)
            for (const auto& c : rule.row(l)) next.push_back(c.label);
        word = std::move(next);
    }
    return word;
}

// ---- counting --------------------------------------------------------------

CountMatrix count_matrix(const SubstitutionRule& rule) {
    CountMatrix m{};
    for (const Label& parent : all_labels())
        for (const auto& c : rule.row(parent)) ++m[parent.ordinal()][c.label.ordinal()];
    return m;
}

CountVector count_vector(const CountMatrix& m, const Label& seed, int k) {
    CountVector v;
    v.fill(0);
    v[seed.ordinal()] = 1;
    for (int step = 0; step < k; ++step) {
        CountVector next;
        next.fill(0);
        for (int i = 0; i < kLabelCount; ++i) {
            if (v[i].is_zero()) continue;
            for (int j = 0; j < kLabelCount; ++j)
                if (m[i][j] != 0) next[j] += v[i] * m[i][j];
        }
        v = std::move(next);
    }
    return v;
}

CountVector label_counts(const Patch& patch) {
    CountVector v;
    v.fill(0);
    for (const auto& t : patch.tiles) v[t.label.ordinal()] += 1;
    return v;
}

EigenEstimate dominant_eigenvalue(const CountMatrix& m, double tol, int max_iterations) {
    // Iterate with M + I: the shift keeps the Perron root strictly dominant in
    // modulus even when M has an imprimitive (periodic) block structure.
    std::array<double, kLabelCount> x;
    x.fill(1.0 / kLabelCount);
    double estimate = 0.0;
    for (int it = 1; it <= max_iterations; ++it) {
        std::array<double, kLabelCount> y{};
        for (int i = 0; i < kLabelCount; ++i) {
            double s = x[i];
            for (int j = 0; j < kLabelCount; ++j) s += m[i][j] * x[j];
            y[i] = s;
        }
        double norm_y = 0.0;
        double norm_x = 0.0;
        for (int i = 0; i < kLabelCount; ++i) {
            norm_y += std::abs(y[i]);
            norm_x += std::abs(x[i]);
        }
        if (norm_y == 0.0) throw std::runtime_error("power iteration: iterate vanished");
        const double next = norm_y / norm_x - 1.0;
        for (int i = 0; i < kLabelCount; ++i) x[i] = y[i] / norm_y;
        if (it > 1 && std::abs(next - estimate) < tol) return {next, it};
        estimate = next;
    }
    throw std::runtime_error("power iteration did not converge");
}

}  // namespace fibcurve
