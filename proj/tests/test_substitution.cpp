#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcurve/substitution.hpp"

#include <cmath>
#include <map>
#include <sstream>

using namespace fibcurve;

namespace {

Label L(const char* text) { return *Label::parse(text); }

const GoldenInt kPhi = GoldenInt::phi();

std::vector<Label> labels(const std::string& text) {
    std::vector<Label> out;
    std::istringstream is(text);
    std::string item;
    while (is >> item) out.push_back(*Label::parse(item));
    return out;
}

// The listed one-dimensional rows, transcribed independently of the library.
std::map<std::string, std::string> listed_rows() {
    return {
        {"A1+", "A4- B1+ D2+ C1-"}, {"A1-", "C1+ D2- B1- A4+"}, {"D1+", "A1+"},
        {"A2+", "C1+ A3+ B1+ D1-"}, {"A2-", "D1+ B1- A3- C1-"}, {"D2+", "A2+"},
        {"A3+", "D2- C2- A2+ B2+"}, {"A3-", "B2- A2- C2+ D2+"}, {"D3+", "A3+"},
        {"A4+", "B2- D1+ C2- A1-"}, {"A4-", "A1+ C2+ D1- B2+"}, {"D4+", "A4+"},
        {"B1+", "A1+ C2+"},         {"B1-", "C2- A1-"},         {"D1-", "A1-"},
        {"B2+", "C1+ A3+"},         {"B2-", "A3- C1-"},         {"D2-", "A2-"},
        {"C1+", "A2+ B2+"},         {"C1-", "B2- A2-"},         {"D3-", "A3-"},
        {"C2+", "A4- B1+"},         {"C2-", "B1- A4+"},         {"D4-", "A4-"},
    };
}

// Fibonacci by direct recursion on word lengths: |mu1^k(A)| = |mu1^(k-1)(A)| + |mu1^(k-2)(A)|.
long long word_length_oracle(int k) {
    long long a = 1, b = 2;  // k = 0, 1
    for (int i = 0; i < k; ++i) {
        const long long c = a + b;
        a = b;
        b = c;
    }
    return a;
}

}  // namespace

TEST_CASE("Fibonacci substitution") {
    const FibonacciRule mu1 = rule_mu1();
    CHECK(mu1.apply("B") == "A");
    CHECK(mu1.apply("A") == "AB");
    CHECK(mu1.iterate("A", 2) == "ABA");
    CHECK(mu1.length("AB") == kPhi + 1);
    for (int k = 0; k <= 20; ++k) {
        const std::string w = mu1.iterate("A", k);
        CHECK(static_cast<long long>(w.size()) == word_length_oracle(k));
        // Lengths scale by phi each step.
        CHECK(mu1.length(w) == phi_pow(k) * kPhi);
    }
}

TEST_CASE("mu2 layout") {
    auto cells = mu2_cells(Color::A);
    REQUIRE(cells.size() == 4);
    CHECK(cells[0].color == Color::A);
    CHECK(cells[0].offset == Point2{0, 0});
    CHECK(mu2_cells(Color::B).size() == 2);
    CHECK(mu2_cells(Color::C).size() == 2);
    CHECK(mu2_cells(Color::D).size() == 1);
    std::map<Color, Point2> a;
    for (const auto& c : cells) a[c.color] = c.offset;
    CHECK(a[Color::C] == Point2{kPhi, 0});
    CHECK(a[Color::B] == Point2{0, kPhi});
    CHECK(a[Color::D] == Point2{kPhi, kPhi});
}

TEST_CASE("printed table matches the transcribed rows") {
    const NuTable printed = printed_nu_table();
    for (const auto& [parent, row] : listed_rows()) CHECK(printed[L(parent.c_str()).ordinal()] == labels(row));
    CHECK(reversal_consistent(printed));
}

TEST_CASE("corrected table differs only in the two D indices and their reversals") {
    const NuTable printed = printed_nu_table();
    const NuTable corrected = corrected_nu_table();
    int differences = 0;
    for (int i = 0; i < kLabelCount; ++i)
        for (std::size_t j = 0; j < printed[i].size(); ++j)
            if (printed[i][j] != corrected[i][j]) {
                ++differences;
                CHECK(printed[i][j].color == Color::D);
                CHECK(corrected[i][j].color == Color::D);
            }
    CHECK(differences == 4);
    CHECK(corrected[L("A1+").ordinal()] == labels("A4- B1+ D4+ C1-"));
    CHECK(corrected[L("A2+").ordinal()] == labels("C1+ A3+ B1+ D3-"));
    CHECK(corrected[L("A1-").ordinal()] == labels("C1+ D4- B1- A4+"));
    CHECK(corrected[L("A2-").ordinal()] == labels("D3+ B1- A3- C1-"));
    CHECK(reversal_consistent(corrected));
    CHECK(rule_omega().nu_table() == corrected);
}

TEST_CASE("rule rows carry the mu2 offsets") {
    const auto& rule = rule_omega();
    const RuleRow& b1 = rule.row(L("B1+"));
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].label == L("A1+"));
    CHECK(b1[0].offset == Point2{0, 0});
    CHECK(b1[1].label == L("C2+"));
    CHECK(b1[1].offset == Point2{kPhi, 0});

    const RuleRow& a1 = rule.row(L("A1+"));
    REQUIRE(a1.size() == 4);
    CHECK(a1[0].offset == Point2{0, 0});
    CHECK(a1[1].offset == Point2{0, kPhi});
    CHECK(a1[2].offset == Point2{kPhi, kPhi});
    CHECK(a1[3].offset == Point2{kPhi, 0});

    const RuleRow& d3 = rule.row(L("D3-"));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].label == L("A3-"));

    // Projecting labels to colors reproduces mu2 for every row.
    for (const auto& l : all_labels()) {
        std::map<Color, Point2> projected, layout;
        for (const auto& c : rule.row(l)) projected[color_project(c.label)] = c.offset;
        for (const auto& c : mu2_cells(l.color)) layout[c.color] = c.offset;
        CHECK(projected == layout);
        CHECK(rule.row(l).size() == mu2_cells(l.color).size());
    }
}

TEST_CASE("rows with bad colors are rejected") {
    NuTable table = corrected_nu_table();
    table[L("B1+").ordinal()] = labels("A1+ B1+");
    CHECK_THROWS_AS(SubstitutionRule::from_nu_table(table), std::invalid_argument);
    table[L("B1+").ordinal()] = labels("A1+ C2+ C1+");
    CHECK_THROWS_AS(SubstitutionRule::from_nu_table(table), std::invalid_argument);
}

TEST_CASE("apply") {
    const Patch one = single_tile_patch(L("A1+"));
    const Patch a = apply(one);
    CHECK(a.level == 1);
    REQUIRE(a.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(a.tiles[i].label == rule_omega().row(L("A1+"))[i].label);
        CHECK(a.tiles[i].translation == rule_omega().row(L("A1+"))[i].offset);
    }
    Patch d{{PlacedTile{L("D1+"), {1, 0}}}, Rect{{1, 0}, 1, 1}, 0};
    const Patch da = apply(d);
    REQUIRE(da.size() == 1);
    CHECK(da.tiles[0].label == L("A1+"));
    CHECK(da.tiles[0].translation == Point2{kPhi, 0});
    CHECK(apply(apply(one)).size() == 9);
}

TEST_CASE("supertiles") {
    const Patch s0 = supertile(L("A1+"), 0);
    CHECK(s0.size() == 1);
    CHECK(s0.support == Rect{{0, 0}, kPhi, kPhi});

    const Patch s2 = supertile(L("A1+"), 2);
    CHECK(s2.size() == 9);
    CHECK(s2.support == Rect{{0, 0}, GoldenInt(1, 2), GoldenInt(1, 2)});
    CHECK(s2.tiles[0].label == L("A1+"));
    CHECK(s2.tiles[0].translation == Point2{0, 0});

    const Patch b1 = supertile(L("B1+"), 1);
    CHECK(b1.size() == 2);
    CHECK(b1.support == Rect{{0, 0}, kPhi + 1, kPhi});

    CHECK_THROWS_AS(supertile(L("A1+"), -1), std::invalid_argument);

    // Iterated application and the cached builder agree.
    Patch p = single_tile_patch(L("C2-"));
    SupertileBuilder builder;
    for (int k = 1; k <= 6; ++k) {
        p = apply(p);
        CHECK(builder.build(L("C2-"), k) == p);
        CHECK(builder.count(L("C2-"), k) == static_cast<long long>(p.size()));
    }
}

TEST_CASE("tile counts are squared Fibonacci numbers") {
    const long long expected[] = {1, 4, 9, 25, 64, 169, 441, 1156, 3025, 7921, 20736};
    SupertileBuilder builder;
    for (int k = 0; k <= 10; ++k) {
        CHECK(builder.count(L("A1+"), k) == expected[k]);
        if (k <= 8) CHECK(builder.build(L("A1+"), k).size() == static_cast<std::size_t>(expected[k]));
    }
}

TEST_CASE("geometric consistency") {
    for (int k = 0; k <= 8; ++k) {
        const Patch p = supertile(L("A1+"), k);
        GoldenRat area = 0;
        for (const auto& t : p.tiles) {
            area += t.rect().area();
            CHECK(p.support.contains(t.rect()));
        }
        CHECK(area == GoldenRat(phi_pow(2 * k + 2)));
        CHECK(area == p.support.area());
        if (k <= 6) CHECK(interiors_disjoint(p));
    }
    Patch bad = supertile(L("A1+"), 1);
    bad.tiles[1].translation = bad.tiles[0].translation;
    CHECK_FALSE(interiors_disjoint(bad));
}

TEST_CASE("one-dimensional words") {
    CHECK(nu_word(L("D1+"), 1) == labels("A1+"));
    CHECK(nu_word(L("C1+"), 1) == labels("A2+ B2+"));
    // Rows A4-, B1+, D4+, C1- concatenated by hand from the corrected listing.
    CHECK(nu_word(L("A1+"), 2) == labels("A1+ C2+ D1- B2+ A1+ C2+ A4+ B2- A2-"));
}

TEST_CASE("count matrix") {
    const CountMatrix m = count_matrix();
    for (const auto& l : all_labels()) {
        int sum = 0;
        for (int j = 0; j < kLabelCount; ++j) sum += m[l.ordinal()][j];
        const int expected = l.color == Color::A ? 4 : l.color == Color::D ? 1 : 2;
        CHECK(sum == expected);
    }
    const int d1 = L("D1+").ordinal();
    for (int j = 0; j < kLabelCount; ++j) CHECK(m[d1][j] == (j == L("A1+").ordinal() ? 1 : 0));

    SupertileBuilder builder;
    for (int k = 0; k <= 10; ++k) {
        const CountVector v = count_vector(m, L("A1+"), k);
        if (k <= 8) CHECK(label_counts(builder.build(L("A1+"), k)) == v);
        BigInt total = 0;
        for (const auto& c : v) total += c;
        CHECK(total == builder.count(L("A1+"), k));
    }
}

TEST_CASE("dominant eigenvalue") {
    const EigenEstimate e = dominant_eigenvalue(count_matrix());
    CHECK(std::abs(e.value - (3.0 + std::sqrt(5.0)) / 2.0) < 1e-9);
    CHECK(e.iterations > 0);
    CHECK(dominant_eigenvalue(CountMatrix{}).value == 0.0);
    CHECK_THROWS_AS(dominant_eigenvalue(count_matrix(), 1e-14, 3), std::runtime_error);
}
