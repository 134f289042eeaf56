#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace fibcurve;

namespace {

const GoldenInt kPhi = GoldenInt::phi();
const double kPhiF = (1.0 + std::sqrt(5.0)) / 2.0;

double dist(const Point2& p, double x, double y) { return std::hypot(p.x.to_double() - x, p.y.to_double() - y); }

BigInt squared_fib(int n) {
    const BigInt f = fibonacci(n);
    return f * f;
}

// Random rational with denominator 2^40 in [0,1].
ParamRational random_param(std::mt19937_64& rng) {
    const BigInt q = BigInt(1) << 40;
    std::uniform_int_distribution<long long> d(0, (1LL << 40));
    return {BigInt(d(rng)), q};
}

}  // namespace

TEST_CASE("partition levels 0 and 1") {
    const PartitionLevel p0 = partition(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0.rects[0] == Rect{{0, 0}, 1, 1});
    CHECK(p0.cuts == std::vector<GoldenInt>{0, 1});

    const PartitionLevel p1 = partition(1);
    REQUIRE(p1.size() == 4);
    const GoldenInt s = GoldenInt(-1, 1);  // phi^-1
    const GoldenInt t = GoldenInt(2, -1);  // phi^-2
    CHECK(p1.rects[0] == Rect{{0, 0}, s, s});
    CHECK(p1.rects[1] == Rect{{0, s}, s, t});
    CHECK(p1.rects[2] == Rect{{s, s}, t, t});
    CHECK(p1.rects[3] == Rect{{s, 0}, t, s});
    CHECK(p1.length(0) == GoldenInt(2, -1));
    CHECK(p1.length(1) == GoldenInt(-3, 2));
    CHECK(p1.length(2) == GoldenInt(5, -3));
    CHECK(p1.length(3) == GoldenInt(-3, 2));
    CHECK(p1.length(0) == phi_pow(-2));
    CHECK(p1.length(2) == phi_pow(-4));
    CHECK_THROWS_AS(partition(-1), std::invalid_argument);
}

TEST_CASE("measure preservation") {
    for (int k = 0; k <= 8; ++k) {
        const PartitionLevel p = partition(k);
        CHECK(p.cuts.front() == 0);
        CHECK(p.cuts.back() == 1);
        CHECK(BigInt(p.size()) == squared_fib(k + 2));
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(sign(p.length(i)) > 0);
            CHECK(GoldenRat(p.length(i)) == p.rects[i].area());
        }
    }
}

TEST_CASE("parameters") {
    const ParamRational x = ParamRational::parse("6/12");
    CHECK(x.p() == 1);
    CHECK(x.q() == 2);
    CHECK(ParamRational::parse("1") == ParamRational(1, 1));
    CHECK_THROWS_AS(ParamRational::parse("3/2"), std::invalid_argument);
    CHECK_THROWS_AS(ParamRational::parse("-1/2"), std::invalid_argument);
    CHECK_THROWS_AS(ParamRational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(ParamRational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(ParamRational::parse("0.5"), std::invalid_argument);
}

TEST_CASE("locate") {
    const PartitionLevel p1 = partition(1);
    CHECK(locate(ParamRational(1, 2), 1) == 2);
    CHECK(locate(ParamRational(0, 1), p1) == 1);
    CHECK(locate(ParamRational(1, 1), p1) == 4);
    CHECK(locate(ParamRational(3, 10), p1) == 1);  // 0.3 < 0.382
    CHECK(locate(ParamRational(7, 10), p1) == 3);  // 0.618 < 0.7 < 0.764
    for (int k = 0; k <= 6; ++k) {
        CHECK(locate(ParamRational(0, 1), k) == 1);
        CHECK(BigInt(locate(ParamRational(1, 1), k)) == squared_fib(k + 2));
    }
}

TEST_CASE("hierarchical descent agrees with the flat partition") {
    std::mt19937_64 rng(11);
    std::vector<PartitionLevel> levels;
    for (int k = 0; k <= 7; ++k) levels.push_back(partition(k));
    for (int i = 0; i < 300; ++i) {
        const ParamRational x = random_param(rng);
        const EvalResult r = eval(x, 7);
        for (int k = 0; k <= 7; ++k) {
            const std::size_t idx = locate(x, levels[k]);
            CHECK(r.chain[k].index == BigInt(idx));
            CHECK(r.chain[k].rect == levels[k].rects[idx - 1]);
            CHECK(r.chain[k].lo == levels[k].cuts[idx - 1]);
            CHECK(r.chain[k].hi == levels[k].cuts[idx]);
        }
    }
}

TEST_CASE("curve endpoints") {
    const Point2 origin{0, 0};
    const EvalResult r0 = eval(ParamRational(0, 1), kDefaultDepth);
    const EvalResult r1 = eval(ParamRational(1, 1), kDefaultDepth);
    REQUIRE(r0.chain.size() == kDefaultDepth + 1);
    for (int k = 0; k <= kDefaultDepth; ++k) {
        CHECK(r0.chain[k].rect.origin == origin);
        CHECK(r0.chain[k].index == 1);
        CHECK(r1.chain[k].rect.x1() == 1);
        CHECK(r1.chain[k].rect.y0() == 0);
        CHECK(r1.chain[k].index == squared_fib(k + 2));
    }
    CHECK(dist(r0.center, 0, 0) <= r0.error_bound);
    CHECK(dist(r1.center, 1, 0) <= r1.error_bound);

    // The first level-1 cut 2 - phi maps to (0, phi - 1) from either side.
    const Point2 target{0, GoldenInt(-1, 1)};
    for (TieBreak tie : {TieBreak::Left, TieBreak::Right}) {
        const EvalResult r = eval(GoldenInt(2, -1), kDefaultDepth, tie);
        CHECK(r.box.contains(target));
        CHECK(dist(r.center, 0, kPhiF - 1) <= std::sqrt(2.0) * std::pow(kPhiF, -32));
        CHECK(r.chain[1].index == (tie == TieBreak::Left ? 1 : 2));
    }
    CHECK_THROWS_AS(eval(GoldenInt(2, 0), 4), std::invalid_argument);
    CHECK_THROWS_AS(eval(ParamRational(1, 2), 0), std::invalid_argument);
}

TEST_CASE("both sides of every cut pin the same point") {
    for (int k = 1; k <= 5; ++k) {
        const PartitionLevel p = partition(k);
        for (std::size_t i = 1; i + 1 < p.cuts.size(); ++i) {
            const EvalResult left = eval(p.cuts[i], 12, TieBreak::Left);
            const EvalResult right = eval(p.cuts[i], 12, TieBreak::Right);
            CHECK(left.chain[k].index == BigInt(i));
            CHECK(right.chain[k].index == BigInt(i + 1));
            for (int level = 0; level <= 12; ++level)
                CHECK(intersects(left.chain[level].rect, right.chain[level].rect));
        }
    }
}

TEST_CASE("nesting and diameters") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const ParamRational x = random_param(rng);
        const EvalResult r = eval(x, 20);
        for (std::size_t k = 1; k < r.chain.size(); ++k) {
            const auto& parent = r.chain[k - 1];
            const auto& child = r.chain[k];
            CHECK(parent.rect.contains(child.rect));
            // A D tile has a single child on the same support, so strictness shows over two levels.
            if (child.rect == parent.rect) CHECK(parent.label.color == Color::D);
            if (k >= 2) CHECK(child.rect != r.chain[k - 2].rect);
            CHECK(parent.lo <= child.lo);
            CHECK(child.hi <= parent.hi);
            CHECK(compare_cut(child.lo, x) <= 0);
            CHECK(compare_cut(child.hi, x) >= 0);
            const double diam = std::hypot(child.rect.width.to_double(), child.rect.height.to_double());
            CHECK(diam <= h_bound(static_cast<int>(k)) * (1 + 1e-12));
        }
    }
}

TEST_CASE("rational between") {
    const ParamRational r = rational_between(GoldenInt(2, -1), GoldenInt(-1, 1));
    CHECK(compare_cut(GoldenInt(2, -1), r) < 0);
    CHECK(compare_cut(GoldenInt(-1, 1), r) > 0);
    const GoldenInt tiny = phi_pow(-60);
    const ParamRational s = rational_between(tiny, tiny + tiny);
    CHECK(compare_cut(tiny, s) < 0);
    CHECK(compare_cut(tiny + tiny, s) > 0);
    CHECK_THROWS_AS(rational_between(1, 1), std::invalid_argument);
}

TEST_CASE("preimage") {
    const int depth = 16;
    const PreimageResult z = preimage(0.0, 0.0, depth);
    CHECK(z.x.to_double() <= std::pow(kPhiF, -2.0 * depth));
    CHECK(z.chain.back().index == 1);

    const PreimageResult c = preimage(1.0, 0.0, depth);
    CHECK(c.chain.back().index == squared_fib(depth + 2));

    CHECK_THROWS_AS(preimage(1.5, 0.2, depth), std::invalid_argument);
    CHECK_THROWS_AS(preimage(0.2, -0.1, depth), std::invalid_argument);
    CHECK_THROWS_AS(preimage(std::nan(""), 0.2, depth), std::invalid_argument);

    const PreimageResult e = preimage_exact(Point2{GoldenRat(1).half(), GoldenInt(-1, 1)}, depth);
    CHECK(eval(e.x, depth).box.contains(Point2{GoldenRat(1).half(), GoldenInt(-1, 1)}));
}

TEST_CASE("preimage round trip") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int depth = 24;
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng), y = u(rng);
        const PreimageResult pre = preimage(x, y, depth);
        const EvalResult back = eval(pre.x, depth);
        CHECK(back.chain.back().index == pre.chain.back().index);
        CHECK(dist(back.center, x, y) <= h_bound(depth));
    }
}

TEST_CASE("continuity moduli") {
    CHECK(continuity_modulus(0).g == 1);
    CHECK(continuity_modulus(1).g == GoldenInt(2, -1));
    for (int k = 0; k <= 8; ++k) {
        const auto measured = measured_modulus(partition(k));
        CHECK(measured.g == continuity_modulus(k).g);
        CHECK(std::abs(measured.h - continuity_modulus(k).h) < 1e-12);
    }
    for (int k = 1; k <= 20; ++k) {
        CHECK(continuity_modulus(k).g < continuity_modulus(k - 1).g);
        CHECK(continuity_modulus(k).h < continuity_modulus(k - 1).h);
    }
}

TEST_CASE("sampled continuity") {
    const int n = 16;
    const GoldenInt g = continuity_modulus(n).g;
    const BigInt q = BigInt(1) << 40;
    // Largest integer step d with d/q < g/2.
    BigInt step = floor(GoldenRat(GoldenInt(q, 0) * g, 2));
    if (compare_cut(g, ParamRational(2 * step, q)) <= 0) step -= 1;
    const long long max_step = step.convert_to<long long>();
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<long long> base(0, (1LL << 40) - max_step);
    std::uniform_int_distribution<long long> delta(0, max_step);
    for (int i = 0; i < 1000; ++i) {
        const long long a = base(rng);
        const ParamRational x(a, q), y(a + delta(rng), q);
        const double d = std::hypot(eval(x, n).center.x.to_double() - eval(y, n).center.x.to_double(),
                                    eval(x, n).center.y.to_double() - eval(y, n).center.y.to_double());
        CHECK(d <= 2 * continuity_modulus(n).h);
    }
}

TEST_CASE("connectedness") {
    for (int k = 1; k <= 6; ++k) CHECK(connectedness_check(k));
    for (const auto& seed : all_labels())
        for (int k = 0; k <= 5; ++k) CHECK(connectedness_check(supertile(seed, k)));
    auto rects = partition(3).rects;
    std::mt19937 rng(1);
    std::shuffle(rects.begin(), rects.end(), rng);
    CHECK_FALSE(connectedness_check(rects));
    CHECK_THROWS_AS(connectedness_check(0), std::invalid_argument);
}
