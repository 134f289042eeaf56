#include "fibcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fibcurve {

namespace {

const Label kSeed{Color::A, 1, Sign::Plus};

GoldenInt area_of(Color c) { return tile_width(c) * tile_height(c); }

Rect make_rect(const GoldenInt& ox, const GoldenInt& oy, const GoldenInt& scale, Color c) {
    return {{ox, oy}, scale * tile_width(c), scale * tile_height(c)};
}

// Descent state: the current tile is the level-k rectangle origin + scale*[0,w]x[0,h].
struct Cursor {
    int level = 0;
    Label label = kSeed;
    GoldenInt ox = 0;
    GoldenInt oy = 0;
    GoldenInt scale = phi_pow(-1);
    GoldenInt lo = 0;
    GoldenInt hi = 1;
    // Label counts of the level-k tiles that precede this one in curve order.
    CountVector before{};
    BigInt index = 1;

    Rect rect() const { return make_rect(ox, oy, scale, label.color); }
    ChainLink link() const { return {level, index, label, rect(), lo, hi}; }
};

struct ChildView {
    Label label;
    GoldenInt ox;
    GoldenInt oy;
    GoldenInt lo;
    GoldenInt hi;
};

std::vector<ChildView> children_of(const Cursor& cur) {
    const GoldenInt child_scale = cur.scale.div_by_phi();
    const GoldenInt area_scale = child_scale * child_scale;
    std::vector<ChildView> out;
    GoldenInt lo = cur.lo;
    for (const auto& c : rule_omega().row(cur.label)) {
        GoldenInt hi = lo + area_scale * area_of(c.label.color);
        out.push_back({c.label, cur.ox + child_scale * c.offset.x.num(), cur.oy + child_scale * c.offset.y.num(), lo,
                       hi});
        lo = std::move(hi);
    }
    return out;
}

Cursor step_into(const Cursor& cur, const std::vector<ChildView>& kids, std::size_t j) {
    static const CountMatrix m = count_matrix();
    Cursor next;
    next.level = cur.level + 1;
    next.label = kids[j].label;
    next.ox = kids[j].ox;
    next.oy = kids[j].oy;
    next.scale = cur.scale.div_by_phi();
    next.lo = kids[j].lo;
    next.hi = kids[j].hi;
    next.before.fill(0);
    for (int a = 0; a < kLabelCount; ++a) {
        if (cur.before[a].is_zero()) continue;
        for (int b = 0; b < kLabelCount; ++b)
            if (m[a][b] != 0) next.before[b] += cur.before[a] * m[a][b];
    }
    for (std::size_t i = 0; i < j; ++i) next.before[kids[i].label.ordinal()] += 1;
    next.index = 1;
    for (const auto& v : next.before) next.index += v;
    return next;
}

Cursor root_cursor() {
    Cursor c;
    c.before.fill(0);
    return c;
}

void check_depth(int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
}

}  // namespace

PartitionLevel partition(int k) {
    if (k < 0) throw std::invalid_argument("partition level must be non-negative");
    SupertileBuilder builder;
    const Patch patch = builder.build(kSeed, k);
    const GoldenInt scale = phi_pow(-k - 1);
    const GoldenInt area_scale = scale * scale;
    PartitionLevel level;
    level.k = k;
    level.cuts.reserve(patch.size() + 1);
    level.cuts.emplace_back(0);
    for (const auto& t : patch.tiles) {
        const Color c = t.label.color;
        level.rects.push_back(make_rect(scale * t.translation.x.num(), scale * t.translation.y.num(), scale, c));
        level.labels.push_back(t.label);
        level.cuts.push_back(level.cuts.back() + area_scale * area_of(c));
    }
    return level;
}

// ---- parameters ------------------------------------------------------------

ParamRational::ParamRational(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
    if (q_.is_zero()) throw std::invalid_argument("zero denominator");
    if (q_ < 0) {
        q_ = -q_;
        p_ = -p_;
    }
    if (p_ < 0 || p_ > q_) throw std::invalid_argument("parameter must lie in [0,1]");
    BigInt g = boost::multiprecision::gcd(p_, q_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
    }
}

double ParamRational::to_double() const { return p_.convert_to<double>() / q_.convert_to<double>(); }

std::string ParamRational::to_string() const { return p_.str() + "/" + q_.str(); }

ParamRational ParamRational::parse(const std::string& text) {
    auto parse_int = [](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789-+") != std::string::npos)
            throw std::invalid_argument("not an integer: '" + s + "'");
        return BigInt(s);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return {parse_int(text), 1};
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

int compare_cut(const GoldenInt& c, const ParamRational& x) {
    return sign(GoldenInt(x.q(), 0) * c - GoldenInt(x.p(), 0));
}

std::size_t locate(const ParamRational& x, const PartitionLevel& level) {
    // First i >= 1 with c_i >= x.
    auto it = std::partition_point(level.cuts.begin() + 1, level.cuts.end(),
                                   [&](const GoldenInt& c) { return compare_cut(c, x) < 0; });
    if (it == level.cuts.end()) throw std::logic_error("parameter beyond the last cut");
    return static_cast<std::size_t>(it - level.cuts.begin());
}

std::size_t locate(const ParamRational& x, int k) { return locate(x, partition(k)); }

// ---- evaluation -------------------------------------------------------------

double h_bound(int k) { return std::sqrt(2.0) * std::pow(1.6180339887498948482, -k); }

namespace {

// cmp(c) = sign(c - x) for the parameter x being evaluated.
template <typename Compare>
EvalResult descend_eval(Compare&& cmp, int depth, TieBreak tie) {
    check_depth(depth);
    Cursor cur = root_cursor();
    EvalResult res;
    res.chain.push_back(cur.link());
    for (int level = 1; level <= depth; ++level) {
        const auto kids = children_of(cur);
        std::size_t j = 0;
        if (tie == TieBreak::Left) {
            while (j < kids.size() && cmp(kids[j].hi) < 0) ++j;
        } else {
            while (j + 1 < kids.size() && cmp(kids[j].hi) <= 0) ++j;
        }
        if (j == kids.size() || cmp(kids[j].lo) > 0 || cmp(kids[j].hi) < 0)
            throw std::logic_error("parameter escaped its interval");
        cur = step_into(cur, kids, j);
        res.chain.push_back(cur.link());
    }
    res.box = cur.rect();
    res.center = res.box.center();
    res.error_bound = h_bound(depth);
    return res;
}

}  // namespace

EvalResult eval(const ParamRational& x, int depth, TieBreak tie) {
    return descend_eval([&](const GoldenInt& c) { return compare_cut(c, x); }, depth, tie);
}

EvalResult eval(const GoldenInt& x, int depth, TieBreak tie) {
    if (sign(x) < 0 || sign(x - 1) > 0) throw std::invalid_argument("parameter must lie in [0,1]");
    return descend_eval([&](const GoldenInt& c) { return sign(c - x); }, depth, tie);
}

ParamRational rational_between(const GoldenInt& lo, const GoldenInt& hi) {
    if (sign(hi - lo) <= 0) throw std::invalid_argument("empty interval");
    const GoldenInt width = hi - lo;
    BigInt q = 1;
    while (sign(GoldenInt(q, 0) * width - 4) <= 0) q *= 2;
    // p = floor(q * (lo + hi) / 2) lies in (lo, hi) because q * width > 4.
    const BigInt p = floor(GoldenRat(GoldenInt(q, 0) * (lo + hi), 2));
    return {p, q};
}

namespace {

template <typename Contains>
PreimageResult descend_to(Contains&& contains, int depth) {
    check_depth(depth);
    Cursor cur = root_cursor();
    PreimageResult res;
    res.chain.push_back(cur.link());
    for (int level = 1; level <= depth; ++level) {
        const auto kids = children_of(cur);
        std::size_t j = 0;
        const GoldenInt child_scale = cur.scale.div_by_phi();
        while (j < kids.size() && !contains(make_rect(kids[j].ox, kids[j].oy, child_scale, kids[j].label.color))) ++j;
        if (j == kids.size()) throw std::logic_error("point escaped its rectangle");
        cur = step_into(cur, kids, j);
        res.chain.push_back(cur.link());
    }
    res.x = rational_between(cur.lo, cur.hi);
    return res;
}

double round_down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
double round_up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

}  // namespace

PreimageResult preimage(double yx, double yy, int depth) {
    if (!(yx >= 0.0 && yx <= 1.0 && yy >= 0.0 && yy <= 1.0))
        throw std::invalid_argument("point must lie in the unit square");
    auto contains = [&](const Rect& r) {
        return round_down(r.x0().to_double()) <= yx && yx <= round_up(r.x1().to_double()) &&
               round_down(r.y0().to_double()) <= yy && yy <= round_up(r.y1().to_double());
    };
    return descend_to(contains, depth);
}

PreimageResult preimage_exact(const Point2& y, int depth) {
    const Rect unit{{0, 0}, 1, 1};
    if (!unit.contains(y)) throw std::invalid_argument("point must lie in the unit square");
    return descend_to([&](const Rect& r) { return r.contains(y); }, depth);
}

// ---- connectedness and moduli -------------------------------------------------

bool connectedness_check(const std::vector<Rect>& rects) {
    for (std::size_t i = 0; i + 1 < rects.size(); ++i)
        if (!share_edge(rects[i], rects[i + 1])) return false;
    return true;
}

bool connectedness_check(const Patch& patch) {
    std::vector<Rect> rects;
    rects.reserve(patch.size());
    for (const auto& t : patch.tiles) rects.push_back(t.rect());
    return connectedness_check(rects);
}

bool connectedness_check(int k) {
    if (k < 1) throw std::invalid_argument("connectedness is checked from level 1");
    return connectedness_check(partition(k).rects);
}

ContinuityModulus continuity_modulus(int k) {
    if (k < 0) throw std::invalid_argument("level must be non-negative");
    return {phi_pow(-2 * k), h_bound(k)};
}

ContinuityModulus measured_modulus(const PartitionLevel& level) {
    ContinuityModulus m;
    GoldenRat max_diag2 = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
        const GoldenInt len = level.length(i);
        if (len > m.g) m.g = len;
        const Rect& r = level.rects[i];
        const GoldenRat d2 = r.width * r.width + r.height * r.height;
        if (d2 > max_diag2) max_diag2 = d2;
    }
    m.h = std::sqrt(max_diag2.to_double());
    return m;
}

}  // namespace fibcurve
