#include "fibcurve/export.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fibcurve {

using nlohmann::json;

std::string format_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    std::string s = buf;
    if (s == "-0.000000000000") s = "0.000000000000";
    return s;
}

Polyline polygon(int k) {
    if (k < 1) throw std::invalid_argument("approximating polygons start at level 1");
    const PartitionLevel level = partition(k);
    Polyline line;
    line.vertices.reserve(level.size());
    for (const auto& r : level.rects) line.vertices.push_back(r.center());
    return line;
}

std::vector<std::array<double, 2>> merge_collinear(const std::vector<std::array<double, 2>>& pts) {
    if (pts.size() < 3) return pts;
    std::vector<std::array<double, 2>> out{pts.front()};
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const auto& a = out.back();
        const auto& b = pts[i];
        const auto& c = pts[i + 1];
        const double cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
        const double scale = std::abs(c[0] - a[0]) + std::abs(c[1] - a[1]) + 1.0;
        if (std::abs(cross) > 1e-9 * scale * scale) out.push_back(b);
    }
    out.push_back(pts.back());
    return out;
}

// ---- tessellation -------------------------------------------------------------

namespace {

PlacedTile mirrored(const PlacedTile& t, Mirror m) {
    const GoldenRat w = t.width();
    const GoldenRat h = t.height();
    const Point2& o = t.translation;
    PlacedTile r{t.label, o, m};
    switch (m) {
        case Mirror::AcrossYAxis: r.translation = {-(o.x + w), o.y}; break;
        case Mirror::AcrossXAxis: r.translation = {o.x, -(o.y + h)}; break;
        case Mirror::AntiDiagonal: r.translation = {-(o.y + h), -(o.x + w)}; break;
        case Mirror::None: break;
    }
    return r;
}

}  // namespace

Patch tessellate(int m, const TessellationOptions& options) {
    if (m < 1) throw std::invalid_argument("tessellation order must be at least 1");
    Patch p = supertile(Label{Color::A, 1, Sign::Plus}, 2 * m);
    if (options.reflect) {
        const std::size_t n = p.tiles.size();
        for (Mirror mirror : {Mirror::AcrossYAxis, Mirror::AcrossXAxis, Mirror::AntiDiagonal})
            for (std::size_t i = 0; i < n; ++i) p.tiles.push_back(mirrored(p.tiles[i], mirror));
        const GoldenRat s = p.support.width;
        p.support = {{-s, -s}, s + s, s + s};
    }
    return p;
}

// ---- SVG ------------------------------------------------------------------------

std::optional<std::array<std::string, 4>> parse_palette(const std::string& text) {
    std::array<std::string, 4> out;
    std::array<bool, 4> seen{};
    std::stringstream ss(text);
    std::string item;
    int position = 0;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) return std::nullopt;
        int slot = position;
        std::string value = item;
        if (item.size() > 2 && item[1] == '=') {
            const char c = item[0];
            if (c < 'A' || c > 'D') return std::nullopt;
            slot = c - 'A';
            value = item.substr(2);
        }
        if (slot < 0 || slot > 3 || value.empty()) return std::nullopt;
        for (char ch : value)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '#')) return std::nullopt;
        out[slot] = value;
        seen[slot] = true;
        ++position;
    }
    for (bool s : seen)
        if (!s) return std::nullopt;
    return out;
}

namespace {

struct Viewport {
    double min_x, min_y, max_x, max_y;
    const SvgStyle& style;

    double sx(double x) const { return style.margin + (x - min_x) * style.pixels_per_unit; }
    double sy(double y) const { return style.margin + (max_y - y) * style.pixels_per_unit; }
    double width() const { return 2 * style.margin + (max_x - min_x) * style.pixels_per_unit; }
    double height() const { return 2 * style.margin + (max_y - min_y) * style.pixels_per_unit; }
};

std::string svg_header(const Viewport& vp) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_fixed(vp.width())
       << "\" height=\"" << format_fixed(vp.height()) << "\" viewBox=\"0 0 " << format_fixed(vp.width()) << " "
       << format_fixed(vp.height()) << "\">\n";
    return os.str();
}

void svg_rect(std::ostream& os, const Viewport& vp, const Rect& r, const std::string& fill, double stroke) {
    const double x0 = r.x0().to_double();
    const double y1 = r.y1().to_double();
    os << "    <rect x=\"" << format_fixed(vp.sx(x0)) << "\" y=\"" << format_fixed(vp.sy(y1)) << "\" width=\""
       << format_fixed(r.width.to_double() * vp.style.pixels_per_unit) << "\" height=\""
       << format_fixed(r.height.to_double() * vp.style.pixels_per_unit) << "\" fill=\"" << fill
       << "\" stroke=\"#000000\" stroke-width=\"" << format_fixed(stroke) << "\"/>\n";
}

}  // namespace

std::string to_svg(const Patch& patch, const SvgStyle& style, const DecorationSystem& system) {
    const Rect& s = patch.support;
    Viewport vp{s.x0().to_double(), s.y0().to_double(), s.x1().to_double(), s.y1().to_double(), style};
    std::ostringstream os;
    os << svg_header(vp);
    os << "  <g id=\"tiles\">\n";
    for (const auto& t : patch.tiles) {
        const std::string fill = style.fill_tiles ? style.palette[static_cast<int>(t.label.color)] : "none";
        svg_rect(os, vp, t.rect(), fill, style.stroke_width / 2);
    }
    os << "  </g>\n";
    if (style.draw_decorations) {
        os << "  <g id=\"decorations\" fill=\"none\" stroke=\"#1d3557\" stroke-width=\""
           << format_fixed(style.stroke_width) << "\">\n";
        for (const auto& t : patch.tiles) {
            const Point2 a = decoration_start(t, system);
            const Point2 b = decoration_end(t, system);
            os << "    <line x1=\"" << format_fixed(vp.sx(a.x.to_double())) << "\" y1=\""
               << format_fixed(vp.sy(a.y.to_double())) << "\" x2=\"" << format_fixed(vp.sx(b.x.to_double()))
               << "\" y2=\"" << format_fixed(vp.sy(b.y.to_double())) << "\"/>\n";
        }
        os << "  </g>\n";
    }
    if (style.draw_labels) {
        os << "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\""
           << format_fixed(0.2 * style.pixels_per_unit) << "\" text-anchor=\"middle\">\n";
        for (const auto& t : patch.tiles) {
            const Point2 c = t.rect().center();
            os << "    <text x=\"" << format_fixed(vp.sx(c.x.to_double())) << "\" y=\""
               << format_fixed(vp.sy(c.y.to_double())) << "\">" << t.label.to_string() << "</text>\n";
        }
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string to_svg(const Polyline& line, const SvgStyle& style, const std::vector<Rect>& frame) {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    auto grow = [&](double x, double y) {
        min_x = std::min(min_x, x);
        min_y = std::min(min_y, y);
        max_x = std::max(max_x, x);
        max_y = std::max(max_y, y);
    };
    for (const auto& r : frame) {
        grow(r.x0().to_double(), r.y0().to_double());
        grow(r.x1().to_double(), r.y1().to_double());
    }
    for (const auto& v : line.vertices) grow(v.x.to_double(), v.y.to_double());
    Viewport vp{min_x, min_y, max_x, max_y, style};

    std::ostringstream os;
    os << svg_header(vp);
    if (!frame.empty()) {
        os << "  <g id=\"frame\">\n";
        for (const auto& r : frame) svg_rect(os, vp, r, "none", style.stroke_width / 4);
        os << "  </g>\n";
    }
    os << "  <polyline id=\"curve\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << format_fixed(style.stroke_width)
       << "\" points=\"";
    for (std::size_t i = 0; i < line.vertices.size(); ++i) {
        if (i) os << ' ';
        os << format_fixed(vp.sx(line.vertices[i].x.to_double())) << ','
           << format_fixed(vp.sy(line.vertices[i].y.to_double()));
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

std::string polygon_svg(int k, const SvgStyle& style) {
    return to_svg(polygon(k), style, partition(k).rects);
}

// ---- JSON -------------------------------------------------------------------------

namespace {

json golden_int_json(const GoldenInt& u) { return json::array({u.a().str(), u.b().str()}); }

json golden_rat_json(const GoldenRat& u) {
    return json::array({u.num().a().str(), u.num().b().str(), u.den().str()});
}

json point_json(const Point2& p) { return json::array({golden_rat_json(p.x), golden_rat_json(p.y)}); }

json rect_json(const Rect& r) {
    return {{"origin", point_json(r.origin)}, {"width", golden_rat_json(r.width)}, {"height", golden_rat_json(r.height)}};
}

BigInt big_from(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a decimal string");
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789-") != std::string::npos)
        throw std::invalid_argument("bad integer '" + s + "'");
    return BigInt(s);
}

GoldenRat golden_rat_from(const json& j) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 3)) throw std::invalid_argument("expected [a, b(, den)]");
    GoldenInt num(big_from(j[0]), big_from(j[1]));
    if (j.size() == 2) return num;
    return GoldenRat(num, big_from(j[2]));
}

Point2 point_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a point [x, y]");
    return {golden_rat_from(j[0]), golden_rat_from(j[1])};
}

Rect rect_from(const json& j) {
    return {point_from(j.at("origin")), golden_rat_from(j.at("width")), golden_rat_from(j.at("height"))};
}

const char* mirror_name(Mirror m) {
    switch (m) {
        case Mirror::None: return "none";
        case Mirror::AcrossYAxis: return "x=0";
        case Mirror::AcrossXAxis: return "y=0";
        case Mirror::AntiDiagonal: return "x=-y";
    }
    return "none";
}

Mirror mirror_from(const std::string& s) {
    for (Mirror m : {Mirror::None, Mirror::AcrossYAxis, Mirror::AcrossXAxis, Mirror::AntiDiagonal})
        if (s == mirror_name(m)) return m;
    throw std::invalid_argument("unknown mirror '" + s + "'");
}

Rect bounding_box(const Patch& patch) {
    if (patch.tiles.empty()) return patch.support;
    Rect first = patch.tiles.front().rect();
    GoldenRat x0 = first.x0(), y0 = first.y0(), x1 = first.x1(), y1 = first.y1();
    for (const auto& t : patch.tiles) {
        const Rect r = t.rect();
        x0 = std::min(x0, r.x0());
        y0 = std::min(y0, r.y0());
        x1 = std::max(x1, r.x1());
        y1 = std::max(y1, r.y1());
    }
    return {{x0, y0}, x1 - x0, y1 - y0};
}

}  // namespace

std::string to_json(const Patch& patch, const DecorationSystem* system) {
    json doc;
    doc["schema"] = kPatchSchema;
    doc["level"] = patch.level;
    doc["support"] = rect_json(patch.support);
    doc["bbox"] = rect_json(bounding_box(patch));
    json tiles = json::array();
    for (const auto& t : patch.tiles) {
        json jt;
        jt["label"] = t.label.to_string();
        jt["translation"] = point_json(t.translation);
        jt["width"] = golden_int_json(t.width().num());
        jt["height"] = golden_int_json(t.height().num());
        if (t.mirror != Mirror::None) jt["mirror"] = mirror_name(t.mirror);
        if (system != nullptr)
            jt["decoration"] = {{"start", point_json(decoration_start(t, *system))},
                                {"end", point_json(decoration_end(t, *system))}};
        tiles.push_back(std::move(jt));
    }
    doc["tiles"] = std::move(tiles);
    return doc.dump(1) + "\n";
}

Patch patch_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (doc.at("schema") != kPatchSchema) throw std::invalid_argument("unsupported schema");
        Patch p;
        p.level = doc.at("level").get<int>();
        p.support = rect_from(doc.at("support"));
        for (const auto& jt : doc.at("tiles")) {
            auto label = Label::parse(jt.at("label").get<std::string>());
            if (!label) throw std::invalid_argument("bad label " + jt.at("label").dump());
            PlacedTile t{*label, point_from(jt.at("translation"))};
            if (jt.contains("mirror")) t.mirror = mirror_from(jt.at("mirror").get<std::string>());
            if (golden_rat_from(jt.at("width")) != t.width() || golden_rat_from(jt.at("height")) != t.height())
                throw std::invalid_argument("tile size does not match label " + label->to_string());
            p.tiles.push_back(std::move(t));
        }
        return p;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed patch document: ") + e.what());
    }
}

std::string to_csv(const Polyline& line) {
    std::ostringstream os;
    os << "i,x,y\n";
    for (std::size_t i = 0; i < line.vertices.size(); ++i)
        os << i + 1 << ',' << format_fixed(line.vertices[i].x.to_double()) << ','
           << format_fixed(line.vertices[i].y.to_double()) << '\n';
    return os.str();
}

}  // namespace fibcurve
