#include "fibcurve/decoration_solver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibcurve {

DecorationSystem reference_system() {
    DecorationSystem s;
    for (int i = 0; i < kBaseLabelCount; ++i) s.plus[i] = decoration_endpoints(Label::from_ordinal(i));
    return s;
}

SolverProblem SolverProblem::from_nu_table(const NuTable& table, bool free_d_indices) {
    const SubstitutionRule rule = SubstitutionRule::from_nu_table(table);
    SolverProblem p;
    for (int i = 0; i < kBaseLabelCount; ++i) {
        const Label parent = Label::from_ordinal(i);
        ParentRow row{parent, {}};
        for (const auto& c : rule.row(parent)) {
            ChildSlot slot{c.label.color, c.label.index, c.label.sign, c.offset};
            if (free_d_indices && parent.color == Color::A && c.label.color == Color::D) slot.index.reset();
            row.children.push_back(slot);
        }
        p.rows.push_back(std::move(row));
    }
    return p;
}

namespace {

// Small exact point: x = xa + xb*phi, y = ya + yb*phi. Every coordinate the
// solver touches is an integral element of Z[phi] with tiny coefficients.
struct LatticePoint {
    long long xa = 0, xb = 0, ya = 0, yb = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint to_lattice(const Point2& p) {
    if (!p.x.is_integral() || !p.y.is_integral()) throw std::logic_error("solver point is not integral");
    return {p.x.num().a().convert_to<long long>(), p.x.num().b().convert_to<long long>(),
            p.y.num().a().convert_to<long long>(), p.y.num().b().convert_to<long long>()};
}

LatticePoint plus(const LatticePoint& p, const LatticePoint& q) {
    return {p.xa + q.xa, p.xb + q.xb, p.ya + q.ya, p.yb + q.yb};
}

LatticePoint times_phi(const LatticePoint& p) { return {p.xb, p.xa + p.xb, p.yb, p.ya + p.yb}; }

const std::array<Decoration, 12>& decoration_domain() {
    static const std::array<Decoration, 12> domain = [] {
        std::array<Decoration, 12> d;
        int n = 0;
        for (Corner s : kCorners)
            for (Corner e : kCorners)
                if (s != e) d[n++] = {s, e};
        return d;
    }();
    return domain;
}

// corner_lattice[color][corner]
const std::array<std::array<LatticePoint, 4>, 4>& corner_lattice() {
    static const auto table = [] {
        std::array<std::array<LatticePoint, 4>, 4> t;
        for (Color c : kColors)
            for (Corner k : kCorners) t[static_cast<int>(c)][static_cast<int>(k)] = to_lattice(corner_point(k, c));
        return t;
    }();
    return table;
}

LatticePoint corner_of(Color c, Corner k) { return corner_lattice()[static_cast<int>(c)][static_cast<int>(k)]; }

class Search {
public:
    Search(const SolverProblem& problem, const std::vector<int>& order) : problem_(problem) {
        for (std::size_t r = 0; r < problem.rows.size(); ++r) {
            const auto& row = problem.rows[r];
            if (!row.parent.is_plus()) throw std::invalid_argument("solver rows must have '+' parents");
            for (std::size_t j = 0; j < row.children.size(); ++j)
                if (!row.children[j].index) slot_var_.emplace(std::make_pair(r, j), var_count_++);
        }
        var_count_ += kBaseLabelCount;
        offsets_.resize(problem.rows.size());
        for (std::size_t r = 0; r < problem.rows.size(); ++r)
            for (const auto& c : problem.rows[r].children) offsets_[r].push_back(to_lattice(c.offset));

        order_ = order;
        if (order_.empty())
            for (int v = 0; v < var_count_; ++v) order_.push_back(v);
        std::vector<int> sorted = order_;
        std::sort(sorted.begin(), sorted.end());
        for (int v = 0; v < var_count_; ++v)
            if (static_cast<int>(sorted.size()) != var_count_ || sorted[v] != v)
                throw std::invalid_argument("variable order is not a permutation");
        position_.resize(var_count_);
        for (int i = 0; i < var_count_; ++i) position_[order_[i]] = i;

        build_constraints();
        value_.assign(var_count_, -1);
    }

    int var_count() const { return var_count_; }

    std::vector<DecorationSystem> run(SolverStats* stats) {
        descend(0);
        if (stats) stats->nodes = nodes_;
        std::sort(solutions_.begin(), solutions_.end());
        return solutions_;
    }

private:
    // Variables 0..11 are label decorations; 12.. are free child indices.
    int slot_index_var(std::size_t r, std::size_t j) const {
        return kBaseLabelCount + slot_var_.at({r, j});
    }

    std::vector<int> slot_vars(std::size_t r, std::size_t j) const {
        const ChildSlot& c = problem_.rows[r].children[j];
        if (c.index) return {Label{c.color, *c.index, Sign::Plus}.ordinal()};
        std::vector<int> vars{slot_index_var(r, j)};
        for (int i = 1; i <= index_count(c.color); ++i) vars.push_back(Label{c.color, i, Sign::Plus}.ordinal());
        return vars;
    }

    Label slot_label(std::size_t r, std::size_t j) const {
        const ChildSlot& c = problem_.rows[r].children[j];
        const int idx = c.index ? *c.index : value_[slot_index_var(r, j)];
        return {c.color, idx, c.sign};
    }

    Decoration decoration(const Label& l) const {
        const Decoration d = decoration_domain()[value_[l.base().ordinal()]];
        return l.is_plus() ? d : d.reversed();
    }

    struct Constraint {
        enum Kind { Start, Link, End, DPattern } kind;
        std::size_t row;
        std::size_t child;
        int trigger;
    };

    void add_constraint(Constraint::Kind kind, std::size_t r, std::size_t j, std::vector<int> vars) {
        int trigger = vars.front();
        for (int v : vars)
            if (position_[v] > position_[trigger]) trigger = v;
        constraints_.push_back({kind, r, j, trigger});
    }

    void build_constraints() {
        for (std::size_t r = 0; r < problem_.rows.size(); ++r) {
            const auto& row = problem_.rows[r];
            const int parent_var = row.parent.ordinal();
            const std::size_t n = row.children.size();
            auto vars = slot_vars(r, 0);
            vars.push_back(parent_var);
            add_constraint(Constraint::Start, r, 0, vars);
            for (std::size_t j = 0; j + 1 < n; ++j) {
                auto a = slot_vars(r, j);
                auto b = slot_vars(r, j + 1);
                a.insert(a.end(), b.begin(), b.end());
                add_constraint(Constraint::Link, r, j, a);
            }
            vars = slot_vars(r, n - 1);
            vars.push_back(parent_var);
            add_constraint(Constraint::End, r, n - 1, vars);
        }
        for (int i = 1; i <= 4; ++i) {
            const int a = Label{Color::A, i, Sign::Plus}.ordinal();
            const int d = Label{Color::D, i, Sign::Plus}.ordinal();
            add_constraint(Constraint::DPattern, static_cast<std::size_t>(a), static_cast<std::size_t>(d), {a, d});
        }
    }

    bool holds(const Constraint& c) const {
        if (c.kind == Constraint::DPattern) return value_[c.row] == value_[c.child];
        const auto& row = problem_.rows[c.row];
        const Label child = slot_label(c.row, c.child);
        const Color pc = row.parent.color;
        switch (c.kind) {
            case Constraint::Start:
                return plus(offsets_[c.row][0], corner_of(child.color, decoration(child).start)) ==
                       times_phi(corner_of(pc, decoration(row.parent).start));
            case Constraint::End:
                return plus(offsets_[c.row][c.child], corner_of(child.color, decoration(child).end)) ==
                       times_phi(corner_of(pc, decoration(row.parent).end));
            case Constraint::Link: {
                const Label next = slot_label(c.row, c.child + 1);
                return plus(offsets_[c.row][c.child], corner_of(child.color, decoration(child).end)) ==
                       plus(offsets_[c.row][c.child + 1], corner_of(next.color, decoration(next).start));
            }
            default: return false;
        }
    }

    int domain_size(int var) const {
        if (var < kBaseLabelCount) return static_cast<int>(decoration_domain().size());
        for (const auto& [key, v] : slot_var_)
            if (kBaseLabelCount + v == var) return index_count(problem_.rows[key.first].children[key.second].color);
        return 0;
    }

    void descend(int depth) {
        ++nodes_;
        if (depth == var_count_) {
            record();
            return;
        }
        const int var = order_[depth];
        const int n = domain_size(var);
        for (int val = 0; val < n; ++val) {
            value_[var] = var < kBaseLabelCount ? val : val + 1;
            bool ok = true;
            for (const auto& c : constraints_) {
                if (c.trigger == var && !holds(c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) descend(depth + 1);
        }
        value_[var] = -1;
    }

    void record() {
        DecorationSystem s;
        for (int i = 0; i < kBaseLabelCount; ++i) s.plus[i] = decoration_domain()[value_[i]];
        for (std::size_t r = 0; r < problem_.rows.size(); ++r)
            for (std::size_t j = 0; j < problem_.rows[r].children.size(); ++j)
                if (!problem_.rows[r].children[j].index)
                    s.resolved_children.emplace_back(problem_.rows[r].parent, slot_label(r, j));
        solutions_.push_back(std::move(s));
    }

    const SolverProblem& problem_;
    std::map<std::pair<std::size_t, std::size_t>, int> slot_var_;
    std::vector<std::vector<LatticePoint>> offsets_;
    int var_count_ = 0;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<Constraint> constraints_;
    std::vector<int> value_;
    std::vector<DecorationSystem> solutions_;
    std::size_t nodes_ = 0;
};

}  // namespace

int solver_variable_count(const SolverProblem& problem) { return Search(problem, {}).var_count(); }

std::vector<DecorationSystem> solve_decorations(const SolverProblem& problem, const std::vector<int>& variable_order,
                                                SolverStats* stats) {
    Search search(problem, variable_order);
    return search.run(stats);
}

// ---- concatenation -----------------------------------------------------------

namespace {

Point2 reflect(const Point2& p, Mirror m) {
    switch (m) {
        case Mirror::None: return p;
        case Mirror::AcrossYAxis: return {-p.x, p.y};
        case Mirror::AcrossXAxis: return {p.x, -p.y};
        case Mirror::AntiDiagonal: return {-p.y, -p.x};
    }
    return p;
}

// Plane position of a corner of a placed tile, following the tile's mirror.
Point2 placed_corner(const PlacedTile& t, Corner c) {
    const Point2 local = corner_point(c, t.label.color);
    if (t.mirror == Mirror::None) return t.translation + local;
    // Recover the unmirrored tile origin, then reflect the corner.
    const GoldenRat w = tile_width(t.label.color);
    const GoldenRat h = tile_height(t.label.color);
    Point2 origin;
    switch (t.mirror) {
        case Mirror::AcrossYAxis: origin = {-(t.translation.x + w), t.translation.y}; break;
        case Mirror::AcrossXAxis: origin = {t.translation.x, -(t.translation.y + h)}; break;
        case Mirror::AntiDiagonal: origin = {-(t.translation.y + w), -(t.translation.x + h)}; break;
        case Mirror::None: break;
    }
    return reflect(origin + local, t.mirror);
}

}  // namespace

Point2 decoration_start(const PlacedTile& t, const DecorationSystem& system) {
    return placed_corner(t, system(t.label).start);
}

Point2 decoration_end(const PlacedTile& t, const DecorationSystem& system) {
    return placed_corner(t, system(t.label).end);
}

ConcatenationReport verify_concatenation(const Patch& patch, const Label& seed, const DecorationSystem& system) {
    ConcatenationReport rep;
    rep.tiles = patch.tiles.size();
    if (patch.tiles.empty()) {
        rep.message = "empty patch";
        return rep;
    }
    const GoldenRat scale = phi_pow(patch.level);
    const Point2 want_start = scale * corner_point(system(seed).start, seed.color);
    const Point2 want_end = scale * corner_point(system(seed).end, seed.color);
    rep.start = decoration_start(patch.tiles.front(), system);
    rep.end = decoration_end(patch.tiles.back(), system);

    if (rep.start != want_start) {
        rep.first_violation = 0;
        rep.message = "curve starts at " + to_string(rep.start) + ", expected " + to_string(want_start);
        return rep;
    }
    for (std::size_t i = 0; i + 1 < patch.tiles.size(); ++i) {
        const Point2 e = decoration_end(patch.tiles[i], system);
        const Point2 s = decoration_start(patch.tiles[i + 1], system);
        if (e != s) {
            rep.first_violation = i;
            std::ostringstream os;
            os << "tile " << i << " (" << patch.tiles[i].label.to_string() << ") ends at " << e << " but tile "
               << i + 1 << " (" << patch.tiles[i + 1].label.to_string() << ") starts at " << s;
            rep.message = os.str();
            return rep;
        }
    }
    if (rep.end != want_end) {
        rep.first_violation = patch.tiles.size() - 1;
        rep.message = "curve ends at " + to_string(rep.end) + ", expected " + to_string(want_end);
        return rep;
    }
    rep.ok = true;
    rep.message = "ok";
    return rep;
}

OrderReport induced_order(const Patch& patch, const DecorationSystem& system) {
    OrderReport rep;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
        const auto& t = patch.tiles[i];
        const Point2 o = t.translation;
        if (!seen.emplace(o.x.to_string(), o.y.to_string()).second) {
            rep.message = "tile " + std::to_string(i) + " is visited twice";
            return rep;
        }
        if (i + 1 < patch.tiles.size() && decoration_end(t, system) != decoration_start(patch.tiles[i + 1], system)) {
            rep.message = "tiles " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not joined";
            return rep;
        }
        rep.order.push_back(t.label);
    }
    rep.ok = true;
    rep.message = "ok";
    return rep;
}

// ---- exhaustive layout search ------------------------------------------------

std::string TileType::to_string() const {
    std::string s;
    s += color_char(color);
    s += ':';
    s += corner_name(dec.start);
    s += "->";
    s += corner_name(dec.end);
    return s;
}

namespace {

Rect cell_rect(Color c, const Point2& offset) { return {offset, tile_width(c), tile_height(c)}; }

}  // namespace

std::vector<Expansion> connected_expansions(const TileType& t) {
    const auto cells = mu2_cells(t.color);
    const GoldenRat phi = GoldenInt::phi();
    const Point2 start = phi * corner_point(t.dec.start, t.color);
    const Point2 end = phi * corner_point(t.dec.end, t.color);

    std::vector<Expansion> out;
    std::vector<bool> used(cells.size(), false);
    Expansion current;

    std::function<void(const Point2&)> extend = [&](const Point2& at) {
        if (current.size() == cells.size()) {
            if (at == end) out.push_back(current);
            return;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (used[i]) continue;
            const auto& cell = cells[i];
            if (!current.empty()) {
                const auto& prev = current.back();
                if (!share_edge(cell_rect(prev.type.color, prev.offset), cell_rect(cell.color, cell.offset))) continue;
            }
            for (Corner s : kCorners) {
                if (cell.offset + corner_point(s, cell.color) != at) continue;
                for (Corner e : kCorners) {
                    if (e == s) continue;
                    used[i] = true;
                    current.push_back({{cell.color, {s, e}}, cell.offset});
                    extend(cell.offset + corner_point(e, cell.color));
                    current.pop_back();
                    used[i] = false;
                }
            }
        }
    };
    extend(start);
    return out;
}

std::string CurveSystem::key() const {
    std::ostringstream os;
    os << seed.to_string() << "|";
    for (const auto& [type, children] : choice) {
        os << type.to_string() << "=";
        for (const auto& c : children) os << c.to_string() << ",";
        os << ";";
    }
    return os.str();
}

namespace {

std::vector<TileType> all_types() {
    std::vector<TileType> out;
    for (Color c : kColors)
        for (Corner s : kCorners)
            for (Corner e : kCorners)
                if (s != e) out.push_back({c, {s, e}});
    return out;
}

Corner transpose_corner(Corner c) {
    switch (c) {
        case Corner::BR: return Corner::TL;
        case Corner::TL: return Corner::BR;
        default: return c;
    }
}

Color transpose_color(Color c) {
    if (c == Color::B) return Color::C;
    if (c == Color::C) return Color::B;
    return c;
}

TileType transform(const TileType& t, bool transpose, bool reverse) {
    TileType r = t;
    if (transpose) r = {transpose_color(t.color), {transpose_corner(t.dec.start), transpose_corner(t.dec.end)}};
    if (reverse) r.dec = r.dec.reversed();
    return r;
}

// Image of a curve system under reflection in the diagonal and/or reversal of
// direction. Transposition maps the mu2 layout onto itself with B and C swapped;
// reversal walks every expansion backwards.
CurveSystem transform(const CurveSystem& s, bool transpose, bool reverse) {
    CurveSystem r;
    r.seed = transform(s.seed, transpose, reverse);
    for (const auto& [type, children] : s.choice) {
        std::vector<TileType> mapped;
        for (const auto& c : children) mapped.push_back(transform(c, transpose, reverse));
        if (reverse) std::reverse(mapped.begin(), mapped.end());
        r.choice[transform(type, transpose, reverse)] = std::move(mapped);
    }
    return r;
}

}  // namespace

UniquenessReport enumerate_connected_systems() {
    std::map<TileType, std::vector<std::vector<TileType>>> options;
    for (const auto& t : all_types()) {
        for (const auto& e : connected_expansions(t)) {
            std::vector<TileType> children;
            for (const auto& v : e) children.push_back(v.type);
            options[t].push_back(std::move(children));
        }
    }

    UniquenessReport rep;
    for (const auto& seed : all_types()) {
        if (seed.color != Color::A) continue;
        CurveSystem current{seed, {}};
        std::function<void(std::set<TileType>)> close = [&](std::set<TileType> pending) {
            // Drop types that already have an expansion.
            for (auto it = pending.begin(); it != pending.end();)
                it = current.choice.count(*it) ? pending.erase(it) : std::next(it);
            if (pending.empty()) {
                rep.systems.push_back(current);
                return;
            }
            const TileType t = *pending.begin();
            for (const auto& children : options[t]) {
                current.choice[t] = children;
                std::set<TileType> next = pending;
                next.insert(children.begin(), children.end());
                close(next);
                current.choice.erase(t);
            }
        };
        close({seed});
    }

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < rep.systems.size(); ++i) index[rep.systems[i].key()] = i;

    std::vector<bool> assigned(rep.systems.size(), false);
    for (std::size_t i = 0; i < rep.systems.size(); ++i) {
        if (assigned[i]) continue;
        std::set<std::size_t> orbit;
        for (bool tr : {false, true})
            for (bool rv : {false, true}) {
                auto it = index.find(transform(rep.systems[i], tr, rv).key());
                if (it != index.end()) orbit.insert(it->second);
            }
        for (auto j : orbit) assigned[j] = true;
        rep.classes.emplace_back(orbit.begin(), orbit.end());
    }

    std::set<std::map<TileType, std::vector<TileType>>> maps;
    for (const auto& sys : rep.systems) maps.insert(sys.choice);
    rep.distinct_maps = maps.size();

    const auto omega = omega_curve_system();
    if (auto it = index.find(omega.key()); it != index.end()) rep.omega_index = it->second;
    return rep;
}

CurveSystem omega_curve_system() {
    const auto& rule = rule_omega();
    const auto system = reference_system();
    auto type_of = [&](const Label& l) { return TileType{l.color, system(l)}; };

    const Label seed = *Label::parse("A1+");
    CurveSystem out{type_of(seed), {}};
    std::vector<Label> stack{seed};
    std::set<int> visited;
    while (!stack.empty()) {
        const Label l = stack.back();
        stack.pop_back();
        if (!visited.insert(l.ordinal()).second) continue;
        std::vector<TileType> children;
        for (const auto& c : rule.row(l)) {
            children.push_back(type_of(c.label));
            stack.push_back(c.label);
        }
        auto [it, inserted] = out.choice.emplace(type_of(l), children);
        if (!inserted && it->second != children)
            throw std::logic_error("omega assigns two expansions to " + type_of(l).to_string());
    }
    return out;
}

}  // namespace fibcurve
