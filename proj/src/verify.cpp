#include "fibcurve/verify.hpp"

#include "fibcurve/curve.hpp"
#include "fibcurve/decoration_solver.hpp"
#include "fibcurve/export.hpp"
#include "fibcurve/golden.hpp"
#include "fibcurve/prototiles.hpp"
#include "fibcurve/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace fibcurve {

namespace {

const Label kSeed{Color::A, 1, Sign::Plus};

CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
    // body returns an empty string on success and a reason otherwise.
    try {
        std::string reason = body();
        return {name, reason.empty(), reason};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

std::string check_golden() {
    if (GoldenInt(2, -1) * GoldenInt(2, -1) != GoldenInt(5, -3)) return "(2-phi)^2 != 5-3phi";
    for (long n = -30; n <= 30; ++n) {
        if (phi_pow(n) * phi_pow(-n) != 1) return "phi^n * phi^-n != 1 at n=" + std::to_string(n);
        if (n >= 1 && phi_pow(n) != GoldenInt(fibonacci(n - 1), fibonacci(n)))
            return "phi^n != F(n-1) + F(n) phi at n=" + std::to_string(n);
    }
    if (sign(GoldenInt(-3, 2)) != 1) return "sign(-3+2phi) != +1";
    return {};
}

std::string check_counts(int max_k) {
    SupertileBuilder builder;
    const CountMatrix m = count_matrix();
    for (int k = 0; k <= max_k; ++k) {
        const BigInt f = fibonacci(k + 2);
        const BigInt expected = f * f;
        if (builder.count(kSeed, k) != expected) return "cached count differs at k=" + std::to_string(k);
        BigInt total = 0;
        for (const auto& v : count_vector(m, kSeed, k)) total += v;
        if (total != expected) return "count vector total differs at k=" + std::to_string(k);
    }
    return {};
}

std::string check_eigenvalue() {
    const double value = dominant_eigenvalue(count_matrix()).value;
    const double phi2 = (3.0 + std::sqrt(5.0)) / 2.0;
    if (std::abs(value - phi2) > 1e-9) {
        std::ostringstream os;
        os.precision(17);
        os << "estimate " << value;
        return os.str();
    }
    return {};
}

std::string check_rule() {
    if (!reversal_consistent(rule_omega().nu_table())) return "a minus row is not the reversed plus row";
    if (!reversal_consistent(printed_nu_table())) return "printed table fails reversal symmetry";
    return {};
}

std::string check_concatenation(int max_k) {
    for (const auto& seed : all_labels()) {
        SupertileBuilder builder;
        for (int k = 0; k <= max_k; ++k) {
            const Patch p = builder.build(seed, k);
            const auto rep = verify_concatenation(p, seed);
            if (!rep.ok) return seed.to_string() + " k=" + std::to_string(k) + ": " + rep.message;
            if (!interiors_disjoint(p)) return seed.to_string() + " k=" + std::to_string(k) + ": overlapping tiles";
        }
    }
    return {};
}

std::string check_solver() {
    const auto corrected = solve_decorations(SolverProblem::from_nu_table(corrected_nu_table()));
    if (corrected.size() != 1 || corrected.front() != reference_system())
        return "corrected rows give " + std::to_string(corrected.size()) + " systems";
    const auto printed = solve_decorations(SolverProblem::from_nu_table(printed_nu_table()));
    if (!printed.empty()) return "printed rows give " + std::to_string(printed.size()) + " systems";
    const auto freed = solve_decorations(SolverProblem::from_nu_table(printed_nu_table(), true));
    if (freed.size() != 1) return "free D indices give " + std::to_string(freed.size()) + " systems";
    return {};
}

std::string check_measure(int max_k) {
    for (int k = 0; k <= max_k; ++k) {
        const PartitionLevel level = partition(k);
        if (level.cuts.front() != 0 || level.cuts.back() != 1) return "cuts do not span [0,1] at k=" + std::to_string(k);
        for (std::size_t i = 0; i < level.size(); ++i)
            if (GoldenRat(level.length(i)) != level.rects[i].area())
                return "length != area at k=" + std::to_string(k) + " i=" + std::to_string(i + 1);
    }
    return {};
}

std::string check_connectedness(int max_k) {
    for (int k = 1; k <= max_k; ++k)
        if (!connectedness_check(k)) return "gap at k=" + std::to_string(k);
    return {};
}

std::string check_endpoints(int depth) {
    const Point2 origin{0, 0};
    const auto at0 = eval(ParamRational(0, 1), depth);
    const auto at1 = eval(ParamRational(1, 1), depth);
    for (std::size_t i = 0; i < at0.chain.size(); ++i) {
        if (at0.chain[i].rect.origin != origin) return "eval(0) leaves the origin at level " + std::to_string(i);
        const Rect& r = at1.chain[i].rect;
        if (r.x1() != 1 || r.y0() != 0) return "eval(1) leaves (1,0) at level " + std::to_string(i);
    }
    const auto cut = eval(GoldenInt(2, -1), depth);
    if (!cut.box.contains(Point2{0, GoldenInt(-1, 1)})) return "eval(2-phi) misses (0, phi-1)";
    return {};
}

std::string check_modulus(int max_k) {
    for (int k = 0; k <= max_k; ++k) {
        const auto measured = measured_modulus(partition(k));
        const auto predicted = continuity_modulus(k);
        if (measured.g != predicted.g) return "g differs at k=" + std::to_string(k);
        if (std::abs(measured.h - predicted.h) > 1e-12) return "h differs at k=" + std::to_string(k);
    }
    return {};
}

std::string check_preimage(int depth) {
    // A fixed grid keeps the output deterministic.
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 10; ++j) {
            const double x = i / 10.0, y = j / 10.0;
            const auto back = eval(preimage(x, y, depth).x, depth);
            const double err = std::hypot(back.center.x.to_double() - x, back.center.y.to_double() - y);
            if (err > h_bound(depth)) return "round trip misses (" + std::to_string(x) + ", " + std::to_string(y) + ")";
        }
    return {};
}

std::string check_export(int max_k) {
    const DecorationSystem system = reference_system();
    for (int k = 0; k <= max_k; ++k) {
        const Patch p = supertile(kSeed, k);
        if (patch_from_json(to_json(p, &system)) != p) return "JSON round trip differs at k=" + std::to_string(k);
        if (k >= 1 && polygon(k).vertices.size() != p.size()) return "polygon size differs at k=" + std::to_string(k);
    }
    if (to_svg(supertile(kSeed, 2)) != to_svg(supertile(kSeed, 2))) return "SVG output is not deterministic";
    return {};
}

}  // namespace

std::vector<CheckResult> run_verification(int max_depth) {
    if (max_depth < 1) throw std::invalid_argument("max depth must be at least 1");
    std::vector<CheckResult> out;
    out.push_back(run_check("golden arithmetic", check_golden));
    out.push_back(run_check("substitution reversal symmetry", check_rule));
    out.push_back(run_check("tile counts", [&] { return check_counts(std::min(max_depth, 10)); }));
    out.push_back(run_check("dominant eigenvalue", check_eigenvalue));
    out.push_back(run_check("decoration concatenation", [&] { return check_concatenation(std::min(max_depth, 6)); }));
    out.push_back(run_check("decoration solver", check_solver));
    out.push_back(run_check("measure preservation", [&] { return check_measure(std::min(max_depth, 8)); }));
    out.push_back(run_check("connectedness", [&] { return check_connectedness(std::min(max_depth, 6)); }));
    out.push_back(run_check("continuity modulus", [&] { return check_modulus(std::min(max_depth, 8)); }));
    out.push_back(run_check("curve endpoints", [&] { return check_endpoints(std::min(max_depth, kDefaultDepth)); }));
    out.push_back(run_check("preimage round trip", [&] { return check_preimage(std::min(max_depth, 24)); }));
    out.push_back(run_check("export round trip", [&] { return check_export(std::min(max_depth, 5)); }));
    return out;
}

}  // namespace fibcurve
