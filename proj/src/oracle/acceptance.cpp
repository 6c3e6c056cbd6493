#include "treelattice/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "treelattice/asymptotics.hpp"
#include "treelattice/fixtures.hpp"
#include "treelattice/oracle.hpp"
#include "treelattice/spectral.hpp"

namespace treelattice {

namespace {

struct Context {
    AcceptanceOptions opts;
    std::vector<CountTable> tables;  // every class table produced, for criterion 11
};

ClassDescriptor first_class(const RegularGraph& g, int mu) {
    for (ClassDescriptor& k : enumerate_classes(g, mu))
        if (k.mu == mu) return k;
    throw std::logic_error("no class of the requested length");
}

TreePath on_axis(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k) {
    return TreePath{st.path_from_base(g, k.start(g))};
}

/// Two steps away from the axis at the class start.
TreePath off_axis(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k) {
    const TreePath x = on_axis(g, st, k);
    const ArcId forward = k.cyclic_walk.front();
    const ArcId backward = g.reverse(k.cyclic_walk.back());
    for (ArcId a : g.out_arcs(k.start(g))) {
        if (a == forward || a == backward) continue;
        for (ArcId b : g.out_arcs(g.terminus(a))) {
            if (b == g.reverse(a)) continue;
            const std::vector<ArcId> steps{a, b};
            return follow(g, x, steps);
        }
    }
    throw std::logic_error("degree too small for an off-axis step");
}

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// ---------------------------------------------------------------------------

std::string sphere_law(Context& ctx, bool& ok) {
    std::ostringstream detail;
    for (const char* name : {"k4", "k5", "petersen"}) {
        const RegularGraph g = parse_graph(*fixtures::by_name(name));
        const auto sizes = sphere_sizes(g, 0, 12, ctx.opts.exec);
        const auto reference = oracle::explicit_sphere_sizes(g, 0, 12);
        bool good = sizes == reference;
        for (int n = 1; n <= 12; ++n) good = good && sizes[static_cast<std::size_t>(n)] == sphere_size(g.q(), n);
        ok = ok && good;
        detail << name << (good ? " ok " : " MISMATCH ") << "(|S_12|=" << sizes.back() << ") ";
    }
    return detail.str();
}

std::string displacement_identity(Context&, bool& ok) {
    std::mt19937 rng(20240601);
    int pairs = 0;
    int bad = 0;
    for (const char* name : {"k4", "petersen"}) {
        const RegularGraph g = parse_graph(*fixtures::by_name(name));
        const SpanningTree st = SpanningTree::bfs(g);
        std::uniform_int_distribution<int> letter(1, st.rank());
        std::uniform_int_distribution<int> coin(0, 1);
        for (int sample = 0; sample < 60; ++sample) {
            Word w;
            const int length = 1 + sample % 3;
            while (static_cast<int>(w.letters.size()) < length) {
                const Letter l = coin(rng) ? letter(rng) : -letter(rng);
                if (!w.letters.empty() && w.letters.back() == -l) continue;
                w.letters.push_back(l);
            }
            TreePath x;
            Vertex at = st.base();
            for (int step = 0; step < sample % 4; ++step) {
                const auto arcs = g.out_arcs(at);
                const ArcId a = arcs[static_cast<std::size_t>(rng() % arcs.size())];
                if (!x.arcs.empty() && a == g.reverse(x.arcs.back())) continue;
                x.arcs.push_back(a);
                at = g.terminus(a);
            }
            const int d = displacement(g, st, w, x);
            const int mu = class_of_word(g, st, w).mu;
            const oracle::AxisProbe probe = oracle::probe_axis(g, st, w, x);
            const bool good = d >= mu && (d - mu) % 2 == 0 && probe.mu == mu && d - mu == 2 * probe.delta &&
                              axis_delta(g, st, w, x) == probe.delta;
            ++pairs;
            if (!good) ++bad;
        }
    }
    ok = bad == 0 && pairs >= 100;
    return fmt("%d pairs, %d violations", pairs, bad);
}

// Stability alone can be reached by a shallow search; also insist on a
// nontrivial sweep of conjugators.
constexpr std::uint64_t min_oracle_words = 1'000'000;

std::string oracle_equivalence(Context& ctx, bool& ok) {
    std::ostringstream detail;
    for (auto [name, mu] : {std::pair{"k4", 3}, std::pair{"petersen", 5}}) {
        const RegularGraph g = parse_graph(*fixtures::by_name(name));
        const SpanningTree st = SpanningTree::bfs(g);
        const ClassDescriptor k = first_class(g, mu);
        for (const TreePath& x : {on_axis(g, st, k), off_axis(g, st, k)}) {
            const CountTable direct = count_class(g, st, k, x, 9, {ctx.opts.budget, ctx.opts.exec});
            OracleOptions oo;
            oo.exec = ctx.opts.exec;
            OracleResult result;
            int depth = 2;
            for (;; ++depth) {
                result = oracle_count(g, st, k, x, 9, depth, oo);
                if (result.stable && result.words_enumerated >= min_oracle_words) break;
            }
            const bool good = result.table.rows.size() == direct.rows.size() &&
                              std::equal(direct.rows.begin(), direct.rows.end(), result.table.rows.begin(),
                                         [](const CountRow& a, const CountRow& b) { return a.count == b.count; });
            ok = ok && good;
            ctx.tables.push_back(direct);
            ctx.tables.push_back(result.table);
            detail << name << " [" << describe_basepoint(g, st, x) << "]" << (good ? " equal" : " DIFFER")
                   << " N(9)=" << direct.count(9) << " depth " << depth << "; ";
        }
    }
    return detail.str();
}

std::string spectral_cross_validation(Context& ctx, bool& ok) {
    std::ostringstream detail;
    double worst = 0.0;
    for (auto [name, mu] : {std::pair{"k4", 3}, std::pair{"petersen", 5}}) {
        const RegularGraph g = parse_graph(*fixtures::by_name(name));
        const SpanningTree st = SpanningTree::bfs(g);
        const ClassDescriptor k = first_class(g, mu);
        const TreePath x = on_axis(g, st, k);
        const SpectralData spec = eigendecompose(g);
        for (Complex s : {Complex(2.5, 0.0), Complex(3.0, 0.0), Complex(2.5, 0.7)}) {
            const ClosedFormValue closed = g_closed(g, spec, k, projection(g, st, x), s);
            const SeriesValue series = g_series(g, st, k, x, s, 40, {ctx.opts.budget, ctx.opts.exec});
            const double err = (std::abs(closed.value - series.value) + series.tail_bound) / std::abs(closed.value);
            worst = std::max(worst, err);
            ok = ok && err < 1e-6 && !closed.near_pole;
        }
    }
    detail << "worst relative error " << fmt("%.3g", worst) << " over 6 (graph, s) pairs";
    return detail.str();
}

std::string spherical_functions(Context&, bool& ok) {
    double worst_abs = 0.0;
    int eigenvalues = 0;
    for (auto [name, mu] : {std::pair{"k4", 3}, std::pair{"petersen", 5}, std::pair{"k33", 4}}) {
        const RegularGraph g = parse_graph(*fixtures::by_name(name));
        const ClassDescriptor k = first_class(g, mu);
        const SpectralData spec = eigendecompose(g);
        for (int i = 0; i < spec.size; ++i) {
            const auto p = make_spherical_params(spec.eigenvalues[static_cast<std::size_t>(i)], g.q(),
                                                 phi_zero(g, spec, k, i));
            const auto rec = spherical_by_recursion(p, 30);
            const auto independent = oracle::radial_recursion(p.lambda, p.q, p.phi0, 30);
            for (int n = 0; n <= 30; ++n) {
                const auto j = static_cast<std::size_t>(n);
                worst_abs = std::max({worst_abs, std::abs(spherical(p, n) - rec[j]),
                                      std::abs(spherical(p, n) - independent[j])});
            }
            ++eigenvalues;
        }
    }
    double worst_rel = 0.0;
    for (int q : {2, 4})
        for (int sign : {1, -1}) {
            const double lambda = sign * 2.0 * std::sqrt(static_cast<double>(q)) / (q + 1);
            const double phi0 = 0.37;
            const auto p = make_spherical_params(lambda, q, phi0);
            ok = ok && p.degenerate;
            const auto independent = oracle::radial_recursion(lambda, q, phi0, 30);
            for (int n = 0; n <= 30; ++n) {
                const double ref = independent[static_cast<std::size_t>(n)];
                worst_abs = std::max(worst_abs, std::abs(spherical(p, n) - ref));
            }
            for (Complex s : {Complex(2.5, 0.0), Complex(3.0, 0.0), Complex(2.5, 0.7)}) {
                const Complex closed = fourier_coefficient(p, 6, 2, s).value;
                const Complex series = oracle::fourier_series(lambda, q, phi0, 6, 2, s, 200);
                worst_rel = std::max(worst_rel, std::abs(closed - series) / std::abs(series));
            }
        }
    ok = ok && worst_abs < 1e-9 && worst_rel < 1e-8;
    return fmt("%d eigenvalues, n<=30: max abs error %.3g; degenerate q in {2,4}: max rel error %.3g", eigenvalues,
               worst_abs, worst_rel);
}

std::string u_system(Context&, bool& ok) {
    double worst = 0.0;
    int tested = 0;
    auto check = [&](double lambda, int q, double phi0) {
        const auto p = make_spherical_params(lambda, q, phi0);
        if (p.degenerate) return;
        const double phi1 = oracle::radial_recursion(lambda, q, phi0, 1)[1];
        const double scale = std::max(1.0, std::abs(phi0));
        worst = std::max({worst, std::abs(p.u_plus + p.u_minus - phi0) / scale,
                          std::abs(p.u_plus * p.alpha_plus + p.u_minus * p.alpha_minus - phi1) / scale});
        ++tested;
    };
    for (auto [name, mu] : {std::pair{"k4", 3}, std::pair{"petersen", 5}, std::pair{"k33", 4}}) {
        const RegularGraph g = parse_graph(*fixtures::by_name(name));
        const ClassDescriptor k = first_class(g, mu);
        const SpectralData spec = eigendecompose(g);
        for (int i = 0; i < spec.size; ++i)
            check(spec.eigenvalues[static_cast<std::size_t>(i)], g.q(), phi_zero(g, spec, k, i));
    }
    for (int q : {2, 3, 4, 7})
        for (double lambda : {-1.0, -0.6, -0.1, 0.0, 0.3, 0.8, 1.0}) check(lambda, q, 0.41);
    ok = worst < 1e-13;
    return fmt("%d eigenvalues, max residual %.3g", tested, worst);
}

struct DeskScale {
    double ratio_on_axis = 0.0;
};

std::string theorem_desk_scale(Context& ctx, bool& ok, DeskScale& out) {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);
    const ClassDescriptor k = first_class(g, 3);
    const int n_max = max_radius_within(g, ctx.opts.budget);
    const CountTable table = count_class(g, st, k, on_axis(g, st, k), n_max, {ctx.opts.budget, ctx.opts.exec});
    ctx.tables.push_back(table);
    const AsymptoticReport r = convergence_report(table, constants(k, g));
    out.ratio_on_axis = r.final_theorem_ratio;
    bool ratios_ok = r.ratios.size() == 3;
    std::string steps;
    for (const RatioStep& s : r.ratios) {
        ratios_ok = ratios_ok && std::abs(s.relative_to_q) <= 0.05;
        steps += fmt(" %.4f", s.ratio);
    }
    const bool in_range = r.final_theorem_ratio >= 0.9 && r.final_theorem_ratio <= 1.1;
    ok = n_max >= 21 && in_range && ratios_ok;
    return fmt("n_max=%d N=%llu normalized=%.6f; ratios%s", n_max,
               static_cast<unsigned long long>(table.count(n_max)), r.final_theorem_ratio, steps.c_str());
}

std::string x_independence(Context& ctx, bool& ok, const DeskScale& first) {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);
    const ClassDescriptor k = first_class(g, 3);
    const int n_max = max_radius_within(g, ctx.opts.budget);

    // Counts depend only on the projection of the basepoint, and every tree
    // vertex two steps off this axis projects back onto the triangle. The
    // vertex off the loop gives the informative comparison; both must agree.
    std::vector<Vertex> on_loop = vertices_of_walk(g, Walk{k.start(g), k.cyclic_walk});
    Vertex off_loop = 0;
    while (std::find(on_loop.begin(), on_loop.end(), off_loop) != on_loop.end()) ++off_loop;

    const TreePath offset = off_axis(g, st, k);
    const int delta = axis_delta(g, st, representative_word(g, st, k), offset);
    std::string detail;
    bool all = delta == 2;
    for (const TreePath& x : {offset, TreePath{st.path_from_base(g, off_loop)}}) {
        const CountTable table = count_class(g, st, k, x, n_max, {ctx.opts.budget, ctx.opts.exec});
        ctx.tables.push_back(table);
        const AsymptoticReport r = convergence_report(table, constants(k, g));
        const double rel =
            first.ratio_on_axis > 0 ? std::abs(r.final_theorem_ratio / first.ratio_on_axis - 1.0) : 1.0;
        all = all && rel <= 0.15;
        detail += fmt("[%s] normalized=%.6f diff=%.4f; ", describe_basepoint(g, st, x).c_str(), r.final_theorem_ratio,
                      rel);
    }
    ok = all;
    return fmt("axis offset %d: ", delta) + detail;
}

std::string orbit_count(Context& ctx, bool& ok) {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);
    const CountTable table = count_orbit(g, st, TreePath{}, st.base(), 20, {ctx.opts.budget, ctx.opts.exec});
    const double v = table.rows.back().normalized;
    ok = v >= 0.95 && v <= 1.05;
    return fmt("N(20)=%llu |B_20|=%llu normalized=%.6f", static_cast<unsigned long long>(table.count(20)),
               static_cast<unsigned long long>(ball_size(g.q(), 20)), v);
}

std::string bipartite_bracket(Context& ctx, bool& ok) {
    const RegularGraph g = fixtures::k33();
    const SpanningTree st = SpanningTree::bfs(g);
    const ClassDescriptor k = first_class(g, 4);
    const int n_max = max_radius_within(g, ctx.opts.budget);
    const CountTable table = count_class(g, st, k, on_axis(g, st, k), n_max, {ctx.opts.budget, ctx.opts.exec});
    ctx.tables.push_back(table);
    const auto [lower, upper] = bipartite_bounds(k, g);
    const AsymptoticReport r = convergence_report(table, constants(k, g));
    bool inside = r.points.size() >= 5;
    std::string values;
    for (std::size_t i = r.points.size() >= 5 ? r.points.size() - 5 : 0; i < r.points.size(); ++i) {
        const double v = r.points[i].scaled;
        inside = inside && v >= lower * 0.9 && v <= upper * 1.1;
        values += fmt(" %.5f", v);
    }
    const double q2 = static_cast<double>(g.q()) * g.q();
    const bool exact_ratio = std::abs(upper / lower - q2) <= 4 * std::numeric_limits<double>::epsilon() * q2;
    ok = inside && exact_ratio;
    return fmt("bracket [%.5f, %.5f], upper/lower=%.17g; last five scaled values%s", lower, upper, upper / lower,
               values.c_str());
}

std::string parity_structure(Context& ctx, bool& ok) {
    int violations = 0;
    for (const CountTable& t : ctx.tables) {
        for (const CountRow& row : t.rows) {
            const std::uint64_t before = row.n == 0 ? 0 : t.count(row.n - 1);
            const bool changes = row.count != before;
            if (changes && (row.n < t.mu || (row.n - t.mu) % 2 != 0)) ++violations;
        }
    }
    ok = !ctx.tables.empty() && violations == 0;
    return fmt("%zu class tables, %d off-parity steps", ctx.tables.size(), violations);
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    Context ctx{opts, {}};
    DeskScale desk;
    std::vector<CriterionResult> results;

    auto run = [&](int id, const char* name, double limit, const std::function<std::string(bool&)>& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.time_limit = limit;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        try {
            r.detail = body(ok);
        } catch (const std::exception& e) {
            ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limit > 0 && r.seconds > limit) {
            ok = false;
            r.detail += fmt(" [over time limit %.0fs]", limit);
        }
        r.passed = ok;
        results.push_back(r);
    };

    run(1, "sphere-law", 5, [&](bool& ok) { return sphere_law(ctx, ok); });
    run(2, "displacement-identity", 10, [&](bool& ok) { return displacement_identity(ctx, ok); });
    run(3, "oracle-equivalence", 60, [&](bool& ok) { return oracle_equivalence(ctx, ok); });
    run(4, "spectral-cross-validation", 120, [&](bool& ok) { return spectral_cross_validation(ctx, ok); });
    run(5, "spherical-functions", 5, [&](bool& ok) { return spherical_functions(ctx, ok); });
    run(6, "u-system-identity", 0, [&](bool& ok) { return u_system(ctx, ok); });
    run(7, "desk-scale-asymptotics", 600, [&](bool& ok) { return theorem_desk_scale(ctx, ok, desk); });
    run(8, "basepoint-independence", 0, [&](bool& ok) { return x_independence(ctx, ok, desk); });
    run(9, "orbit-count", 60, [&](bool& ok) { return orbit_count(ctx, ok); });
    run(10, "bipartite-bracket", 0, [&](bool& ok) { return bipartite_bracket(ctx, ok); });
    run(11, "parity-steps", 0, [&](bool& ok) { return parity_structure(ctx, ok); });
    return results;
}

std::string format_result(const CriterionResult& r) {
    return fmt("%s %2d %-26s %8.2fs  %s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
               r.detail.c_str());
}

}  // namespace treelattice
