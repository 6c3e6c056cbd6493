// treelattice: command-line front end for conjugacy-class lattice counting on
// regular trees.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treelattice/acceptance.hpp"
#include "treelattice/asymptotics.hpp"
#include "treelattice/counter.hpp"
#include "treelattice/error.hpp"
#include "treelattice/fixtures.hpp"
#include "treelattice/report.hpp"
#include "treelattice/spectral.hpp"

namespace tl = treelattice;

namespace {

enum Exit { ok = 0, usage = 2, validation = 3, budget = 4, verify_failed = 5 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string graph;
    std::string class_walk;
    std::string class_word;
    int base_vertex = -1;
    std::string offset_walk;
    int n_max = -1;
    std::uint64_t budget = tl::default_budget;
    std::string s_points = "2.5;3.0;2.5,0.7";
    int truncation = 40;
    int mu_max = 4;
    std::string format;
    std::string out;
    bool serial = false;
};

std::vector<int> parse_ints(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw UsageError("malformed integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<tl::Complex> parse_s_points(const std::string& text) {
    std::vector<tl::Complex> out;
    std::stringstream list(text);
    std::string item;
    while (std::getline(list, item, ';')) {
        if (item.empty()) continue;
        double re = 0.0;
        double im = 0.0;
        char comma = 0;
        std::istringstream in(item);
        if (!(in >> re)) throw UsageError("malformed s-point '" + item + "'");
        if (in >> comma) {
            if (comma != ',' || !(in >> im)) throw UsageError("malformed s-point '" + item + "'");
        }
        out.emplace_back(re, im);
    }
    if (out.empty()) throw UsageError("no s-points given");
    return out;
}

std::string graph_text(const std::string& spec) {
    if (spec.empty()) throw UsageError("--graph is required");
    if (!std::filesystem::exists(spec)) {
        if (auto text = tl::fixtures::by_name(spec)) return std::string(*text);
    }
    std::ifstream in(spec);
    if (!in) throw UsageError("cannot open graph file '" + spec + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Problem {
    tl::RegularGraph g;
    tl::SpanningTree st;
};

Problem load(const RunConfig& cfg) {
    tl::RegularGraph g = tl::parse_graph(graph_text(cfg.graph));
    tl::SpanningTree st = tl::SpanningTree::bfs(g);
    return {std::move(g), std::move(st)};
}

tl::ClassDescriptor class_of(const RunConfig& cfg, const Problem& p) {
    if (!cfg.class_walk.empty() && !cfg.class_word.empty())
        throw UsageError("give only one of --class-walk and --class-word");
    try {
        if (!cfg.class_walk.empty()) {
            const auto vertices = parse_ints(cfg.class_walk);
            return tl::class_of_closed_walk(p.g, tl::walk_from_vertices(p.g, vertices));
        }
        if (!cfg.class_word.empty())
            return tl::class_of_word(p.g, p.st, tl::parse_word(cfg.class_word, p.st.rank()));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("class: ") + e.what());
    }
    throw UsageError("command '" + cfg.command + "' needs --class-walk or --class-word");
}

tl::TreePath basepoint(const RunConfig& cfg, const Problem& p, const tl::ClassDescriptor* k) {
    tl::Vertex v = cfg.base_vertex >= 0 ? cfg.base_vertex : (k ? k->start(p.g) : p.st.base());
    if (v >= p.g.num_vertices()) throw UsageError("--base-vertex out of range");
    tl::TreePath x{p.st.path_from_base(p.g, v)};
    if (!cfg.offset_walk.empty()) {
        const auto vertices = parse_ints(cfg.offset_walk);
        if (vertices.empty() || vertices.front() != v)
            throw UsageError("--offset-walk must start at the base vertex");
        try {
            const tl::Walk w = tl::walk_from_vertices(p.g, vertices);
            x = tl::follow(p.g, x, w.arcs);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("offset walk: ") + e.what());
        }
    }
    return x;
}

int resolve_n_max(const RunConfig& cfg, const tl::RegularGraph& g) {
    return cfg.n_max >= 0 ? cfg.n_max : tl::max_radius_within(g, cfg.budget);
}

tl::CountOptions count_options(const RunConfig& cfg) {
    return {cfg.budget, cfg.serial ? tl::Execution::serial : tl::Execution::parallel};
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out);
    if (!out) throw UsageError("cannot write '" + cfg.out + "'");
    out << text;
}

std::string dump(const tl::Json& j) { return j.dump(2) + "\n"; }

int cmd_validate(const RunConfig& cfg) {
    const tl::EdgeList edges = tl::parse_edge_list(graph_text(cfg.graph));
    const tl::ValidationReport r = tl::validate(edges);
    emit(cfg, dump(tl::versioned("validation", tl::to_json(r))));
    if (!r.acceptable()) {
        std::cerr << "error: validation: " << r.failure_reason() << "\n";
        return validation;
    }
    return ok;
}

int cmd_classes(const RunConfig& cfg) {
    const Problem p = load(cfg);
    if (cfg.mu_max < 1) throw UsageError("--mu-max must be positive");
    const auto classes = tl::enumerate_classes(p.g, cfg.mu_max);
    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "mu,nu,walk\n";
        for (const auto& k : classes) {
            out << k.mu << ',' << k.nu << ',';
            const auto vs = tl::vertices_of_walk(p.g, tl::Walk{k.start(p.g), k.cyclic_walk});
            for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
            out << '\n';
        }
        emit(cfg, out.str());
        return ok;
    }
    tl::Json list = tl::Json::array();
    for (const auto& k : classes) list.push_back(tl::to_json(p.g, k));
    emit(cfg, dump(tl::versioned("classes", {{"mu_max", cfg.mu_max}, {"count", classes.size()}, {"classes", list}})));
    return ok;
}

int cmd_count(const RunConfig& cfg) {
    const Problem p = load(cfg);
    const tl::ClassDescriptor k = class_of(cfg, p);
    const tl::TreePath x = basepoint(cfg, p, &k);
    const tl::CountTable t = tl::count_class(p.g, p.st, k, x, resolve_n_max(cfg, p.g), count_options(cfg));
    emit(cfg, cfg.format == "json" ? dump(tl::versioned("count", tl::to_json(t))) : tl::table_csv(t));
    return ok;
}

int cmd_spectral_check(const RunConfig& cfg) {
    const Problem p = load(cfg);
    const tl::ClassDescriptor k = class_of(cfg, p);
    const tl::TreePath x = basepoint(cfg, p, &k);
    const tl::SpectralData spec = tl::eigendecompose(p.g);
    tl::Json eigen = tl::Json::array();
    for (double l : spec.eigenvalues) eigen.push_back(l);
    tl::Json points = tl::Json::array();
    for (tl::Complex s : parse_s_points(cfg.s_points)) {
        const auto closed = tl::g_closed(p.g, spec, k, tl::projection(p.g, p.st, x), s);
        const auto series = tl::g_series(p.g, p.st, k, x, s, cfg.truncation, count_options(cfg));
        tl::Json coeffs = tl::Json::array();
        for (tl::Complex c : closed.coefficients) coeffs.push_back(tl::to_json(c));
        points.push_back({{"s", tl::to_json(s)},
                          {"closed_form", tl::to_json(closed.value)},
                          {"series", tl::to_json(series.value)},
                          {"tail_bound", series.tail_bound},
                          {"relative_error", (std::abs(closed.value - series.value) + series.tail_bound) /
                                                 std::abs(closed.value)},
                          {"rigorous", series.rigorous},
                          {"near_pole", closed.near_pole},
                          {"count_method", series.count_method},
                          {"fourier_coefficients", coeffs}});
    }
    emit(cfg, dump(tl::versioned("spectral-check", {{"mu", k.mu},
                                                     {"nu", k.nu},
                                                     {"num_vertices", p.g.num_vertices()},
                                                     {"q", p.g.q()},
                                                     {"basepoint", tl::describe_basepoint(p.g, p.st, x)},
                                                     {"truncation", cfg.truncation},
                                                     {"eigenvalues", eigen},
                                                     {"max_residual", spec.max_residual},
                                                     {"points", points}})));
    return ok;
}

tl::Json asymptotics_json(const Problem& p, const tl::ClassDescriptor& k, const tl::CountTable& t) {
    tl::AsymptoticReport r = tl::constants(k, p.g);
    r = tl::convergence_report(t, r);
    tl::Json j = tl::to_json(r);
    if (p.g.is_bipartite()) {
        const auto [lower, upper] = tl::bipartite_bounds(k, p.g);
        j["bipartite_bracket"] = {{"lower", lower}, {"upper", upper}};
    }
    return j;
}

int cmd_asymptotics(const RunConfig& cfg, bool with_table) {
    const Problem p = load(cfg);
    const tl::ClassDescriptor k = class_of(cfg, p);
    const tl::TreePath x = basepoint(cfg, p, &k);
    const tl::CountTable t = tl::count_class(p.g, p.st, k, x, resolve_n_max(cfg, p.g), count_options(cfg));
    tl::Json j = asymptotics_json(p, k, t);
    if (!with_table) {
        emit(cfg, dump(tl::versioned("asymptotics", j)));
        return ok;
    }
    if (cfg.format == "csv") {
        std::ostringstream out;
        out << tl::table_csv(t) << "# " << j.dump() << "\n";
        emit(cfg, out.str());
        return ok;
    }
    emit(cfg, dump(tl::versioned("report", {{"count", tl::to_json(t)}, {"asymptotics", j}})));
    return ok;
}

int cmd_verify(const RunConfig& cfg) {
    const auto results = tl::run_acceptance({cfg.budget, cfg.serial ? tl::Execution::serial : tl::Execution::parallel});
    int failures = 0;
    std::ostringstream out;
    for (const auto& r : results) {
        out << tl::format_result(r) << "\n";
        if (!r.passed) ++failures;
    }
    emit(cfg, out.str());
    if (failures) {
        std::cerr << "error: verify: " << failures << " criteria failed\n";
        return verify_failed;
    }
    return ok;
}

int run(const RunConfig& cfg) {
    if (cfg.command == "validate") return cmd_validate(cfg);
    if (cfg.command == "classes") return cmd_classes(cfg);
    if (cfg.command == "count") return cmd_count(cfg);
    if (cfg.command == "spectral-check") return cmd_spectral_check(cfg);
    if (cfg.command == "asymptotics") return cmd_asymptotics(cfg, false);
    if (cfg.command == "report") return cmd_asymptotics(cfg, true);
    if (cfg.command == "verify") return cmd_verify(cfg);
    throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conjugacy-class lattice point counting on regular trees"};
    RunConfig cfg;
    app.add_option("command", cfg.command, "validate | classes | count | spectral-check | asymptotics | report | verify")
        ->required();
    app.add_option("--graph", cfg.graph, "edge-list file, or one of k4, k5, petersen, k33");
    app.add_option("--class-walk", cfg.class_walk, "closed walk as a vertex list, e.g. \"0 1 2 0\"");
    app.add_option("--class-word", cfg.class_word, "word in the generators, e.g. \"1 -2 3\"");
    app.add_option("--base-vertex", cfg.base_vertex, "quotient vertex of the basepoint (default: class start)");
    app.add_option("--offset-walk", cfg.offset_walk, "walk from the base vertex to the basepoint, as vertices");
    app.add_option("--n-max", cfg.n_max, "largest radius (default: largest within budget)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget", cfg.budget, "tree vertices allowed per enumeration")->check(CLI::PositiveNumber);
    app.add_option("--s", cfg.s_points, "s-points \"RE[,IM][;...]\"");
    app.add_option("--truncation", cfg.truncation, "series truncation radius")->check(CLI::NonNegativeNumber);
    app.add_option("--mu-max", cfg.mu_max, "longest class listed by `classes`");
    app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out, "output file (default: stdout)");
    app.add_flag("--serial", cfg.serial, "disable OpenMP parallel enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return usage;
    }

    try {
        return run(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return usage;
    } catch (const tl::BudgetExceeded& e) {
        std::cerr << "error: budget: " << e.what() << "\n";
        return budget;
    } catch (const tl::ParseError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return validation;
    } catch (const tl::ValidationError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return validation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
