// depnet: equilibrium, bounds, and threshold analysis of a push/pull
// epidemic model with copula-dependent attacks on arbitrary graphs.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "depnet/bounds.hpp"
#include "depnet/dynamics.hpp"
#include "depnet/equilibrium.hpp"
#include "depnet/experiments.hpp"
#include "depnet/graph.hpp"
#include "depnet/thresholds.hpp"

using namespace depnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoConvergence = 2;

struct RunConfig {
    std::optional<double> alpha, beta, gamma;
    std::string outer_text = "independence";
    std::string node_text = "independence";
    std::string graph_source;
    double tol = 1e-10;
    long max_iter = 1000000;
    std::string output;  // file prefix; empty = stdout
    std::optional<std::uint64_t> seed;
    bool full_precision = false;

    int digits() const { return full_precision ? 17 : 6; }

    EpidemicParams params() const {
        if (!alpha || !beta || !gamma)
            throw CLI::ValidationError("alpha, beta and gamma are required (flags or config)");
        return {*alpha, *beta, *gamma};
    }

    DependenceModel model() const;
};

CopulaSpec parse_copula(const std::string& text);

DependenceModel RunConfig::model() const {
    return {parse_copula(outer_text), parse_copula(node_text)};
}

CopulaSpec parse_copula(const std::string& text) {
    const auto colon = text.find(':');
    CopulaSpec spec;
    spec.family = family_from_name(text.substr(0, colon));
    if (colon != std::string::npos) spec.param = std::stod(text.substr(colon + 1));
    validate(spec);
    return spec;
}

std::string copula_text_from_json(const nlohmann::json& j) {
    std::string text = j.at("family").get<std::string>();
    if (j.contains("param") && !j.at("param").is_null())
        text += ":" + std::to_string(j.at("param").get<double>());
    return text;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw CLI::ValidationError("empty number list: " + text);
    return out;
}

Graph resolve_graph(const RunConfig& cfg) {
    const std::string& src = cfg.graph_source;
    if (src.empty()) throw CLI::ValidationError("a graph source is required (--graph or config)");
    const auto colon = src.find(':');
    const std::string kind = src.substr(0, colon);
    auto fields = [&]() {
        std::vector<std::string> out;
        std::stringstream ss(src.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(item);
        return out;
    };
    auto seed_or = [&](const std::vector<std::string>& f, std::size_t idx) -> std::uint64_t {
        if (cfg.seed) return *cfg.seed;
        if (f.size() > idx) return std::stoull(f[idx]);
        throw CLI::ValidationError("graph spec needs a seed (or pass --seed): " + src);
    };
    try {
        if (kind == "star" && colon != std::string::npos) {
            return Graph::star(std::stoi(src.substr(colon + 1)));
        }
        if (kind == "regular" && colon != std::string::npos) {
            const auto f = fields();
            if (f.size() < 2) throw CLI::ValidationError("regular:N,D[,SEED]");
            return Graph::random_regular(std::stoi(f[0]), std::stoi(f[1]), seed_or(f, 2));
        }
        if (kind == "er" && colon != std::string::npos) {
            const auto f = fields();
            if (f.size() < 2) throw CLI::ValidationError("er:N,P[,SEED]");
            return Graph::erdos_renyi(std::stoi(f[0]), std::stod(f[1]), seed_or(f, 2));
        }
        if (kind == "plaw" && colon != std::string::npos) {
            const auto f = fields();
            if (f.size() < 3) throw CLI::ValidationError("plaw:N,M,EXP[,SEED]");
            return Graph::power_law(std::stoi(f[0]), std::stol(f[1]), std::stod(f[2]),
                                    seed_or(f, 3));
        }
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(std::string("bad graph spec: ") + e.what());
    }
    // otherwise treat as an edge-list path
    std::ifstream in(src);
    if (!in) throw CLI::ValidationError("cannot open edge list: " + src);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return Graph::from_edge_list(buffer.str());
}

void load_config(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open config: " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("params")) {
        const auto& p = j["params"];
        if (p.contains("alpha")) cfg.alpha = p["alpha"].get<double>();
        if (p.contains("beta")) cfg.beta = p["beta"].get<double>();
        if (p.contains("gamma")) cfg.gamma = p["gamma"].get<double>();
    }
    if (j.contains("model")) {
        const auto& m = j["model"];
        if (m.contains("outer")) cfg.outer_text = copula_text_from_json(m["outer"]);
        if (m.contains("node")) cfg.node_text = copula_text_from_json(m["node"]);
    }
    if (j.contains("graph_source")) cfg.graph_source = j["graph_source"].get<std::string>();
    if (j.contains("solver")) {
        const auto& s = j["solver"];
        if (s.contains("tol")) cfg.tol = s["tol"].get<double>();
        if (s.contains("max_iter")) cfg.max_iter = s["max_iter"].get<long>();
    }
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
}

void write_or_print(const RunConfig& cfg, const std::string& suffix, const std::string& body) {
    if (cfg.output.empty()) {
        std::cout << body;
        return;
    }
    const std::string path = cfg.output + suffix;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::ValidationError("cannot write " + path);
    out << body;
}

std::string require_prefix(const RunConfig& cfg, const char* cmd) {
    if (cfg.output.empty())
        throw CLI::ValidationError(std::string(cmd) + " writes multiple files; pass --out PREFIX");
    return cfg.output;
}

std::string format_number(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

int cmd_spectral(const RunConfig& cfg) {
    const Graph g = resolve_graph(cfg);
    const SpectralOptions opt{cfg.tol, cfg.max_iter};
    const auto r = spectral_radius(g, opt);
    nlohmann::json j;
    j["n"] = g.node_count();
    j["edges"] = g.edge_count();
    j["degree_min"] = g.node_count() ? *std::min_element(g.degrees().begin(), g.degrees().end()) : 0;
    j["degree_max"] = g.max_degree();
    j["degree_mean"] = g.mean_degree();
    j["rho_A"] = r.value;
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["tol"] = opt.tol;
    const std::string body = j.dump(2) + "\n";
    std::cout << body;
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output + "_spectral.json", std::ios::binary);
        out << body;
    }
    return r.converged ? kExitOk : kExitNoConvergence;
}

StateVector initial_state(const Graph& g, const std::string& init) {
    StateVector s;
    s.i.assign(static_cast<std::size_t>(g.node_count()), 0.0);
    if (init.empty()) return s;
    char* end = nullptr;
    const double value = std::strtod(init.c_str(), &end);
    if (end != nullptr && *end == '\0') {
        s.i.assign(static_cast<std::size_t>(g.node_count()), value);
        return s;
    }
    std::ifstream in(init);
    if (!in) throw CLI::ValidationError("cannot open initial-state csv: " + init);
    std::string line;
    std::size_t next = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.find_first_not_of("0123456789.,+-eE \t\r") != std::string::npos) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            if (next >= s.i.size()) throw CLI::ValidationError("initial-state csv too long");
            s.i[next++] = std::stod(line);
        } else {
            const auto node = static_cast<std::size_t>(std::stoul(line.substr(0, comma)));
            if (node >= s.i.size()) throw CLI::ValidationError("initial-state node out of range");
            s.i[node] = std::stod(line.substr(comma + 1));
        }
    }
    return s;
}

int cmd_simulate(const RunConfig& cfg, long horizon, const std::string& init) {
    const Graph g = resolve_graph(cfg);
    const auto s0 = initial_state(g, init);
    const auto traj = simulate(s0, g, cfg.params(), cfg.model(), horizon);
    write_or_print(cfg, "_trajectory.csv", trajectory_csv(traj, cfg.digits()));
    return kExitOk;
}

int cmd_equilibrium(const RunConfig& cfg) {
    const std::string prefix = require_prefix(cfg, "equilibrium");
    const Graph g = resolve_graph(cfg);
    SolveOptions opt;
    opt.tol = cfg.tol;
    opt.max_iter = cfg.max_iter;
    const auto eq = solve_equilibrium(g, cfg.params(), cfg.model(), opt);
    {
        std::ofstream out(prefix + "_equilibrium.csv", std::ios::binary);
        if (!out) throw CLI::ValidationError("cannot write " + prefix + "_equilibrium.csv");
        out << equilibrium_csv(g, eq.i_star, cfg.digits());
    }
    const auto report = threshold_report(g, cfg.params(), eq.i_star);
    {
        std::ofstream out(prefix + "_threshold.json", std::ios::binary);
        out << threshold_json(report);
    }
    if (!eq.converged) {
        std::cerr << "equilibrium: no convergence after " << eq.iterations
                  << " iterations (residual " << eq.residual << "); partial output written\n";
        return kExitNoConvergence;
    }
    std::cout << "converged in " << eq.iterations << " iterations; residual " << eq.residual
              << (eq.uniqueness_certified ? "; uniqueness certified\n"
                                          : "; uniqueness not certified\n");
    return kExitOk;
}

int cmd_threshold(const RunConfig& cfg) {
    const Graph g = resolve_graph(cfg);
    SolveOptions opt;
    opt.tol = cfg.tol;
    opt.max_iter = cfg.max_iter;
    const auto eq = solve_equilibrium(g, cfg.params(), cfg.model(), opt);
    const auto report = threshold_report(g, cfg.params(), eq.i_star);
    const std::string body = threshold_json(report);
    if (cfg.output.empty())
        std::cout << body;
    else {
        std::ofstream out(cfg.output + "_threshold.json", std::ios::binary);
        out << body;
    }
    return eq.converged ? kExitOk : kExitNoConvergence;
}

int cmd_bounds(const RunConfig& cfg, bool equilibrium_only) {
    const Graph g = resolve_graph(cfg);
    const auto p = cfg.params();
    auto report = general_bounds(g, p);
    // star/regular graphs get the dedicated refinement automatically
    if (g.is_star()) {
        const auto refined = star_bounds(g.node_count(), p);
        for (int v = 0; v < g.node_count(); ++v)
            report.upper[static_cast<std::size_t>(v)] =
                g.degree(v) == g.node_count() - 1 ? *refined.hub_upper : *refined.leaf_upper;
    } else if (const int d = g.regular_degree(); d >= 1) {
        const auto refined = regular_bounds(d, p);
        std::fill(report.upper.begin(), report.upper.end(), refined.upper[0]);
    }
    std::string body;
    if (equilibrium_only) {
        body = bounds_csv(g.degrees(), report.lower, report.upper, nullptr, cfg.digits());
    } else {
        const auto neq = nonequilibrium_bounds(g, p, cfg.model());
        body = bounds_csv(g.degrees(), report.lower, report.upper, &neq, cfg.digits());
    }
    write_or_print(cfg, "_bounds.csv", body);
    return kExitOk;
}

std::vector<CopulaSpec> specs_from_params(CopulaFamily family, const std::vector<double>& params) {
    std::vector<CopulaSpec> out;
    for (double p : params) {
        CopulaSpec s;
        s.family = family;
        s.param = p;
        validate(s);
        out.push_back(s);
    }
    return out;
}

int run_sweep(const RunConfig& cfg, int n, const std::vector<CopulaSpec>& outers,
              const std::vector<CopulaSpec>& nodes, const std::string& suffix) {
    const auto sw = dependence_sweep(n, cfg.params(), outers, nodes, cfg.tol, cfg.max_iter);
    write_or_print(cfg, suffix, sweep_csv(sw, cfg.digits()));
    for (const auto& row : sw.rows)
        if (!row.converged) {
            std::cerr << "sweep: a cell failed to converge\n";
            return kExitNoConvergence;
        }
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, const std::string& outer_params,
              const std::string& node_params) {
    const Graph g = resolve_graph(cfg);
    if (!g.is_star()) throw CLI::ValidationError("sweep expects a star graph (star:N)");
    const auto outer_family =
        family_from_name(cfg.outer_text.substr(0, cfg.outer_text.find(':')));
    const auto node_family = family_from_name(cfg.node_text.substr(0, cfg.node_text.find(':')));
    const auto outers = specs_from_params(outer_family, parse_number_list(outer_params));
    const auto nodes = specs_from_params(node_family, parse_number_list(node_params));
    return run_sweep(cfg, g.node_count(), outers, nodes, "_sweep.csv");
}

int cmd_repro(RunConfig cfg, const std::string& table) {
    // the published comparison grids: star N = 11, gaussian outer over
    // {0.5, 0, -0.5}, clayton node over {1.0, 1.5, ..., 6.0}
    if (table == "table1")
        cfg.alpha = 0.2, cfg.beta = 0.5, cfg.gamma = 0.05;
    else if (table == "table2")
        cfg.alpha = 0.4, cfg.beta = 0.7, cfg.gamma = 0.05;
    else
        throw CLI::ValidationError("unknown table: " + table + " (use table1|table2)");
    std::vector<CopulaSpec> outers{CopulaSpec::gaussian(0.5), CopulaSpec::gaussian(0.0),
                                   CopulaSpec::gaussian(-0.5)};
    std::vector<CopulaSpec> nodes;
    for (double theta = 1.0; theta <= 6.01; theta += 0.5)
        nodes.push_back(CopulaSpec::clayton(theta));
    if (cfg.tol > 1e-12) cfg.tol = 1e-12;
    return run_sweep(cfg, 11, outers, nodes, "_" + table + ".csv");
}

int cmd_approx(const RunConfig& cfg, const std::string& grid_kind) {
    const std::string prefix = require_prefix(cfg, "approx");
    const Graph g = resolve_graph(cfg);

    std::vector<double> alphas, betas, gammas;
    if (grid_kind == "full") {
        alphas = {0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
        betas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
        gammas = {0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1};
    } else if (grid_kind == "desk") {
        // every other value of the full grid
        alphas = {0.01, 0.1, 0.3, 0.5};
        betas = {0.1, 0.3, 0.5, 0.7, 0.9};
        gammas = {0.01, 0.03, 0.05, 0.07, 0.09};
    } else {
        throw CLI::ValidationError("unknown grid: " + grid_kind + " (use desk|full)");
    }
    std::vector<EpidemicParams> grid;
    for (double a : alphas)
        for (double b : betas)
            for (double c : gammas) grid.push_back({a, b, c});

    const auto model = fit_approximation(g, grid, cfg.model(), cfg.tol, cfg.max_iter);
    {
        std::ofstream out(prefix + "_approx.csv", std::ios::binary);
        if (!out) throw CLI::ValidationError("cannot write " + prefix + "_approx.csv");
        out << approx_csv(g, model, cfg.digits());
    }
    {
        std::ofstream out(prefix + "_model.json", std::ios::binary);
        out << approx_model_json(model);
    }
    std::cout << "triples kept " << model.triples_used << "/" << model.triples_total
              << "; err_G " << format_number(model.err_g, 6) << "; upper-bound error "
              << format_number(model.upper_error, 6) << "; lower-bound error "
              << format_number(model.lower_error, 6)
              << (model.degenerate ? "; degenerate regressors dropped\n" : "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"depnet: copula-dependent epidemic equilibria, bounds and thresholds"};
    app.require_subcommand(1);
    // global flags may appear after the subcommand name
    app.fallthrough();

    RunConfig cfg;
    std::string config_path, outer_text, node_text, graph_text;
    std::optional<double> alpha, beta, gamma;
    std::optional<double> tol;
    std::optional<long> max_iter;
    std::optional<std::uint64_t> seed;
    std::string out_prefix;
    bool full_precision = false;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--graph", graph_text,
                   "edge-list path | star:N | regular:N,D[,SEED] | er:N,P[,SEED] | "
                   "plaw:N,M,EXP[,SEED]");
    app.add_option("--alpha", alpha, "pull-infection probability");
    app.add_option("--beta", beta, "cure probability");
    app.add_option("--gamma", gamma, "per-edge push-infection probability");
    app.add_option("--outer", outer_text, "outer 2-copula FAMILY[:PARAM]");
    app.add_option("--node", node_text, "per-node copula FAMILY[:PARAM]");
    app.add_option("--tol", tol, "solver tolerance");
    app.add_option("--max-iter", max_iter, "solver iteration cap");
    app.add_option("--out", out_prefix, "output file prefix");
    app.add_option("--seed", seed, "seed override for graph generators");
    app.add_flag("--full-precision", full_precision, "17 significant digits in CSV output");

    auto* sc_spectral = app.add_subcommand("spectral", "spectral radius and degree summary");
    auto* sc_simulate = app.add_subcommand("simulate", "iterate the mean-field dynamics");
    long horizon = 100;
    std::string init;
    sc_simulate->add_option("--horizon", horizon, "number of steps");
    sc_simulate->add_option("--init", init, "uniform initial value or per-node CSV path");
    auto* sc_equilibrium =
        app.add_subcommand("equilibrium", "solve the equilibrium system (CSV + threshold JSON)");
    auto* sc_bounds = app.add_subcommand("bounds", "closed-form bounds (auto star/regular)");
    bool equilibrium_only = false;
    sc_bounds->add_flag("--equilibrium-only", equilibrium_only,
                        "omit the non-equilibrium columns");
    auto* sc_threshold = app.add_subcommand("threshold", "threshold report JSON");
    auto* sc_sweep = app.add_subcommand("sweep", "dependence-parameter sweep on a star");
    std::string outer_params, node_params;
    sc_sweep->add_option("--outer-params", outer_params, "comma list of outer copula parameters")
        ->required();
    sc_sweep->add_option("--node-params", node_params, "comma list of node copula parameters")
        ->required();
    auto* sc_repro = app.add_subcommand("repro", "reproduce a published comparison grid");
    std::string table;
    sc_repro->add_option("table", table, "table1 | table2")->required();
    auto* sc_approx = app.add_subcommand("approx", "bound-based approximation pipeline");
    std::string grid_kind = "desk";
    sc_approx->add_option("--grid", grid_kind, "desk | full");

    try {
        app.parse(argc, argv);

        if (!config_path.empty()) load_config(cfg, config_path);
        if (!graph_text.empty()) cfg.graph_source = graph_text;
        if (alpha) cfg.alpha = *alpha;
        if (beta) cfg.beta = *beta;
        if (gamma) cfg.gamma = *gamma;
        if (!outer_text.empty()) cfg.outer_text = outer_text;
        if (!node_text.empty()) cfg.node_text = node_text;
        if (tol) cfg.tol = *tol;
        if (max_iter) cfg.max_iter = *max_iter;
        if (!out_prefix.empty()) cfg.output = out_prefix;
        if (seed) cfg.seed = *seed;
        cfg.full_precision = full_precision;
        if (cfg.tol <= 0 || cfg.max_iter < 1)
            throw CLI::ValidationError("tol must be > 0 and max-iter >= 1");

        if (sc_spectral->parsed()) return cmd_spectral(cfg);
        if (sc_simulate->parsed()) return cmd_simulate(cfg, horizon, init);
        if (sc_equilibrium->parsed()) return cmd_equilibrium(cfg);
        if (sc_bounds->parsed()) return cmd_bounds(cfg, equilibrium_only);
        if (sc_threshold->parsed()) return cmd_threshold(cfg);
        if (sc_sweep->parsed()) return cmd_sweep(cfg, outer_params, node_params);
        if (sc_repro->parsed()) return cmd_repro(cfg, table);
        if (sc_approx->parsed()) return cmd_approx(cfg, grid_kind);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    }
}
