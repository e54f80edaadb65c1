#include "depnet/equilibrium.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace depnet {

namespace {

double picard_value(double survive, double beta) {
    return (1.0 - survive) / (beta + 1.0 - survive);
}

}  // namespace

EquilibriumResult solve_equilibrium(const Graph& g, const EpidemicParams& p,
                                    const DependenceModel& m, const SolveOptions& opt) {
    validate(p);
    if (p.beta <= 0.0) throw std::invalid_argument("solve_equilibrium requires beta > 0");
    validate_for_graph(m, g);
    if (opt.tol <= 0.0 || opt.max_iter < 1)
        throw std::invalid_argument("solve_equilibrium: bad solver options");

    const int n = g.node_count();
    EquilibriumResult res;
    const auto spectral = spectral_radius(g);
    res.rho_A = spectral.value;
    res.uniqueness_certified =
        p.gamma == 0.0 ||
        spectral.value < (p.beta + p.alpha) * (p.beta + p.alpha) / (p.gamma * p.beta);

    std::vector<double> x(static_cast<std::size_t>(n), p.alpha / (p.alpha + p.beta));
    std::vector<double> fx(static_cast<std::size_t>(n));
    std::vector<double> args;
    args.reserve(static_cast<std::size_t>(g.max_degree()));

    double damping = 1.0;
    int growth_streak = 0;
    double prev_defect = std::numeric_limits<double>::infinity();

    for (long it = 1; it <= opt.max_iter; ++it) {
        double defect = 0.0;
        for (int v = 0; v < n; ++v) {
            args.clear();
            for (int u : g.neighbors(v))
                args.push_back(1.0 - p.gamma * x[static_cast<std::size_t>(u)]);
            const double survive = attack_survival(m, args, p.alpha);
            fx[static_cast<std::size_t>(v)] = picard_value(survive, p.beta);
            defect = std::max(defect, std::fabs(fx[static_cast<std::size_t>(v)] -
                                                x[static_cast<std::size_t>(v)]));
        }
        res.iterations = it;
        res.residual = defect;
        if (opt.record_residuals) res.residual_history.push_back(defect);

        if (defect > prev_defect) {
            if (++growth_streak >= 2) damping = 0.5;
        } else {
            growth_streak = 0;
        }
        prev_defect = defect;

        if (damping == 1.0) {
            x.swap(fx);
        } else {
            for (int v = 0; v < n; ++v)
                x[static_cast<std::size_t>(v)] += damping * (fx[static_cast<std::size_t>(v)] -
                                                             x[static_cast<std::size_t>(v)]);
        }
        if (defect < opt.tol) {
            res.converged = true;
            break;
        }
    }
    res.i_star = std::move(x);
    return res;
}

StarEquilibrium solve_star(int n, const EpidemicParams& p, const DependenceModel& m,
                           double tol, long max_iter) {
    if (n < 2) throw std::invalid_argument("solve_star: need n >= 2");
    validate(p);
    if (p.beta <= 0.0) throw std::invalid_argument("solve_star requires beta > 0");
    validate(m.outer);
    validate(m.node);
    if (!supports_dimension(m.outer, 2))
        throw std::invalid_argument("outer copula must be evaluable at dimension 2");
    if (n - 1 >= 2 && !supports_dimension(m.node, n - 1))
        throw std::invalid_argument("node copula does not support the hub degree");

    StarEquilibrium res;
    double h = p.alpha / (p.alpha + p.beta);
    double l = h;
    for (long it = 1; it <= max_iter; ++it) {
        const double survive_h = attack_survival_diag(m, 1.0 - p.gamma * l, n - 1, p.alpha);
        const double survive_l = attack_survival_diag(m, 1.0 - p.gamma * h, 1, p.alpha);
        const double h_next = picard_value(survive_h, p.beta);
        const double l_next = picard_value(survive_l, p.beta);
        const double defect = std::max(std::fabs(h_next - h), std::fabs(l_next - l));
        h = h_next;
        l = l_next;
        res.iterations = it;
        res.residual = defect;
        if (defect < tol) {
            res.converged = true;
            break;
        }
    }
    res.i_hub = h;
    res.i_leaf = l;
    return res;
}

std::string equilibrium_csv(const Graph& g, const std::vector<double>& i_star, int digits) {
    if (static_cast<int>(i_star.size()) != g.node_count())
        throw std::invalid_argument("equilibrium_csv: length mismatch");
    std::string out = "node,degree,i_star\n";
    char buf[96];
    for (int v = 0; v < g.node_count(); ++v) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.*g\n", v, g.degree(v), digits,
                      i_star[static_cast<std::size_t>(v)]);
        out += buf;
    }
    return out;
}

}  // namespace depnet
