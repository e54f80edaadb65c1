#include "depnet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace depnet {

void validate(const EpidemicParams& p) {
    for (double v : {p.alpha, p.beta, p.gamma})
        if (std::isnan(v) || v < 0.0 || v > 1.0)
            throw std::invalid_argument("epidemic parameters must lie in [0, 1]");
}

void validate_for_graph(const DependenceModel& m, const Graph& g) {
    validate(m.outer);
    validate(m.node);
    if (!supports_dimension(m.outer, 2))
        throw std::invalid_argument("outer copula must be evaluable at dimension 2");
    for (int v = 0; v < g.node_count(); ++v) {
        const int d = g.degree(v);
        if (d >= 2 && !supports_dimension(m.node, d))
            throw std::invalid_argument("node copula does not support degree " +
                                        std::to_string(d));
    }
}

void validate(const StateVector& s, const Graph& g) {
    if (static_cast<int>(s.i.size()) != g.node_count())
        throw std::invalid_argument("state length does not match node count");
    for (double v : s.i)
        if (std::isnan(v) || v < 0.0 || v > 1.0)
            throw std::invalid_argument("state entries must lie in [0, 1]");
}

double attack_survival(const DependenceModel& m, std::span<const double> args, double alpha) {
    double inner;
    if (args.empty())
        inner = 1.0;
    else if (args.size() == 1)
        inner = args[0];
    else
        inner = eval(m.node, args);
    const double outer_args[2] = {inner, 1.0 - alpha};
    return eval(m.outer, outer_args);
}

double attack_survival_diag(const DependenceModel& m, double x, int deg, double alpha) {
    double inner;
    if (deg <= 0)
        inner = 1.0;
    else if (deg == 1)
        inner = x;
    else
        inner = diagonal(m.node, x, deg);
    const double outer_args[2] = {inner, 1.0 - alpha};
    return eval(m.outer, outer_args);
}

StateVector step(const StateVector& s, const Graph& g, const EpidemicParams& p,
                 const DependenceModel& m) {
    validate(p);
    validate(s, g);
    validate_for_graph(m, g);

    StateVector out;
    out.t = s.t + 1;
    out.i.resize(s.i.size());
    std::vector<double> args;
    args.reserve(static_cast<std::size_t>(g.max_degree()));
    for (int v = 0; v < g.node_count(); ++v) {
        args.clear();
        for (int u : g.neighbors(v)) args.push_back(1.0 - p.gamma * s.i[static_cast<std::size_t>(u)]);
        const double survive = attack_survival(m, args, p.alpha);
        const double iv = s.i[static_cast<std::size_t>(v)];
        const double next = (1.0 - p.beta) * iv + (1.0 - survive) * (1.0 - iv);
        if (next < -1e-12 || next > 1.0 + 1e-12)
            throw std::runtime_error("step: update left [0, 1] beyond rounding");
        out.i[static_cast<std::size_t>(v)] = std::clamp(next, 0.0, 1.0);
    }
    return out;
}

std::vector<StateVector> simulate(const StateVector& s0, const Graph& g, const EpidemicParams& p,
                                  const DependenceModel& m, long horizon) {
    if (horizon < 0) throw std::invalid_argument("simulate: horizon must be >= 0");
    std::vector<StateVector> traj;
    traj.reserve(static_cast<std::size_t>(horizon) + 1);
    traj.push_back(s0);
    for (long t = 0; t < horizon; ++t) traj.push_back(step(traj.back(), g, p, m));
    return traj;
}

std::string trajectory_csv(const std::vector<StateVector>& trajectory, int digits) {
    std::string out = "t,node,i\n";
    char buf[64];
    for (const auto& s : trajectory) {
        for (std::size_t v = 0; v < s.i.size(); ++v) {
            std::snprintf(buf, sizeof buf, "%ld,%zu,%.*g\n", s.t, v, digits, s.i[v]);
            out += buf;
        }
    }
    return out;
}

}  // namespace depnet
