#include "depnet/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace depnet {

namespace {

void require_beta_positive(const EpidemicParams& p) {
    validate(p);
    if (p.beta <= 0.0) throw std::invalid_argument("bounds require beta > 0");
}

double lower_bound(const EpidemicParams& p) {
    if (p.gamma > p.alpha + p.beta) return (p.gamma - p.beta) / p.gamma;
    return p.alpha / (p.beta + p.alpha);
}

double general_upper(const EpidemicParams& p, int deg) {
    const double m = std::min(p.alpha + p.gamma * deg / (p.beta + 1.0), 1.0);
    return m / (p.beta + m);
}

// Positive root of gd*x^2 + (alpha+beta-gd)*x - alpha = 0, in the
// cancellation-free form when the linear coefficient dominates.
double positive_root(double gd, double alpha, double beta) {
    const double b = alpha + beta - gd;
    const double disc = std::sqrt(b * b + 4.0 * gd * alpha);
    if (b > 0.0) return 2.0 * alpha / (b + disc);
    return (disc - b) / (2.0 * gd);
}

// Refined upper bound shared by the star hub/leaf and regular cases:
// 1/(beta+1) when 1/(beta+1) >= (1-alpha)/gd, else the quadratic root.
// gd = 0 collapses to alpha/(alpha+beta) by continuity.
double refined_upper(double gd, const EpidemicParams& p) {
    if (gd == 0.0) return p.alpha / (p.beta + p.alpha);
    if (1.0 / (p.beta + 1.0) >= (1.0 - p.alpha) / gd) return 1.0 / (p.beta + 1.0);
    return positive_root(gd, p.alpha, p.beta);
}

}  // namespace

BoundsReport general_bounds(const Graph& g, const EpidemicParams& p) {
    require_beta_positive(p);
    BoundsReport r;
    r.kind = BoundsKind::general;
    r.lower = lower_bound(p);
    r.upper.reserve(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) r.upper.push_back(general_upper(p, g.degree(v)));
    return r;
}

BoundsReport star_bounds(int n, const EpidemicParams& p) {
    if (n < 2) throw std::invalid_argument("star_bounds: need n >= 2");
    require_beta_positive(p);
    BoundsReport r;
    r.kind = BoundsKind::star;
    r.lower = lower_bound(p);
    r.hub_upper = refined_upper((n - 1) * p.gamma, p);
    // Leaf bound: push the hub bound through the leaf update. The
    // self-consistent closed form (the gamma-quadratic fixed point) is NOT a
    // valid upper bound once the hub probability exceeds it, which strong
    // dependence readily produces; the substitution form is envelope-safe and
    // still at most the degree-1 general bound.
    {
        const double m = std::min(p.alpha + p.gamma * *r.hub_upper, 1.0);
        r.leaf_upper = m / (p.beta + m);
    }
    r.upper.assign(static_cast<std::size_t>(n), *r.leaf_upper);
    r.upper[0] = *r.hub_upper;
    return r;
}

BoundsReport regular_bounds(int d, const EpidemicParams& p) {
    if (d < 1) throw std::invalid_argument("regular_bounds: need d >= 1");
    require_beta_positive(p);
    BoundsReport r;
    r.kind = BoundsKind::regular;
    r.lower = lower_bound(p);
    r.upper.assign(1, refined_upper(d * p.gamma, p));
    return r;
}

BoundsReport nonequilibrium_bounds(const Graph& g, const EpidemicParams& p,
                                   const DependenceModel& m) {
    require_beta_positive(p);
    validate_for_graph(m, g);
    const int n = g.node_count();

    BoundsReport r;
    r.kind = BoundsKind::nonequilibrium;
    r.lower = lower_bound(p);
    r.upper.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) r.upper.push_back(general_upper(p, g.degree(v)));

    const double nu = std::min(1.0 - p.beta, p.alpha);
    r.nu = nu;
    r.mu.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        r.mu[static_cast<std::size_t>(v)] =
            std::max(1.0 - p.beta, std::min(p.gamma * g.degree(v) + p.alpha, 1.0));

    r.neq_lower.resize(static_cast<std::size_t>(n));
    r.neq_upper.resize(static_cast<std::size_t>(n));
    std::vector<double> args;
    args.reserve(static_cast<std::size_t>(g.max_degree()));
    for (int v = 0; v < n; ++v) {
        const double mu_v = r.mu[static_cast<std::size_t>(v)];
        const double lo_c = attack_survival_diag(m, 1.0 - p.gamma * nu, g.degree(v), p.alpha);
        // Branch boundary uses the first branch; the two expressions coincide
        // exactly at lo_c = beta.
        double neq_lo;
        if (lo_c >= p.beta)
            neq_lo = (1.0 - lo_c) / (p.beta + 1.0 - lo_c);
        else
            neq_lo = (p.beta - lo_c) * (1.0 - mu_v) + 1.0 - p.beta;
        r.neq_lower[static_cast<std::size_t>(v)] = neq_lo;

        args.clear();
        for (int u : g.neighbors(v))
            args.push_back(1.0 - p.gamma * r.mu[static_cast<std::size_t>(u)]);
        const double hi_c = attack_survival(m, args, p.alpha);
        double neq_hi;
        if (hi_c >= p.beta)
            neq_hi = (1.0 - hi_c) / (p.beta + 1.0 - hi_c);
        else
            neq_hi = (p.beta - hi_c) * (1.0 - neq_lo) + 1.0 - p.beta;
        r.neq_upper[static_cast<std::size_t>(v)] = neq_hi;
    }
    return r;
}

std::string bounds_csv(const std::vector<int>& degrees, double lower,
                       std::span<const double> upper, const BoundsReport* neq, int digits) {
    std::string out = "node,degree,lower,upper,neq_lower,neq_upper\n";
    char buf[160];
    for (std::size_t v = 0; v < degrees.size(); ++v) {
        const double up = upper.size() == 1 ? upper[0] : upper[v];
        if (neq != nullptr) {
            std::snprintf(buf, sizeof buf, "%zu,%d,%.*g,%.*g,%.*g,%.*g\n", v, degrees[v], digits,
                          lower, digits, up, digits, neq->neq_lower[v], digits, neq->neq_upper[v]);
        } else {
            std::snprintf(buf, sizeof buf, "%zu,%d,%.*g,%.*g,,\n", v, degrees[v], digits, lower,
                          digits, up);
        }
        out += buf;
    }
    return out;
}

}  // namespace depnet
