#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "depnet/dynamics.hpp"
#include "depnet/graph.hpp"

namespace depnet {

enum class BoundsKind { general, star, regular, nonequilibrium };

/// Closed-form bounds on infection probabilities. `lower` is the global
/// equilibrium lower bound; `upper` the per-node equilibrium upper bounds
/// (a single entry for the regular-network refinement). Non-equilibrium
/// reports carry the per-node liminf/limsup bounds and their auxiliaries.
struct BoundsReport {
    BoundsKind kind = BoundsKind::general;
    double lower = 0.0;
    std::vector<double> upper;

    std::optional<double> hub_upper;   // star refinement
    std::optional<double> leaf_upper;  // star refinement

    std::vector<double> neq_lower;  // i_v^-
    std::vector<double> neq_upper;  // i_v^+
    std::vector<double> mu;         // mu_v
    std::optional<double> nu;
};

/// Dependence-free equilibrium bounds:
/// lower = (gamma-beta)/gamma if gamma > alpha+beta else alpha/(alpha+beta);
/// upper_v = M/(beta+M) with M = min{alpha + gamma*deg(v)/(beta+1), 1}.
BoundsReport general_bounds(const Graph& g, const EpidemicParams& p);

/// Star refinement. The hub bound is the indicator-plus-quadratic fixed
/// point; the leaf bound substitutes the hub bound into the leaf update,
/// which keeps it valid for every dependence structure (the self-consistent
/// quadratic form for the leaf fails once the hub probability exceeds it).
/// gamma = 0 collapses to alpha/(alpha+beta) by continuity. upper[0] is the
/// hub, the remaining n-1 entries the leaves.
BoundsReport star_bounds(int n, const EpidemicParams& p);

/// Regular-network refinement for common degree d >= 1; upper has one entry.
BoundsReport regular_bounds(int d, const EpidemicParams& p);

/// Bounds on liminf/limsup of i_v(t) regardless of convergence, via the
/// auxiliaries nu = min{1-beta, alpha} and
/// mu_v = max{1-beta, min{gamma*deg(v)+alpha, 1}}. The equilibrium fields are
/// also populated for convenience.
BoundsReport nonequilibrium_bounds(const Graph& g, const EpidemicParams& p,
                                   const DependenceModel& m);

/// CSV "node,degree,lower,upper,neq_lower,neq_upper"; the neq columns stay
/// empty when no non-equilibrium report is supplied.
std::string bounds_csv(const std::vector<int>& degrees, double lower,
                       std::span<const double> upper, const BoundsReport* neq = nullptr,
                       int digits = 6);

}  // namespace depnet
