#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depnet/dynamics.hpp"
#include "depnet/equilibrium.hpp"
#include "depnet/graph.hpp"

namespace depnet {

struct SweepRow {
    double node_param = 0.0;   // NaN for parameterless families
    double outer_param = 0.0;  // NaN for parameterless families
    double i_h = 0.0;
    double i_l = 0.0;
    double tau = 0.0;
    bool converged = false;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // node-param major, outer-param minor
    EpidemicParams params;
    int n = 0;
};

/// Star-network sweep over a grid of (node copula, outer copula) cells:
/// solves the two-dimensional star equilibrium and evaluates tau per cell.
/// Cells run in parallel (capped by DEPNET_THREADS); row order is fixed.
SweepResult dependence_sweep(int n, const EpidemicParams& p,
                             const std::vector<CopulaSpec>& outers,
                             const std::vector<CopulaSpec>& nodes, double tol = 1e-12,
                             long max_iter = 1000000);

/// CSV with header "node_param,outer_param,i_h,i_l,tau".
std::string sweep_csv(const SweepResult& r, int digits = 6);

struct Condition18 {
    bool holds = false;
    double min_value = 0.0;  // min_v C(delta_{C_v}(1 - gamma*mu), 1 - alpha)
    double mu = 0.0;         // max{1 - beta, min{alpha + gamma*Deg, 1}}
};

/// Trajectory-ordering side condition: min_v C(delta_{C_v}(1-gamma*mu), 1-alpha) >= beta.
Condition18 condition18(const Graph& g, const EpidemicParams& p, const DependenceModel& m);

/// Sampled falsification check of the pointwise ordering
/// C(C_v(u), u0) <= C'(C'_v(u), u0): a deterministic grid with grid_points per
/// axis when affordable, otherwise `budget` Halton points. Not a proof.
bool condition16_sampled(const Graph& g, const DependenceModel& m, const DependenceModel& m2,
                         int grid_points = 9, int budget = 2000);

struct DominanceReport {
    bool cond16_sampled = false;
    bool cond18 = false;
    bool dominated = false;
    std::optional<std::pair<long, int>> first_violation;  // (t, node)
};

/// Simulates both dependence groups from the same initial state and checks
/// i(t) >= i'(t) - 1e-12 componentwise up to the horizon, alongside the
/// sampled condition (16) and exact condition (18) for the first group.
DominanceReport dominance_check(const Graph& g, const EpidemicParams& p,
                                const DependenceModel& m, const DependenceModel& m2,
                                const StateVector& i0, long horizon, int grid_points = 9);

/// Pooled least-squares approximation of equilibrium probabilities from the
/// dependence-free bounds: i~_v = k0 + k1*lower + k2*upper_v + k3*deg(v),
/// i^_v = (i~_v + upper_v)/2, fitted over the grid triples that pass the
/// post-solve spectral condition.
struct ApproxModel {
    double k0 = 0.0, k1 = 0.0, k2 = 0.0, k3 = 0.0;
    std::array<bool, 4> dropped{};  // rank-deficient regressors dropped
    bool degenerate = false;
    double err_g = 0.0;        // mean over triples of sum_v (i^_v - i_v*)
    double upper_error = 0.0;  // mean over triples of sum_v (upper_v - i_v*)
    double lower_error = 0.0;  // mean over triples of sum_v (lower - i_v*)
    int triples_used = 0;
    int triples_total = 0;
    // Per-node means across the surviving triples.
    std::vector<double> mean_i_star, mean_lower, mean_upper, mean_i_tilde, mean_i_hat;
};

ApproxModel fit_approximation(const Graph& g, const std::vector<EpidemicParams>& grid,
                              const DependenceModel& m, double tol = 1e-10,
                              long max_iter = 1000000);

/// The pooled-regression solver behind fit_approximation: ordinary least
/// squares on four columns via modified Gram-Schmidt. Collinear columns are
/// dropped (coefficient zero) and flagged.
struct LinearFit4 {
    std::array<double, 4> coef{};
    std::array<bool, 4> dropped{};
};

LinearFit4 least_squares4(const std::array<std::vector<double>, 4>& columns,
                          const std::vector<double>& response);

/// CSV with header "node,degree,i_star,lower,upper,i_tilde,i_hat".
std::string approx_csv(const Graph& g, const ApproxModel& model, int digits = 6);

/// JSON object {"k0", "k1", "k2", "k3", "err_G"}.
std::string approx_model_json(const ApproxModel& model);

/// Worker count for experiment cells: DEPNET_THREADS when set, otherwise the
/// hardware concurrency.
int experiment_threads();

}  // namespace depnet
