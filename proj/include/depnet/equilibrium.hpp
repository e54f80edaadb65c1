#pragma once

#include <string>
#include <vector>

#include "depnet/dynamics.hpp"
#include "depnet/graph.hpp"

namespace depnet {

struct SolveOptions {
    double tol = 1e-12;
    long max_iter = 1000000;
    bool record_residuals = false;
};

struct EquilibriumResult {
    std::vector<double> i_star;
    long iterations = 0;
    double residual = 0.0;                // max-norm of the last Picard defect
    bool uniqueness_certified = false;    // rho(A) < (beta+alpha)^2 / (gamma*beta)
    bool converged = false;
    double rho_A = 0.0;
    std::vector<double> residual_history;  // populated when record_residuals
};

/// Picard iteration of f_v(x) = [1 - K_v(x)] / [beta + 1 - K_v(x)] with
/// K_v(x) = C(C_v(1 - gamma x_{u1}, ...), 1 - alpha), started at
/// alpha/(alpha+beta) everywhere. Plain fixed-point steps; a damping factor
/// of 0.5 engages only after the defect grows twice in a row (uncertified
/// regimes). Non-convergence is reported via converged = false, not thrown.
EquilibriumResult solve_equilibrium(const Graph& g, const EpidemicParams& p,
                                    const DependenceModel& m, const SolveOptions& opt = {});

struct StarEquilibrium {
    double i_hub = 0.0;
    double i_leaf = 0.0;
    long iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

/// Two-dimensional star specialization: the hub couples to the leaves through
/// the diagonal section of the node copula at dimension n-1, each leaf to the
/// hub through the outer 2-copula alone.
StarEquilibrium solve_star(int n, const EpidemicParams& p, const DependenceModel& m,
                           double tol = 1e-12, long max_iter = 1000000);

/// CSV with header "node,degree,i_star".
std::string equilibrium_csv(const Graph& g, const std::vector<double>& i_star, int digits = 6);

}  // namespace depnet
