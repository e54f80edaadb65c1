#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "depnet/dynamics.hpp"
#include "depnet/graph.hpp"

namespace depnet {

struct Condition6 {
    bool holds = false;
    double rho_A = 0.0;
    double rhs = 0.0;  // (beta+alpha)^2 / (gamma*beta); +inf when gamma = 0
    double margin = 0.0;
};

/// Contraction/uniqueness condition rho(A) < (beta+alpha)^2/(gamma*beta)
/// (strict, as printed). gamma = 0 holds trivially with rhs = +inf.
Condition6 condition6(const Graph& g, const EpidemicParams& p);

/// h(alpha, beta, gamma, i_v*) = |1 - beta/(1 - i_v*)| per node; requires
/// every entry of i_star to be below 1.
std::vector<double> h_values(const EpidemicParams& p, std::span<const double> i_star);

/// Spectral radius of W = D + gamma*A with D = diag(h values).
double rho_w(const Graph& g, const EpidemicParams& p, std::span<const double> i_star);

struct TauResult {
    double tau = 0.0;
    bool cond8_holds = false;  // rho(A) <= tau (non-strict, as printed)
    double rho_A = 0.0;
};

/// tau = min{ (1 - max_v h_v)/gamma, (beta+alpha)^2/(gamma*beta) };
/// requires gamma > 0 and i_star entries below 1.
TauResult tau(const Graph& g, const EpidemicParams& p, std::span<const double> i_star);

struct Theorem2 {
    bool holds = false;
    double rhs = 0.0;
    double rho_A = 0.0;
    bool applicable = true;  // false if a bound reaches 1
};

/// Bound-only threshold: rhs built from the dependence-free equilibrium
/// bounds alone, holds = [rho(A) <= rhs]. Never larger than tau.
Theorem2 theorem2_threshold(const Graph& g, const EpidemicParams& p);

struct ThresholdReport {
    double rho_A = 0.0;
    double cond6_rhs = 0.0;
    bool cond6_holds = false;
    std::optional<double> rho_W;
    std::optional<double> tau;
    bool cond8_holds = false;
    double thm2_rhs = 0.0;
    bool thm2_holds = false;
    std::vector<double> h_values;
};

/// Combined report; the i*-dependent entries stay empty when i_star is not
/// supplied or gamma = 0 makes tau undefined.
ThresholdReport threshold_report(const Graph& g, const EpidemicParams& p,
                                 std::span<const double> i_star = {});

/// JSON object with keys rho_A, cond6_rhs, cond6_holds, rho_W, tau,
/// cond8_holds, thm2_rhs, thm2_holds (null for unavailable values).
std::string threshold_json(const ThresholdReport& r);

}  // namespace depnet
