#pragma once

#include <span>
#include <string>
#include <vector>

#include "depnet/copula.hpp"
#include "depnet/graph.hpp"

namespace depnet {

/// Per-step probabilities: alpha pull-based infection, beta cure, gamma
/// per-edge push-based infection.
struct EpidemicParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

void validate(const EpidemicParams& p);

/// The outer 2-copula (push vs. pull attacks) and the per-node copula family
/// applied at dimension deg(v) (between push attacks).
struct DependenceModel {
    CopulaSpec outer;
    CopulaSpec node;
};

/// Checks that `outer` is evaluable at dimension 2 and `node` at every degree
/// present in the graph (degrees 0 and 1 need no copula; see attack_survival).
void validate_for_graph(const DependenceModel& m, const Graph& g);

/// Per-node infection probabilities at one time step.
struct StateVector {
    std::vector<double> i;
    long t = 0;
};

void validate(const StateVector& s, const Graph& g);

/// C(C_v(args), 1 - alpha): the probability that no attack on v succeeds,
/// given per-neighbor survival arguments. C_v over zero arguments is 1 (no
/// push attack); over one argument it is the identity (1-copula).
double attack_survival(const DependenceModel& m, std::span<const double> args, double alpha);

/// Diagonal counterpart: C(delta_{C_v}(x), 1 - alpha) at dimension deg.
double attack_survival_diag(const DependenceModel& m, double x, int deg, double alpha);

/// One synchronous sweep of the mean-field map:
/// i_v(t+1) = (1-beta) i_v(t) + [1 - C(C_v(1-gamma i_{u1}, ...), 1-alpha)] (1 - i_v(t)),
/// neighbors taken in ascending id order.
StateVector step(const StateVector& s, const Graph& g, const EpidemicParams& p,
                 const DependenceModel& m);

/// Trajectory of length horizon+1 with trajectory[0] = s0.
std::vector<StateVector> simulate(const StateVector& s0, const Graph& g, const EpidemicParams& p,
                                  const DependenceModel& m, long horizon);

/// CSV with header "t,node,i", one row per (t, node).
std::string trajectory_csv(const std::vector<StateVector>& trajectory, int digits = 6);

}  // namespace depnet
