#include "depnet/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "depnet/bounds.hpp"

namespace depnet {

Condition6 condition6(const Graph& g, const EpidemicParams& p) {
    validate(p);
    if (p.beta <= 0.0) throw std::invalid_argument("condition6 requires beta > 0");
    Condition6 c;
    c.rho_A = spectral_radius(g).value;
    if (p.gamma == 0.0) {
        c.rhs = std::numeric_limits<double>::infinity();
        c.holds = true;
    } else {
        c.rhs = (p.beta + p.alpha) * (p.beta + p.alpha) / (p.gamma * p.beta);
        c.holds = c.rho_A < c.rhs;
    }
    c.margin = c.rhs - c.rho_A;
    return c;
}

std::vector<double> h_values(const EpidemicParams& p, std::span<const double> i_star) {
    std::vector<double> h(i_star.size());
    for (std::size_t v = 0; v < i_star.size(); ++v) {
        if (!(i_star[v] < 1.0))
            throw std::domain_error("h undefined: equilibrium probability reaches 1");
        h[v] = std::fabs(1.0 - p.beta / (1.0 - i_star[v]));
    }
    return h;
}

double rho_w(const Graph& g, const EpidemicParams& p, std::span<const double> i_star) {
    validate(p);
    if (static_cast<int>(i_star.size()) != g.node_count())
        throw std::invalid_argument("rho_w: i_star length mismatch");
    const auto h = h_values(p, i_star);
    return spectral_radius_shifted_matrix(g, h, p.gamma).value;
}

TauResult tau(const Graph& g, const EpidemicParams& p, std::span<const double> i_star) {
    validate(p);
    if (p.gamma <= 0.0) throw std::invalid_argument("tau requires gamma > 0");
    if (p.beta <= 0.0) throw std::invalid_argument("tau requires beta > 0");
    if (static_cast<int>(i_star.size()) != g.node_count())
        throw std::invalid_argument("tau: i_star length mismatch");
    const auto h = h_values(p, i_star);
    const double h_max = h.empty() ? 0.0 : *std::max_element(h.begin(), h.end());
    TauResult t;
    t.rho_A = spectral_radius(g).value;
    t.tau = std::min((1.0 - h_max) / p.gamma,
                     (p.beta + p.alpha) * (p.beta + p.alpha) / (p.gamma * p.beta));
    t.cond8_holds = t.rho_A <= t.tau;
    return t;
}

Theorem2 theorem2_threshold(const Graph& g, const EpidemicParams& p) {
    validate(p);
    if (p.beta <= 0.0 || p.gamma <= 0.0)
        throw std::invalid_argument("theorem2_threshold requires beta > 0 and gamma > 0");
    Theorem2 t;
    t.rho_A = spectral_radius(g).value;
    const auto b = general_bounds(g, p);
    if (!(b.lower < 1.0)) {
        t.applicable = false;
        return t;
    }
    const double h_low = std::fabs(1.0 - p.beta / (1.0 - b.lower));
    double h_max = 0.0;
    for (double up : b.upper) {
        if (!(up < 1.0)) {
            t.applicable = false;
            return t;
        }
        h_max = std::max(h_max, std::max(h_low, std::fabs(1.0 - p.beta / (1.0 - up))));
    }
    t.rhs = (1.0 - h_max) / p.gamma;
    t.holds = t.rho_A <= t.rhs;
    return t;
}

ThresholdReport threshold_report(const Graph& g, const EpidemicParams& p,
                                 std::span<const double> i_star) {
    ThresholdReport r;
    const auto c6 = condition6(g, p);
    r.rho_A = c6.rho_A;
    r.cond6_rhs = c6.rhs;
    r.cond6_holds = c6.holds;
    if (!i_star.empty()) {
        r.h_values = h_values(p, i_star);
        r.rho_W = rho_w(g, p, i_star);
        if (p.gamma > 0.0) {
            const auto t = tau(g, p, i_star);
            r.tau = t.tau;
            r.cond8_holds = t.cond8_holds;
        }
    }
    if (p.gamma > 0.0) {
        const auto t2 = theorem2_threshold(g, p);
        r.thm2_rhs = t2.rhs;
        r.thm2_holds = t2.holds;
    } else {
        r.thm2_rhs = std::numeric_limits<double>::infinity();
        r.thm2_holds = true;
    }
    return r;
}

std::string threshold_json(const ThresholdReport& r) {
    nlohmann::json j;
    j["rho_A"] = r.rho_A;
    j["cond6_rhs"] = std::isinf(r.cond6_rhs) ? nlohmann::json("inf") : nlohmann::json(r.cond6_rhs);
    j["cond6_holds"] = r.cond6_holds;
    j["rho_W"] = r.rho_W ? nlohmann::json(*r.rho_W) : nlohmann::json(nullptr);
    j["tau"] = r.tau ? nlohmann::json(*r.tau) : nlohmann::json(nullptr);
    j["cond8_holds"] = r.cond8_holds;
    j["thm2_rhs"] =
        std::isinf(r.thm2_rhs) ? nlohmann::json("inf") : nlohmann::json(r.thm2_rhs);
    j["thm2_holds"] = r.thm2_holds;
    return j.dump(2) + "\n";
}

}  // namespace depnet
