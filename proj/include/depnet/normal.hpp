#pragma once

#include <vector>

namespace depnet {

/// Standard normal CDF.
double norm_cdf(double x);

/// Standard normal quantile on [0, 1]; returns -inf/+inf at the endpoints.
double norm_ppf(double p);

/// Bivariate standard normal CDF P(X <= x, Y <= y) with correlation rho in [-1, 1].
/// Drezner-Wesolowsky/Genz hybrid; absolute error below 1e-14.
double bvn_cdf(double x, double y, double rho);

struct GaussHermiteRule {
    std::vector<double> nodes;    // roots of the physicists' Hermite polynomial
    std::vector<double> weights;  // for integrating exp(-t^2) f(t)
};

/// Gauss-Hermite rule of the given order; computed once and cached.
const GaussHermiteRule& gauss_hermite(int order);

}  // namespace depnet
