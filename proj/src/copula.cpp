#include "depnet/copula.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "depnet/normal.hpp"

namespace depnet {

std::string family_name(CopulaFamily family) {
    switch (family) {
        case CopulaFamily::independence: return "independence";
        case CopulaFamily::frechet_lower: return "frechet_lower";
        case CopulaFamily::frechet_upper: return "frechet_upper";
        case CopulaFamily::clayton: return "clayton";
        case CopulaFamily::frank: return "frank";
        case CopulaFamily::gaussian: return "gaussian";
    }
    throw std::logic_error("family_name: unknown family");
}

CopulaFamily family_from_name(std::string_view name) {
    if (name == "independence") return CopulaFamily::independence;
    if (name == "frechet_lower") return CopulaFamily::frechet_lower;
    if (name == "frechet_upper") return CopulaFamily::frechet_upper;
    if (name == "clayton") return CopulaFamily::clayton;
    if (name == "frank") return CopulaFamily::frank;
    if (name == "gaussian") return CopulaFamily::gaussian;
    throw std::invalid_argument("unknown copula family: " + std::string(name));
}

void validate(const CopulaSpec& spec) {
    switch (spec.family) {
        case CopulaFamily::independence:
        case CopulaFamily::frechet_lower:
        case CopulaFamily::frechet_upper:
            if (spec.param.has_value())
                throw std::invalid_argument(family_name(spec.family) + " takes no parameter");
            return;
        case CopulaFamily::clayton:
        case CopulaFamily::frank: {
            if (!spec.param.has_value())
                throw std::invalid_argument(family_name(spec.family) + " requires a parameter");
            const double p = *spec.param;
            if (std::isnan(p) || p <= 1e-8)
                throw std::invalid_argument(family_name(spec.family) +
                                            " parameter must exceed 1e-8; use the independence "
                                            "family for the limiting case");
            return;
        }
        case CopulaFamily::gaussian: {
            if (!spec.param.has_value())
                throw std::invalid_argument("gaussian requires a parameter");
            const double s = *spec.param;
            if (std::isnan(s) || s <= -1.0 || s >= 1.0)
                throw std::invalid_argument("gaussian sigma must lie in (-1, 1)");
            if (s != 0.0 && std::fabs(s) <= 1e-12)
                throw std::invalid_argument(
                    "gaussian sigma within 1e-12 of zero; use sigma = 0 or the independence "
                    "family");
            return;
        }
    }
    throw std::logic_error("validate: unknown family");
}

bool supports_dimension(const CopulaSpec& spec, int n) {
    if (n < 2) return false;
    if (spec.family == CopulaFamily::gaussian && n > 2) return *spec.param >= 0.0;
    return true;
}

double eval_tolerance(const CopulaSpec& spec, int n) {
    if (spec.family == CopulaFamily::gaussian && n > 2) return copula_tol::gaussian_nd;
    return copula_tol::exact;
}

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

double eval_clayton(std::span<const double> u, double theta) {
    double sum = 1.0 - static_cast<double>(u.size());
    for (double v : u) sum += std::pow(v, -theta);
    return clamp01(std::pow(sum, -1.0 / theta));
}

// log-space form of the closed n-dimensional Frank copula; stable for the
// cancellation-prone 1 + prod/(e^{-xi}-1)^{n-1} expression.
double eval_frank(std::span<const double> u, double xi) {
    const double log_denom = std::log(-std::expm1(-xi));
    double s = -static_cast<double>(u.size() - 1) * log_denom;
    for (double v : u) s += std::log(-std::expm1(-xi * v));
    return clamp01(-std::log(-std::expm1(s)) / xi);
}

// One-factor representation of the equicorrelated Gaussian copula, sigma >= 0:
// C(u) = Integral phi(z) Prod_j Phi((Phi^{-1}(u_j) - sqrt(sigma) z)/sqrt(1-sigma)) dz.
double eval_gaussian_onefactor(std::span<const double> u, double sigma) {
    const auto& rule = gauss_hermite(copula_tol::gauss_hermite_order);
    const double sqrt_s = std::sqrt(sigma);
    const double sqrt_1ms = std::sqrt(1.0 - sigma);
    std::vector<double> q(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) q[j] = norm_ppf(u[j]);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double z = std::numbers::sqrt2 * rule.nodes[i];
        double prod = 1.0;
        for (double qj : q) prod *= norm_cdf((qj - sqrt_s * z) / sqrt_1ms);
        acc += rule.weights[i] * prod;
    }
    return clamp01(acc / std::sqrt(std::numbers::pi));
}

double eval_reduced(const CopulaSpec& spec, std::span<const double> u) {
    // Preconditions: u.size() >= 2, all coordinates in (0, 1).
    switch (spec.family) {
        case CopulaFamily::independence: {
            double prod = 1.0;
            for (double v : u) prod *= v;
            return prod;
        }
        case CopulaFamily::frechet_upper:
            return *std::min_element(u.begin(), u.end());
        case CopulaFamily::frechet_lower: {
            double sum = 1.0 - static_cast<double>(u.size());
            for (double v : u) sum += v;
            return std::max(sum, 0.0);
        }
        case CopulaFamily::clayton:
            return eval_clayton(u, *spec.param);
        case CopulaFamily::frank:
            return eval_frank(u, *spec.param);
        case CopulaFamily::gaussian: {
            const double sigma = *spec.param;
            if (sigma == 0.0) {
                double prod = 1.0;
                for (double v : u) prod *= v;
                return prod;
            }
            if (u.size() == 2) return bvn_cdf(norm_ppf(u[0]), norm_ppf(u[1]), sigma);
            return eval_gaussian_onefactor(u, sigma);
        }
    }
    throw std::logic_error("eval: unknown family");
}

void check_coordinates(std::span<const double> u) {
    for (double v : u) {
        if (std::isnan(v)) throw std::invalid_argument("copula argument is NaN");
        if (v < 0.0 || v > 1.0) throw std::invalid_argument("copula argument outside [0, 1]");
    }
}

}  // namespace

double eval(const CopulaSpec& spec, std::span<const double> u) {
    validate(spec);
    const int n = static_cast<int>(u.size());
    if (n < 2) throw std::invalid_argument("copula eval requires dimension >= 2");
    if (!supports_dimension(spec, n))
        throw std::invalid_argument(family_name(spec.family) +
                                    " does not support the requested dimension/parameter");
    check_coordinates(u);

    // Grounded/marginal axioms hold exactly: a zero coordinate annihilates,
    // unit coordinates drop out.
    double stack[32];
    std::vector<double> heap;
    double* reduced = stack;
    if (n > 32) {
        heap.resize(static_cast<std::size_t>(n));
        reduced = heap.data();
    }
    int k = 0;
    for (double v : u) {
        if (v == 0.0) return 0.0;
        if (v < 1.0) reduced[k++] = v;
    }
    if (k == 0) return 1.0;
    if (k == 1) return reduced[0];
    return eval_reduced(spec, std::span<const double>(reduced, static_cast<std::size_t>(k)));
}

double diagonal(const CopulaSpec& spec, double u, int n) {
    if (n < 2) throw std::invalid_argument("diagonal requires dimension >= 2");
    double stack[32];
    std::vector<double> heap;
    double* buf = stack;
    if (n > 32) {
        heap.resize(static_cast<std::size_t>(n));
        buf = heap.data();
    }
    std::fill_n(buf, n, u);
    return eval(spec, std::span<const double>(buf, static_cast<std::size_t>(n)));
}

double rectangle_volume(const CopulaSpec& spec, std::span<const double> lo,
                        std::span<const double> hi) {
    const int n = static_cast<int>(lo.size());
    if (hi.size() != lo.size()) throw std::invalid_argument("rectangle_volume: length mismatch");
    if (n < 2) throw std::invalid_argument("rectangle_volume requires dimension >= 2");
    if (n > 20) throw std::invalid_argument("rectangle_volume: dimension too large to enumerate");
    check_coordinates(lo);
    check_coordinates(hi);
    for (int j = 0; j < n; ++j)
        if (lo[j] > hi[j]) throw std::invalid_argument("rectangle_volume: lo > hi");

    std::vector<double> corner(static_cast<std::size_t>(n));
    double volume = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int lo_count = 0;
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) {
                corner[static_cast<std::size_t>(j)] = hi[j];
            } else {
                corner[static_cast<std::size_t>(j)] = lo[j];
                ++lo_count;
            }
        }
        const double sign = (lo_count % 2 == 0) ? 1.0 : -1.0;
        volume += sign * eval(spec, corner);
    }
    return volume;
}

bool concordance_leq(const CopulaSpec& a, const CopulaSpec& b, int n, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("concordance_leq: need >= 2 grid points");
    if (n < 2) throw std::invalid_argument("concordance_leq requires dimension >= 2");
    double total = 1.0;
    for (int j = 0; j < n; ++j) total *= grid_points;
    if (total > 2e6) throw std::invalid_argument("concordance_leq: grid too large");
    const double tol = std::max(eval_tolerance(a, n), eval_tolerance(b, n));

    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    std::vector<double> u(static_cast<std::size_t>(n));
    while (true) {
        for (int j = 0; j < n; ++j)
            u[static_cast<std::size_t>(j)] =
                static_cast<double>(idx[static_cast<std::size_t>(j)]) / (grid_points - 1);
        if (eval(a, u) > eval(b, u) + tol) return false;
        int j = 0;
        while (j < n && ++idx[static_cast<std::size_t>(j)] == grid_points) {
            idx[static_cast<std::size_t>(j)] = 0;
            ++j;
        }
        if (j == n) break;
    }
    return true;
}

}  // namespace depnet
