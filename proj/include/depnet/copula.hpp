#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace depnet {

enum class CopulaFamily {
    independence,
    frechet_lower,
    frechet_upper,
    clayton,
    frank,
    gaussian,
};

std::string family_name(CopulaFamily family);
CopulaFamily family_from_name(std::string_view name);

/// A dependence family plus its parameter, evaluable as an n-copula.
///
/// Parameter ranges: Clayton theta > 0, Frank xi > 0, Gaussian
/// (equicorrelated) sigma in (-1, 1) as a 2-copula and [0, 1) at higher
/// dimensions. The Frechet lower envelope is a genuine copula only at n = 2;
/// at higher dimensions it evaluates the universal lower bound.
struct CopulaSpec {
    CopulaFamily family = CopulaFamily::independence;
    std::optional<double> param;

    static CopulaSpec independence() { return {CopulaFamily::independence, std::nullopt}; }
    static CopulaSpec frechet_lower() { return {CopulaFamily::frechet_lower, std::nullopt}; }
    static CopulaSpec frechet_upper() { return {CopulaFamily::frechet_upper, std::nullopt}; }
    static CopulaSpec clayton(double theta) { return {CopulaFamily::clayton, theta}; }
    static CopulaSpec frank(double xi) { return {CopulaFamily::frank, xi}; }
    static CopulaSpec gaussian(double sigma) { return {CopulaFamily::gaussian, sigma}; }
};

/// Parameter validation independent of dimension; throws std::invalid_argument.
/// Near-degenerate parameters (Clayton/Frank <= 1e-8, Gaussian 0 < |sigma| <=
/// 1e-12) are rejected rather than treated as independence; sigma = 0 exactly
/// is the product copula and is accepted.
void validate(const CopulaSpec& spec);

/// True when the family/parameter pair supports evaluation at dimension n >= 2.
bool supports_dimension(const CopulaSpec& spec, int n);

namespace copula_tol {
/// Absolute tolerance for closed-form families in axiom checks.
inline constexpr double exact = 1e-9;
/// Target absolute accuracy of the bivariate normal CDF.
inline constexpr double gaussian_2d = 1e-10;
/// Absolute tolerance for the equicorrelated Gaussian copula at n > 2
/// (fixed-order Gauss-Hermite quadrature).
inline constexpr double gaussian_nd = 1e-6;
inline constexpr int gauss_hermite_order = 64;
}  // namespace copula_tol

/// Tolerance appropriate for comparisons involving the given spec/dimension.
double eval_tolerance(const CopulaSpec& spec, int n);

/// C(u_1, ..., u_n) for n >= 2.
double eval(const CopulaSpec& spec, std::span<const double> u);

/// Diagonal section C(u, ..., u) at dimension n >= 2.
double diagonal(const CopulaSpec& spec, double u, int n);

/// Alternating-sign n-box sum over [lo, hi]; >= 0 for a valid copula.
double rectangle_volume(const CopulaSpec& spec, std::span<const double> lo,
                        std::span<const double> hi);

/// Sampled check of the concordance order: true iff eval(a, u) <= eval(b, u)
/// within tolerance on a deterministic grid with grid_points per axis.
/// A sufficient sampled check, not a proof.
bool concordance_leq(const CopulaSpec& a, const CopulaSpec& b, int n, int grid_points);

}  // namespace depnet
