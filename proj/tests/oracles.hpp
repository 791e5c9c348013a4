#pragma once

// Test-only reference values. Nothing here calls into the solver paths it
// is used to check.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace oracle {

/// Elementary symmetric polynomial by subset enumeration.
inline double elem_sym_subsets(std::span<const double> lambda, int p) {
    const auto n = lambda.size();
    double total = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != p) continue;
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) prod *= lambda[i];
        }
        total += prod;
    }
    return total;
}

inline double binom_real(int n, int k) {
    return std::round(std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0)));
}

/// Cauchy solution for f == c, mu = 0:  phi = a + c r^2 / (2 C(n,k)^{1/k}).
/// Substituting phi' = c r / C(n,k)^{1/k}, phi'' = c / C(n,k)^{1/k} into the
/// radial ODE gives C(n-1,k-1) x^k + C(n-1,k) x^k = C(n,k) x^k = c^k.
inline double constant_f_phi(int n, int k, double c, double a, double r) {
    return a + c * r * r / (2.0 * std::pow(binom_real(n, k), 1.0 / k));
}
inline double constant_f_dphi(int n, int k, double c, double r) {
    return c * r / std::pow(binom_real(n, k), 1.0 / k);
}

/// n = 2, k = 1, mu = 0, f = e^t: phi = ln(8b) - 2 ln(1 - b r^2) with
/// 8b = e^a solves phi'' + phi'/r = e^phi, so R(a) = sqrt(8 e^{-a}).
inline double liouville_blowup_radius(double a) { return std::sqrt(8.0 * std::exp(-a)); }
inline double liouville_phi(double a, double r) {
    const double b = std::exp(a) / 8.0;
    return std::log(8.0 * b) - 2.0 * std::log(1.0 - b * r * r);
}

/// n = 2, k = 1, mu = 1, f == 1:  phi'(r) = e^{-2r} r^{-1} int_0^r e^{2s} s ds,
/// integrated with adaptive Gauss-Kronrod.
inline double mu_one_dphi(double r) {
    using boost::math::quadrature::gauss_kronrod;
    auto g = [](double s) { return std::exp(2.0 * s) * s; };
    const double integral = gauss_kronrod<double, 61>::integrate(g, 0.0, r, 15, 1e-14);
    return std::exp(-2.0 * r) * integral / r;
}

/// mu_0(n, k) for 1 <= k <= n <= 8, evaluated at 40 digits with mpmath.
/// Row n-1, column k-1.
inline constexpr std::array<std::array<double, 8>, 8> kMuZero{{
    {0.7071067811865475244},
    {0.3535533905932737622, 0.57735026918962576451},
    {0.23570226039551584147, 0.35818997727451397318, 0.5},
    {0.1767766952966368811, 0.26084743001221455276, 0.3436824092496506566, 0.44721359549995793928},
    {0.14142135623730950488, 0.20533801921606819448, 0.26386328373646774463, 0.32710617358317700183,
     0.40824829046386301637},
    {0.11785113019775792073, 0.16937758271820491209, 0.21459355473313925365, 0.26029028619462917798,
     0.31154345130592655182, 0.37796447300922722721},
    {0.10101525445522107491, 0.14416190971595671588, 0.18098264776715075031, 0.21676415541861415197,
     0.25447107677561840904, 0.29754506290153706073, 0.3535533905932737622},
    {0.08838834764831844055, 0.12549310621989480875, 0.15653842757671210685, 0.18593568367635649273,
     0.21579708841317388649, 0.24796198770829225725, 0.28507071523952941277, 0.33333333333333333333},
}};

}  // namespace oracle
