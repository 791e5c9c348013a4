#pragma once

#include "hessian_radial/nonlinearity.hpp"
#include "hessian_radial/symmetric_functions.hpp"

namespace hessian_radial {

/// Dimension n, Hessian order k and gradient coefficient mu.
struct ProblemParams {
    int n = 2;
    int k = 1;
    double mu = 0.0;

    /// Validates 1 <= k <= n, n >= 2 and finite mu.
    static ProblemParams make(int n, int k, double mu);

    /// k == 1, or k >= 2 with mu >= 0. Outside it the radial solution leaves
    /// Gamma_k once 1 + mu r < 0.
    bool admissible_regime() const noexcept { return k == 1 || mu >= 0.0; }

    /// Range where the Keller-Osserman condition is necessary and sufficient.
    bool ko_equiv_regime() const { return admissible_regime() && mu < mu_zero(n, k); }

    bool operator==(const ProblemParams&) const = default;
};

/// Spectrum of D^2u + mu|Du|I for u(x) = phi(|x|):
/// (phi'' + mu phi', (1 + mu r)/r phi' x (n-1)) for r > 0, phi''(0) x n at r = 0.
EigenSpectrum radial_spectrum(const ProblemParams& p, double r, double dphi, double ddphi);

/// S_k of the radial spectrum from the two-term closed form.
double sk_radial(const ProblemParams& p, double r, double dphi, double ddphi);

/// chi(r) = n mu r + (n - k) ln r, the integrating-factor exponent.
double chi(const ProblemParams& p, double r);

/// k / C(n-1, k-1).
double volterra_constant(const ProblemParams& p);

/// e^{n mu s} / (1 + mu s)^{k-1} f^k(phi): the part of the Volterra integrand
/// that stays smooth at s = 0. Evaluated in log form.
double volterra_smooth_factor(const ProblemParams& p, const Nonlinearity& f, double s, double phi);

/// (k / C(n-1,k-1)) e^{n mu s} s^{n-1} / (1 + mu s)^{k-1} f^k(phi).
double volterra_integrand(const ProblemParams& p, const Nonlinearity& f, double s, double phi);

/// phi'(r) = (r^{k-n} e^{-n mu r} I)^{1/k}.
double dphi_from_integral(const ProblemParams& p, double r, double integral);

/// sk_radial(...) - f(phi)^k.
double ode_residual(const ProblemParams& p, const Nonlinearity& f, double r, double phi,
                    double dphi, double ddphi);

/// f(a) / C(n,k)^{1/k}: phi''(0) of the Cauchy solution started at a.
double ddphi_at_zero(const ProblemParams& p, const Nonlinearity& f, double a);

/// Solves the ODE display for phi'' given (r, phi, phi'). Needs phi' > 0
/// when k >= 2; for k == 1 any phi' is accepted.
double ddphi_from_ode(const ProblemParams& p, const Nonlinearity& f, double r, double phi,
                      double dphi);

}  // namespace hessian_radial
