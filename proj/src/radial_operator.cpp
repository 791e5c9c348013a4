#include "hessian_radial/radial_operator.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hessian_radial/errors.hpp"

namespace hessian_radial {

namespace {

void check_radius(double r, const char* who) {
    if (!(r >= 0.0)) throw DomainError(std::string(who) + ": need r >= 0");
}

void check_origin_slope(double r, double dphi, const char* who) {
    if (r == 0.0 && dphi != 0.0) {
        throw ContractError(std::string(who) + ": a C^2 radial profile has phi'(0) = 0");
    }
}

double binom_d(int n, int k) { return static_cast<double>(binom(n, k)); }

}  // namespace

ProblemParams ProblemParams::make(int n, int k, double mu) {
    if (n < 2) throw DomainError("ProblemParams: need n >= 2, got " + std::to_string(n));
    if (k < 1 || k > n) {
        throw DomainError("ProblemParams: need 1 <= k <= n, got k=" + std::to_string(k));
    }
    if (!std::isfinite(mu)) throw DomainError("ProblemParams: mu must be finite");
    return ProblemParams{n, k, mu};
}

EigenSpectrum radial_spectrum(const ProblemParams& p, double r, double dphi, double ddphi) {
    check_radius(r, "radial_spectrum");
    check_origin_slope(r, dphi, "radial_spectrum");
    std::vector<double> values(static_cast<std::size_t>(p.n));
    if (r == 0.0) {
        std::fill(values.begin(), values.end(), ddphi);
        return EigenSpectrum(std::move(values));
    }
    const double tangential = (1.0 + p.mu * r) / r * dphi;
    values[0] = ddphi + p.mu * dphi;
    std::fill(values.begin() + 1, values.end(), tangential);
    return EigenSpectrum(std::move(values));
}

double sk_radial(const ProblemParams& p, double r, double dphi, double ddphi) {
    check_radius(r, "sk_radial");
    check_origin_slope(r, dphi, "sk_radial");
    if (r == 0.0) return binom_d(p.n, p.k) * std::pow(ddphi, p.k);
    const double radial = ddphi + p.mu * dphi;
    const double tangential = (1.0 + p.mu * r) / r * dphi;
    const double lead = binom_d(p.n - 1, p.k - 1) * radial * std::pow(tangential, p.k - 1);
    const double rest = p.k <= p.n - 1 ? binom_d(p.n - 1, p.k) * std::pow(tangential, p.k) : 0.0;
    return lead + rest;
}

double chi(const ProblemParams& p, double r) {
    if (!(r > 0.0)) throw DomainError("chi: need r > 0");
    return p.n * p.mu * r + (p.n - p.k) * std::log(r);
}

double volterra_constant(const ProblemParams& p) {
    return p.k / binom_d(p.n - 1, p.k - 1);
}

double volterra_smooth_factor(const ProblemParams& p, const Nonlinearity& f, double s, double phi) {
    const double fk = f.eval_pow_k(phi, p.k);
    if (fk == 0.0) return 0.0;
    const double base = 1.0 + p.mu * s;
    if (p.k >= 2 && base == 0.0) {
        throw SingularityError("Volterra weight: 1 + mu s = 0 at s = " + std::to_string(s));
    }
    double log_weight = p.n * p.mu * s;
    double sign = 1.0;
    if (p.k >= 2) {
        log_weight -= (p.k - 1) * std::log(std::abs(base));
        if (base < 0.0 && (p.k - 1) % 2 == 1) sign = -1.0;
    }
    if (fk > 0.0 && std::isfinite(fk)) {
        return sign * std::exp(log_weight + std::log(fk));
    }
    return sign * std::exp(log_weight) * fk;
}

double volterra_integrand(const ProblemParams& p, const Nonlinearity& f, double s, double phi) {
    if (!(s > 0.0)) throw DomainError("volterra_integrand: need s > 0");
    const double g = volterra_smooth_factor(p, f, s, phi);
    return volterra_constant(p) * std::pow(s, p.n - 1) * g;
}

double dphi_from_integral(const ProblemParams& p, double r, double integral) {
    if (!(r > 0.0)) throw DomainError("dphi_from_integral: need r > 0");
    if (!(integral >= 0.0)) throw DomainError("dphi_from_integral: need I >= 0");
    if (integral == 0.0) return 0.0;
    if (std::isinf(integral)) return integral;
    const double log_value = (p.k - p.n) * std::log(r) - p.n * p.mu * r + std::log(integral);
    return std::exp(log_value / p.k);
}

double ode_residual(const ProblemParams& p, const Nonlinearity& f, double r, double phi,
                    double dphi, double ddphi) {
    if (!(r > 0.0)) throw DomainError("ode_residual: need r > 0");
    return sk_radial(p, r, dphi, ddphi) - f.eval_pow_k(phi, p.k);
}

double ddphi_at_zero(const ProblemParams& p, const Nonlinearity& f, double a) {
    return f.eval(a) / std::pow(binom_d(p.n, p.k), 1.0 / p.k);
}

double ddphi_from_ode(const ProblemParams& p, const Nonlinearity& f, double r, double phi,
                      double dphi) {
    if (!(r > 0.0)) throw DomainError("ddphi_from_ode: need r > 0");
    const double tangential = (1.0 + p.mu * r) / r * dphi;
    const double fk = f.eval_pow_k(phi, p.k);
    if (p.k == 1) {
        // phi'' + mu phi' + (n-1) tangential = f
        return fk - p.mu * dphi - (p.n - 1) * tangential;
    }
    if (tangential == 0.0) {
        throw DomainError("ddphi_from_ode: tangential eigenvalue vanishes, phi'' undetermined");
    }
    const double rest = p.k <= p.n - 1 ? binom_d(p.n - 1, p.k) * std::pow(tangential, p.k) : 0.0;
    const double radial =
        (fk - rest) / (binom_d(p.n - 1, p.k - 1) * std::pow(tangential, p.k - 1));
    return radial - p.mu * dphi;
}

}  // namespace hessian_radial
