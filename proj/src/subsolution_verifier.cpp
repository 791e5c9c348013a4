#include "hessian_radial/subsolution_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hessian_radial/errors.hpp"

namespace hessian_radial {

namespace {

// Largest k A r^2 for which e^{k A r^2} stays comfortably inside double range.
constexpr double kLinearExponentLimit = 690.0;

std::vector<double> scaled_free_spectrum(const ProblemParams& p, double A, double r) {
    std::vector<double> base(static_cast<std::size_t>(p.n));
    const double tangential = 2.0 * A * (1.0 + p.mu * r);
    base[0] = 4.0 * A * A * (r * r + (1.0 + p.mu * r) / (2.0 * A));
    std::fill(base.begin() + 1, base.end(), tangential);
    return base;
}

}  // namespace

GaussianCandidate::GaussianCandidate(double A) : A_(A) {
    if (!(A > 0.0) || !std::isfinite(A)) throw DomainError("GaussianCandidate: need A > 0");
}

EigenSpectrum gaussian_spectrum(const ProblemParams& p, double A, double r) {
    (void)GaussianCandidate{A};
    if (!(r >= 0.0)) throw DomainError("gaussian_spectrum: need r >= 0");
    auto values = scaled_free_spectrum(p, A, r);
    const double u = std::exp(A * r * r);
    for (auto& v : values) v *= u;
    return EigenSpectrum(std::move(values));
}

VerificationReport verify_subsolution(const ProblemParams& p, double A, double alpha,
                                      std::span<const double> radii) {
    (void)GaussianCandidate{A};
    VerificationReport report;
    report.params = p;
    report.A = A;
    report.alpha = alpha;
    report.checks.reserve(radii.size());

    for (double r : radii) {
        if (!(r >= 0.0)) throw DomainError("verify_subsolution: radii must be >= 0");
        // The spectrum is e^{Ar^2} times a factor-free vector; S_k scales by e^{kAr^2}.
        const auto base = scaled_free_spectrum(p, A, r);
        RadiusCheck check;
        check.r = r;
        check.gamma_k_ok = in_gamma_k(base, p.k);
        const double sk_base = elem_sym(base, p.k);
        const double exponent = p.k * A * r * r;  // log u^k

        if (exponent <= kLinearExponentLimit) {
            const double sk = sk_base * std::exp(exponent);
            const double rhs = std::exp(alpha * exponent);
            check.margin = sk - rhs;
            check.pass = check.gamma_k_ok && check.margin >= -kEqualityTolerance * rhs;
        } else {
            check.margin_is_log = true;
            check.margin = sk_base > 0.0 ? std::log(sk_base) + (1.0 - alpha) * exponent
                                         : -std::numeric_limits<double>::infinity();
            check.pass = check.gamma_k_ok && check.margin >= -kEqualityTolerance;
        }
        if (!check.pass && report.all_pass) {
            report.all_pass = false;
            report.first_failure = r;
        }
        report.checks.push_back(check);
    }
    return report;
}

std::vector<double> verification_radii(const ProblemParams& p, double A, double r_max, int count) {
    if (!(r_max > 0.0)) throw DomainError("verification_radii: need r_max > 0");
    if (count < 4) throw DomainError("verification_radii: need at least 4 radii");
    const int linear = count / 2;
    const int geometric = count - linear;
    std::vector<double> radii;
    radii.reserve(static_cast<std::size_t>(count) + 1);
    for (int i = 0; i < linear; ++i) radii.push_back(r_max * i / (linear - 1));
    const double lo = std::log(r_max * 1e-6);
    const double hi = std::log(r_max);
    for (int i = 1; i <= geometric; ++i) {
        radii.push_back(std::exp(lo + (hi - lo) * i / (geometric + 1)));
    }
    if (p.mu < 0.0) {
        const double r_star = -p.mu * p.n / (4.0 * A);
        if (r_star <= r_max) radii.push_back(r_star);
    }
    std::sort(radii.begin(), radii.end());
    return radii;
}

double example_4_1_threshold(int n, int k) {
    if (k < 1 || k > n) throw DomainError("example_4_1_threshold: need 1 <= k <= n");
    return 0.5 * std::pow(static_cast<double>(binom(n, k)), -1.0 / k);
}

double example_4_2_threshold(int n, double mu) {
    if (n < 1) throw DomainError("example_4_2_threshold: need n >= 1");
    return 1.0 / (2.0 * n) + n * mu * mu / 8.0;
}

double cauchy_young_slack(int n, double mu, double A, double r) {
    return 4.0 * A * A * r * r + 2.0 * A * n + 2.0 * A * n * mu * r - 1.0;
}

}  // namespace hessian_radial
