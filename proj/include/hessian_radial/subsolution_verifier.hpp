#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hessian_radial/radial_operator.hpp"
#include "hessian_radial/symmetric_functions.hpp"

namespace hessian_radial {

/// u(x) = exp(A |x|^2) with A > 0.
class GaussianCandidate {
public:
    explicit GaussianCandidate(double A);
    double A() const noexcept { return A_; }

private:
    double A_;
};

/// Spectrum of D^2u + mu|Du|I for the Gaussian at radius r:
/// (4A^2 e^{Ar^2}(r^2 + (1+mu r)/(2A)), 2A e^{Ar^2}(1+mu r) x (n-1)).
EigenSpectrum gaussian_spectrum(const ProblemParams& p, double A, double r);

struct RadiusCheck {
    double r = 0.0;
    bool pass = false;
    bool gamma_k_ok = false;
    /// S_k - u^{k alpha}; once e^{A r^2} leaves double range this is
    /// log S_k - k alpha A r^2 instead and `margin_is_log` is set.
    double margin = 0.0;
    bool margin_is_log = false;
};

struct VerificationReport {
    ProblemParams params;
    double A = 0.0;
    double alpha = 0.0;
    std::vector<RadiusCheck> checks;
    bool all_pass = true;
    std::optional<double> first_failure;
};

/// Relative slack on S_k >= u^{k alpha}, so the exact-equality case at the
/// threshold and r = 0 is not decided by the last bit.
inline constexpr double kEqualityTolerance = 1e-12;

/// Pointwise check of Gamma_k membership and S_k >= u^{k alpha}.
VerificationReport verify_subsolution(const ProblemParams& p, double A, double alpha,
                                      std::span<const double> radii);

/// `count` radii on [0, r_max]: half uniform (with both ends), half
/// geometric inside. For mu < 0 the Cauchy-Young minimiser
/// r* = -mu n / (4A) is added when it lies in range. Sorted.
std::vector<double> verification_radii(const ProblemParams& p, double A, double r_max = 10.0,
                                       int count = 512);

/// 1/2 C(n,k)^{-1/k}: sufficient A for mu >= 0 and alpha <= 1.
double example_4_1_threshold(int n, int k);

/// 1/(2n) + n mu^2 / 8: sufficient A for k = 1, mu < 0.
double example_4_2_threshold(int n, double mu);

/// 4A^2 r^2 + 2An + 2An mu r - 1; equals e^{-Ar^2} S_1 - 1 for k = 1.
double cauchy_young_slack(int n, double mu, double A, double r);

}  // namespace hessian_radial
