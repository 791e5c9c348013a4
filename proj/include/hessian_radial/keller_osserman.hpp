#pragma once

#include <optional>
#include <string>

#include "hessian_radial/nonlinearity.hpp"
#include "hessian_radial/radial_operator.hpp"

namespace hessian_radial {

/// Classification of  int^{+inf} (int_0^tau f^k(t) dt)^{-1/(k+1)} dtau.
/// Divergence is the (generalized) Keller-Osserman condition.
enum class KOClass { Diverges, Converges, Inconclusive };

enum class KOMethod { Analytic, Numeric };

struct KOEvidence {
    KOMethod method = KOMethod::Analytic;
    /// p in g(tau) ~ tau^{-p}; absent when the tail decays exponentially.
    std::optional<double> tail_exponent;
    bool exponential_decay = false;
    /// RMS residual (natural-log units) of the winning tail fit; 0 for analytic.
    double fit_residual = 0.0;
    /// int_{tau_lo}^{tau_hi} g(tau) dtau over the sampled range.
    double partial_integral = 0.0;
    double tau_lo = 0.0;
    double tau_hi = 0.0;
};

struct KOVerdict {
    KOClass classification = KOClass::Inconclusive;
    KOEvidence evidence;
};

/// Closed-form verdicts for the built-in families. Throws UnsupportedError
/// for Custom nonlinearities.
KOVerdict ko_classify_analytic(const Nonlinearity& f, int k);

struct KONumericOptions {
    double tau_lo = 1.0;
    double tau_hi = 1e6;
    int nodes = 400;
    /// Half-width of the undecided band around p = 1.
    double margin = 0.05;
    /// Largest RMS log-residual accepted for a tail fit.
    double residual_threshold = 1e-2;
};

/// Samples g(tau) on a geometric grid, fits the top decade in log-log (and
/// log-linear for exponential tails) and compares the exponent with 1.
/// Throws DomainError when f^k vanishes on the whole range.
KOVerdict ko_classify_numeric(const Nonlinearity& f, int k, const KONumericOptions& options = {});

enum class Existence { Exists, NotExists, OutsideTheory, Inconclusive };

struct ExistenceReport {
    Existence verdict = Existence::Inconclusive;
    /// mu < mu_0 inside the admissible regime: the verdict is an equivalence.
    bool sharp = false;
    double mu_zero = 0.0;
    std::string reason;
};

/// Combines the KO verdict with the (n, k, mu) regime into an existence
/// statement for entire admissible subsolutions.
ExistenceReport existence_verdict(const ProblemParams& p, const KOVerdict& ko);

std::string to_string(KOClass c);
std::string to_string(KOMethod m);
std::string to_string(Existence e);

}  // namespace hessian_radial
