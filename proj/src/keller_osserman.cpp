#include "hessian_radial/keller_osserman.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "hessian_radial/errors.hpp"
#include "hessian_radial/symmetric_functions.hpp"

namespace hessian_radial {

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (fit.intercept + fit.slope * x[i]);
        ss += e * e;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

double integrate_fk(const Nonlinearity& f, int k, double lo, double hi) {
    using boost::math::quadrature::gauss_kronrod;
    auto integrand = [&](double t) { return f.eval_pow_k(t, k); };
    double error = 0.0;
    return gauss_kronrod<double, 31>::integrate(integrand, lo, hi, 15, 1e-13, &error);
}

}  // namespace

KOVerdict ko_classify_analytic(const Nonlinearity& f, int k) {
    if (k < 1) throw DomainError("ko_classify_analytic: need k >= 1");
    KOVerdict v;
    v.evidence.method = KOMethod::Analytic;
    switch (f.family()) {
        case Family::Constant:
            v.classification = KOClass::Diverges;
            v.evidence.tail_exponent = 1.0 / (k + 1);
            break;
        case Family::Exponential:
            if (f.parameter() == 0.0) {
                v.classification = KOClass::Diverges;
                v.evidence.tail_exponent = 1.0 / (k + 1);
            } else {
                v.classification = KOClass::Converges;
                v.evidence.exponential_decay = true;
            }
            break;
        case Family::PowerCutoff: {
            const double q = f.parameter();
            v.evidence.tail_exponent = (k * q + 1.0) / (k + 1.0);
            v.classification = q <= 1.0 ? KOClass::Diverges : KOClass::Converges;
            break;
        }
        case Family::Custom:
            throw UnsupportedError("ko_classify_analytic: custom nonlinearity, use the numeric classifier");
    }
    return v;
}

KOVerdict ko_classify_numeric(const Nonlinearity& f, int k, const KONumericOptions& options) {
    if (k < 1) throw DomainError("ko_classify_numeric: need k >= 1");
    if (!(options.tau_lo > 0.0) || !(options.tau_lo < options.tau_hi)) {
        throw DomainError("ko_classify_numeric: need 0 < tau_lo < tau_hi");
    }
    if (options.nodes < 100) throw DomainError("ko_classify_numeric: need at least 100 nodes");

    const int m = options.nodes;
    const double log_lo = std::log(options.tau_lo);
    const double log_span = std::log(options.tau_hi) - log_lo;
    std::vector<double> tau(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) tau[i] = std::exp(log_lo + log_span * i / (m - 1));
    tau.front() = options.tau_lo;
    tau.back() = options.tau_hi;

    // Cumulative inner integral; stops at the first overflow.
    std::vector<double> log_tau, log_g;
    double inner = integrate_fk(f, k, 0.0, tau[0]);
    bool overflow = false;
    for (int i = 0; i < m; ++i) {
        if (i > 0) inner += integrate_fk(f, k, tau[i - 1], tau[i]);
        if (!std::isfinite(inner)) {
            overflow = true;
            break;
        }
        if (inner > 0.0) {
            log_tau.push_back(std::log(tau[i]));
            log_g.push_back(-std::log(inner) / (k + 1));
        }
    }

    KOVerdict v;
    v.evidence.method = KOMethod::Numeric;
    v.evidence.tau_lo = options.tau_lo;
    v.evidence.tau_hi = log_tau.empty() ? options.tau_lo : std::exp(log_tau.back());

    if (log_tau.empty()) {
        if (overflow) {
            v.classification = KOClass::Converges;
            v.evidence.exponential_decay = true;
            return v;
        }
        throw DomainError("ko_classify_numeric: f^k vanishes on [0, tau_hi]");
    }

    // Outer integral over the sampled range, trapezoid in log tau.
    for (std::size_t i = 1; i < log_tau.size(); ++i) {
        const double a = std::exp(log_g[i - 1] + log_tau[i - 1]);
        const double b = std::exp(log_g[i] + log_tau[i]);
        v.evidence.partial_integral += 0.5 * (a + b) * (log_tau[i] - log_tau[i - 1]);
    }

    // Top decade of what was sampled.
    const double cut = log_tau.back() - std::log(10.0);
    std::vector<double> x_log, x_lin, y;
    for (std::size_t i = 0; i < log_tau.size(); ++i) {
        if (log_tau[i] >= cut) {
            x_log.push_back(log_tau[i]);
            x_lin.push_back(std::exp(log_tau[i]));
            y.push_back(log_g[i]);
        }
    }
    if (x_log.size() < 3) {
        // Overflow came within the first decade: growth is at least exponential.
        v.classification = overflow ? KOClass::Converges : KOClass::Inconclusive;
        v.evidence.exponential_decay = overflow;
        return v;
    }

    const auto power = least_squares(x_log, y);
    const auto expo = least_squares(x_lin, y);
    const double p = -power.slope;

    if (power.rms_residual <= options.residual_threshold) {
        v.evidence.tail_exponent = p;
        v.evidence.fit_residual = power.rms_residual;
        if (p <= 1.0 - options.margin) {
            v.classification = KOClass::Diverges;
        } else if (p >= 1.0 + options.margin) {
            v.classification = KOClass::Converges;
        } else {
            v.classification = KOClass::Inconclusive;
        }
        return v;
    }
    if ((expo.rms_residual <= options.residual_threshold && expo.slope < 0.0) || overflow) {
        v.classification = KOClass::Converges;
        v.evidence.exponential_decay = true;
        v.evidence.fit_residual = expo.rms_residual;
        return v;
    }
    // Neither a clean power law nor a clean exponential.
    v.evidence.tail_exponent = p;
    v.evidence.fit_residual = power.rms_residual;
    v.classification = KOClass::Inconclusive;
    return v;
}

ExistenceReport existence_verdict(const ProblemParams& p, const KOVerdict& ko) {
    ExistenceReport out;
    out.mu_zero = mu_zero(p.n, p.k);
    const bool below = p.mu < out.mu_zero;

    if (!p.admissible_regime()) {
        out.verdict = Existence::NotExists;
        out.reason = "k >= 2 with mu < 0: radial solutions leave Gamma_k once 1 + mu r < 0";
        return out;
    }
    out.sharp = below;
    switch (ko.classification) {
        case KOClass::Inconclusive:
            out.verdict = Existence::Inconclusive;
            out.reason = "Keller-Osserman classification inconclusive";
            break;
        case KOClass::Diverges:
            out.verdict = Existence::Exists;
            out.reason = below ? "Keller-Osserman integral diverges; mu < mu_0 so the condition is also necessary"
                               : "Keller-Osserman integral diverges (sufficient for any mu in the admissible regime)";
            break;
        case KOClass::Converges:
            if (below) {
                out.verdict = Existence::NotExists;
                out.reason = "Keller-Osserman integral converges and mu < mu_0";
            } else {
                out.verdict = Existence::OutsideTheory;
                out.sharp = false;
                out.reason = "Keller-Osserman integral converges but mu >= mu_0: no result applies";
            }
            break;
    }
    return out;
}

std::string to_string(KOClass c) {
    switch (c) {
        case KOClass::Diverges: return "Diverges";
        case KOClass::Converges: return "Converges";
        case KOClass::Inconclusive: return "Inconclusive";
    }
    return {};
}

std::string to_string(KOMethod m) { return m == KOMethod::Analytic ? "analytic" : "numeric"; }

std::string to_string(Existence e) {
    switch (e) {
        case Existence::Exists: return "EXISTS";
        case Existence::NotExists: return "NOT_EXISTS";
        case Existence::OutsideTheory: return "OUTSIDE_THEORY";
        case Existence::Inconclusive: return "INCONCLUSIVE";
    }
    return {};
}

}  // namespace hessian_radial
