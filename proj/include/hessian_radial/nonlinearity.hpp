#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hessian_radial {

enum class Family { Constant, Exponential, PowerCutoff, Custom };

struct NonlinearityFlags {
    bool positive_everywhere = true;
    bool degenerate_at_nonpositive = false;
};

/// Source term f of S_k^{1/k}(D^2u + mu|Du|I) = f(u).
///
/// Built-in families, each carrying an overall positive scale c:
///   Constant      f(t) = c
///   Exponential   f(t) = c e^{alpha t}
///   PowerCutoff   f(t) = c t^q for t > 0, 0 for t <= 0
/// Custom wraps a callback with caller-declared flags. Callbacks must be
/// reentrant; solvers may evaluate them from several threads.
class Nonlinearity {
public:
    using Callback = std::function<double(double)>;

    static Nonlinearity constant(double c);
    static Nonlinearity exponential(double alpha);
    static Nonlinearity power_cutoff(double q);
    static Nonlinearity custom(Callback fn, NonlinearityFlags flags, std::string label = "custom");

    /// Parses `const:<c>`, `exp:<alpha>` or `pow:<q>`.
    static Nonlinearity parse(std::string_view spec);

    /// c*f for c > 0. Built-in families stay built-in.
    Nonlinearity scaled(double c) const;

    double eval(double t) const;
    double operator()(double t) const { return eval(t); }

    /// log f(t); -inf where f vanishes. Exact (no exp round trip) for the
    /// exponential family, so f^k can be formed without overflow.
    double log_eval(double t) const;

    /// f(t)^k via exp(k log f(t)); 0 where f(t) == 0.
    double eval_pow_k(double t, int k) const;

    Family family() const noexcept { return family_; }
    /// alpha for Exponential, q for PowerCutoff, c for Constant; 0 for Custom.
    double parameter() const noexcept;
    double scale() const noexcept { return scale_; }
    const NonlinearityFlags& flags() const noexcept { return flags_; }
    bool is_builtin() const noexcept { return family_ != Family::Custom; }

    /// Round-trippable spec string for built-ins; the label for Custom.
    std::string spec() const;

private:
    Nonlinearity(Family family, double param, double scale, NonlinearityFlags flags);

    Family family_;
    double param_ = 0.0;
    double scale_ = 1.0;
    NonlinearityFlags flags_;
    Callback callback_;
    std::string label_;
};

struct AuditViolation {
    enum class Kind { NotPositive, Decreasing };
    Kind kind;
    double t1, t2;  // t1 == t2 for NotPositive
    double f1, f2;
};

struct AuditReport {
    bool passed = true;
    bool degenerate_noted = false;  // zeros on t <= 0 excused by the degenerate flag
    std::vector<AuditViolation> violations;
    std::optional<AuditViolation> first_violation() const {
        if (violations.empty()) return std::nullopt;
        return violations.front();
    }
};

/// Samples f on a uniform grid over [t_lo, t_hi] and reports every
/// positivity or monotonicity violation. Advisory only.
AuditReport audit_monotone_positive(const Nonlinearity& f, double t_lo, double t_hi, int samples);

}  // namespace hessian_radial
