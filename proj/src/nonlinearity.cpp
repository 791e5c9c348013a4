#include "hessian_radial/nonlinearity.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "hessian_radial/errors.hpp"

namespace hessian_radial {

namespace {

double parse_number(std::string_view text, std::string_view spec) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw DomainError("nonlinearity spec '" + std::string(spec) + "': bad number '" +
                          std::string(text) + "'");
    }
    return value;
}

std::string format_number(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

Nonlinearity::Nonlinearity(Family family, double param, double scale, NonlinearityFlags flags)
    : family_(family), param_(param), scale_(scale), flags_(flags) {}

Nonlinearity Nonlinearity::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("const: need c > 0");
    return Nonlinearity(Family::Constant, 0.0, c, {true, false});
}

Nonlinearity Nonlinearity::exponential(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("exp: need alpha >= 0");
    return Nonlinearity(Family::Exponential, alpha, 1.0, {true, false});
}

Nonlinearity Nonlinearity::power_cutoff(double q) {
    if (!(q >= 0.0) || !std::isfinite(q)) throw DomainError("pow: need q >= 0");
    return Nonlinearity(Family::PowerCutoff, q, 1.0, {false, true});
}

Nonlinearity Nonlinearity::custom(Callback fn, NonlinearityFlags flags, std::string label) {
    if (!fn) throw DomainError("custom nonlinearity needs a callback");
    Nonlinearity f(Family::Custom, 0.0, 1.0, flags);
    f.callback_ = std::move(fn);
    f.label_ = std::move(label);
    return f;
}

Nonlinearity Nonlinearity::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw DomainError("nonlinearity spec '" + std::string(spec) +
                          "': expected const:<c>, exp:<alpha> or pow:<q>");
    }
    const auto head = spec.substr(0, colon);
    const double value = parse_number(spec.substr(colon + 1), spec);
    if (head == "const") return constant(value);
    if (head == "exp") return exponential(value);
    if (head == "pow") return power_cutoff(value);
    throw DomainError("nonlinearity spec '" + std::string(spec) + "': unknown family '" +
                      std::string(head) + "'");
}

Nonlinearity Nonlinearity::scaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("scaled: need c > 0");
    Nonlinearity out = *this;
    if (family_ == Family::Custom) {
        auto inner = callback_;
        out.callback_ = [inner, c](double t) { return c * inner(t); };
        out.label_ = format_number(c) + "*" + label_;
    } else {
        out.scale_ = scale_ * c;
    }
    return out;
}

double Nonlinearity::eval(double t) const {
    switch (family_) {
        case Family::Constant:
            return scale_;
        case Family::Exponential:
            return scale_ * std::exp(param_ * t);
        case Family::PowerCutoff:
            return t > 0.0 ? scale_ * std::pow(t, param_) : 0.0;
        case Family::Custom: {
            double v = 0.0;
            try {
                v = callback_(t);
            } catch (const std::exception& e) {
                throw EvaluationError("custom nonlinearity '" + label_ + "' failed at t=" +
                                      format_number(t) + ": " + e.what());
            }
            if (std::isnan(v)) {
                throw EvaluationError("custom nonlinearity '" + label_ + "' returned NaN at t=" +
                                      format_number(t));
            }
            return v;
        }
    }
    return 0.0;
}

double Nonlinearity::log_eval(double t) const {
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    switch (family_) {
        case Family::Constant:
            return std::log(scale_);
        case Family::Exponential:
            return std::log(scale_) + param_ * t;
        case Family::PowerCutoff:
            if (!(t > 0.0)) return neg_inf;
            return std::log(scale_) + param_ * std::log(t);
        case Family::Custom: {
            const double v = eval(t);
            return v > 0.0 ? std::log(v) : neg_inf;
        }
    }
    return neg_inf;
}

double Nonlinearity::eval_pow_k(double t, int k) const {
    if (k < 1) throw DomainError("eval_pow_k: need k >= 1");
    if (family_ == Family::Custom) {
        const double v = eval(t);
        if (v == 0.0) return 0.0;
        if (v < 0.0) return std::pow(v, k);
        return std::exp(k * std::log(v));
    }
    const double lf = log_eval(t);
    if (lf == -std::numeric_limits<double>::infinity()) return 0.0;
    return std::exp(k * lf);
}

double Nonlinearity::parameter() const noexcept {
    switch (family_) {
        case Family::Constant:
            return scale_;
        case Family::Exponential:
        case Family::PowerCutoff:
            return param_;
        case Family::Custom:
            return 0.0;
    }
    return 0.0;
}

std::string Nonlinearity::spec() const {
    switch (family_) {
        case Family::Constant:
            return "const:" + format_number(scale_);
        case Family::Exponential:
            return (scale_ == 1.0 ? "" : format_number(scale_) + "*") + "exp:" + format_number(param_);
        case Family::PowerCutoff:
            return (scale_ == 1.0 ? "" : format_number(scale_) + "*") + "pow:" + format_number(param_);
        case Family::Custom:
            return label_;
    }
    return {};
}

AuditReport audit_monotone_positive(const Nonlinearity& f, double t_lo, double t_hi, int samples) {
    if (!(t_lo < t_hi)) throw DomainError("audit: need t_lo < t_hi");
    if (samples < 2) throw DomainError("audit: need at least 2 samples");

    AuditReport report;
    const double step = (t_hi - t_lo) / (samples - 1);
    double t_prev = t_lo;
    double f_prev = f.eval(t_lo);
    for (int i = 0; i < samples; ++i) {
        const double t = (i == samples - 1) ? t_hi : t_lo + i * step;
        const double v = (i == 0) ? f_prev : f.eval(t);
        if (!(v > 0.0)) {
            if (f.flags().degenerate_at_nonpositive && t <= 0.0 && v == 0.0) {
                report.degenerate_noted = true;
            } else {
                report.violations.push_back({AuditViolation::Kind::NotPositive, t, t, v, v});
            }
        }
        if (i > 0 && v < f_prev) {
            report.violations.push_back({AuditViolation::Kind::Decreasing, t_prev, t, f_prev, v});
        }
        t_prev = t;
        f_prev = v;
    }
    report.passed = report.violations.empty();
    return report;
}

}  // namespace hessian_radial
