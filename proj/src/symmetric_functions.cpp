#include "hessian_radial/symmetric_functions.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hessian_radial/errors.hpp"

namespace hessian_radial {

EigenSpectrum::EigenSpectrum(std::vector<double> values) : values_(std::move(values)) {}

EigenSpectrum::EigenSpectrum(std::initializer_list<double> values) : values_(values) {}

std::vector<double> elem_sym_all(std::span<const double> lambda) {
    // Multiply the factors (x + lambda_i) in one at a time; coeffs[p] tracks e_p.
    std::vector<double> coeffs(lambda.size() + 1, 0.0);
    coeffs[0] = 1.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (std::size_t p = i + 1; p >= 1; --p) {
            coeffs[p] += lambda[i] * coeffs[p - 1];
        }
    }
    return coeffs;
}

double elem_sym(std::span<const double> lambda, int p) {
    if (p < 1 || static_cast<std::size_t>(p) > lambda.size()) {
        throw DomainError("elem_sym: order " + std::to_string(p) + " outside 1.." +
                          std::to_string(lambda.size()));
    }
    // Only the first p coefficients are needed.
    std::vector<double> coeffs(static_cast<std::size_t>(p) + 1, 0.0);
    coeffs[0] = 1.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const std::size_t top = std::min<std::size_t>(i + 1, static_cast<std::size_t>(p));
        for (std::size_t q = top; q >= 1; --q) {
            coeffs[q] += lambda[i] * coeffs[q - 1];
        }
    }
    return coeffs[static_cast<std::size_t>(p)];
}

bool in_gamma_k(std::span<const double> lambda, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > lambda.size()) {
        throw DomainError("in_gamma_k: order " + std::to_string(k) + " outside 1.." +
                          std::to_string(lambda.size()));
    }
    const auto coeffs = elem_sym_all(lambda);
    for (int p = 1; p <= k; ++p) {
        if (!(coeffs[static_cast<std::size_t>(p)] > 0.0)) return false;
    }
    return true;
}

std::uint64_t binom(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("binom: need 0 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    }
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 0; i < k; ++i) {
        // result * (n - i) is divisible by (i + 1); cancel the gcd first so
        // the product never exceeds the final value's magnitude.
        const auto num = static_cast<std::uint64_t>(n - i);
        const auto den = static_cast<std::uint64_t>(i + 1);
        const std::uint64_t g = std::gcd(result, den);
        result /= g;
        const std::uint64_t factor = num / (den / g);
        if (result > UINT64_MAX / factor) throw DomainError("binom: result overflows 64 bits");
        result *= factor;
    }
    return result;
}

double mu_zero(int n, int k) {
    if (k < 1 || k > n) {
        throw DomainError("mu_zero: need 1 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    }
    const double c = static_cast<double>(binom(n, k));
    return std::sqrt(k / (n * (k + 1.0) * std::pow(c, 1.0 / k)));
}

}  // namespace hessian_radial
