#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hessian_radial {

/// Eigenvalues of the augmented Hessian D^2u + mu|Du|I at one point.
class EigenSpectrum {
public:
    EigenSpectrum() = default;
    explicit EigenSpectrum(std::vector<double> values);
    EigenSpectrum(std::initializer_list<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    operator std::span<const double>() const noexcept { return values_; }

    bool operator==(const EigenSpectrum&) const = default;

private:
    std::vector<double> values_;
};

/// Coefficients e_0..e_n of prod_i (x + lambda_i), highest power first,
/// i.e. result[p] is the p-th elementary symmetric polynomial.
std::vector<double> elem_sym_all(std::span<const double> lambda);

/// p-th elementary symmetric polynomial, 1 <= p <= lambda.size().
double elem_sym(std::span<const double> lambda, int p);

/// Strict membership in the open cone Gamma_k: S_p > 0 for p = 1..k.
bool in_gamma_k(std::span<const double> lambda, int k);

/// Exact binomial coefficient; throws DomainError outside 0 <= k <= n or on
/// 64-bit overflow.
std::uint64_t binom(int n, int k);

/// Gradient-coefficient threshold sqrt(k / (n (k+1) C(n,k)^{1/k})).
double mu_zero(int n, int k);

}  // namespace hessian_radial
