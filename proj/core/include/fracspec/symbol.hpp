#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracspec/params.hpp"
#include "fracspec/specfun.hpp"

namespace fracspec {

/// Second symbol argument: either a real b >= 0 or a purely imaginary
/// b = i*beta with beta > 0.
class SymbolB {
 public:
  static SymbolB real(double b);
  static SymbolB imaginary(double beta);

  bool is_real() const noexcept { return real_; }
  /// b for the real tag, beta for the imaginary tag.
  double magnitude() const noexcept { return value_; }
  specfun::ComplexValue as_complex() const noexcept {
    return real_ ? specfun::ComplexValue{value_, 0.0} : specfun::ComplexValue{0.0, value_};
  }

 private:
  SymbolB(bool real, double value) : real_(real), value_(value) {}
  bool real_;
  double value_;
};

struct HalfAxisPoint {
  double a;
  SymbolB b;
};

/// Spherical-harmonic eigenvalue m(m + n - k - 2) on S^{n-k-1}.
double mu_m(int m, const SpectralParams& params);

/// sqrt(mu_m + ((n-k-2)/2)^2); strictly increasing in m.
double a_m(int m, const SpectralParams& params);

/// sqrt(lambda - (k/2)^2), imaginary below (k/2)^2. lambda == (k/2)^2 maps
/// to the real tag with b = 0.
SymbolB b_of_lambda(double lambda, int k);

/// The Fourier symbol
///   4^g Γ((1+g)/2 + (a+bi)/2) Γ((1+g)/2 + (a-bi)/2)
///       / [Γ((1-g)/2 + (a+bi)/2) Γ((1-g)/2 + (a-bi)/2)].
///
/// Real b goes through the complex kernel; the imaginary residue of the
/// product is checked (NumericalIntegrityError above 1e-10 relative) and then
/// dropped. Imaginary b = i*beta uses the equivalent all-real form. Requires
/// admissible params, a >= a_0, beta <= k/2, and every Gamma argument with
/// positive real part (RegimeError otherwise).
double theta(const HalfAxisPoint& point, const SpectralParams& params);

/// Raw complex evaluation of the four-Gamma product for any complex b. Used to
/// cross-check theta(); no reality check is applied.
specfun::ComplexValue theta_complex(double a, specfun::ComplexValue b, const SpectralParams& params);

/// Eigenvalue Θ_{m,l} = theta(a_m, b(lambda_l)) of the fractional Laplacian
/// on S^{n-k-1} x Σ^{k+1}.
double theta_eigenvalue(int m, double lambda, const SpectralParams& params);

/// Fractional curvature of the trivial solution,
///   4^g Γ((n+2g)/4) Γ((n-2k+2g)/4) / [Γ((n-2g)/4) Γ((n-2k-2g)/4)].
/// Requires 0 <= k < n/2 - gamma (k = 0 allowed); RegimeError otherwise.
double q_gamma_trivial(const SpectralParams& params);

/// The same Gamma ratio without the regime restriction, for tabulation.
/// Throws PoleError if any Gamma argument is a nonpositive integer.
double q_gamma_formula(int n, int k, double gamma);

/// Ξ = theta(a_0, 0), the accumulation level of Θ_{0,l} as lambda_l -> (k/2)^2.
/// For k = 1 this is 4^g Γ(n/4 + g/2 - 1/4)^2 / Γ(n/4 - g/2 - 1/4)^2.
double xi_const(const SpectralParams& params);

/// 4^g Γ(g) / Γ(-g). PoleError at integer gamma, DomainError for gamma <= 0.
double d_gamma_normalizer(double gamma);

enum class Direction { a, b, beta };

/// Which evaluation of psi(z + g) - psi(z) feeds the log-derivative.
enum class DerivativeRoute { digamma, series };

/// Logarithmic derivative of theta along a, b (real tag, b > 0 only) or beta
/// (imaginary tag only). DomainError on a direction/tag mismatch.
double dlog_theta(const HalfAxisPoint& point, const SpectralParams& params, Direction direction,
                  DerivativeRoute route = DerivativeRoute::digamma);

/// Θ_{m,l} for m = 0..max_m over a list of surface eigenvalues.
class ThetaGrid {
 public:
  ThetaGrid(const SpectralParams& params, int max_m, std::span<const double> lambdas);

  std::size_t rows() const noexcept { return a_values_.size(); }
  std::size_t cols() const noexcept { return lambdas_.size(); }
  double at(std::size_t m, std::size_t l) const { return values_.at(m * cols() + l); }
  const std::vector<double>& lambdas() const noexcept { return lambdas_; }
  const std::vector<double>& a_values() const noexcept { return a_values_; }

 private:
  std::vector<double> a_values_;
  std::vector<double> lambdas_;
  std::vector<double> values_;
};

}  // namespace fracspec
