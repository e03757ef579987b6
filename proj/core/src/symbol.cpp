#include "fracspec/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fracspec/error.hpp"

namespace fracspec {
namespace {

using specfun::ComplexValue;

const double kLog4 = std::log(4.0);

// Relative slack for comparisons against a_0 and k/2, both of which callers
// usually recompute in floating point.
constexpr double kBoundarySlack = 1e-14;

constexpr double kRealityTolerance = 1e-10;

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

// Real parts (1-g)/2 + (a -+ beta)/2 for the imaginary tag.
struct RealArguments {
  double plus;
  double minus;
};

void validate_point(const HalfAxisPoint& point, const SpectralParams& params, const char* context) {
  require_admissible(params, context);
  const double a0 = a_m(0, params);
  if (!std::isfinite(point.a) || point.a < a0 - kBoundarySlack * std::max(1.0, a0)) {
    throw RegimeError(std::string(context) + ": a must be >= a_0 = " + std::to_string(a0));
  }
  const double mag = point.b.magnitude();
  if (!std::isfinite(mag)) {
    throw DomainError(std::string(context) + ": non-finite b");
  }
  if (!point.b.is_real()) {
    const double half_k = 0.5 * params.k();
    if (mag > half_k * (1.0 + kBoundarySlack)) {
      throw RegimeError(std::string(context) + ": imaginary part of b exceeds k/2");
    }
  }
}

RealArguments imaginary_arguments(const HalfAxisPoint& point, const SpectralParams& params, const char* context) {
  const double base = 0.5 * (1.0 - params.gamma());
  const RealArguments x{base + 0.5 * (point.a + point.b.magnitude()), base + 0.5 * (point.a - point.b.magnitude())};
  if (!(x.minus > 0.0)) {
    throw RegimeError(std::string(context) + ": Gamma argument with nonpositive real part");
  }
  return x;
}

ComplexValue real_tag_argument(const HalfAxisPoint& point, const SpectralParams& params, const char* context) {
  const ComplexValue z{0.5 * (1.0 - params.gamma()) + 0.5 * point.a, 0.5 * point.b.magnitude()};
  if (!(z.real() > 0.0)) {
    throw RegimeError(std::string(context) + ": Gamma argument with nonpositive real part");
  }
  return z;
}

}  // namespace

SymbolB SymbolB::real(double b) {
  if (!(b >= 0.0)) {
    throw DomainError("real symbol argument b must be >= 0");
  }
  return SymbolB(true, b);
}

SymbolB SymbolB::imaginary(double beta) {
  if (!(beta > 0.0)) {
    throw DomainError("imaginary symbol argument must have beta > 0");
  }
  return SymbolB(false, beta);
}

double mu_m(int m, const SpectralParams& params) {
  require_admissible(params, "mu_m");
  if (m < 0) {
    throw DomainError("mu_m: m must be >= 0");
  }
  const double md = m;
  return md * (md + params.n() - params.k() - 2);
}

double a_m(int m, const SpectralParams& params) {
  const double shift = 0.5 * (params.n() - params.k() - 2);
  return std::sqrt(mu_m(m, params) + shift * shift);
}

SymbolB b_of_lambda(double lambda, int k) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw DomainError("b_of_lambda: lambda must be finite and >= 0");
  }
  if (k < 0) {
    throw DomainError("b_of_lambda: k must be >= 0");
  }
  const double quarter = 0.25 * k * k;
  if (lambda >= quarter) return SymbolB::real(std::sqrt(lambda - quarter));
  return SymbolB::imaginary(std::sqrt(quarter - lambda));
}

double theta(const HalfAxisPoint& point, const SpectralParams& params) {
  validate_point(point, params, "theta");
  const double g = params.gamma();
  using specfun::log_gamma;

  if (!point.b.is_real()) {
    const auto x = imaginary_arguments(point, params, "theta");
    return std::exp(g * kLog4 + log_gamma(x.plus + g) + log_gamma(x.minus + g) - log_gamma(x.plus) -
                    log_gamma(x.minus));
  }

  const ComplexValue z = real_tag_argument(point, params, "theta");
  const ComplexValue zg = z + g;
  const ComplexValue log_ratio =
      log_gamma(zg) + log_gamma(std::conj(zg)) - log_gamma(z) - log_gamma(std::conj(z));
  const double residue = std::abs(std::tan(log_ratio.imag()));
  if (!(residue <= kRealityTolerance)) {
    throw NumericalIntegrityError("theta: imaginary residue " + std::to_string(residue) +
                                  " exceeds tolerance at " + params.describe());
  }
  return std::exp(g * kLog4 + log_ratio.real()) * std::cos(log_ratio.imag());
}

ComplexValue theta_complex(double a, ComplexValue b, const SpectralParams& params) {
  const double g = params.gamma();
  const ComplexValue i{0.0, 1.0};
  ComplexValue w1 = 0.5 * (1.0 - g) + 0.5 * (a + b * i);
  ComplexValue w2 = 0.5 * (1.0 - g) + 0.5 * (a - b * i);
  // Canonical order so that b and -b produce identical operations.
  if (w2.imag() > w1.imag() || (w2.imag() == w1.imag() && w2.real() > w1.real())) std::swap(w1, w2);
  using specfun::log_gamma;
  const ComplexValue log_ratio = (log_gamma(w1 + g) + log_gamma(w2 + g)) - (log_gamma(w1) + log_gamma(w2));
  return std::exp(g * kLog4 + log_ratio);
}

double theta_eigenvalue(int m, double lambda, const SpectralParams& params) {
  return theta({a_m(m, params), b_of_lambda(lambda, params.k())}, params);
}

double q_gamma_trivial(const SpectralParams& params) {
  if (!params.positive_curvature_regime()) {
    throw RegimeError("q_gamma_trivial: requires 0 <= k < n/2 - gamma, got " + params.describe());
  }
  const double n = params.n();
  const double k = params.k();
  const double g = params.gamma();
  using specfun::log_gamma;
  return std::exp(g * kLog4 + log_gamma((n + 2 * g) / 4) + log_gamma((n - 2 * k + 2 * g) / 4) -
                  log_gamma((n - 2 * g) / 4) - log_gamma((n - 2 * k - 2 * g) / 4));
}

double q_gamma_formula(int n, int k, double g) {
  const double num1 = (n + 2 * g) / 4;
  const double num2 = (n - 2.0 * k + 2 * g) / 4;
  const double den1 = (n - 2 * g) / 4;
  const double den2 = (n - 2.0 * k - 2 * g) / 4;
  for (double arg : {num1, num2, den1, den2}) {
    if (is_nonpositive_integer(arg)) {
      throw PoleError("q_gamma_formula: Gamma pole at argument " + std::to_string(arg));
    }
  }
  if (num1 > 0 && num2 > 0 && den1 > 0 && den2 > 0) {
    using specfun::log_gamma;
    return std::exp(g * kLog4 + log_gamma(num1) + log_gamma(num2) - log_gamma(den1) - log_gamma(den2));
  }
  using specfun::gamma;
  return std::pow(4.0, g) * gamma(num1) * gamma(num2) / (gamma(den1) * gamma(den2));
}

double xi_const(const SpectralParams& params) {
  require_admissible(params, "xi_const");
  return theta({a_m(0, params), SymbolB::real(0.0)}, params);
}

double d_gamma_normalizer(double gamma) {
  if (!std::isfinite(gamma) || !(gamma > 0.0)) {
    throw DomainError("d_gamma_normalizer: gamma must be positive");
  }
  if (std::floor(gamma) == gamma) {
    throw PoleError("d_gamma_normalizer: Gamma(-gamma) has a pole at integer gamma");
  }
  return std::pow(4.0, gamma) * specfun::gamma(gamma) / specfun::gamma(-gamma);
}

double dlog_theta(const HalfAxisPoint& point, const SpectralParams& params, Direction direction,
                  DerivativeRoute route) {
  validate_point(point, params, "dlog_theta");
  const double g = params.gamma();
  auto psi_difference = [&](ComplexValue z) -> ComplexValue {
    if (route == DerivativeRoute::series) return specfun::psi_shift_series(z, g);
    if (z.imag() == 0.0) return specfun::digamma(z.real() + g) - specfun::digamma(z.real());
    return specfun::digamma(z + g) - specfun::digamma(z);
  };

  if (!point.b.is_real()) {
    if (direction == Direction::b) {
      throw DomainError("dlog_theta: direction b requires a real symbol argument");
    }
    const auto x = imaginary_arguments(point, params, "dlog_theta");
    const double plus = psi_difference(x.plus).real();
    const double minus = psi_difference(x.minus).real();
    return direction == Direction::a ? 0.5 * (plus + minus) : 0.5 * (plus - minus);
  }

  if (direction == Direction::beta) {
    throw DomainError("dlog_theta: direction beta requires an imaginary symbol argument");
  }
  if (direction == Direction::b && !(point.b.magnitude() > 0.0)) {
    throw DomainError("dlog_theta: direction b requires b > 0");
  }
  const ComplexValue d = psi_difference(real_tag_argument(point, params, "dlog_theta"));
  return direction == Direction::a ? d.real() : -d.imag();
}

ThetaGrid::ThetaGrid(const SpectralParams& params, int max_m, std::span<const double> lambdas)
    : lambdas_(lambdas.begin(), lambdas.end()) {
  if (max_m < 0) {
    throw DomainError("ThetaGrid: max_m must be >= 0");
  }
  a_values_.reserve(static_cast<std::size_t>(max_m) + 1);
  for (int m = 0; m <= max_m; ++m) a_values_.push_back(a_m(m, params));
  values_.reserve(a_values_.size() * lambdas_.size());
  for (double a : a_values_) {
    for (double lambda : lambdas_) {
      values_.push_back(theta({a, b_of_lambda(lambda, params.k())}, params));
    }
  }
}

}  // namespace fracspec
