#include "fracspec/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "fracspec/error.hpp"

namespace fracspec::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Below this real part the argument is lifted by the recurrence.
constexpr double kLiftCutoff = 10.0;

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// B_{2k} / (2k), k = 1..8.
constexpr std::array<double, 8> kDigammaAsym = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
};

// B_{2k}, k = 1..7.
constexpr std::array<double, 7> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
};

std::string describe(ComplexValue z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i)";
  return os.str();
}

void check_finite(ComplexValue z, const char* fn) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(fn) + ": non-finite argument " + describe(z));
  }
}

bool is_pole(ComplexValue z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

void check_pole(ComplexValue z, const char* fn) {
  if (is_pole(z)) {
    throw PoleError(std::string(fn) + ": pole of Gamma at nonpositive integer " + describe(z));
  }
}

int lift_count(double re) { return re < kLiftCutoff ? static_cast<int>(std::ceil(kLiftCutoff - re)) : 0; }

template <class T>
T stirling_log_gamma(T w) {
  const T r = T(1) / w;
  const T r2 = r * r;
  T series = kStirling.back();
  for (auto it = kStirling.rbegin() + 1; it != kStirling.rend(); ++it) {
    series = series * r2 + *it;
  }
  return (w - 0.5) * std::log(w) - w + kHalfLog2Pi + series * r;
}

template <class T>
T asymptotic_digamma(T w) {
  const T r = T(1) / w;
  const T r2 = r * r;
  T series = kDigammaAsym.back();
  for (auto it = kDigammaAsym.rbegin() + 1; it != kDigammaAsym.rend(); ++it) {
    series = series * r2 + *it;
  }
  return std::log(w) - 0.5 * r - series * r2;
}

struct SinCosPi {
  double s;
  double c;
};

SinCosPi sincos_pi(double x) {
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r == 0.0) return {0.0, 1.0};
  if (r == 1.0 || r == -1.0) return {0.0, -1.0};
  if (r == 0.5) return {1.0, 0.0};
  if (r == -0.5) return {-1.0, 0.0};
  return {std::sin(kPi * r), std::cos(kPi * r)};
}

ComplexValue cos_pi(ComplexValue z) {
  const auto [s, c] = sincos_pi(z.real());
  const double y = kPi * z.imag();
  return {c * std::cosh(y), -s * std::sinh(y)};
}

// Right half-plane log-Gamma; Re z > 0.
ComplexValue log_gamma_right(ComplexValue z) {
  const int lift = lift_count(z.real());
  ComplexValue correction{0.0, 0.0};
  for (int j = 0; j < lift; ++j) {
    correction += std::log(z + static_cast<double>(j));
  }
  return stirling_log_gamma(z + static_cast<double>(lift)) - correction;
}

ComplexValue digamma_right(ComplexValue z) {
  const int lift = lift_count(z.real());
  ComplexValue correction{0.0, 0.0};
  for (int j = lift - 1; j >= 0; --j) {
    correction += 1.0 / (z + static_cast<double>(j));
  }
  return asymptotic_digamma(z + static_cast<double>(lift)) - correction;
}

double log_gamma_right(double x) {
  const int lift = lift_count(x);
  double product = 1.0;
  for (int j = 0; j < lift; ++j) {
    product *= x + j;
  }
  return stirling_log_gamma(x + lift) - std::log(product);
}

double digamma_right(double x) {
  const int lift = lift_count(x);
  double correction = 0.0;
  for (int j = lift - 1; j >= 0; --j) {
    correction += 1.0 / (x + j);
  }
  return asymptotic_digamma(x + lift) - correction;
}

}  // namespace

ComplexValue sin_pi(ComplexValue z) {
  const auto [s, c] = sincos_pi(z.real());
  const double y = kPi * z.imag();
  return {s * std::cosh(y), c * std::sinh(y)};
}

ComplexValue log_gamma(ComplexValue z) {
  check_finite(z, "log_gamma");
  check_pole(z, "log_gamma");
  if (z.real() > 0.0) return log_gamma_right(z);
  // Reflection; the branch here is not continuous with the right half-plane.
  return std::log(kPi) - std::log(sin_pi(z)) - log_gamma_right(1.0 - z);
}

ComplexValue gamma(ComplexValue z) {
  check_finite(z, "gamma");
  check_pole(z, "gamma");
  if (z.real() > 0.0) return std::exp(log_gamma_right(z));
  return kPi / (sin_pi(z) * std::exp(log_gamma_right(1.0 - z)));
}

ComplexValue digamma(ComplexValue z) {
  check_finite(z, "digamma");
  check_pole(z, "digamma");
  if (z.real() > 0.0) return digamma_right(z);
  return digamma_right(1.0 - z) - kPi * cos_pi(z) / sin_pi(z);
}

double log_gamma(double x) {
  check_finite(x, "log_gamma");
  check_pole(x, "log_gamma");
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: real overload requires x > 0, got " + describe(x));
  }
  return log_gamma_right(x);
}

double gamma(double x) {
  check_finite(x, "gamma");
  check_pole(x, "gamma");
  if (x > 0.0) return std::exp(log_gamma_right(x));
  return kPi / (sincos_pi(x).s * std::exp(log_gamma_right(1.0 - x)));
}

double digamma(double x) {
  check_finite(x, "digamma");
  check_pole(x, "digamma");
  if (x > 0.0) return digamma_right(x);
  const auto [s, c] = sincos_pi(x);
  return digamma_right(1.0 - x) - kPi * c / s;
}

SeriesResult psi_shift_series_detail(ComplexValue z, double shift, const SeriesOptions& options) {
  check_finite(z, "psi_shift_series");
  if (!(z.real() > 0.0)) {
    throw DomainError("psi_shift_series: requires Re z > 0, got " + describe(z));
  }
  if (!(shift > 0.0) || !std::isfinite(shift)) {
    throw DomainError("psi_shift_series: shift must be positive and finite");
  }
  if (!(options.tolerance > 0.0)) {
    throw DomainError("psi_shift_series: tolerance must be positive");
  }

  // First omitted Euler-Maclaurin correction: B_14/14 (u^-14 - v^-14).
  auto omitted = [&](std::size_t n) {
    const ComplexValue u = z + static_cast<double>(n);
    const ComplexValue v = u + shift;
    return std::abs(kBernoulli[6] / 14.0 * (std::pow(u, -14) - std::pow(v, -14)));
  };

  std::size_t n = 8;
  double bound = omitted(n);
  while (bound > options.tolerance) {
    if (n >= options.max_terms) {
      throw ConvergenceError("psi_shift_series: tolerance " + std::to_string(options.tolerance) +
                             " not reached within " + std::to_string(options.max_terms) + " terms");
    }
    n = std::min(2 * n, options.max_terms);
    bound = omitted(n);
  }

  ComplexValue sum{0.0, 0.0};
  for (std::size_t j = n; j-- > 0;) {
    const ComplexValue w = z + static_cast<double>(j);
    sum += shift / (w * (w + shift));
  }

  const ComplexValue u = z + static_cast<double>(n);
  const ComplexValue v = u + shift;
  ComplexValue tail = std::log(1.0 + shift / u) + 0.5 * shift / (u * v);
  ComplexValue upow = 1.0 / (u * u);
  ComplexValue vpow = 1.0 / (v * v);
  const ComplexValue u2 = upow;
  const ComplexValue v2 = vpow;
  for (std::size_t k = 1; k <= 6; ++k) {
    tail += kBernoulli[k - 1] / (2.0 * static_cast<double>(k)) * (upow - vpow);
    upow *= u2;
    vpow *= v2;
  }
  return {sum + tail, n, bound};
}

}  // namespace fracspec::specfun
