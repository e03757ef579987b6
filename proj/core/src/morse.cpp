#include "fracspec/morse.hpp"

#include <cmath>
#include <string>

#include "fracspec/error.hpp"
#include "fracspec/roots.hpp"
#include "fracspec/symbol.hpp"

namespace fracspec {
namespace {

// Brackets beyond this lambda lose accuracy in the log-Gamma differences.
constexpr double kMaxLambda = 1e8;

void require_circle_regime(const SpectralParams& params, const char* context) {
  if (params.k() != 1) {
    throw RegimeError(std::string(context) + ": only k = 1 is supported, got " + params.describe());
  }
  require_admissible(params, context);
}

}  // namespace

double jacobi_threshold(const SpectralParams& params) {
  require_circle_regime(params, "jacobi_threshold");
  const double n = params.n();
  const double g = params.gamma();
  return (n + 2 * g) / (n - 2 * g) * q_gamma_trivial(params);
}

double default_null_tolerance(double threshold) { return 1e-9 * threshold; }

MorseReport morse_index_nullity(const SurfaceSpectrum& spectrum, const SpectralParams& params,
                                std::optional<double> null_tolerance) {
  require_circle_regime(params, "morse_index_nullity");
  MorseReport report;
  report.threshold = jacobi_threshold(params);
  report.null_tolerance = null_tolerance.value_or(default_null_tolerance(report.threshold));
  if (!(report.null_tolerance >= 0.0)) {
    throw DomainError("morse_index_nullity: null tolerance must be >= 0");
  }

  const auto lambdas = spectrum.eigenvalues();
  for (std::size_t l = 1; l < lambdas.size(); ++l) {
    const double value = theta_eigenvalue(0, lambdas[l], params);
    if (value < report.threshold - report.null_tolerance) {
      report.contributing_pairs.push_back({0, l, lambdas[l], value, PairClass::negative});
      ++report.index;
    } else if (std::abs(value - report.threshold) <= report.null_tolerance) {
      report.contributing_pairs.push_back({0, l, lambdas[l], value, PairClass::null});
      ++report.nullity;
    }
  }
  report.certificate_theta = theta_eigenvalue(0, spectrum.truncation_bound(), params);
  report.complete = report.certificate_theta > report.threshold + report.null_tolerance;
  return report;
}

double lambda_of_theta(double vartheta, const SpectralParams& params) {
  require_circle_regime(params, "lambda_of_theta");
  const double xi = xi_const(params);
  if (!std::isfinite(vartheta) || !(vartheta > xi)) {
    throw DomainError("lambda_of_theta: vartheta must exceed Xi = " + std::to_string(xi));
  }
  const double a0 = a_m(0, params);
  const double log_target = std::log(vartheta);
  auto f = [&](double lambda) { return std::log(theta({a0, b_of_lambda(lambda, 1)}, params)) - log_target; };

  const double lo = 0.25;
  double span = 1.0;
  double f_hi = f(lo + span);
  while (!(f_hi > 0.0)) {
    span *= 2.0;
    if (lo + span > kMaxLambda) {
      throw ConvergenceError("lambda_of_theta: target beyond the supported range lambda <= 1e8");
    }
    f_hi = f(lo + span);
  }
  const double hi = lo + span;
  const auto root = roots::brent(f, lo, hi, std::log(xi) - log_target, f_hi, 1e-15 * hi);
  const double residual = std::abs(theta({a0, b_of_lambda(root.x, 1)}, params) - vartheta);
  if (residual > 1e-10 * vartheta) {
    throw NumericalIntegrityError("lambda_of_theta: residual " + std::to_string(residual) + " above tolerance");
  }
  return root.x;
}

BifurcationInequality check_bifurcation_inequality(const SpectralParams& params) {
  require_circle_regime(params, "check_bifurcation_inequality");
  BifurcationInequality out{};
  out.xi = xi_const(params);
  out.threshold = jacobi_threshold(params);
  out.margin = out.threshold - out.xi;
  out.holds = out.xi < out.threshold;
  return out;
}

}  // namespace fracspec
