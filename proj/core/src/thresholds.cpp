#include "fracspec/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracspec/error.hpp"
#include "fracspec/roots.hpp"
#include "fracspec/specfun.hpp"

namespace fracspec::thresholds {
namespace {

void require_domain(double x, const char* context) {
  if (!std::isfinite(x) || !(x > 1.0)) {
    throw DomainError(std::string(context) + ": requires x > 1, got " + std::to_string(x));
  }
}

}  // namespace

double log_F(double x) {
  require_domain(x, "F");
  using specfun::log_gamma;
  return log_gamma(0.5 * x + 1.0) + log_gamma(0.5 * x - 0.5) - 2.0 * log_gamma(0.5 * x - 0.25);
}

double F(double x) { return std::exp(log_F(x)); }

double dlog_F(double x) {
  require_domain(x, "dlog_F");
  using specfun::digamma;
  return 0.5 * (digamma(0.5 * x + 1.0) + digamma(0.5 * x - 0.5) - 2.0 * digamma(0.5 * x - 0.25));
}

double find_x0(double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("find_x0: tol must be positive");
  }
  return roots::brent([](double x) { return dlog_F(x); }, 1.2, 2.0, tol).x;
}

UnimodalityCheck check_unimodality(double x_lo, double x_hi, int samples) {
  if (samples < 2 || !(x_hi > x_lo)) {
    throw DomainError("check_unimodality: need at least two samples on a nonempty interval");
  }
  UnimodalityCheck out;
  const double step = (x_hi - x_lo) / (samples - 1);
  double prev = dlog_F(x_lo);
  for (int i = 1; i < samples; ++i) {
    const double x = x_lo + step * i;
    const double d = dlog_F(x);
    if ((d > 0.0) != (prev > 0.0)) {
      if (out.sign_changes == 0) out.first_change = x - step;
      ++out.sign_changes;
    }
    prev = d;
  }
  return out;
}

CnRecord solve_cn(int n, double tol) {
  if (n < 4) {
    throw DomainError("solve_cn: requires n >= 4, got " + std::to_string(n));
  }
  if (!(tol > 0.0)) {
    throw DomainError("solve_cn: tol must be positive");
  }
  const double half = 0.5 * n;
  auto g = [half](double c) { return log_F(half + c) - log_F(half - c); };

  const double c_lo = std::min(0.05, (half - 1.0) / 10.0);
  const double c_hi = (half - 1.0) * (1.0 - 1e-9);
  const double g_lo = g(c_lo);
  const double g_hi = g(c_hi);
  if (!std::isfinite(g_lo) || !std::isfinite(g_hi) || (g_lo > 0.0) == (g_hi > 0.0)) {
    throw BracketingError("solve_cn: no sign change on [" + std::to_string(c_lo) + ", " + std::to_string(c_hi) +
                          "] for n = " + std::to_string(n));
  }
  // Converge to rounding level; the residual bound is relative to F, not c.
  const auto root = roots::brent(g, c_lo, c_hi, g_lo, g_hi, std::min(tol, 1e-15 * c_hi));

  CnRecord record;
  record.n = n;
  record.c_n = root.x;
  record.residual = std::abs(F(half - root.x) - F(half + root.x));
  record.bracket = {c_lo, c_hi};
  return record;
}

std::vector<CnRecord> cn_table(int n_min, int n_max, double tol) {
  if (n_min < 4 || n_max < n_min) {
    throw DomainError("cn_table: requires 4 <= n_min <= n_max");
  }
  std::vector<CnRecord> out;
  out.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
  for (int n = n_min; n <= n_max; ++n) out.push_back(solve_cn(n, tol));
  return out;
}

}  // namespace fracspec::thresholds
