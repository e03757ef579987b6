#pragma once

#include <utility>
#include <vector>

namespace fracspec::thresholds {

/// F(x) = Γ(x/2 + 1) Γ(x/2 - 1/2) / Γ(x/2 - 1/4)^2 on x > 1.
///
/// For n >= 4 the comparison Ξ < ((n+2g)/(n-2g)) Θ_{0,0} is equivalent to
/// F(n/2 - g) < F(n/2 + g). F blows up like sqrt(pi) / (Γ(1/4)^2 (x - 1)) at
/// x = 1 and grows like x/2 at infinity.
double F(double x);
double log_F(double x);

/// d/dx log F(x) in terms of the digamma function.
double dlog_F(double x);

/// Minimiser of F on (1, inf), found as the sign change of dlog_F on
/// [1.2, 2]. tol is the absolute tolerance on x.
double find_x0(double tol = 1e-13);

struct UnimodalityCheck {
  int sign_changes = 0;
  double first_change = 0.0;  ///< left sample of the first sign change
};

/// Counts sign changes of dlog_F on a uniform grid of `samples` points over
/// [x_lo, x_hi]. One change means the sampled F is unimodal. This is an
/// empirical check, not a certificate.
UnimodalityCheck check_unimodality(double x_lo, double x_hi, int samples);

struct CnRecord {
  int n = 0;
  double c_n = 0.0;
  double residual = 0.0;  ///< |F(n/2 - c) - F(n/2 + c)| at the root
  std::pair<double, double> bracket;

  double gap_to_asymptote() const noexcept { return 0.5 * n - 1.0 - c_n; }
};

/// The unique c in (0, n/2 - 1) with F(n/2 - c) = F(n/2 + c); tol is the
/// absolute tolerance on c. DomainError for n < 4, BracketingError if the
/// bracket does not change sign.
CnRecord solve_cn(int n, double tol = 1e-12);

/// solve_cn for n = n_min..n_max, in order of n.
std::vector<CnRecord> cn_table(int n_min, int n_max, double tol = 1e-12);

}  // namespace fracspec::thresholds
