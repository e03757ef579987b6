#pragma once

#include <string>

namespace fracspec {

/// Whether integer orders gamma are accepted. The fractional Laplacian is
/// defined for non-integer gamma; integer values are only evaluated for
/// comparison tables and carry the extended flag.
enum class GammaPolicy { strict, allow_integer };

/// The triple (n, k, gamma): dimension of the sphere, dimension of the
/// singular subsphere, and the order of the operator.
class SpectralParams {
 public:
  /// Throws DomainError unless n >= 3, 0 <= k < n, 0 < gamma < n/2 and, under
  /// GammaPolicy::strict, gamma is not an integer.
  SpectralParams(int n, int k, double gamma, GammaPolicy policy = GammaPolicy::strict);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  double gamma() const noexcept { return gamma_; }

  /// gamma is an integer (only possible with GammaPolicy::allow_integer).
  bool extended() const noexcept { return extended_; }

  /// 1 <= k < n/2 - gamma: the regime in which the spectrum on compact
  /// quotients is the discrete set of symbol values.
  bool admissible_spectrum() const noexcept;

  /// 0 <= k < n/2 - gamma: positivity regime of the trivial curvature.
  bool positive_curvature_regime() const noexcept;

  std::string describe() const;

 private:
  int n_;
  int k_;
  double gamma_;
  bool extended_;
};

/// Throws RegimeError unless params.admissible_spectrum().
void require_admissible(const SpectralParams& params, const char* context);

}  // namespace fracspec
