#include "fracspec/params.hpp"

#include <cmath>
#include <sstream>

#include "fracspec/error.hpp"

namespace fracspec {

SpectralParams::SpectralParams(int n, int k, double gamma, GammaPolicy policy)
    : n_(n), k_(k), gamma_(gamma), extended_(false) {
  if (n < 3) {
    throw DomainError("n must be >= 3, got " + std::to_string(n));
  }
  if (k < 0 || k >= n) {
    throw DomainError("k must satisfy 0 <= k < n, got k=" + std::to_string(k));
  }
  if (!std::isfinite(gamma) || !(gamma > 0.0) || !(gamma < 0.5 * n)) {
    throw DomainError("gamma must lie in (0, n/2), got " + describe());
  }
  if (std::floor(gamma) == gamma) {
    if (policy == GammaPolicy::strict) {
      throw DomainError("integer gamma is excluded from the fractional regime: " + describe());
    }
    extended_ = true;
  }
}

bool SpectralParams::admissible_spectrum() const noexcept { return k_ >= 1 && k_ < 0.5 * n_ - gamma_; }

bool SpectralParams::positive_curvature_regime() const noexcept { return k_ >= 0 && k_ < 0.5 * n_ - gamma_; }

std::string SpectralParams::describe() const {
  std::ostringstream os;
  os.precision(15);
  os << "(n=" << n_ << ", k=" << k_ << ", gamma=" << gamma_ << ')';
  return os.str();
}

void require_admissible(const SpectralParams& params, const char* context) {
  if (!params.admissible_spectrum()) {
    throw RegimeError(std::string(context) + ": requires 1 <= k < n/2 - gamma, got " + params.describe());
  }
}

}  // namespace fracspec
