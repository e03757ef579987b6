#pragma once

#include <optional>
#include <vector>

#include "fracspec/params.hpp"
#include "fracspec/spectrum.hpp"

namespace fracspec {

// Morse theory of the trivial solution on S^{n-2} x Σ^2 (k = 1).
//
// Every eigenvalue Θ_{m,l} with m >= 1 is at least Θ_{1,0}, which exceeds the
// Jacobi threshold ((n+2g)/(n-2g)) Θ_{0,0} whenever gamma < n/2 - 1. The
// index and nullity therefore only involve the column m = 0, l >= 1. All
// functions here require k = 1 and throw RegimeError otherwise.

/// ((n+2g)/(n-2g)) Q_g(n,1), the level the eigenvalues are compared against.
double jacobi_threshold(const SpectralParams& params);

/// Default nullity band: 1e-9 * threshold.
double default_null_tolerance(double threshold);

enum class PairClass { negative, null };

struct ContributingPair {
  int m;
  std::size_t l;
  double lambda;
  double theta;
  PairClass classification;
};

struct MorseReport {
  int index = 0;
  int nullity = 0;
  double threshold = 0.0;
  double null_tolerance = 0.0;
  std::vector<ContributingPair> contributing_pairs;
  /// Θ(a_0, b(truncation_bound)) exceeds threshold + null_tolerance, so no
  /// omitted eigenvalue can contribute.
  bool complete = false;
  double certificate_theta = 0.0;
};

/// index = #{l >= 1 : Θ_{0,l} < threshold - tol},
/// nullity = #{l >= 1 : |Θ_{0,l} - threshold| <= tol}.
MorseReport morse_index_nullity(const SurfaceSpectrum& spectrum, const SpectralParams& params,
                                std::optional<double> null_tolerance = std::nullopt);

/// The unique lambda > 1/4 with Θ(a_0, sqrt(lambda - 1/4)) = vartheta.
/// DomainError unless vartheta > Ξ.
double lambda_of_theta(double vartheta, const SpectralParams& params);

struct BifurcationInequality {
  bool holds;
  double margin;  ///< threshold - Ξ
  double xi;
  double threshold;
};

/// Ξ < ((n+2g)/(n-2g)) Θ_{0,0}, the condition under which pinching drives
/// arbitrarily many Θ_{0,l} below the threshold.
BifurcationInequality check_bifurcation_inequality(const SpectralParams& params);

}  // namespace fracspec
