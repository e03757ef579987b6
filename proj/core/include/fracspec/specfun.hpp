#pragma once

#include <complex>
#include <cstddef>

namespace fracspec::specfun {

using ComplexValue = std::complex<double>;

// Complex log-Gamma, Gamma and digamma.
//
// Arguments with Re z < 10 are lifted by the recurrence Γ(z+1) = zΓ(z) until
// Re z >= 10, where the Stirling series is summed with a fixed number of
// Bernoulli terms. Arguments with Re z <= 0 go through the reflection formula
// first. On the right half-plane log_gamma is the principal branch: analytic,
// real on the positive axis, and log_gamma(conj z) == conj(log_gamma(z)).
//
// All functions throw PoleError at nonpositive integers and DomainError for
// non-finite input.

ComplexValue log_gamma(ComplexValue z);
ComplexValue gamma(ComplexValue z);
ComplexValue digamma(ComplexValue z);

/// Real-argument overloads, x > 0 for log_gamma. gamma/digamma accept any
/// non-pole real.
double log_gamma(double x);
double gamma(double x);
double digamma(double x);

/// sin(pi z) with the real part reduced exactly before scaling by pi.
ComplexValue sin_pi(ComplexValue z);

struct SeriesOptions {
  double tolerance = 1e-12;
  std::size_t max_terms = 1'000'000;
};

struct SeriesResult {
  ComplexValue value;
  std::size_t terms = 0;  ///< explicitly summed terms
  double tail_bound = 0;  ///< magnitude of the first omitted tail correction
};

/// psi(z + shift) - psi(z) as the series sum_j shift / ((j+z)(j+z+shift)).
///
/// The first N terms are summed directly and the remainder is replaced by its
/// Euler-Maclaurin expansion (integral, half-term and Bernoulli corrections of
/// 1/(j+c)), which is elementary in N+z. N doubles until the first omitted
/// correction drops below the tolerance. Requires Re z > 0 and shift > 0;
/// throws ConvergenceError if the tolerance is not met within max_terms.
SeriesResult psi_shift_series_detail(ComplexValue z, double shift, const SeriesOptions& options = {});

inline ComplexValue psi_shift_series(ComplexValue z, double shift, const SeriesOptions& options = {}) {
  return psi_shift_series_detail(z, shift, options).value;
}

}  // namespace fracspec::specfun
