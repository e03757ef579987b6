#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

#include "fracspec/error.hpp"

namespace fracspec::roots {

struct RootResult {
  double x;
  double fx;
  std::size_t iterations;
};

/// Brent's zero finder on a sign-changing bracket [a, b] (fa, fb of opposite
/// sign, or one of them zero). Stops when the bracket is narrower than
/// 2 * (4 eps |x| + xtol / 2) or f(x) == 0. Throws BracketingError if the
/// bracket does not change sign and ConvergenceError after max_iter steps.
template <class F>
RootResult brent(F&& f, double a, double b, double fa, double fb, double xtol, std::size_t max_iter = 200) {
  if (fa == 0.0) return {a, fa, 0};
  if (fb == 0.0) return {b, fb, 0};
  if ((fa > 0.0) == (fb > 0.0)) {
    throw BracketingError("brent: f(a) and f(b) have the same sign");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * eps * std::abs(b) + 0.5 * xtol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return {b, fb, iter};

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, or secant when only two points.
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < 3.0 * m * q - std::abs(tol * q) && p < std::abs(0.5 * e * q)) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  throw ConvergenceError("brent: no convergence within iteration cap");
}

template <class F>
RootResult brent(F&& f, double a, double b, double xtol, std::size_t max_iter = 200) {
  const double fa = f(a);
  const double fb = f(b);
  return brent(std::forward<F>(f), a, b, fa, fb, xtol, max_iter);
}

/// Plain bisection on a sign-changing bracket until b - a <= xtol. Returns the
/// midpoint of the final bracket.
template <class F>
RootResult bisect(F&& f, double a, double b, double fa, double xtol, std::size_t max_iter = 200) {
  std::size_t iter = 0;
  while (std::abs(b - a) > xtol && iter < max_iter) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    ++iter;
    if (fm == 0.0) return {mid, fm, iter};
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  const double mid = 0.5 * (a + b);
  return {mid, f(mid), iter};
}

}  // namespace fracspec::roots
