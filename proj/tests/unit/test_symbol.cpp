#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fracspec/error.hpp"
#include "fracspec/params.hpp"
#include "fracspec/symbol.hpp"
#include "golden.hpp"

using namespace fracspec;
using fracspec::testing::GoldenFile;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

SpectralParams extended(int n, int k, double g) { return SpectralParams(n, k, g, GammaPolicy::allow_integer); }

}  // namespace

TEST_SUITE("params") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(SpectralParams(2, 1, 0.5), DomainError);
    CHECK_THROWS_AS(SpectralParams(5, 5, 0.5), DomainError);
    CHECK_THROWS_AS(SpectralParams(5, -1, 0.5), DomainError);
    CHECK_THROWS_AS(SpectralParams(5, 1, 0.0), DomainError);
    CHECK_THROWS_AS(SpectralParams(5, 1, 2.5), DomainError);
    CHECK_THROWS_AS(SpectralParams(5, 1, NAN), DomainError);
    CHECK_THROWS_AS(SpectralParams(5, 1, 1.0), DomainError);
    const auto p = extended(5, 1, 1.0);
    CHECK(p.extended());
    CHECK_FALSE(SpectralParams(5, 1, 0.6).extended());
  }

  TEST_CASE("regimes") {
    CHECK(SpectralParams(5, 1, 0.6).admissible_spectrum());
    CHECK_FALSE(SpectralParams(5, 1, 1.6).admissible_spectrum());
    CHECK_FALSE(SpectralParams(5, 0, 0.6).admissible_spectrum());
    CHECK(SpectralParams(5, 0, 0.6).positive_curvature_regime());
    CHECK_THROWS_AS(require_admissible(SpectralParams(4, 1, 1.2), "t"), RegimeError);
  }
}

TEST_SUITE("symbol") {
  TEST_CASE("spectral coordinates") {
    const SpectralParams p51(5, 1, 0.6);
    CHECK(mu_m(0, p51) == 0.0);
    CHECK(mu_m(1, p51) == 3.0);
    CHECK(mu_m(2, SpectralParams(4, 1, 0.5)) == 6.0);
    CHECK(a_m(0, p51) == 1.0);
    CHECK(a_m(1, p51) == 2.0);
    for (int n = 4; n <= 12; ++n) {
      const SpectralParams p(n, 1, 0.3);
      CHECK(a_m(0, p) == doctest::Approx((n - 3) / 2.0));
      CHECK(a_m(1, p) == doctest::Approx((n - 1) / 2.0));
      for (int m = 0; m < 20; ++m) CHECK(a_m(m + 1, p) > a_m(m, p));
    }
    const auto b0 = b_of_lambda(0.0, 1);
    CHECK_FALSE(b0.is_real());
    CHECK(b0.magnitude() == 0.5);
    const auto bq = b_of_lambda(0.25, 1);
    CHECK(bq.is_real());
    CHECK(bq.magnitude() == 0.0);
    CHECK(b_of_lambda(1.25, 1).magnitude() == 1.0);
    CHECK_THROWS_AS(b_of_lambda(-0.1, 1), DomainError);
    CHECK_THROWS_AS(SymbolB::imaginary(0.0), DomainError);
    CHECK_THROWS_AS(SymbolB::real(-1.0), DomainError);
  }

  TEST_CASE("closed forms") {
    const SpectralParams p(4, 1, 0.5);
    CHECK(rel_err(q_gamma_trivial(p), 0.5) < 1e-14);
    CHECK(rel_err(theta_eigenvalue(0, 0.0, p), 0.5) < 1e-13);
    CHECK(rel_err(xi_const(p), 2.0 / std::numbers::pi) < 1e-13);
    CHECK(rel_err(d_gamma_normalizer(0.5), -1.0) < 1e-14);
    const auto p5 = extended(5, 1, 1.0);
    CHECK(rel_err(q_gamma_trivial(p5), 0.75) < 1e-13);
    CHECK(rel_err(xi_const(p5), 1.0) < 1e-13);
    // Θ_{0,l} = lambda + 3/4 at n = 5, gamma = 1.
    for (double lambda : {0.0, 0.1, 0.25, 1.0, 7.3, 150.0}) {
      CHECK(rel_err(theta_eigenvalue(0, lambda, p5), lambda + 0.75) < 1e-12);
    }
  }

  TEST_CASE("goldens") {
    const auto g = GoldenFile::load("symbol");
    CHECK(g.matches("theta.n5_k1_g0.6.a2_b1", theta({2.0, SymbolB::real(1.0)}, SpectralParams(5, 1, 0.6))));
    CHECK(g.matches("theta.n6_k1_g0.9.a1.5_beta0.3",
                    theta({1.5, SymbolB::imaginary(0.3)}, SpectralParams(6, 1, 0.9))));
    CHECK(g.matches("theta.n9_k2_g1.3.a3.1_b7.5", theta({3.1, SymbolB::real(7.5)}, SpectralParams(9, 2, 1.3))));
    CHECK(g.matches("q_gamma.n6_k1_g0.9", q_gamma_trivial(SpectralParams(6, 1, 0.9))));
    CHECK(g.matches("q_gamma.n4_k1_g0.5", q_gamma_trivial(SpectralParams(4, 1, 0.5))));
    CHECK(g.matches("q_gamma.n7_k0_g1.7", q_gamma_trivial(SpectralParams(7, 0, 1.7))));
    CHECK(g.matches("xi.n4_g0.5", xi_const(SpectralParams(4, 1, 0.5))));
    CHECK(g.matches("xi.n5_g1", xi_const(extended(5, 1, 1.0))));
    CHECK(g.matches("d_gamma.1.5", d_gamma_normalizer(1.5)));
    CHECK(g.matches("d_gamma.0.999", d_gamma_normalizer(0.999)));
  }

  TEST_CASE("eigenvalue identities") {
    const auto p5 = extended(5, 1, 1.0);
    CHECK(rel_err(theta_eigenvalue(1, 0.0, p5), 5.0 * theta_eigenvalue(0, 0.0, p5)) < 1e-12);
    const SpectralParams p(7, 1, 1.3);
    CHECK(rel_err(theta_eigenvalue(0, 0.0, p), q_gamma_trivial(p)) < 1e-13);
    CHECK(rel_err(theta_eigenvalue(0, 0.25, p), xi_const(p)) < 1e-15);
    CHECK(rel_err(theta({a_m(0, p), SymbolB::imaginary(0.5)}, p), q_gamma_trivial(p)) < 1e-13);
  }

  TEST_CASE("reality, evenness and tag continuity") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
      const int n = 4 + static_cast<int>(u(rng) * 9);
      const int k = 1 + static_cast<int>(u(rng) * 2);
      const double gmax = 0.5 * n - k;
      if (gmax <= 0.05) continue;
      const double g = 0.02 + u(rng) * (gmax - 0.04);
      const SpectralParams p(n, k, g, GammaPolicy::allow_integer);
      const double a = a_m(0, p) + 15.0 * u(rng);
      const double b = 40.0 * u(rng);
      const auto c = theta_complex(a, {b, 0.0}, p);
      CHECK(std::abs(c.imag()) <= 1e-10 * std::abs(c.real()));
      CHECK(rel_err(theta({a, SymbolB::real(b)}, p), c.real()) < 1e-12);
      CHECK(theta_complex(a, {-b, 0.0}, p) == c);
    }
    const SpectralParams p(6, 1, 0.9);
    const double a0 = a_m(0, p);
    CHECK(std::abs(theta({a0, SymbolB::imaginary(1e-5)}, p) - theta({a0, SymbolB::real(0.0)}, p)) <= 1e-8);
    const double beta = 0.37;
    CHECK(rel_err(theta({a0 + 1, SymbolB::imaginary(beta)}, p), theta_complex(a0 + 1, {0.0, beta}, p).real()) <
          1e-13);
  }

  TEST_CASE("ratio identity over the grid") {
    for (int n = 4; n <= 12; ++n) {
      for (double g = 0.1; g < 0.5 * n - 1.05 + 1e-9; g += 0.1) {
        const SpectralParams p(n, 1, g, GammaPolicy::allow_integer);
        const double ratio = (n + 2 * g - 2) / (n - 2 * g - 2);
        CHECK(rel_err(theta_eigenvalue(1, 0.0, p), ratio * theta_eigenvalue(0, 0.0, p)) < 1e-10);
      }
    }
  }

  TEST_CASE("log-derivative signs and routes") {
    const auto p5 = extended(5, 1, 1.0);
    const double a0 = a_m(0, p5);
    const HalfAxisPoint corner{a0, SymbolB::imaginary(0.5)};
    CHECK(dlog_theta(corner, p5, Direction::a) > 0.0);
    CHECK(dlog_theta(corner, p5, Direction::beta) < 0.0);
    const HalfAxisPoint real_pt{a0, SymbolB::real(0.5)};
    const double d = dlog_theta(real_pt, p5, Direction::b);
    CHECK(d > 0.0);
    const double h = 1e-5;
    const double fd = (std::log(theta({a0, SymbolB::real(0.5 + h)}, p5)) -
                       std::log(theta({a0, SymbolB::real(0.5 - h)}, p5))) / (2 * h);
    CHECK(std::abs(fd - d) < 1e-6);
    for (auto dir : {Direction::a, Direction::beta}) {
      CHECK(std::abs(dlog_theta(corner, p5, dir, DerivativeRoute::series) - dlog_theta(corner, p5, dir)) < 1e-9);
    }
    for (auto dir : {Direction::a, Direction::b}) {
      CHECK(std::abs(dlog_theta(real_pt, p5, dir, DerivativeRoute::series) - dlog_theta(real_pt, p5, dir)) < 1e-9);
    }
    CHECK_THROWS_AS(dlog_theta(corner, p5, Direction::b), DomainError);
    CHECK_THROWS_AS(dlog_theta(real_pt, p5, Direction::beta), DomainError);
    CHECK_THROWS_AS(dlog_theta({a0, SymbolB::real(0.0)}, p5, Direction::b), DomainError);
  }

  TEST_CASE("ordering in m and lambda") {
    const SpectralParams p(8, 1, 1.7);
    for (int m = 0; m < 15; ++m) CHECK(theta_eigenvalue(m + 1, 0.0, p) > theta_eigenvalue(m, 0.0, p));
    double prev = theta_eigenvalue(2, 0.0, p);
    for (double lambda = 0.01; lambda < 60.0; lambda += 0.01) {
      const double v = theta_eigenvalue(2, lambda, p);
      CHECK(v >= prev);
      prev = v;
    }
  }

  TEST_CASE("regime and pole errors") {
    const SpectralParams outside(5, 1, 1.6);
    CHECK_THROWS_AS(theta_eigenvalue(0, 1.0, outside), RegimeError);
    CHECK_THROWS_AS(theta_eigenvalue(0, 1.0, SpectralParams(5, 0, 0.6)), RegimeError);
    CHECK_THROWS_AS(q_gamma_trivial(outside), RegimeError);
    CHECK_NOTHROW(q_gamma_trivial(SpectralParams(5, 0, 0.6)));
    const SpectralParams p(6, 1, 0.9);
    CHECK_THROWS_AS(theta({a_m(0, p) - 0.1, SymbolB::real(1.0)}, p), RegimeError);
    CHECK_THROWS_AS(theta({a_m(0, p), SymbolB::imaginary(0.6)}, p), RegimeError);
    CHECK_THROWS_AS(q_gamma_formula(5, 1, 1.5), PoleError);
    CHECK(q_gamma_formula(5, 1, 2.0) == doctest::Approx(-0.9375));
    CHECK_THROWS_AS(d_gamma_normalizer(1.0), PoleError);
    CHECK_THROWS_AS(d_gamma_normalizer(-0.5), DomainError);
    const double near_one = d_gamma_normalizer(0.999);
    CHECK(std::isfinite(near_one));
  }

  TEST_CASE("ThetaGrid matches per-cell calls") {
    const SpectralParams p(6, 1, 0.9);
    const std::vector<double> lambdas{0.0, 0.1, 0.25, 0.8, 3.0, 12.0};
    const ThetaGrid grid(p, 3, lambdas);
    CHECK(grid.rows() == 4);
    CHECK(grid.cols() == 6);
    for (std::size_t m = 0; m < grid.rows(); ++m) {
      for (std::size_t l = 0; l < grid.cols(); ++l) {
        CHECK(grid.at(m, l) == theta_eigenvalue(static_cast<int>(m), lambdas[l], p));
      }
    }
  }
}
