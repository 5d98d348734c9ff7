#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "relpol/errors.hpp"
#include "relpol/quadrature.hpp"
#include "relpol/specfun.hpp"

using namespace relpol;
using namespace relpol::specfun;

namespace {

using mp50 = boost::multiprecision::cpp_bin_float_50;
using mp100 = boost::multiprecision::cpp_bin_float_100;

double ulp(double x) {
  x = std::fabs(x);
  return std::nextafter(x, std::numeric_limits<double>::infinity()) - x;
}

double gauss_2f1(double a, double b, double c) {
  return std::exp(log_gamma(c) + log_gamma(c - a - b) - log_gamma(c - a) - log_gamma(c - b));
}

}  // namespace

TEST(LogGamma, MatchesFiftyDigitReference) {
  double worst = 0.0;
  for (int i = 1; i <= 30000; ++i) {
    const double x = i * 0.01 + 1.23e-6 * i / 30000.0;
    const mp50 ref = boost::math::lgamma(mp50(x));
    const double r = ref.convert_to<double>();
    if (r == 0.0) continue;
    const mp50 diff = mp50(log_gamma(x)) - ref;
    worst = std::max(worst, std::fabs(diff.convert_to<double>()) / ulp(r));
  }
  EXPECT_LE(worst, 3.0);
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-2.5), DomainError);
  EXPECT_THROW(log_gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(GammaRatio, SmallIntegers) {
  EXPECT_NEAR(gamma_ratio({5.0}, {3.0}), 12.0, 1e-13);
  EXPECT_NEAR(gamma_ratio({0.5, 0.5}, {1.0}), std::numbers::pi, 1e-14);
}

TEST(RisingFactorial, ProductForm) {
  EXPECT_EQ(rising_factorial(3.0, 0), 1.0);
  EXPECT_EQ(rising_factorial(3.0, 3), 60.0);
  EXPECT_EQ(rising_factorial(-1.0, 3), 0.0);
  EXPECT_THROW(rising_factorial(1.0, -1), DomainError);
}

TEST(CompensatedSum, RecoversCancellation) {
  CompensatedSum s;
  s += 1.0;
  for (int i = 0; i < 1000; ++i) s += 1e-17;
  s += -1.0;
  EXPECT_NEAR(s.value(), 1e-14, 1e-26);
}

TEST(Hyp3F2, TruncatingSaalschutz) {
  // 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
  const double tol = 1e-16;
  for (int n : {1, 2, 5, 12}) {
    const double a = 0.37, b = 1.9, c = 2.6;
    const auto v = hyp3f2_unit({-double(n), a, b, c, 1.0 + a + b - c - n}, tol);
    const double expected = rising_factorial(c - a, n) * rising_factorial(c - b, n) /
                            (rising_factorial(c, n) * rising_factorial(c - a - b, n));
    EXPECT_NEAR(v.value, expected, 10 * tol * std::fabs(expected) + 4e-16) << n;
    EXPECT_EQ(v.diagnostics.terms_used, static_cast<std::size_t>(n + 1));
    EXPECT_EQ(v.diagnostics.tail_estimate, 0.0);
  }
}

TEST(Hyp3F2, TwoTermTruncation) {
  // a1 = -1 leaves 1 + a2 a3 / (b1 b2)
  const auto v = hyp3f2_unit({-1.0, -1.0, 1.0, 2.0, 2.2}, 1e-16);
  EXPECT_NEAR(v.value, 1.0 + 1.0 / 4.4, 1e-15);
}

TEST(Hyp3F2, GaussReduction) {
  const double tol = 1e-15;
  const struct {
    double a, b, c, d;
  } cases[] = {{0.5, 0.5, 1.7, 2.5}, {0.3, 1.2, 3.3, 4.1}, {-0.4, 0.9, 0.6, 1.9}, {2.0, 1.5, 7.0, 5.2}};
  for (const auto& k : cases) {
    const double expected = gauss_2f1(k.a, k.b, k.d);
    const auto v = hyp3f2_unit({k.a, k.b, k.c, k.c, k.d}, tol);
    EXPECT_NEAR(v.value, expected, 10 * tol * std::fabs(expected)) << k.a << " " << k.d;
  }
}

TEST(Hyp3F2, FourOverPi) {
  // 2F1(-1/2, -1/2; 1; 1) = 4/pi
  const double tol = 1e-15;
  const auto v = hyp3f2_unit({-0.5, -0.5, 3.0, 3.0, 1.0}, tol);
  EXPECT_NEAR(v.value, 4.0 / std::numbers::pi, 10 * tol * 4.0 / std::numbers::pi);
}

TEST(Hyp3F2, ContiguousRelationOnRandomParameters) {
  std::mt19937_64 rng(20260415);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double tol = 1e-15;
  int checked = 0;
  while (checked < 1000) {
    const double a1 = -0.9 + 3.9 * u(rng);
    const double a2 = -0.9 + 3.9 * u(rng);
    const double a3 = -0.9 + 3.9 * u(rng);
    const double s = 0.5 + 3.5 * u(rng);
    const double b = s - 1.0 + a1 + a2;
    if (b <= 0.05 || b - a1 <= 0.05 || b - a2 <= 0.05 || std::fabs(b - a3 - 1.0) < 0.1) continue;
    const Hyp3F2Params p{a1, a2, a3, a3 + 1.0, b};
    const double lhs = hyp3f2_unit(p, tol).value;
    const double rhs = hyp3f2_contiguous_rhs(p, tol);
    // the right side is a difference; measure against its larger piece
    const double gap = b - a3 - 1.0;
    const double closed = gamma_ratio({b, b - a1 - a2 + 1.0}, {b - a1, b - a2}) / gap;
    const double scale = std::max({std::fabs(lhs), std::fabs(closed), std::fabs(closed - rhs)});
    ASSERT_LE(std::fabs(lhs - rhs), 100 * tol * scale)
        << a1 << " " << a2 << " " << a3 << " " << b;
    ++checked;
  }
}

TEST(Hyp3F2, DirectTailBoundIsHonest) {
  const double tol = 1e-10;
  const Hyp3F2Params cases[] = {
      {0.5, 0.5, 1.0, 2.0, 2.0}, {0.3, 2.2, 4.1, 5.1, 4.0}, {1.5, 2.5, 3.0, 4.0, 6.5}};
  for (const auto& p : cases) {
    const auto v = hyp3f2_unit(p, tol, Hyp3F2Summation::direct);
    const auto reference = hyp3f2_unit(p, 1e-16);
    ASSERT_TRUE(v.diagnostics.converged);
    const double actual = std::fabs(v.value - reference.value) / std::fabs(reference.value);
    EXPECT_LE(actual, v.diagnostics.tail_estimate + 1e-15);
    EXPECT_LE(v.diagnostics.tail_estimate, tol);
  }
}

TEST(Hyp3F2, TailShrinksWithLongerSum) {
  const Hyp3F2Params p{0.2, 0.7, 1.1, 1.9, 2.6};
  const auto shortv = hyp3f2_unit(p, 1e-6, Hyp3F2Summation::direct);
  const auto longv = hyp3f2_unit(p, 1e-7, Hyp3F2Summation::direct);
  EXPECT_GT(longv.diagnostics.terms_used, shortv.diagnostics.terms_used);
  EXPECT_LT(longv.diagnostics.tail_estimate, shortv.diagnostics.tail_estimate);
}

TEST(Hyp3F2, SlowSeriesAccelerated) {
  // excess 1/2, so the plain partial sums crawl
  const auto v = hyp3f2_unit({0.25, 0.25, 1.3, 1.3, 1.0}, 1e-15);
  EXPECT_NEAR(v.value, gauss_2f1(0.25, 0.25, 1.0), 1e-14);
}

TEST(Hyp3F2, Errors) {
  EXPECT_THROW(hyp3f2_unit({1.0, 1.0, 1.0, 1.0, 1.5}, 1e-12), ConvergenceError);
  EXPECT_THROW(hyp3f2_unit({1.0, 1.0, 1.0, -2.0, 5.0}, 1e-12), DomainError);
  EXPECT_THROW(hyp3f2_unit({1.0, 1.0, 1.0, 3.0, 5.0}, 1e-18), DomainError);
  EXPECT_THROW(hyp3f2_unit({1.0, std::nan(""), 1.0, 3.0, 5.0}, 1e-12), DomainError);
  EXPECT_THROW(hyp3f2_contiguous_rhs({1.0, 1.0, 1.0, 3.0, 5.0}, 1e-12), DomainError);
}

TEST(Laguerre, RecurrenceResiduals) {
  for (double alpha : {0.0, 0.37, 1.5, 5.9}) {
    for (double x : {0.01, 0.7, 3.0, 17.0, 60.0}) {
      for (int n = 1; n < 200; ++n) {
        const double lm = laguerre(n - 1, alpha, x);
        const double l0 = laguerre(n, alpha, x);
        const double lp = laguerre(n + 1, alpha, x);
        const double residual = (n + 1.0) * lp - (2.0 * n + 1.0 + alpha - x) * l0 + (n + alpha) * lm;
        const double scale = (n + 1.0) * std::fabs(lp) +
                             std::fabs(2.0 * n + 1.0 + alpha - x) * std::fabs(l0) +
                             (n + alpha) * std::fabs(lm);
        ASSERT_LE(std::fabs(residual), 8 * std::numeric_limits<double>::epsilon() * scale)
            << n << " " << alpha << " " << x;
      }
    }
  }
}

TEST(Laguerre, ExplicitSum) {
  // L_n^a(x) = sum_k (-1)^k binom(n+a, n-k) x^k / k! in 100-digit arithmetic
  for (double alpha : {0.0, 0.5, 2.25}) {
    for (double x : {0.3, 4.0, 12.0}) {
      for (int n : {0, 1, 2, 7, 30, 60}) {
        mp100 sum = 0;
        mp100 xk = 1;
        for (int k = 0; k <= n; ++k) {
          mp100 binom = 1;
          for (int j = 1; j <= n - k; ++j) binom = binom * (mp100(alpha) + k + j) / j;
          mp100 fact = 1;
          for (int j = 2; j <= k; ++j) fact *= j;
          sum += ((k % 2) ? -1 : 1) * binom * xk / fact;
          xk *= mp100(x);
        }
        const double ref = sum.convert_to<double>();
        EXPECT_NEAR(laguerre(n, alpha, x), ref, 1e-12 * std::max(1.0, std::fabs(ref)))
            << n << " " << alpha << " " << x;
      }
    }
  }
}

TEST(Laguerre, MomentFormulaByQuadrature) {
  // int rho^g e^-rho L_n^(a)(rho) = Gamma(g+1) Gamma(n+a-g) / (n! Gamma(a-g))
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 10);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = pick(rng);
    const double a = 6.0 * u(rng);
    const double g = -0.9 + 6.9 * u(rng);
    const quadrature::GaussLaguerre rule(200, g);
    const double numeric = rule.integrate([&](double rho) { return laguerre(n, a, rho); });
    const double closed =
        std::exp(log_gamma(g + 1.0) - log_gamma(n + 1.0)) * rising_factorial(a - g, n);
    EXPECT_NEAR(numeric, closed, 1e-11 * std::fabs(closed)) << n << " " << a << " " << g;
  }
}

TEST(Laguerre, Domain) {
  EXPECT_EQ(laguerre(-1, 0.5, 2.0), 0.0);
  EXPECT_EQ(laguerre(0, 0.5, 2.0), 1.0);
  EXPECT_THROW(laguerre(-2, 0.5, 1.0), DomainError);
  EXPECT_THROW(laguerre(3, -1.0, 1.0), DomainError);
}
