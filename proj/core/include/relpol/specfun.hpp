#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>

namespace relpol::specfun {

/// Smallest relative tolerance accepted by the series kernels.
inline constexpr double kMinTolerance = 1e-17;

/// Hard cap on the number of terms summed by any infinite series.
inline constexpr std::size_t kMaxTerms = 200000;

struct SeriesDiagnostics {
  std::size_t terms_used = 0;
  /// Estimated relative size of what was not summed exactly.
  double tail_estimate = 0.0;
  bool converged = false;
};

struct SeriesValue {
  double value = 0.0;
  SeriesDiagnostics diagnostics;
};

/// Parameters of 3F2(a1, a2, a3; b1, b2; 1).
struct Hyp3F2Params {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;

  /// b1 + b2 - a1 - a2 - a3; the series at unit argument converges iff > 0
  /// (or it truncates).
  [[nodiscard]] double excess() const { return b1 + b2 - a1 - a2 - a3; }
};

/// How hyp3f2_unit sums a non-terminating series.
enum class Hyp3F2Summation {
  /// Direct summation that switches to an asymptotic remainder once the term
  /// index is large compared with every parameter.
  automatic,
  /// Direct summation only; stops when |t_K| K / (s - 1) drops below tol.
  direct,
};

/// Error-free accumulation (TwoSum on every addition, errors summed apart).
class CompensatedSum {
 public:
  void add(double x) {
    const double s = sum_ + x;
    const double bp = s - sum_;
    const double err = (sum_ - (s - bp)) + (x - bp);
    sum_ = s;
    compensation_ += err;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  [[nodiscard]] double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// prod Gamma(numerators) / prod Gamma(denominators), formed from summed
/// log-gamma values. Every argument must be positive.
double gamma_ratio(std::span<const double> numerators,
                   std::span<const double> denominators);
double gamma_ratio(std::initializer_list<double> numerators,
                   std::initializer_list<double> denominators);

/// Pochhammer symbol (c)_n = c (c+1) ... (c+n-1) for n >= 0.
double rising_factorial(double c, int n);

/// Generalized Laguerre polynomial L_n^(alpha)(x) by the three-term
/// recurrence. L_{-1} is defined as 0.
double laguerre(int n, double alpha, double x);

/// 3F2(a1, a2, a3; b1, b2; 1) to relative accuracy tol.
///
/// Terminating series (some a_i a non-positive integer) are summed exactly.
/// Otherwise the series must satisfy excess() > 0. Terms follow from the
/// ratio t_{k+1}/t_k = (a1+k)(a2+k)(a3+k) / ((b1+k)(b2+k)(k+1)) and are
/// accumulated with CompensatedSum.
///
/// Throws DomainError for b1 or b2 in {0, -1, -2, ...} or tol below
/// kMinTolerance, ConvergenceError if the series diverges or the tolerance is
/// not met within kMaxTerms terms.
SeriesValue hyp3f2_unit(const Hyp3F2Params& p, double tol,
                        Hyp3F2Summation mode = Hyp3F2Summation::automatic);

/// Right-hand side of the contiguous relation
///
///   3F2(a1, a2, a3; a3+1, b; 1)
///     = Gamma(b) Gamma(b-a1-a2+1) / [(b-a3-1) Gamma(b-a1) Gamma(b-a2)]
///       - (a1-a3-1)(a2-a3-1) / [(a3+1)(b-a3-1)] 3F2(a1, a2, a3+1; a3+2, b; 1)
///
/// Requires b1 == a3 + 1 exactly, b - a1 - a2 > -1, b != a3 + 1, and positive
/// Gamma arguments. Throws DomainError otherwise.
double hyp3f2_contiguous_rhs(const Hyp3F2Params& p, double tol);

}  // namespace relpol::specfun
