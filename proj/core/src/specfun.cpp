#include "relpol/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "relpol/errors.hpp"

namespace relpol::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_non_positive_integer(double x) {
  return x <= 0.0 && std::floor(x) == x;
}

std::string describe(const Hyp3F2Params& p) {
  std::ostringstream os;
  os.precision(17);
  os << "3F2(" << p.a1 << ", " << p.a2 << ", " << p.a3 << "; " << p.b1 << ", "
     << p.b2 << "; 1)";
  return os.str();
}

double term_ratio(const Hyp3F2Params& p, double k) {
  return ((p.a1 + k) * (p.a2 + k) * (p.a3 + k)) /
         ((p.b1 + k) * (p.b2 + k) * (k + 1.0));
}

// Asymptotic expansion of the remainder R_K = sum_{k>=K} t_k = t_K phi(K),
// phi(K) ~ sum_j c_j K^{1-j}. The coefficients follow from
// phi(K) = 1 + rho(K) phi(K+1), rho the term ratio, expanded in x = 1/K.
class RemainderExpansion {
 public:
  static constexpr int kOrder = 32;

  explicit RemainderExpansion(const Hyp3F2Params& p) {
    // rho(x) = (1+a1 x)(1+a2 x)(1+a3 x) / ((1+b1 x)(1+b2 x)(1+x))
    std::vector<double> r(kOrder + 3, 0.0);
    r[0] = 1.0;
    const auto times_linear = [&r](double a) {
      for (std::size_t i = r.size() - 1; i > 0; --i) r[i] += a * r[i - 1];
    };
    const auto divide_linear = [&r](double b) {
      for (std::size_t i = 1; i < r.size(); ++i) r[i] -= b * r[i - 1];
    };
    times_linear(p.a1);
    times_linear(p.a2);
    times_linear(p.a3);
    divide_linear(p.b1);
    divide_linear(p.b2);
    divide_linear(1.0);

    // generalized binomial C(1 - j, l)
    const auto binom = [](int upper, int l) {
      double v = 1.0;
      for (int t = 0; t < l; ++t) v *= static_cast<double>(upper - t) / (t + 1);
      return v;
    };

    coeffs_.reserve(kOrder + 1);
    for (int n = 1; n <= kOrder + 1; ++n) {
      double acc = (n == 1) ? 1.0 : 0.0;
      for (int j = 0; j <= n - 2; ++j) {
        double inner = 0.0;
        for (int i = 0; i <= n - j; ++i) inner += r[i] * binom(1 - j, n - j - i);
        acc += coeffs_[j] * inner;
      }
      coeffs_.push_back(-acc / (r[1] + 2.0 - n));
    }
  }

  struct Estimate {
    double phi;
    double error;
  };

  // Sums the expansion up to its smallest term; that term bounds the error.
  [[nodiscard]] Estimate evaluate(double k) const {
    double phi = 0.0;
    double power = k;
    double last = std::numeric_limits<double>::infinity();
    for (double c : coeffs_) {
      const double term = c * power;
      if (std::fabs(term) > std::fabs(last)) break;
      phi += term;
      last = term;
      if (std::fabs(term) <= kEps * std::fabs(phi)) break;
      power /= k;
    }
    return {phi, std::fabs(last) + 4.0 * kEps * std::fabs(phi)};
  }

 private:
  std::vector<double> coeffs_;
};

double direct_tail_divisor(double excess) {
  // pure power-law remainder is |t_K| K / s; the spare unit covers the
  // 1/k^2 corrections of the term ratio while s is comfortably above 1
  return excess >= 2.0 ? excess - 1.0 : 0.5 * excess;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma requires a finite positive argument");
  }
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double gamma_ratio(std::span<const double> numerators,
                   std::span<const double> denominators) {
  CompensatedSum log_sum;
  for (double x : numerators) log_sum += log_gamma(x);
  for (double x : denominators) log_sum += -log_gamma(x);
  return std::exp(log_sum.value());
}

double gamma_ratio(std::initializer_list<double> numerators,
                   std::initializer_list<double> denominators) {
  return gamma_ratio(std::span<const double>(numerators.begin(), numerators.size()),
                     std::span<const double>(denominators.begin(), denominators.size()));
}

double rising_factorial(double c, int n) {
  if (n < 0) throw DomainError("rising_factorial requires n >= 0");
  double v = 1.0;
  for (int j = 0; j < n; ++j) v *= c + j;
  return v;
}

double laguerre(int n, double alpha, double x) {
  if (n < -1) throw DomainError("laguerre requires n >= -1");
  if (!(alpha > -1.0)) throw DomainError("laguerre requires alpha > -1");
  if (n == -1) return 0.0;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

SeriesValue hyp3f2_unit(const Hyp3F2Params& p, double tol, Hyp3F2Summation mode) {
  for (double v : {p.a1, p.a2, p.a3, p.b1, p.b2}) {
    if (!std::isfinite(v)) throw DomainError(describe(p) + ": non-finite parameter");
  }
  if (!(tol >= kMinTolerance) || !std::isfinite(tol)) {
    throw DomainError("hyp3f2_unit: tolerance must be >= 1e-17");
  }
  if (is_non_positive_integer(p.b1) || is_non_positive_integer(p.b2)) {
    throw DomainError(describe(p) + ": denominator parameter is a pole");
  }

  std::optional<double> truncation;
  for (double a : {p.a1, p.a2, p.a3}) {
    if (is_non_positive_integer(a)) {
      truncation = truncation ? std::min(*truncation, -a) : -a;
    }
  }
  if (truncation) {
    if (*truncation >= static_cast<double>(kMaxTerms)) {
      throw ConvergenceError(describe(p) + ": terminating series longer than term cap");
    }
    const auto last = static_cast<std::size_t>(*truncation);
    CompensatedSum sum;
    double t = 1.0;
    for (std::size_t k = 0; k <= last; ++k) {
      sum += t;
      t *= term_ratio(p, static_cast<double>(k));
    }
    return {sum.value(), {last + 1, 0.0, true}};
  }

  const double excess = p.excess();
  if (!(excess > 0.0)) {
    throw ConvergenceError(describe(p) + " diverges: b1+b2-a1-a2-a3 <= 0");
  }

  const double scale =
      std::max({1.0, std::fabs(p.a1), std::fabs(p.a2), std::fabs(p.a3),
                std::fabs(p.b1), std::fabs(p.b2)});
  // beyond this index every factor of the term ratio is positive and the
  // 1/k expansion of the ratio converges geometrically
  const auto asymptotic_start =
      std::max<std::size_t>(32, static_cast<std::size_t>(std::ceil(4.0 * scale)));
  const double divisor = direct_tail_divisor(excess);

  std::optional<RemainderExpansion> expansion;
  std::size_t next_asymptotic_try = asymptotic_start;

  CompensatedSum sum;
  double t = 1.0;
  for (std::size_t k = 0; k < kMaxTerms; ++k) {
    sum += t;
    const double kk = static_cast<double>(k);
    const double t_next = t * term_ratio(p, kk);
    const std::size_t used = k + 1;
    const double partial = sum.value();
    const double magnitude = std::max(std::fabs(partial), std::numeric_limits<double>::min());

    if (t_next == 0.0) return {partial, {used, 0.0, true}};

    if (kk + 1.0 > 2.0 * scale && std::fabs(t_next) <= std::fabs(t)) {
      const double bound = std::fabs(t_next) * (kk + 1.0) / divisor;
      if (bound <= tol * magnitude) {
        return {partial, {used, bound / magnitude, true}};
      }
    }

    if (mode == Hyp3F2Summation::automatic && used == next_asymptotic_try) {
      if (!expansion) expansion.emplace(p);
      const auto est = expansion->evaluate(static_cast<double>(used));
      const double total = partial + t_next * est.phi;
      const double error = std::fabs(t_next) * est.error;
      const double total_magnitude = std::max(std::fabs(total), std::numeric_limits<double>::min());
      if (error <= tol * total_magnitude) {
        return {total, {used, error / total_magnitude, true}};
      }
      next_asymptotic_try *= 2;
    }
    t = t_next;
  }
  throw ConvergenceError(describe(p) + ": tolerance not met within term cap");
}

double hyp3f2_contiguous_rhs(const Hyp3F2Params& p, double tol) {
  if (p.b1 != p.a3 + 1.0) {
    throw DomainError(describe(p) + ": contiguous relation needs b1 == a3 + 1");
  }
  const double b = p.b2;
  const double gap = b - p.a3 - 1.0;
  if (!(b - p.a1 - p.a2 > -1.0)) {
    throw DomainError(describe(p) + ": contiguous relation needs b - a1 - a2 > -1");
  }
  if (gap == 0.0 || p.a3 + 1.0 == 0.0) {
    throw DomainError(describe(p) + ": contiguous relation is singular");
  }
  for (double arg : {b, b - p.a1 - p.a2 + 1.0, b - p.a1, b - p.a2}) {
    if (!(arg > 0.0)) {
      throw DomainError(describe(p) + ": contiguous relation needs positive Gamma arguments");
    }
  }
  const double closed = gamma_ratio({b, b - p.a1 - p.a2 + 1.0}, {b - p.a1, b - p.a2}) / gap;
  const double coeff =
      (p.a1 - p.a3 - 1.0) * (p.a2 - p.a3 - 1.0) / ((p.a3 + 1.0) * gap);
  const auto shifted = hyp3f2_unit({p.a1, p.a2, p.a3 + 1.0, p.a3 + 2.0, b}, tol);
  return closed - coeff * shifted.value;
}

}  // namespace relpol::specfun
