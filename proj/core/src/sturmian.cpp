#include "relpol/sturmian.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "relpol/errors.hpp"
#include "relpol/quadrature.hpp"

namespace relpol::sturmian {

namespace {

using specfun::log_gamma;

void require_dipole_channel(const ChannelIndex& ch) {
  if (ch.dimension() != Dimension::planar || (ch.twice_kappa() != 1 && ch.twice_kappa() != -3)) {
    throw DomainError("only the dipole channels kappa = 1/2 and kappa = -3/2 are supported");
  }
}

void require_planar(const AtomSpec& spec) {
  if (spec.dimension() != Dimension::planar) {
    throw DomainError("Sturmian functions are implemented for the planar atom");
  }
}

struct Ingredients {
  double Z;
  double kappa;
  double g_half;   // gamma_{1/2}
  double g_kappa;  // gamma_kappa
  double N;
  int m;  // |n_r|
};

Ingredients ingredients(const SturmianIndex& idx, const AtomSpec& spec) {
  require_planar(spec);
  return {spec.Z(), idx.channel.kappa(), gamma_kappa(spec, ChannelIndex::planar(1)),
          gamma_kappa(spec, idx.channel), n_cap(idx, spec), std::abs(idx.n_r)};
}

// Gamma(gk+g1+2) Gamma(m+c-1) / [Gamma(c) sqrt(2 m! N(N-k) Gamma(2g1+1) Gamma(m+2gk+1))]
double common_factor(const Ingredients& in) {
  const double c = in.g_kappa - in.g_half - 1.0;
  const double log_common =
      log_gamma(in.g_kappa + in.g_half + 2.0) -
      0.5 * (std::log(2.0) + log_gamma(in.m + 1.0) + std::log(in.N * (in.N - in.kappa)) +
             log_gamma(2.0 * in.g_half + 1.0) + log_gamma(in.m + 2.0 * in.g_kappa + 1.0));
  if (in.m == 0) return std::exp(log_common) / (c - 1.0);
  if (in.m == 1) return std::exp(log_common);
  constexpr int kDirectProduct = 16;
  if (c > 0.0 && in.m - 1 > kDirectProduct) {
    return std::exp(log_common + log_gamma(in.m - 1.0 + c) - log_gamma(c));
  }
  return std::exp(log_common) * specfun::rising_factorial(c, in.m - 1);
}

// int r P S dr from the Laguerre moment formula
// int rho^g e^-rho L_n^(a) = Gamma(g+1) (a-g)_n / n!
double integral_PS(const Ingredients& in) {
  const double c = in.g_kappa - in.g_half - 1.0;
  const double two_gk = 2.0 * in.g_kappa;
  const double log_AP = 0.5 * (std::log(2.0 * in.Z * (1.0 + 2.0 * in.g_half)) -
                               log_gamma(2.0 * in.g_half + 1.0));
  const double log_AS = 0.5 * (std::log(1.0 + 2.0 * in.g_half) + log_gamma(in.m + 1.0) +
                               std::log(in.m + two_gk) -
                               std::log(4.0 * in.Z * in.N * (in.N - in.kappa)) -
                               log_gamma(in.m + two_gk));
  const double q = (in.N - in.kappa) / (in.m + two_gk);
  double bracket = -q * specfun::rising_factorial(c, in.m) / std::exp(log_gamma(in.m + 1.0));
  if (in.m >= 1) bracket += specfun::rising_factorial(c, in.m - 1) / std::exp(log_gamma(in.m));
  return std::exp(log_AP + log_AS + log_gamma(in.g_kappa + in.g_half + 2.0)) /
         (16.0 * in.Z * in.Z) * bracket;
}

}  // namespace

SturmianIndex SturmianIndex::make(int n_r, const ChannelIndex& channel) {
  if (channel.dimension() != Dimension::planar) {
    throw DomainError("Sturmian index needs a planar channel");
  }
  if (channel.twice_kappa() == -1) {
    throw DomainError("the Sturmian expansion excludes kappa = -1/2");
  }
  return {n_r, channel};
}

double n_cap(const SturmianIndex& idx, const AtomSpec& spec) {
  const double kappa = idx.channel.kappa();
  if (idx.n_r == 0) return -kappa;
  const double g = gamma_kappa(spec, idx.channel);
  const double n = std::abs(idx.n_r);
  const double magnitude = std::sqrt(n * n + 2.0 * n * g + kappa * kappa);
  return idx.n_r > 0 ? magnitude : -magnitude;
}

double mu(const SturmianIndex& idx, const AtomSpec& spec) {
  const double g_half = gamma_kappa(spec, ChannelIndex::planar(1));
  return (std::abs(idx.n_r) + gamma_kappa(spec, idx.channel) + n_cap(idx, spec)) /
         (g_half + 0.5);
}

namespace {

// S and T with the factor rho^gamma_kappa e^{-rho/2} taken out
SturmianPair stripped_ST(const Ingredients& in, double rho) {
  const double two_gk = 2.0 * in.g_kappa;
  const double log_norm = log_gamma(in.m + 1.0) + std::log(in.m + two_gk) -
                          std::log(4.0 * in.Z * in.N * (in.N - in.kappa)) -
                          log_gamma(in.m + two_gk);
  const double norm = std::exp(0.5 * log_norm);
  const double lower = specfun::laguerre(in.m - 1, two_gk, rho);
  const double upper = specfun::laguerre(in.m, two_gk, rho);
  const double q = (in.N - in.kappa) / (in.m + two_gk);
  return {std::sqrt(1.0 + 2.0 * in.g_half) * norm * (lower - q * upper),
          -std::sqrt(1.0 - 2.0 * in.g_half) * norm * (lower + q * upper)};
}

}  // namespace

SturmianPair sturmian_ST(const SturmianIndex& idx, const AtomSpec& spec, double r) {
  if (!(r > 0.0)) throw DomainError("sturmian_ST requires r > 0");
  const auto in = ingredients(idx, spec);
  const double rho = 4.0 * in.Z * r;
  const double shape = std::exp(in.g_kappa * std::log(rho) - 0.5 * rho);
  const auto st = stripped_ST(in, rho);
  return {shape * st.S, shape * st.T};
}

RadialIntegralPair first_order_integral(const SturmianIndex& idx, const AtomSpec& spec) {
  require_dipole_channel(idx.channel);
  const auto in = ingredients(idx, spec);
  const double scale = common_factor(in);
  const double Z2 = in.Z * in.Z;
  const double shifted = in.m + in.g_kappa - in.g_half - 2.0;
  const double mixed = shifted - 2.0 * in.g_half * (in.N + in.kappa);
  const double n_minus_k = in.N - in.kappa;

  const double plain = -n_minus_k * mixed / (8.0 * Z2) * scale;

  const double mu_value = mu(idx, spec);
  const double denom = in.m + in.g_kappa - in.g_half;
  double weighted = 0.0;
  if (denom == 0.0) {
    // kappa = 1/2, n_r = 0: the closed form is 0/0 here; go through
    // int r [mu P S + Q T] = plain + (mu - 1) int r P S
    weighted = plain + (mu_value - 1.0) * integral_PS(in);
  } else {
    const double brace = 2.0 * in.g_half * shifted - (in.N + in.kappa) +
                         (in.N + 0.5) / denom * mixed;
    weighted = -(mu_value - 1.0) * n_minus_k / (16.0 * Z2) * scale * brace;
  }
  return {plain, weighted};
}

RadialIntegralPair first_order_integral_quadrature(const SturmianIndex& idx,
                                                  const AtomSpec& spec, std::size_t nodes) {
  require_dipole_channel(idx.channel);
  const auto in = ingredients(idx, spec);
  const auto ground = ground_state_radial(spec);
  // with rho = 4 Z r the integrands are rho^(g1+gk+1) e^-rho times a polynomial
  const quadrature::GaussLaguerre rule(nodes, in.g_half + in.g_kappa + 1.0);
  const double scale = 1.0 / (16.0 * in.Z * in.Z);
  const double mu_value = mu(idx, spec);
  const double plain = rule.integrate([&](double rho) {
    const auto st = stripped_ST(in, rho);
    return ground.norm_P * st.S + ground.norm_Q * st.T;
  });
  const double weighted = rule.integrate([&](double rho) {
    const auto st = stripped_ST(in, rho);
    return mu_value * ground.norm_P * st.S + ground.norm_Q * st.T;
  });
  return {scale * plain, scale * weighted};
}

specfun::SeriesValue r_channel_series(const ChannelIndex& ch, const AtomSpec& spec,
                                      double tol) {
  require_dipole_channel(ch);
  require_planar(spec);
  if (!(tol >= 1e-12) || !std::isfinite(tol)) {
    throw DomainError("r_channel_series requires tol >= 1e-12");
  }

  const auto term = [&](int n_r) {
    const auto idx = SturmianIndex::make(n_r, ch);
    const auto integrals = first_order_integral(idx, spec);
    return integrals.plain * integrals.mu_weighted / (mu(idx, spec) - 1.0);
  };

  constexpr int kQuietPairs = 5;
  specfun::CompensatedSum sum;
  sum += term(0);
  double previous = std::numeric_limits<double>::quiet_NaN();
  int quiet = 0;
  for (int n = 1; 2 * static_cast<std::size_t>(n) + 1 <= specfun::kMaxTerms; ++n) {
    const double pair = term(n) + term(-n);
    sum += pair;
    const double total = sum.value();
    const double magnitude = std::max(std::fabs(total), std::numeric_limits<double>::min());
    quiet = std::fabs(pair) < tol * magnitude ? quiet + 1 : 0;

    double tail = std::numeric_limits<double>::infinity();
    if (pair == 0.0 && previous == 0.0) {
      tail = 0.0;
    } else if (n >= 4 && pair != 0.0 && previous * pair > 0.0) {
      // local power-law exponent of the pair sequence
      const double p = std::log(previous / pair) / std::log(n / (n - 1.0));
      if (p > 1.0) tail = std::fabs(pair) * n / (p - 1.0);
    }
    previous = pair;

    if (quiet >= kQuietPairs && tail <= tol * magnitude) {
      return {total, {2 * static_cast<std::size_t>(n) + 1, tail / magnitude, true}};
    }
  }
  throw ConvergenceError("Sturmian series for R_kappa did not converge within the term cap");
}

}  // namespace relpol::sturmian
