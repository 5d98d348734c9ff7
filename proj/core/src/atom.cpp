#include "relpol/atom.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "relpol/errors.hpp"
#include "relpol/specfun.hpp"

namespace relpol {

const char* to_string(Dimension d) {
  return d == Dimension::planar ? "planar" : "spatial";
}

ChannelIndex ChannelIndex::planar(int twice_kappa) {
  if (twice_kappa % 2 == 0) {
    throw DomainError("planar kappa must be a half-integer (odd 2*kappa)");
  }
  return {twice_kappa, Dimension::planar};
}

ChannelIndex ChannelIndex::spatial(int kappa) {
  if (kappa == 0) throw DomainError("spatial kappa must be a non-zero integer");
  return {2 * kappa, Dimension::spatial};
}

double critical_charge(Dimension dimension, double alpha_inv) {
  if (!(alpha_inv > 0.0)) throw DomainError("alpha_inv must be positive");
  return dimension == Dimension::planar ? 0.5 * alpha_inv : alpha_inv;
}

AtomSpec::AtomSpec(double Z, Dimension dimension, double alpha_inv)
    : Z_(Z), dimension_(dimension), alpha_inv_(alpha_inv) {
  if (!(alpha_inv > 0.0) || !std::isfinite(alpha_inv)) {
    throw DomainError("alpha_inv must be a finite positive number");
  }
  if (!(Z > 0.0) || !std::isfinite(Z)) {
    throw DomainError("Z must be a finite positive number");
  }
  const double zc = critical_charge(dimension, alpha_inv);
  if (!(Z < zc)) {
    std::ostringstream os;
    os.precision(12);
    if (dimension == Dimension::planar) {
      os << "Z must satisfy Z < alpha_inv/2 = " << zc
         << " (planar critical charge); got Z = " << Z;
    } else {
      os << "Z must satisfy Z < alpha_inv = " << zc
         << " (spatial critical charge); got Z = " << Z;
    }
    throw SupercriticalError(os.str());
  }
}

double gamma_kappa(const AtomSpec& spec, const ChannelIndex& ch) {
  if (ch.dimension() != spec.dimension()) {
    throw DomainError("channel index and atom have different dimensionality");
  }
  const double k = ch.abs_kappa();
  const double az = spec.alpha_Z();
  if (!(k > az)) {
    throw SupercriticalError("gamma_kappa is not real: |kappa| <= alpha Z");
  }
  return std::sqrt((k - az) * (k + az));
}

double ground_energy(const AtomSpec& spec) {
  if (spec.dimension() != Dimension::planar) {
    throw DomainError("ground_energy is defined for the planar atom");
  }
  return 2.0 * gamma_kappa(spec, ChannelIndex::planar(1));
}

GroundStateRadial ground_state_radial(const AtomSpec& spec) {
  if (spec.dimension() != Dimension::planar) {
    throw DomainError("ground_state_radial is defined for the planar atom");
  }
  const double g = gamma_kappa(spec, ChannelIndex::planar(1));
  const double Z = spec.Z();
  const double log_norm = -0.5 * specfun::log_gamma(2.0 * g + 1.0);
  const double base = std::exp(log_norm) * std::sqrt(2.0 * Z);
  return {Z, spec.alpha_inv(), g, base * std::sqrt(1.0 + 2.0 * g),
          base * std::sqrt(1.0 - 2.0 * g)};
}

RadialPair radial_PQ(const GroundStateRadial& g, double r) {
  if (!(r > 0.0)) throw DomainError("radial_PQ requires r > 0");
  const double rho = 4.0 * g.Z * r;
  const double shape = std::exp(g.gamma_half * std::log(rho) - 0.5 * rho);
  return {g.norm_P * shape, g.norm_Q * shape};
}

double radial_mean_r(const GroundStateRadial& g) {
  return (2.0 * g.gamma_half + 1.0) / (4.0 * g.Z);
}

Spinor axial_spinor(const ChannelIndex& ch, int twice_m, double phi) {
  if (ch.dimension() != Dimension::planar) {
    throw DomainError("axial spinors are planar objects");
  }
  const int tk = ch.twice_kappa();
  if (twice_m != tk && twice_m != -tk) {
    throw DomainError("axial spinor requires m = +-kappa");
  }
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const double m = 0.5 * twice_m;
  Spinor s{};
  if (twice_m == -tk) s[0] = std::polar(norm, (m - 0.5) * phi);
  if (twice_m == tk) s[1] = std::polar(norm, (m + 0.5) * phi);
  return s;
}

double cos_matrix_element(const ChannelIndex& ch, int twice_m,
                          const ChannelIndex& ch_prime, int twice_m_prime) {
  const int tk = ch.twice_kappa();
  const int tkp = ch_prime.twice_kappa();
  if ((twice_m != tk && twice_m != -tk) || (twice_m_prime != tkp && twice_m_prime != -tkp)) {
    throw DomainError("cos_matrix_element requires m = +-kappa on both sides");
  }
  // m/kappa is +1 or -1
  const bool same_ratio = (twice_m == tk) == (twice_m_prime == tkp);
  const bool adjacent = std::abs(tk - tkp) == 2;
  return same_ratio && adjacent ? 0.5 : 0.0;
}

FirstOrderStark first_order_shift(const AtomSpec& spec, std::complex<double> a_plus,
                                  std::complex<double> a_minus) {
  const double norm = std::norm(a_plus) + std::norm(a_minus);
  if (std::fabs(norm - 1.0) > 1e-12) {
    throw DomainError("mixing coefficients must satisfy |a+|^2 + |a-|^2 = 1");
  }
  const auto g = ground_state_radial(spec);
  const double mean_r = radial_mean_r(g);
  // fractions of <r> carried by the large and small components
  const double large = 0.5 * (1.0 + 2.0 * g.gamma_half) * mean_r;
  const double small = 0.5 * (1.0 - 2.0 * g.gamma_half) * mean_r;

  const auto upper = ChannelIndex::planar(-1);
  const auto lower = ChannelIndex::planar(1);
  constexpr std::array<int, 2> twice_m{1, -1};

  FirstOrderStark out{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      out.matrix[i][j] =
          large * cos_matrix_element(upper, twice_m[i], upper, twice_m[j]) +
          small * cos_matrix_element(lower, twice_m[i], lower, twice_m[j]);
    }
  }
  const double a = out.matrix[0][0];
  const double b = out.matrix[0][1];
  const double d = out.matrix[1][1];
  const double mid = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), b);
  out.eigenvalues = {mid - rad, mid + rad};

  const std::array<std::complex<double>, 2> coeff{a_plus, a_minus};
  std::complex<double> e{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) e += std::conj(coeff[i]) * out.matrix[i][j] * coeff[j];
  }
  out.energy = e.real();
  return out;
}

}  // namespace relpol
