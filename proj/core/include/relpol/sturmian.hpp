#pragma once

#include <cstddef>

#include "relpol/atom.hpp"
#include "relpol/specfun.hpp"

// Radial Dirac-Coulomb Sturmian functions of the planar atom taken at the
// ground-state energy, and the Sturmian-series route to the second-order
// channel integrals R_kappa. This path never touches 3F2 and serves as the
// independent check of the closed forms in polarizability.hpp.
//
// Everything is in atomic units; lengths in Bohr radii.

namespace relpol::sturmian {

/// (n_r, kappa) label of one radial Sturmian function; n_r runs over all
/// integers and kappa is planar with kappa != -1/2.
struct SturmianIndex {
  int n_r;
  ChannelIndex channel;

  static SturmianIndex make(int n_r, const ChannelIndex& channel);
};

/// N = +-sqrt(n_r^2 + 2|n_r| gamma_kappa + kappa^2); + for n_r > 0, - for
/// n_r < 0, and N = -kappa for n_r = 0.
double n_cap(const SturmianIndex& idx, const AtomSpec& spec);

/// Apparent charge eigenvalue (|n_r| + gamma_kappa + N) / (gamma_{1/2} + 1/2).
double mu(const SturmianIndex& idx, const AtomSpec& spec);

struct SturmianPair {
  double S;
  double T;
};

SturmianPair sturmian_ST(const SturmianIndex& idx, const AtomSpec& spec, double r);

/// plain = int r [P S + Q T] dr, mu_weighted = int r [mu P S + Q T] dr.
struct RadialIntegralPair {
  double plain;
  double mu_weighted;
};

/// Closed-form first-order radial integrals for kappa in {1/2, -3/2}. The
/// factor Gamma(|n_r| + c - 1) / Gamma(c), c = gamma_kappa - gamma_{1/2} - 1,
/// is formed as a finite product, so no Gamma is ever taken at a pole.
RadialIntegralPair first_order_integral(const SturmianIndex& idx, const AtomSpec& spec);

/// The same pair by Gauss-Laguerre quadrature in rho = 4 Z r.
RadialIntegralPair first_order_integral_quadrature(const SturmianIndex& idx,
                                                  const AtomSpec& spec,
                                                  std::size_t nodes = 200);

/// R_kappa = sum_{n_r} plain * mu_weighted / (mu - 1), summed as the n_r = 0
/// term followed by (n_r, -n_r) pairs. Stops once five consecutive pairs are
/// below tol * |sum| and the power-law tail estimate is below tol as well.
/// Requires kappa in {1/2, -3/2} and tol >= 1e-12.
specfun::SeriesValue r_channel_series(const ChannelIndex& ch, const AtomSpec& spec,
                                      double tol);

}  // namespace relpol::sturmian
