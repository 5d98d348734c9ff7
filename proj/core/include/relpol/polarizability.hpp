#pragma once

#include <functional>
#include <optional>
#include <span>

#include "relpol/atom.hpp"
#include "relpol/specfun.hpp"

namespace relpol {

/// Default relative tolerance handed to the 3F2 kernel.
inline constexpr double kDefaultTolerance = 1e-16;

enum class Method { closed_form, sturmian_series, nonrel_limit, quasirel };

const char* to_string(Method m);

struct PolarizabilityResult {
  double value_a0_cubed = 0.0;  ///< alpha_1 in a0^3
  double scaled_Z4 = 0.0;       ///< Z^4 alpha_1 in a0^3
  Method method = Method::closed_form;
  std::optional<specfun::SeriesDiagnostics> diagnostics;
  std::optional<double> uncertainty;  ///< one standard deviation, a0^3
};

/// Second-order radial channel integral R_kappa for kappa in {1/2, -3/2}
/// (atomic units). kappa = 1/2 uses the elementary form
/// gamma (gamma+1)(2 gamma+1)(4 gamma+5) / (64 Z^4), gamma = gamma_{1/2};
/// kappa = -3/2 needs one 3F2 at unit argument.
double r_channel_closed(const ChannelIndex& ch, const AtomSpec& spec,
                        double tol = kDefaultTolerance);

/// The same R_kappa through the single formula shared by both channels
/// (for kappa = 1/2 its 3F2 terminates after two terms).
specfun::SeriesValue r_channel_general_form(const ChannelIndex& ch, const AtomSpec& spec,
                                            double tol = kDefaultTolerance);

/// R_kappa in the two-3F2 form obtained straight from resumming the Sturmian
/// series, before the contiguous relation merges the two functions.
specfun::SeriesValue r_channel_two_term_form(const ChannelIndex& ch, const AtomSpec& spec,
                                             double tol = kDefaultTolerance);

/// E2 = -(1/4) F^2 [R_{1/2} + R_{-3/2}] = -(1/2) alpha_1 F^2, with F in
/// atomic units of field and E2 in hartree.
double second_order_energy(const AtomSpec& spec, double field,
                           double tol = kDefaultTolerance);

/// Closed-form static dipole polarizability of the planar ground state.
PolarizabilityResult polarizability_planar(const AtomSpec& spec,
                                           double tol = kDefaultTolerance);

/// Planar polarizability assembled from the two Sturmian channel series,
/// (R_{1/2} + R_{-3/2}) / 2. Diagnostics report the slower channel.
PolarizabilityResult polarizability_sturmian(const AtomSpec& spec, double tol = 1e-12);

/// Closed-form polarizability of the three-dimensional ground state.
PolarizabilityResult polarizability_spatial(const AtomSpec& spec,
                                            double tol = kDefaultTolerance);

/// Z^4 alpha_1 of the non-relativistic atom: 21/128 (planar), 9/2 (spatial).
double nonrel_limit(Dimension dimension);

/// Extracts c in f(Z)/nr ~ 1 + c (alpha Z)^2 + O((alpha Z)^4) by Neville
/// extrapolation of g(Z) = (f(Z)/nr - 1) / (alpha Z)^2 to alpha Z = 0 over
/// the supplied charges (largest first). Throws ConvergenceError if the
/// successive differences of g do not shrink like (alpha Z)^2.
double extrapolate_quadratic_coefficient(const std::function<double(double)>& scaled,
                                         double nr_value, double alpha_inv,
                                         std::span<const double> charges);

/// Quasi-relativistic coefficient c of Z^4 alpha_1 = nr (1 + c (alpha Z)^2)
/// from charges 4, 2, 1, ... (fit_orders + 1 of them).
double quasirel_coefficient(Dimension dimension, double alpha_inv = kCodata2014AlphaInv,
                            int fit_orders = 4, double tol = kDefaultTolerance);

}  // namespace relpol
