#include "relpol/polarizability.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "relpol/errors.hpp"
#include "relpol/sturmian.hpp"

namespace relpol {

namespace {

using specfun::gamma_ratio;
using specfun::hyp3f2_unit;
using specfun::Hyp3F2Params;
using specfun::SeriesValue;

void require_dimension(const AtomSpec& spec, Dimension d, const char* what) {
  if (spec.dimension() != d) {
    throw DomainError(std::string(what) + " requires a " + to_string(d) + " atom");
  }
}

void require_dipole_channel(const ChannelIndex& ch) {
  if (ch.dimension() != Dimension::planar || (ch.twice_kappa() != 1 && ch.twice_kappa() != -3)) {
    throw DomainError("R_kappa is defined here for kappa = 1/2 and kappa = -3/2 only");
  }
}

// 3F2(d-1, d-1, d+1; d+2, 2 g + 1; 1) with d = g - g_ref; the function
// shared by every closed form in this file
SeriesValue shared_3f2(double g, double g_ref, double tol) {
  const double d = g - g_ref;
  return hyp3f2_unit(Hyp3F2Params{d - 1.0, d - 1.0, d + 1.0, d + 2.0, 2.0 * g + 1.0}, tol);
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::sturmian_series: return "sturmian_series";
    case Method::nonrel_limit: return "nonrel_limit";
    case Method::quasirel: return "quasirel";
  }
  return "unknown";
}

double r_channel_closed(const ChannelIndex& ch, const AtomSpec& spec, double tol) {
  require_dipole_channel(ch);
  require_dimension(spec, Dimension::planar, "r_channel_closed");
  const double g1 = gamma_kappa(spec, ChannelIndex::planar(1));
  const double Z4 = std::pow(spec.Z(), 4);
  if (ch.twice_kappa() == 1) {
    return g1 * (g1 + 1.0) * (2.0 * g1 + 1.0) * (4.0 * g1 + 5.0) / (64.0 * Z4);
  }
  const double g3 = gamma_kappa(spec, ch);
  const double prefactor = (g1 + 1.0) * (2.0 * g1 + 1.0) * (2.0 * g1 + 3.0) / (64.0 * Z4);
  const double ratio = gamma_ratio({g3 + g1 + 2.0, g3 + g1 + 2.0}, {2.0 * g1 + 4.0, 2.0 * g3 + 1.0});
  const auto f = shared_3f2(g3, g1, tol);
  const double brace = 1.0 - 4.0 * (g1 - 1.0) * (g1 - 1.0) * ratio / (g3 - g1 + 1.0) * f.value;
  return prefactor * brace;
}

SeriesValue r_channel_general_form(const ChannelIndex& ch, const AtomSpec& spec, double tol) {
  require_dipole_channel(ch);
  require_dimension(spec, Dimension::planar, "r_channel_general_form");
  const double g1 = gamma_kappa(spec, ChannelIndex::planar(1));
  const double gk = gamma_kappa(spec, ch);
  const double two_k1 = 2.0 * ch.kappa() + 1.0;
  const double Z4 = std::pow(spec.Z(), 4);
  const double prefactor =
      -(g1 + 1.0) * (2.0 * g1 + 1.0) * (2.0 * g1 + 3.0) / (32.0 * Z4 * two_k1);
  const double lead = two_k1 * g1 + 2.0;
  const double ratio = gamma_ratio({gk + g1 + 2.0, gk + g1 + 2.0}, {2.0 * g1 + 4.0, 2.0 * gk + 1.0});
  const auto f = shared_3f2(gk, g1, tol);
  return {prefactor * (1.0 - lead * lead * ratio / (gk - g1 + 1.0) * f.value), f.diagnostics};
}

SeriesValue r_channel_two_term_form(const ChannelIndex& ch, const AtomSpec& spec, double tol) {
  require_dipole_channel(ch);
  require_dimension(spec, Dimension::planar, "r_channel_two_term_form");
  const double g1 = gamma_kappa(spec, ChannelIndex::planar(1));
  const double gk = gamma_kappa(spec, ch);
  const double two_k1 = 2.0 * ch.kappa() + 1.0;
  const double d = gk - g1;
  const double Z4 = std::pow(spec.Z(), 4);
  const double prefactor =
      gamma_ratio({gk + g1 + 2.0, gk + g1 + 2.0}, {2.0 * g1 + 1.0, 2.0 * gk + 1.0}) / (64.0 * Z4);
  const auto first = shared_3f2(gk, g1, tol);
  const auto second = hyp3f2_unit(Hyp3F2Params{d - 1.0, d - 1.0, d, d + 1.0, 2.0 * gk + 1.0}, tol);
  const double brace = g1 * (two_k1 * g1 + 4.0) / (d + 1.0) * first.value -
                       (gk + g1) / two_k1 * second.value;
  specfun::SeriesDiagnostics diag{first.diagnostics.terms_used + second.diagnostics.terms_used,
                                  std::max(first.diagnostics.tail_estimate,
                                           second.diagnostics.tail_estimate),
                                  first.diagnostics.converged && second.diagnostics.converged};
  return {prefactor * brace, diag};
}

double second_order_energy(const AtomSpec& spec, double field, double tol) {
  const double sum = r_channel_closed(ChannelIndex::planar(1), spec, tol) +
                     r_channel_closed(ChannelIndex::planar(-3), spec, tol);
  return -0.25 * field * field * sum;
}

PolarizabilityResult polarizability_planar(const AtomSpec& spec, double tol) {
  require_dimension(spec, Dimension::planar, "polarizability_planar");
  const double g1 = gamma_kappa(spec, ChannelIndex::planar(1));
  const double g3 = gamma_kappa(spec, ChannelIndex::planar(3));
  const double prefactor = (g1 + 1.0) * (g1 + 1.0) * (2.0 * g1 + 1.0) * (4.0 * g1 + 3.0) / 128.0;
  const double ratio = gamma_ratio({g3 + g1 + 2.0, g3 + g1 + 2.0}, {2.0 * g1 + 3.0, 2.0 * g3 + 1.0});
  const auto f = shared_3f2(g3, g1, tol);
  const double brace =
      1.0 - 4.0 * (g1 - 1.0) * (g1 - 1.0) * ratio /
                ((g1 + 1.0) * (4.0 * g1 + 3.0) * (g3 - g1 + 1.0)) * f.value;
  const double scaled = prefactor * brace;
  PolarizabilityResult out;
  out.scaled_Z4 = scaled;
  out.value_a0_cubed = scaled / std::pow(spec.Z(), 4);
  out.method = Method::closed_form;
  out.diagnostics = f.diagnostics;
  return out;
}

PolarizabilityResult polarizability_sturmian(const AtomSpec& spec, double tol) {
  require_dimension(spec, Dimension::planar, "polarizability_sturmian");
  const auto half = sturmian::r_channel_series(ChannelIndex::planar(1), spec, tol);
  const auto three_half = sturmian::r_channel_series(ChannelIndex::planar(-3), spec, tol);
  PolarizabilityResult out;
  out.value_a0_cubed = 0.5 * (half.value + three_half.value);
  out.scaled_Z4 = out.value_a0_cubed * std::pow(spec.Z(), 4);
  out.method = Method::sturmian_series;
  out.diagnostics = half.diagnostics.terms_used > three_half.diagnostics.terms_used
                        ? half.diagnostics
                        : three_half.diagnostics;
  return out;
}

PolarizabilityResult polarizability_spatial(const AtomSpec& spec, double tol) {
  require_dimension(spec, Dimension::spatial, "polarizability_spatial");
  const double g1 = gamma_kappa(spec, ChannelIndex::spatial(1));
  const double g2 = gamma_kappa(spec, ChannelIndex::spatial(2));
  const double quadratic = 4.0 * g1 * g1 + 13.0 * g1 + 12.0;
  const double prefactor = (g1 + 1.0) * (2.0 * g1 + 1.0) * quadratic / 36.0;
  const double ratio = gamma_ratio({g2 + g1 + 2.0, g2 + g1 + 2.0}, {2.0 * g1 + 2.0, 2.0 * g2 + 1.0});
  const auto f = shared_3f2(g2, g1, tol);
  const double brace = 1.0 - 2.0 * (g1 - 2.0) * (g1 - 2.0) * ratio /
                                 ((g1 + 1.0) * quadratic * (g2 - g1 + 1.0)) * f.value;
  const double scaled = prefactor * brace;
  PolarizabilityResult out;
  out.scaled_Z4 = scaled;
  out.value_a0_cubed = scaled / std::pow(spec.Z(), 4);
  out.method = Method::closed_form;
  out.diagnostics = f.diagnostics;
  return out;
}

double nonrel_limit(Dimension dimension) {
  return dimension == Dimension::planar ? 21.0 / 128.0 : 9.0 / 2.0;
}

double extrapolate_quadratic_coefficient(const std::function<double(double)>& scaled,
                                         double nr_value, double alpha_inv,
                                         std::span<const double> charges) {
  if (charges.size() < 2) {
    throw DomainError("extrapolation needs at least two charges");
  }
  std::vector<double> h;
  std::vector<double> g;
  for (double Z : charges) {
    const double az = Z / alpha_inv;
    h.push_back(az * az);
    g.push_back((scaled(Z) / nr_value - 1.0) / (az * az));
  }
  for (std::size_t k = 1; k < h.size(); ++k) {
    if (!(h[k] < h[k - 1])) throw DomainError("charges must be strictly decreasing");
  }

  // residuals of a linear-in-h model shrink with the step in h
  const double floor = 1e-8 * std::max(1.0, std::fabs(g.back()));
  for (std::size_t k = 2; k < g.size(); ++k) {
    const double prev = std::fabs(g[k - 1] - g[k - 2]);
    const double curr = std::fabs(g[k] - g[k - 1]);
    const double expected = (h[k - 1] - h[k]) / (h[k - 2] - h[k - 1]);
    if (curr > 2.0 * expected * prev + floor) {
      throw ConvergenceError(
          "quasi-relativistic extrapolation failed: residuals do not shrink as (alpha Z)^2");
    }
  }

  // Neville's scheme evaluated at h = 0
  std::vector<double> t = g;
  for (std::size_t j = 1; j < t.size(); ++j) {
    for (std::size_t i = t.size() - 1; i >= j; --i) {
      t[i] = t[i] + (t[i] - t[i - 1]) * h[i] / (h[i - j] - h[i]);
    }
  }
  return t.back();
}

double quasirel_coefficient(Dimension dimension, double alpha_inv, int fit_orders, double tol) {
  if (fit_orders < 1) throw DomainError("fit_orders must be >= 1");
  std::vector<double> charges;
  for (int k = 0; k <= fit_orders; ++k) charges.push_back(4.0 / std::pow(2.0, k));
  const auto scaled = [&](double Z) {
    const AtomSpec spec(Z, dimension, alpha_inv);
    return dimension == Dimension::planar ? polarizability_planar(spec, tol).scaled_Z4
                                          : polarizability_spatial(spec, tol).scaled_Z4;
  };
  return extrapolate_quadratic_coefficient(scaled, nonrel_limit(dimension), alpha_inv, charges);
}

}  // namespace relpol
