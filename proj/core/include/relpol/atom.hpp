#pragma once

#include <array>
#include <complex>

namespace relpol {

/// Inverse fine-structure constant, CODATA 2014.
inline constexpr double kCodata2014AlphaInv = 137.035999139;
/// One-standard-deviation uncertainty of kCodata2014AlphaInv.
inline constexpr double kCodata2014AlphaInvSigma = 3.1e-8;

enum class Dimension { planar, spatial };

const char* to_string(Dimension d);

/// Relativistic angular quantum number kappa. Stored as 2*kappa so that
/// planar (half-integer) and spatial (non-zero integer) channels are exact.
class ChannelIndex {
 public:
  /// Planar channel kappa = twice_kappa / 2; twice_kappa must be odd.
  static ChannelIndex planar(int twice_kappa);
  /// Spatial channel kappa; must be non-zero.
  static ChannelIndex spatial(int kappa);

  [[nodiscard]] Dimension dimension() const { return dimension_; }
  [[nodiscard]] int twice_kappa() const { return twice_kappa_; }
  [[nodiscard]] double kappa() const { return 0.5 * twice_kappa_; }
  [[nodiscard]] double abs_kappa() const { return 0.5 * (twice_kappa_ < 0 ? -twice_kappa_ : twice_kappa_); }

  friend bool operator==(const ChannelIndex&, const ChannelIndex&) = default;

 private:
  ChannelIndex(int twice_kappa, Dimension d) : twice_kappa_(twice_kappa), dimension_(d) {}

  int twice_kappa_;
  Dimension dimension_;
};

/// Nuclear charge, dimensionality and fine-structure constant of a
/// hydrogen-like atom. Construction fails for supercritical charges:
/// Z < alpha_inv / 2 (planar) or Z < alpha_inv (spatial).
class AtomSpec {
 public:
  AtomSpec(double Z, Dimension dimension, double alpha_inv = kCodata2014AlphaInv);

  [[nodiscard]] double Z() const { return Z_; }
  [[nodiscard]] Dimension dimension() const { return dimension_; }
  [[nodiscard]] double alpha_inv() const { return alpha_inv_; }
  [[nodiscard]] double alpha_Z() const { return Z_ / alpha_inv_; }

 private:
  double Z_;
  Dimension dimension_;
  double alpha_inv_;
};

/// Largest admissible charge: alpha_inv / 2 in the plane, alpha_inv in space.
double critical_charge(Dimension dimension, double alpha_inv = kCodata2014AlphaInv);

/// gamma_kappa = sqrt(kappa^2 - (alpha Z)^2), formed as
/// sqrt((|kappa| - alpha Z)(|kappa| + alpha Z)).
double gamma_kappa(const AtomSpec& spec, const ChannelIndex& ch);

/// Planar ground-state energy 2 gamma_{1/2}, in units of m c^2.
double ground_energy(const AtomSpec& spec);

/// Closed-form planar ground-state radial functions in atomic units.
struct GroundStateRadial {
  double Z;
  double alpha_inv;
  double gamma_half;
  double norm_P;  ///< sqrt(2Z(1 + 2 gamma) / Gamma(2 gamma + 1))
  double norm_Q;  ///< sqrt(2Z(1 - 2 gamma) / Gamma(2 gamma + 1))
};

GroundStateRadial ground_state_radial(const AtomSpec& spec);

struct RadialPair {
  double P;
  double Q;
};

/// (P(r), Q(r)) = norm * (4 Z r)^gamma e^{-2 Z r}; r in Bohr radii.
RadialPair radial_PQ(const GroundStateRadial& g, double r);

/// <r> = int r (P^2 + Q^2) dr = (2 gamma + 1) / (4 Z).
double radial_mean_r(const GroundStateRadial& g);

using Spinor = std::array<std::complex<double>, 2>;

/// Axial spinor Phi_{kappa m}(phi) with m = twice_m / 2 = +-kappa:
/// upper component delta_{-kappa,m} e^{i(m-1/2)phi}, lower delta_{kappa,m}
/// e^{i(m+1/2)phi}, both over sqrt(2 pi).
Spinor axial_spinor(const ChannelIndex& ch, int twice_m, double phi);

/// int_0^{2pi} cos(phi) Phi^+_{kappa m} Phi_{kappa' m'} dphi, which is 1/2
/// when m/kappa == m'/kappa' and |kappa - kappa'| == 1, otherwise 0.
double cos_matrix_element(const ChannelIndex& ch, int twice_m,
                          const ChannelIndex& ch_prime, int twice_m_prime);

/// First-order Stark matrix over the degenerate ground doublet m_a = +-1/2
/// (field along x, F = 1 atomic unit) and the resulting shift.
struct FirstOrderStark {
  /// V[i][j], i, j = 0 for m_a = +1/2 and 1 for m_a = -1/2.
  std::array<std::array<double, 2>, 2> matrix;
  std::array<double, 2> eigenvalues;
  /// a^+ V a for the supplied mixing coefficients.
  double energy;
};

/// Builds the first-order matrix from cos_matrix_element and <r>. The
/// mixing coefficients must satisfy |a_+|^2 + |a_-|^2 = 1.
FirstOrderStark first_order_shift(const AtomSpec& spec,
                                  std::complex<double> a_plus = {1.0, 0.0},
                                  std::complex<double> a_minus = {0.0, 0.0});

}  // namespace relpol
