#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "checks.hpp"
#include "relpol/atom.hpp"
#include "relpol/errors.hpp"

using namespace relpol;

TEST(AtomSpec, CriticalCharges) {
  EXPECT_DOUBLE_EQ(critical_charge(Dimension::planar), kCodata2014AlphaInv / 2);
  EXPECT_DOUBLE_EQ(critical_charge(Dimension::spatial), kCodata2014AlphaInv);
  EXPECT_NO_THROW(AtomSpec(68, Dimension::planar));
  EXPECT_NO_THROW(AtomSpec(137, Dimension::spatial));
}

TEST(AtomSpec, SupercriticalMessageNamesConstraint) {
  try {
    AtomSpec(70, Dimension::planar);
    FAIL();
  } catch (const SupercriticalError& e) {
    EXPECT_NE(std::string(e.what()).find("Z < alpha_inv/2"), std::string::npos);
  }
  EXPECT_THROW(AtomSpec(138, Dimension::spatial), SupercriticalError);
  EXPECT_THROW(AtomSpec(0, Dimension::planar), DomainError);
  EXPECT_THROW(AtomSpec(1, Dimension::planar, -1.0), DomainError);
}

TEST(ChannelIndex, Validation) {
  EXPECT_THROW(ChannelIndex::planar(2), DomainError);
  EXPECT_THROW(ChannelIndex::spatial(0), DomainError);
  EXPECT_DOUBLE_EQ(ChannelIndex::planar(-3).kappa(), -1.5);
  EXPECT_DOUBLE_EQ(ChannelIndex::planar(-3).abs_kappa(), 1.5);
}

TEST(GammaKappa, Values) {
  const AtomSpec tiny(1e-6, Dimension::planar);
  EXPECT_NEAR(gamma_kappa(tiny, ChannelIndex::planar(1)), 0.5, 1e-12);
  EXPECT_NEAR(gamma_kappa(tiny, ChannelIndex::planar(-3)), 1.5, 1e-12);
  const AtomSpec z68(68, Dimension::planar);
  const double az = 68 / kCodata2014AlphaInv;
  EXPECT_NEAR(gamma_kappa(z68, ChannelIndex::planar(1)), std::sqrt(0.25 - az * az), 1e-15);
  EXPECT_THROW(gamma_kappa(z68, ChannelIndex::spatial(1)), DomainError);
}

TEST(GroundEnergy, TwiceGamma) {
  const double az = 1e-4 / kCodata2014AlphaInv;
  EXPECT_NEAR(ground_energy(AtomSpec(1e-4, Dimension::planar)), 1.0 - 2 * az * az, 1e-15);
  const AtomSpec s(40, Dimension::planar);
  EXPECT_DOUBLE_EQ(ground_energy(s), 2 * gamma_kappa(s, ChannelIndex::planar(1)));
}

TEST(Spinors, Orthonormal) { EXPECT_LE(checks::spinor_orthonormality_error(), 1e-12); }

TEST(Spinors, SelectionRule) { EXPECT_LE(checks::selection_rule_error(), 1e-12); }

TEST(Spinors, CosElementValues) {
  const auto h = ChannelIndex::planar(1);
  const auto mh = ChannelIndex::planar(-1);
  const auto t = ChannelIndex::planar(3);
  EXPECT_EQ(cos_matrix_element(h, 1, t, 3), 0.5);
  EXPECT_EQ(cos_matrix_element(h, 1, t, -3), 0.0);
  EXPECT_EQ(cos_matrix_element(mh, 1, mh, -1), 0.0);
  EXPECT_THROW(cos_matrix_element(h, 3, t, 3), DomainError);
}

TEST(GroundState, NormalizedForAllCharges) {
  for (int Z = 1; Z <= 68; ++Z) {
    EXPECT_LE(checks::normalization_error(AtomSpec(Z, Dimension::planar)), 1e-12) << Z;
  }
}

TEST(GroundState, MeanRadius) {
  const auto g = ground_state_radial(AtomSpec(1e-4, Dimension::planar));
  EXPECT_NEAR(radial_mean_r(g) * 1e-4, 0.5, 1e-9);
}

TEST(FirstOrder, Vanishes) {
  for (int Z : {1, 26, 68}) {
    const AtomSpec spec(Z, Dimension::planar);
    const auto stark = first_order_shift(spec);
    for (const auto& row : stark.matrix) {
      for (double v : row) EXPECT_EQ(v, 0.0);
    }
    EXPECT_EQ(stark.energy, 0.0);
    EXPECT_LE(checks::first_order_quadrature_max(spec), 1e-12) << Z;
    const auto mixed = first_order_shift(spec, {0.6, 0.0}, {0.0, 0.8});
    EXPECT_EQ(mixed.energy, 0.0);
  }
  EXPECT_THROW(first_order_shift(AtomSpec(1, Dimension::planar), 1.0, 1.0), DomainError);
}
