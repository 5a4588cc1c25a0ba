#include <gtest/gtest.h>

#include <cmath>

#include "qcasino/qstate.hpp"
#include "qcasino/rng.hpp"

namespace qc = qcasino;
using qc::cdouble;

TEST(PureState, FactoryValidation) {
  const double s = 1.0 / std::sqrt(2.0);
  const qc::PureState plus = qc::make_pure_state({cdouble{s, 0}, cdouble{s, 0}});
  EXPECT_EQ(plus.dim(), 2);
  EXPECT_EQ(plus.n_qubits(), 1);
  EXPECT_THROW(qc::make_pure_state({}), qc::dimension_error);
  EXPECT_THROW(qc::make_pure_state({cdouble{1, 0}, cdouble{1, 0}}), qc::precondition_error);
}

TEST(PureState, InnerProductAndOverlap) {
  const qc::PureState zero = qc::make_pure_state({cdouble{1, 0}, cdouble{0, 0}});
  const qc::PureState one = qc::make_pure_state({cdouble{0, 0}, cdouble{1, 0}});
  const double s = 1.0 / std::sqrt(2.0);
  const qc::PureState plus = qc::make_pure_state({cdouble{s, 0}, cdouble{s, 0}});
  EXPECT_NEAR(std::abs(qc::inner_product(zero, one)), 0.0, 1e-15);
  EXPECT_NEAR(qc::overlap(zero, plus), s, 1e-12);
  EXPECT_NEAR(qc::overlap(plus, plus), 1.0, 1e-12);
  EXPECT_THROW(qc::inner_product(zero, qc::make_pure_state({cdouble{1, 0}})),
               qc::dimension_error);
}

TEST(DensityMatrix, FactoryValidation) {
  EXPECT_NO_THROW(qc::make_density_matrix(cdouble{0.5, 0} * qc::CMatrix::identity(2)));
  EXPECT_THROW(qc::make_density_matrix(qc::CMatrix(2, 3)), qc::dimension_error);

  qc::CMatrix non_herm(2, 2);
  non_herm(0, 0) = 0.5;
  non_herm(1, 1) = 0.5;
  non_herm(0, 1) = 0.3;
  non_herm(1, 0) = -0.3;
  EXPECT_THROW(qc::make_density_matrix(non_herm), qc::not_hermitian_error);

  EXPECT_THROW(qc::make_density_matrix(qc::CMatrix::identity(2)), qc::precondition_error);

  qc::CMatrix indefinite(2, 2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  EXPECT_THROW(qc::make_density_matrix(indefinite), qc::not_psd_error);
}

TEST(DensityMatrix, ProjectorAndPurity) {
  const double s = 1.0 / std::sqrt(2.0);
  const qc::PureState plus = qc::make_pure_state({cdouble{s, 0}, cdouble{0, s}});
  const qc::DensityMatrix rho = qc::projector(plus);
  EXPECT_NEAR(rho.rho.trace().real(), 1.0, 1e-12);
  EXPECT_NEAR(qc::purity(rho), 1.0, 1e-12);
  const qc::DensityMatrix mixed{cdouble{0.5, 0} * qc::CMatrix::identity(2)};
  EXPECT_NEAR(qc::purity(mixed), 0.5, 1e-12);
}

TEST(ProbVector, FactoryValidation) {
  const qc::ProbVector p = qc::make_prob_vector({0.25, 0.75});
  EXPECT_EQ(p.dim(), 2);
  EXPECT_NO_THROW(qc::make_prob_vector({1.0, -1e-13}));
  EXPECT_THROW(qc::make_prob_vector({}), qc::dimension_error);
  EXPECT_THROW(qc::make_prob_vector({0.6, 0.6}), qc::precondition_error);
  EXPECT_THROW(qc::make_prob_vector({1.1, -0.1}), qc::precondition_error);
}

TEST(Bloch, KnownPoints) {
  const qc::DensityMatrix north = qc::bloch_to_state(0, 0, 1);
  EXPECT_NEAR(north.rho(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(north.rho(1, 1).real(), 0.0, 1e-15);
  const qc::DensityMatrix center = qc::bloch_to_state(0, 0, 0);
  EXPECT_TRUE(qc::approx_equal(center.rho, cdouble{0.5, 0} * qc::CMatrix::identity(2), 1e-15));
  EXPECT_NEAR(qc::bloch_radius(center), 0.0, 1e-15);
  EXPECT_THROW(qc::bloch_to_state(0, 0, 1.5), qc::precondition_error);
  EXPECT_NO_THROW(qc::bloch_to_state(0, 0, 1.0 + 1e-12));
}

TEST(Bloch, RoundTripOverTheBall) {
  qc::SeededRng rng(41);
  for (int t = 0; t < 1000; ++t) {
    double x = rng.uniform(-1, 1);
    double y = rng.uniform(-1, 1);
    double z = rng.uniform(-1, 1);
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r > 1.0) {
      x /= r;
      y /= r;
      z /= r;
    }
    const qc::DensityMatrix rho = qc::bloch_to_state(x, y, z);
    EXPECT_NO_THROW(qc::make_density_matrix(rho.rho));
    const auto v = qc::state_to_bloch(rho);
    EXPECT_NEAR(v[0], x, 1e-10);
    EXPECT_NEAR(v[1], y, 1e-10);
    EXPECT_NEAR(v[2], z, 1e-10);
    // Purity against radius: 2 Tr(rho^2) = 1 + r^2 on the qubit ball.
    const double rr = std::min(1.0, std::sqrt(x * x + y * y + z * z));
    EXPECT_NEAR(2.0 * qc::purity(rho), 1.0 + rr * rr, 1e-10);
  }
}

TEST(Bloch, RequiresQubit) {
  qc::CMatrix rho4 = cdouble{0.25, 0} * qc::CMatrix::identity(4);
  EXPECT_THROW(qc::state_to_bloch(qc::DensityMatrix{rho4}), qc::dimension_error);
}
