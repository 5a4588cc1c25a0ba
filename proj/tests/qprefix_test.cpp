#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "qcasino/matrix_json.hpp"
#include "qcasino/qprefix.hpp"
#include "qcasino/rng.hpp"
#include "qcasino/sampling.hpp"

namespace qc = qcasino;
using qc::cdouble;

namespace {

std::string data_path(const std::string& name) { return std::string(QC_DATA_DIR) + "/" + name; }

double dense_gram_trace(const qc::QuantumPrefix& p) {
  const qc::CMatrix& d = *p.dense;
  return (d.adjoint() * d).trace().real();
}

}  // namespace

TEST(QuantumPrefix, EmptyPrefix) {
  const qc::QuantumPrefix p = qc::empty_prefix();
  EXPECT_EQ(p.length, 0);
  EXPECT_TRUE(p.dense.has_value());
  EXPECT_EQ(p.dense->rows, 1);
  EXPECT_DOUBLE_EQ(p.trace_gram(), 1.0);
  EXPECT_FALSE(p.gram_zero);
  EXPECT_TRUE(p.factor_norms.empty());

  const qc::QuantumPrefix q = qc::empty_prefix(false);
  EXPECT_FALSE(q.dense.has_value());
}

TEST(QuantumPrefix, IdentityLetterDoublesGramTrace) {
  const qc::QuantumPrefix p = qc::prefix_extend(qc::empty_prefix(), qc::CMatrix::identity(2));
  EXPECT_EQ(p.length, 1);
  EXPECT_NEAR(p.trace_gram(), 2.0, 1e-12);
  ASSERT_EQ(p.factor_norms.size(), 1u);
  EXPECT_NEAR(p.factor_norms[0], 1.0, 1e-12);
}

TEST(QuantumPrefix, StreamingMatchesDenseGram) {
  qc::SeededRng rng(51);
  qc::QuantumPrefix p = qc::empty_prefix();
  for (int i = 0; i < 8; ++i) {
    p = qc::prefix_extend(p, qc::sample_algebraic_coin(rng, 4.0));
    ASSERT_TRUE(p.dense.has_value());
    const double dense_value = dense_gram_trace(p);
    EXPECT_NEAR(p.trace_gram() / dense_value, 1.0, 1e-8) << "length " << p.length;
  }
}

TEST(QuantumPrefix, DenseRepresentationDropsAtCap) {
  qc::SeededRng rng(52);
  qc::QuantumPrefix p = qc::empty_prefix();
  for (int i = 0; i < qc::k_dense_cap_qubits; ++i) {
    p = qc::prefix_extend(p, qc::sample_algebraic_coin(rng, 2.0));
  }
  EXPECT_EQ(p.length, qc::k_dense_cap_qubits);
  EXPECT_TRUE(p.dense.has_value());
  EXPECT_EQ(p.dense->rows, 1 << qc::k_dense_cap_qubits);

  p = qc::prefix_extend(p, qc::sample_algebraic_coin(rng, 2.0));
  EXPECT_EQ(p.length, qc::k_dense_cap_qubits + 1);
  EXPECT_FALSE(p.dense.has_value());
  EXPECT_EQ(p.factor_norms.size(), static_cast<std::size_t>(qc::k_dense_cap_qubits) + 1);
  EXPECT_TRUE(std::isfinite(p.log_trace_gram));
}

TEST(QuantumPrefix, ZeroLetterPoisonsTheGram) {
  qc::QuantumPrefix p = qc::prefix_extend(qc::empty_prefix(), qc::CMatrix(2, 2));
  EXPECT_TRUE(p.gram_zero);
  EXPECT_DOUBLE_EQ(p.trace_gram(), 0.0);
  p = qc::prefix_extend(p, qc::CMatrix::identity(2));
  EXPECT_TRUE(p.gram_zero);
  EXPECT_DOUBLE_EQ(p.trace_gram(), 0.0);
}

TEST(QuantumPrefix, FactorNormsTrackOperatorNorms) {
  qc::QuantumPrefix p = qc::empty_prefix();
  p = qc::prefix_extend(p, qc::pauli_z());
  p = qc::prefix_extend(p, cdouble{2, 0} * qc::CMatrix::identity(2));
  ASSERT_EQ(p.factor_norms.size(), 2u);
  EXPECT_NEAR(p.factor_norms[0], 1.0, 1e-12);
  EXPECT_NEAR(p.factor_norms[1], 2.0, 1e-12);
}

TEST(QuantumPrefix, RejectsNonQubitLetters) {
  EXPECT_THROW(qc::prefix_extend(qc::empty_prefix(), qc::CMatrix::identity(3)),
               qc::dimension_error);
}

TEST(QuantumPrefix, FixtureCoinGramTraces) {
  const qc::CoinFixture fixture = qc::load_coin_fixture(data_path("fixed_evening_coins.json"));
  ASSERT_GE(fixture.coins.size(), 2u);
  qc::QuantumPrefix p = qc::prefix_extend(qc::empty_prefix(), fixture.coins[0]);
  EXPECT_NEAR(p.trace_gram(), 157.25, 1e-2);
  EXPECT_NEAR(p.trace_gram(), 157.25036694461198, 1e-8);
  p = qc::prefix_extend(p, fixture.coins[1]);
  EXPECT_NEAR(p.trace_gram(), 52903.5082183526, 1e-4);
  EXPECT_NEAR(p.trace_gram() / dense_gram_trace(p), 1.0, 1e-12);
}

TEST(QuantumPrefix, LogSpaceSurvivesLongGames) {
  // 1200 identity letters put the linear Gram trace at 2^1200, far beyond
  // double range; the log form must stay finite and exact.
  qc::QuantumPrefix p = qc::empty_prefix(false);
  for (int i = 0; i < 1200; ++i) p = qc::prefix_extend(p, qc::CMatrix::identity(2));
  EXPECT_NEAR(p.log_trace_gram, 1200.0 * std::log(2.0), 1e-9);
  EXPECT_TRUE(std::isinf(p.trace_gram()));
}
