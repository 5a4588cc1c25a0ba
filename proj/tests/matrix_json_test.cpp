#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "qcasino/matrix_json.hpp"
#include "qcasino/rng.hpp"
#include "qcasino/sampling.hpp"

namespace qc = qcasino;
using qc::cdouble;

namespace {

std::string data_path(const std::string& name) { return std::string(QC_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(::testing::TempDir()) + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST(MatrixJson, RoundTripThroughTextForm) {
  qc::SeededRng rng(81);
  const qc::CMatrix m = qc::sample_algebraic_coin(rng, 6.0);
  const qc::json j = qc::matrix_to_json(m);
  EXPECT_TRUE(qc::approx_equal(qc::matrix_from_json(j), m, 0.0));
  const qc::json reparsed = qc::json::parse(j.dump());
  EXPECT_TRUE(qc::approx_equal(qc::matrix_from_json(reparsed), m, 0.0));
}

TEST(MatrixJson, StateRoundTrip) {
  qc::SeededRng rng(82);
  const qc::PureState psi = qc::PureState{qc::sample_state_vector(rng, 4)};
  const qc::json j = qc::state_to_json(psi);
  const qc::PureState back = qc::state_from_json(qc::json::parse(j.dump()));
  ASSERT_EQ(back.dim(), psi.dim());
  for (int i = 0; i < psi.dim(); ++i) {
    EXPECT_EQ(back.amplitudes[static_cast<std::size_t>(i)],
              psi.amplitudes[static_cast<std::size_t>(i)]);
  }
}

TEST(MatrixJson, ShapeErrors) {
  EXPECT_THROW(qc::complex_from_json(qc::json::parse("[1]")), qc::shape_error);
  EXPECT_THROW(qc::complex_from_json(qc::json::parse("[1,2,3]")), qc::shape_error);
  EXPECT_THROW(qc::complex_from_json(qc::json::parse("\"x\"")), qc::shape_error);
  EXPECT_THROW(qc::matrix_from_json(qc::json::parse("[]")), qc::shape_error);
  EXPECT_THROW(qc::matrix_from_json(qc::json::parse("[[[1,0]],[[1,0],[2,0]]]")),
               qc::shape_error);
  EXPECT_THROW(qc::state_from_json(qc::json::parse("[]")), qc::shape_error);
}

TEST(JsonFiles, ParseErrors) {
  EXPECT_THROW(qc::parse_json_file("/nonexistent/path.json"), qc::config_error);
  const std::string bad = temp_file("bad.json", "{ not json");
  EXPECT_THROW(qc::parse_json_file(bad), qc::shape_error);
  std::remove(bad.c_str());
}

TEST(CoinFixture, LoadsTheEveningCoins) {
  const qc::CoinFixture fixture = qc::load_coin_fixture(data_path("fixed_evening_coins.json"));
  ASSERT_EQ(fixture.coins.size(), 5u);
  for (const auto& c : fixture.coins) {
    EXPECT_EQ(c.rows, 2);
    EXPECT_EQ(c.cols, 2);
  }
  EXPECT_EQ(fixture.coins[0](0, 0), cdouble(5.21295, -0.543424));
  EXPECT_EQ(fixture.coins[0](1, 1), cdouble(0.264194, -5.36408));
}

TEST(CoinFixture, RejectsBadShapes) {
  const std::string no_coins = temp_file("no_coins.json", R"({"coins": []})");
  EXPECT_THROW(qc::load_coin_fixture(no_coins), qc::shape_error);
  std::remove(no_coins.c_str());
  const std::string not_qubit = temp_file(
      "wide_coin.json", R"({"coins": [[[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]]]]})");
  EXPECT_THROW(qc::load_coin_fixture(not_qubit), qc::shape_error);
  std::remove(not_qubit.c_str());
}

TEST(StateFixture, LoadsTheEntangledFamily) {
  const qc::StateFixture fixture = qc::load_state_fixture(data_path("epr_states.json"));
  ASSERT_EQ(fixture.states.size(), 4u);
  EXPECT_EQ(fixture.states[0].name, "phi-plus");
  for (const auto& s : fixture.states) {
    EXPECT_EQ(s.state.dim(), 4);
    EXPECT_NO_THROW(qc::make_pure_state(s.state.amplitudes));
  }
}

TEST(StateFixture, RejectsEmptyAndMalformed) {
  const std::string empty = temp_file("empty_states.json", R"({"states": []})");
  EXPECT_THROW(qc::load_state_fixture(empty), qc::shape_error);
  std::remove(empty.c_str());
  const std::string unnamed =
      temp_file("unnamed_state.json", R"({"states": [{"amplitudes": [[1,0],[0,0]]}]})");
  EXPECT_THROW(qc::load_state_fixture(unnamed), qc::shape_error);
  std::remove(unnamed.c_str());
}
