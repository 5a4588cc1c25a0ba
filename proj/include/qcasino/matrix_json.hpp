#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcasino/cmatrix.hpp"
#include "qcasino/common.hpp"
#include "qcasino/qstate.hpp"

namespace qcasino {

using json = nlohmann::json;

// Matrices travel as JSON arrays of rows, each entry an [re, im] pair.
inline json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline cdouble complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw shape_error("complex entries must be [re, im] pairs");
  }
  return cdouble{j[0].get<double>(), j[1].get<double>()};
}

inline CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw shape_error("matrix JSON must be a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw shape_error("matrix rows must be nonempty arrays");
  const int cols = static_cast<int>(j[0].size());
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) {
      throw shape_error("matrix rows must all have the same length");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

inline json state_to_json(const PureState& s) {
  json amps = json::array();
  for (const auto& a : s.amplitudes) amps.push_back(json::array({a.real(), a.imag()}));
  return amps;
}

inline PureState state_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw shape_error("state JSON must be a nonempty amplitude array");
  std::vector<cdouble> amps;
  amps.reserve(j.size());
  for (const auto& e : j) amps.push_back(complex_from_json(e));
  return make_pure_state(std::move(amps));
}

inline json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw shape_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

struct CoinFixture {
  std::vector<CMatrix> coins;
};

// Fixture schema: { "coins": [ <matrix>, ... ] } with 2x2 matrices.
inline CoinFixture load_coin_fixture(const std::string& path) {
  const json j = parse_json_file(path);
  if (!j.contains("coins") || !j["coins"].is_array() || j["coins"].empty()) {
    throw shape_error("coin fixture must contain a nonempty \"coins\" array");
  }
  CoinFixture out;
  for (const auto& cj : j["coins"]) {
    CMatrix m = matrix_from_json(cj);
    if (m.rows != 2 || m.cols != 2) throw shape_error("fixture coins must be 2x2");
    out.coins.push_back(std::move(m));
  }
  return out;
}

struct NamedState {
  std::string name;
  PureState state;
};

struct NamedDensity {
  std::string name;
  CMatrix matrix;
};

struct StateFixture {
  std::vector<NamedState> states;
  std::vector<NamedDensity> density_matrices;
};

// Fixture schema: { "states": [ {"name": ..., "amplitudes": <state>} ... ],
//                   "density_matrices": [ {"name": ..., "matrix": <matrix>} ... ] }
// Both sections optional, at least one entry overall.
inline StateFixture load_state_fixture(const std::string& path) {
  const json j = parse_json_file(path);
  StateFixture out;
  if (j.contains("states")) {
    for (const auto& sj : j["states"]) {
      if (!sj.contains("name") || !sj.contains("amplitudes")) {
        throw shape_error("state entries need \"name\" and \"amplitudes\"");
      }
      out.states.push_back(NamedState{sj["name"].get<std::string>(),
                                      state_from_json(sj["amplitudes"])});
    }
  }
  if (j.contains("density_matrices")) {
    for (const auto& dj : j["density_matrices"]) {
      if (!dj.contains("name") || !dj.contains("matrix")) {
        throw shape_error("density entries need \"name\" and \"matrix\"");
      }
      out.density_matrices.push_back(
          NamedDensity{dj["name"].get<std::string>(), matrix_from_json(dj["matrix"])});
    }
  }
  if (out.states.empty() && out.density_matrices.empty()) {
    throw shape_error("state fixture is empty");
  }
  return out;
}

}  // namespace qcasino
