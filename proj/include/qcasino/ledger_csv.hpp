#pragma once

#include <charconv>
#include <cmath>
#include <string>

#include "qcasino/classical_casino.hpp"
#include "qcasino/common.hpp"
#include "qcasino/quantum_casino.hpp"
#include "qcasino/strategy.hpp"

namespace qcasino {

// Shortest round-trip decimal form, identical across runs and platforms.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// Empty cell for NaN, otherwise format_double.
inline std::string csv_number_cell(double x) {
  return std::isnan(x) ? std::string{} : format_double(x);
}

inline std::string classical_ledger_csv(const PayoffLedger& ledger) {
  std::string out = "index,result,bet,payoff_after\n";
  for (const TossRecord& r : ledger.records) {
    out += std::to_string(r.index);
    out += ',';
    out += r.result;
    out += ',';
    out += bet_char(r.bet);
    out += ',';
    out += std::to_string(r.payoff_after);
    out += '\n';
  }
  return out;
}

// Same shape as the classical ledger plus the decision-functional column;
// the result column carries the metric value between draw and bet.
inline std::string quantum_ledger_csv(const QuantumLedger& ledger) {
  std::string out = "index,result,bet,payoff_after,decision\n";
  for (const QuantumTossRecord& r : ledger.records) {
    out += std::to_string(r.index);
    out += ',';
    out += csv_number_cell(r.distance);
    out += ',';
    out += r.bet_placed ? r.bet_label : "-";
    out += ',';
    out += std::to_string(r.payoff_after);
    out += ',';
    out += csv_number_cell(r.decision_value);
    out += '\n';
  }
  return out;
}

}  // namespace qcasino
