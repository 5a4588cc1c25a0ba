#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcasino/bitseq.hpp"
#include "qcasino/common.hpp"

namespace qcasino {

// Outcome of asking a strategy for its bet. Non-halting (no bet placed this
// turn) is a normal game event, never an exception.
enum class Bet {
  zero = 0,
  one = 1,
  none = 2,
};

inline bool bet_placed(Bet b) { return b != Bet::none; }

inline char bet_char(Bet b) {
  switch (b) {
    case Bet::zero: return '0';
    case Bet::one: return '1';
    default: return '-';
  }
}

// A gambling strategy: a deterministic partial map from the visible history
// to a bet. Strategies never see the upcoming symbol.
struct ClassicalStrategy {
  std::string name;
  std::function<Bet(std::string_view)> decide;
};

// Bets on the last result; no bet before the first toss.
inline Bet bet_on_last(std::string_view history) {
  if (history.empty()) return Bet::none;
  return history.back() == '1' ? Bet::one : Bet::zero;
}

// Bets on the less frequent symbol so far; no bet on the empty history or on
// a tie.
inline Bet bet_less_frequent(std::string_view history) {
  if (history.empty()) return Bet::none;
  const long long ones = count_ones(history);
  const long long zeros = static_cast<long long>(history.size()) - ones;
  if (zeros == ones) return Bet::none;
  return zeros > ones ? Bet::one : Bet::zero;
}

inline Bet always_bet_0(std::string_view) { return Bet::zero; }
inline Bet always_bet_1(std::string_view) { return Bet::one; }
inline Bet never_bet(std::string_view) { return Bet::none; }

inline const std::vector<ClassicalStrategy>& builtin_strategies() {
  static const std::vector<ClassicalStrategy> table = {
      {"bet-on-last", bet_on_last},
      {"bet-less-frequent", bet_less_frequent},
      {"always-0", always_bet_0},
      {"always-1", always_bet_1},
      {"never-bet", never_bet},
  };
  return table;
}

inline const ClassicalStrategy& find_strategy(std::string_view name) {
  for (const auto& s : builtin_strategies()) {
    if (s.name == name) return s;
  }
  std::string known;
  for (const auto& s : builtin_strategies()) {
    if (!known.empty()) known += ", ";
    known += s.name;
  }
  throw config_error("unknown strategy '" + std::string(name) + "' (known: " + known + ")");
}

// Result of running the subsequence extraction EXT[S] up to a horizon. The
// k-th extracted symbol is the source symbol at selected_indices[k]
// (1-based, strictly increasing).
struct ExtractionResult {
  BitString extracted;
  std::vector<long long> selected_indices;
};

// Selects symbol x_n exactly when strategy(x_1 ... x_{n-1}) = 1, for
// n <= horizon.
inline ExtractionResult extract(const ClassicalStrategy& strategy, BitSource& source,
                                long long horizon) {
  if (horizon < 1) throw precondition_error("extract requires horizon >= 1");
  ExtractionResult out;
  BitString history;
  history.reserve(static_cast<std::size_t>(horizon));
  for (long long n = 1; n <= horizon; ++n) {
    const Bet b = strategy.decide(history);
    const char x = source.next();
    if (b == Bet::one) {
      out.extracted.push_back(x);
      out.selected_indices.push_back(n);
    }
    history.push_back(x);
  }
  return out;
}

// Finite-horizon estimator of the von Mises probability: the relative
// frequency of the attribute in the extracted string.
inline double estimate_pvm(const BitString& extracted, int attribute) {
  if (attribute != 0 && attribute != 1) {
    throw precondition_error("attribute must be 0 or 1");
  }
  if (extracted.empty()) {
    throw undefined_estimate_error("estimate_pvm is undefined on an empty extraction");
  }
  require_bit_string(extracted);
  const long long ones = count_ones(extracted);
  const long long hits = attribute == 1 ? ones : static_cast<long long>(extracted.size()) - ones;
  return static_cast<double>(hits) / static_cast<double>(extracted.size());
}

}  // namespace qcasino
