#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "qcasino/bitseq.hpp"
#include "qcasino/common.hpp"
#include "qcasino/rng.hpp"
#include "qcasino/strategy.hpp"

namespace qcasino {

// One row of a casino evening: toss index (1-based), the result, the bet made
// about that toss, and the cumulative payoff after the toss.
struct TossRecord {
  long long index = 0;
  char result = '0';
  Bet bet = Bet::none;
  long long payoff_after = 0;
};

struct PayoffLedger {
  std::vector<TossRecord> records;
  long long final_payoff = 0;
};

// Runs a strategy against a result source for n tosses. payoff(0) = 0; a
// placed bet moves the payoff by +1 when it equals the result and -1
// otherwise; no bet leaves it unchanged.
inline PayoffLedger play(const ClassicalStrategy& strategy, BitSource& source,
                         long long n_tosses) {
  if (n_tosses < 1) throw precondition_error("play requires n_tosses >= 1");
  PayoffLedger ledger;
  ledger.records.reserve(static_cast<std::size_t>(n_tosses));
  BitString history;
  history.reserve(static_cast<std::size_t>(n_tosses));
  long long payoff = 0;
  for (long long n = 1; n <= n_tosses; ++n) {
    const Bet bet = strategy.decide(history);
    const char result = source.next();
    if (bet_placed(bet)) {
      payoff += bet_char(bet) == result ? 1 : -1;
    }
    ledger.records.push_back({n, result, bet, payoff});
    history.push_back(result);
  }
  ledger.final_payoff = payoff;
  return ledger;
}

inline PayoffLedger play_results(const ClassicalStrategy& strategy, const BitString& results) {
  BitSource source = fixed_results_source(results);
  return play(strategy, source, static_cast<long long>(results.size()));
}

struct MeanStderr {
  double mean = 0.0;
  double std_error = 0.0;
};

// Sample mean and standard error of the final payoff over independent
// unbiased-coin trials. Trial t uses the derived stream (seed, t), so the
// result does not depend on evaluation order.
inline MeanStderr montecarlo_mean_payoff(const ClassicalStrategy& strategy, long long n_tosses,
                                         long long trials, std::uint64_t seed) {
  if (trials < 2) throw precondition_error("montecarlo_mean_payoff requires trials >= 2");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (long long t = 0; t < trials; ++t) {
    BitSource source = random_bit_source(SeededRng(SeededRng::derive(seed, t)));
    const auto payoff = static_cast<double>(play(strategy, source, n_tosses).final_payoff);
    sum += payoff;
    sum_sq += payoff * payoff;
  }
  const double mean = sum / static_cast<double>(trials);
  const double var =
      (sum_sq - static_cast<double>(trials) * mean * mean) / static_cast<double>(trials - 1);
  return {mean, std::sqrt(std::max(var, 0.0) / static_cast<double>(trials))};
}

// Fraction of trials whose final payoff is strictly positive (the empirical
// frequency of lucky-winning evenings).
inline double lucky_fraction(const ClassicalStrategy& strategy, long long n_tosses,
                             long long trials, std::uint64_t seed) {
  if (trials < 1) throw precondition_error("lucky_fraction requires trials >= 1");
  long long lucky = 0;
  for (long long t = 0; t < trials; ++t) {
    BitSource source = random_bit_source(SeededRng(SeededRng::derive(seed, t)));
    if (play(strategy, source, n_tosses).final_payoff > 0) ++lucky;
  }
  return static_cast<double>(lucky) / static_cast<double>(trials);
}

inline constexpr int k_exhaustive_cap = 12;

// Exact sum of final payoffs over all 2^n equally likely result strings.
// Dividing by 2^n gives the exact mean payoff; the fair-coin martingale
// argument makes that mean 0 for every strategy.
inline long long exhaustive_payoff_sum(const ClassicalStrategy& strategy, int n) {
  if (n < 1 || n > k_exhaustive_cap) {
    throw precondition_error("exhaustive_payoff_sum supports 1 <= n <= 12");
  }
  long long sum = 0;
  BitString results(static_cast<std::size_t>(n), '0');
  for (std::uint64_t v = 0; v >> n == 0; ++v) {
    for (int b = 0; b < n; ++b) {
      results[static_cast<std::size_t>(b)] = ((v >> (n - 1 - b)) & 1u) ? '1' : '0';
    }
    sum += play_results(strategy, results).final_payoff;
  }
  return sum;
}

}  // namespace qcasino
