#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcasino/classical_casino.hpp"
#include "qcasino/cmatrix.hpp"
#include "qcasino/common.hpp"
#include "qcasino/linalg.hpp"
#include "qcasino/qmetrics.hpp"
#include "qcasino/qprefix.hpp"
#include "qcasino/qstate.hpp"
#include "qcasino/rng.hpp"
#include "qcasino/sampling.hpp"

namespace qcasino {

// How the third-kind decision functional is scaled before the threshold
// comparison: plain Tr(gram) against 2^n, or the dimension-normalized
// Tr(gram)/2^n against 1. The two are related by an exact power of two, so
// betting decisions never depend on the mode; only reported values do.
enum class TraceMode { normalized, plain };

// Metric for first- and second-kind casinos.
enum class MetricKind { trace, angle };

// Distance convention for third-kind bets: largest eigenvalue magnitude of
// the difference, or the largest singular value. The two disagree for
// non-normal differences; spectral is the engine default.
enum class MatrixDistance { spectral, operator_norm };

struct QuantumCasinoConfig {
  int kind = 3;
  double epsilon = 10.0;
  long long n_tosses = 10000;
  double edge = 10.0;
  MetricKind metric = MetricKind::trace;
  MatrixDistance distance = MatrixDistance::spectral;
  TraceMode mode = TraceMode::normalized;
  std::uint64_t seed = 42;
  bool track_dense = true;
};

inline double default_epsilon(int kind) { return kind == 3 ? 10.0 : 0.25; }

inline void validate_quantum_config(const QuantumCasinoConfig& cfg, int expected_kind) {
  if (cfg.kind != expected_kind) throw config_error("config kind does not match the engine");
  if (!(cfg.epsilon > 0.0)) throw config_error("epsilon must be positive");
  if (cfg.n_tosses < 1) throw config_error("n_tosses must be positive");
  if (cfg.kind == 3 && !(cfg.edge > 0.0)) throw config_error("edge must be positive");
}

struct QuantumStrategyKind1 {
  std::string name;
  std::function<std::optional<PureState>(const std::vector<PureState>&)> decide;
};

struct QuantumStrategyKind2 {
  std::string name;
  std::function<std::optional<DensityMatrix>(const std::vector<DensityMatrix>&)> decide;
};

struct QuantumStrategyKind3 {
  std::string name;
  std::function<std::optional<CMatrix>(const QuantumPrefix&)> decide;
};

struct QuantumTossRecord {
  long long index = 0;
  bool bet_placed = false;
  std::string bet_label = "-";
  // Metric value between the drawn object and the bet; NaN when no bet.
  double distance = std::numeric_limits<double>::quiet_NaN();
  // Third-kind decision functional seen before the toss; NaN for kinds 1-2.
  double decision_value = std::numeric_limits<double>::quiet_NaN();
  long long payoff_after = 0;
};

struct QuantumLedger {
  std::vector<QuantumTossRecord> records;
  long long final_payoff = 0;
};

inline std::string matrix_bet_label(const CMatrix& m) {
  if (m.rows == 2 && m.cols == 2) {
    if (approx_equal(m, pauli_x(), 1e-12)) return "sigma_x";
    if (approx_equal(m, pauli_y(), 1e-12)) return "sigma_y";
    if (approx_equal(m, pauli_z(), 1e-12)) return "sigma_z";
    if (approx_equal(m, CMatrix::identity(2), 1e-12)) return "identity";
  }
  return "custom";
}

inline DensityMatrix maximally_mixed_qubit() {
  return make_density_matrix(cdouble{0.5, 0.0} * CMatrix::identity(2));
}

// Decision functional of the third-kind engine, evaluated in the requested
// mode. Values beyond double range report as +infinity; the engine itself
// compares in log space and never loses the decision.
inline double decision_functional(const QuantumPrefix& p, TraceMode mode) {
  if (p.gram_zero) return 0.0;
  if (mode == TraceMode::plain) return std::exp(p.log_trace_gram);
  return std::exp(p.log_trace_gram - static_cast<double>(p.length) * std::numbers::ln2);
}

// Pauli-betting strategy: no bet on the empty prefix, sigma_x when the Gram
// functional is exactly zero, sigma_y when it is below its threshold (2^n
// plain, 1 normalized), sigma_z otherwise. Both modes reduce to the same
// log-space comparison, so the chosen bet does not depend on the mode.
inline std::optional<CMatrix> pauli_decide(const QuantumPrefix& p,
                                           TraceMode /*mode*/ = TraceMode::normalized) {
  if (p.length == 0) return std::nullopt;
  if (p.gram_zero) return pauli_x();
  if (p.log_trace_gram < static_cast<double>(p.length) * std::numbers::ln2) return pauli_y();
  return pauli_z();
}

inline QuantumStrategyKind3 make_pauli_strategy() {
  return QuantumStrategyKind3{"pauli",
                              [](const QuantumPrefix& p) { return pauli_decide(p); }};
}

inline QuantumStrategyKind1 make_constant_pure_bet(PureState bet, std::string name) {
  return QuantumStrategyKind1{
      std::move(name),
      [bet = std::move(bet)](const std::vector<PureState>&) -> std::optional<PureState> {
        return bet;
      }};
}

inline QuantumStrategyKind1 make_never_bet_kind1() {
  return QuantumStrategyKind1{
      "never-bet", [](const std::vector<PureState>&) -> std::optional<PureState> {
        return std::nullopt;
      }};
}

inline QuantumStrategyKind2 make_constant_mixed_bet(DensityMatrix bet, std::string name) {
  return QuantumStrategyKind2{
      std::move(name),
      [bet = std::move(bet)](const std::vector<DensityMatrix>&) -> std::optional<DensityMatrix> {
        return bet;
      }};
}

inline QuantumStrategyKind2 make_never_bet_kind2() {
  return QuantumStrategyKind2{
      "never-bet", [](const std::vector<DensityMatrix>&) -> std::optional<DensityMatrix> {
        return std::nullopt;
      }};
}

inline QuantumStrategyKind3 make_constant_matrix_bet(CMatrix bet, std::string name) {
  return QuantumStrategyKind3{
      std::move(name),
      [bet = std::move(bet)](const QuantumPrefix&) -> std::optional<CMatrix> { return bet; }};
}

inline QuantumStrategyKind3 make_never_bet_kind3() {
  return QuantumStrategyKind3{
      "never-bet", [](const QuantumPrefix&) -> std::optional<CMatrix> { return std::nullopt; }};
}

inline QuantumLedger play_kind1(const QuantumStrategyKind1& strategy,
                                const QuantumCasinoConfig& cfg) {
  validate_quantum_config(cfg, 1);
  SeededRng rng(cfg.seed);
  std::vector<PureState> history;
  QuantumLedger ledger;
  long long payoff = 0;
  for (long long n = 1; n <= cfg.n_tosses; ++n) {
    const std::optional<PureState> bet = strategy.decide(history);
    if (bet.has_value()) {
      double n2 = 0.0;
      for (const auto& a : bet->amplitudes) n2 += std::norm(a);
      if (bet->dim() != 2 || std::abs(n2 - 1.0) > 1e-9) {
        throw invalid_bet_error("first-kind bet must be a normalized qubit state");
      }
    }
    const PureState result = sample_pure_state(rng);
    QuantumTossRecord rec;
    rec.index = n;
    if (bet.has_value()) {
      rec.bet_placed = true;
      rec.bet_label = "pure";
      rec.distance = cfg.metric == MetricKind::trace ? pure_trace_distance(result, *bet)
                                                     : pure_angle_distance(result, *bet);
      payoff += rec.distance <= cfg.epsilon ? 1 : -1;
    }
    rec.payoff_after = payoff;
    ledger.records.push_back(std::move(rec));
    history.push_back(result);
  }
  ledger.final_payoff = payoff;
  return ledger;
}

inline QuantumLedger play_kind2(const QuantumStrategyKind2& strategy,
                                const QuantumCasinoConfig& cfg) {
  validate_quantum_config(cfg, 2);
  SeededRng rng(cfg.seed);
  std::vector<DensityMatrix> history;
  QuantumLedger ledger;
  long long payoff = 0;
  for (long long n = 1; n <= cfg.n_tosses; ++n) {
    const std::optional<DensityMatrix> bet = strategy.decide(history);
    if (bet.has_value()) {
      try {
        make_density_matrix(bet->rho);
      } catch (const error&) {
        throw invalid_bet_error("second-kind bet must be a valid qubit density matrix");
      }
      if (bet->dim() != 2) throw invalid_bet_error("second-kind bet must be a qubit state");
    }
    const DensityMatrix result = sample_density_matrix(rng);
    QuantumTossRecord rec;
    rec.index = n;
    if (bet.has_value()) {
      rec.bet_placed = true;
      rec.bet_label = approx_equal(bet->rho, cdouble{0.5, 0.0} * CMatrix::identity(2), 1e-12)
                          ? "maximally-mixed"
                          : "mixed";
      rec.distance = cfg.metric == MetricKind::trace ? trace_distance(result, *bet)
                                                     : angle_distance(result, *bet);
      payoff += rec.distance <= cfg.epsilon ? 1 : -1;
    }
    rec.payoff_after = payoff;
    ledger.records.push_back(std::move(rec));
    history.push_back(result);
  }
  ledger.final_payoff = payoff;
  return ledger;
}

inline double matrix_bet_distance(const CMatrix& result, const CMatrix& bet, MatrixDistance d) {
  const CMatrix diff = result - bet;
  return d == MatrixDistance::spectral ? spectral_radius(diff) : op_norm(diff);
}

// Third-kind engine over an arbitrary coin supplier, shared by random play
// and fixed-coin replays.
inline QuantumLedger play_kind3_with(const QuantumStrategyKind3& strategy,
                                     const QuantumCasinoConfig& cfg,
                                     const std::function<CMatrix()>& next_coin) {
  validate_quantum_config(cfg, 3);
  QuantumPrefix prefix = empty_prefix(cfg.track_dense);
  QuantumLedger ledger;
  long long payoff = 0;
  for (long long n = 1; n <= cfg.n_tosses; ++n) {
    const std::optional<CMatrix> bet = strategy.decide(prefix);
    if (bet.has_value() && (bet->rows != 2 || bet->cols != 2)) {
      throw invalid_bet_error("third-kind bet must be a 2x2 matrix");
    }
    const CMatrix coin = next_coin();
    if (coin.rows != 2 || coin.cols != 2) throw shape_error("third-kind coin must be 2x2");
    QuantumTossRecord rec;
    rec.index = n;
    rec.decision_value = decision_functional(prefix, cfg.mode);
    if (bet.has_value()) {
      rec.bet_placed = true;
      rec.bet_label = matrix_bet_label(*bet);
      rec.distance = matrix_bet_distance(coin, *bet, cfg.distance);
      payoff += rec.distance <= cfg.epsilon ? 1 : -1;
    }
    rec.payoff_after = payoff;
    ledger.records.push_back(std::move(rec));
    prefix = prefix_extend(prefix, coin);
  }
  ledger.final_payoff = payoff;
  return ledger;
}

inline QuantumLedger play_kind3(const QuantumStrategyKind3& strategy,
                                const QuantumCasinoConfig& cfg) {
  SeededRng rng(cfg.seed);
  return play_kind3_with(strategy, cfg,
                         [&rng, &cfg]() { return sample_algebraic_coin(rng, cfg.edge); });
}

inline QuantumLedger play_kind3_with_coins(const QuantumStrategyKind3& strategy,
                                           QuantumCasinoConfig cfg,
                                           const std::vector<CMatrix>& coins) {
  if (coins.empty()) throw precondition_error("fixed-coin replay needs at least one coin");
  cfg.n_tosses = static_cast<long long>(coins.size());
  std::size_t at = 0;
  return play_kind3_with(strategy, cfg, [&coins, &at]() { return coins[at++]; });
}

using AnyQuantumStrategy =
    std::variant<QuantumStrategyKind1, QuantumStrategyKind2, QuantumStrategyKind3>;

inline QuantumLedger play_any(const AnyQuantumStrategy& strategy, const QuantumCasinoConfig& cfg) {
  if (std::holds_alternative<QuantumStrategyKind1>(strategy)) {
    return play_kind1(std::get<QuantumStrategyKind1>(strategy), cfg);
  }
  if (std::holds_alternative<QuantumStrategyKind2>(strategy)) {
    return play_kind2(std::get<QuantumStrategyKind2>(strategy), cfg);
  }
  return play_kind3(std::get<QuantumStrategyKind3>(strategy), cfg);
}

struct QuantumMonteCarlo {
  double mean = 0.0;
  double std_error = 0.0;
  double lucky_fraction = 0.0;
};

// Independent-trial statistics of the final payoff. Trials run with derived
// seeds and without dense prefix tracking; strategies consume only the
// streaming functionals, which is what keeps long campaigns flat in memory.
inline QuantumMonteCarlo montecarlo_quantum(const AnyQuantumStrategy& strategy,
                                            QuantumCasinoConfig cfg, long long trials) {
  if (trials < 2) throw precondition_error("montecarlo needs at least 2 trials");
  cfg.track_dense = false;
  double sum = 0.0;
  double sum_sq = 0.0;
  long long lucky = 0;
  for (long long t = 0; t < trials; ++t) {
    QuantumCasinoConfig trial_cfg = cfg;
    trial_cfg.seed = SeededRng::derive(cfg.seed, static_cast<std::uint64_t>(t));
    const long long final_payoff = play_any(strategy, trial_cfg).final_payoff;
    const double x = static_cast<double>(final_payoff);
    sum += x;
    sum_sq += x * x;
    if (final_payoff > 0) ++lucky;
  }
  QuantumMonteCarlo out;
  const double n = static_cast<double>(trials);
  out.mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * out.mean * out.mean) / (n - 1.0));
  out.std_error = std::sqrt(var / n);
  out.lucky_fraction = static_cast<double>(lucky) / n;
  return out;
}

struct LuckyTrendPoint {
  long long n_tosses = 0;
  double lucky_fraction = 0.0;
  double mean = 0.0;
  double std_error = 0.0;
};

// Lucky-fraction trend over game lengths, the empirical face of the
// excluded-strategy laws. No monotonicity is asserted; the points are data.
inline std::vector<LuckyTrendPoint> lucky_trend(const AnyQuantumStrategy& strategy,
                                                QuantumCasinoConfig cfg, long long trials,
                                                const std::vector<long long>& lengths) {
  std::vector<LuckyTrendPoint> out;
  for (long long n : lengths) {
    cfg.n_tosses = n;
    const QuantumMonteCarlo mc = montecarlo_quantum(strategy, cfg, trials);
    out.push_back(LuckyTrendPoint{n, mc.lucky_fraction, mc.mean, mc.std_error});
  }
  return out;
}

}  // namespace qcasino
