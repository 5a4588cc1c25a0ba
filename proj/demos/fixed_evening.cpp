// Replays the fixed five-coin evening at a third-kind casino with the Pauli
// strategy in plain mode and prints the resulting ledger.

#include <cstdlib>
#include <iostream>

#include "qcasino/qcasino.hpp"

int main(int argc, char** argv) {
  const std::string fixture = argc > 1 ? argv[1] : "data/fixed_evening_coins.json";
  qcasino::CoinFixture coins;
  try {
    coins = qcasino::load_coin_fixture(fixture);
  } catch (const qcasino::error& e) {
    std::cerr << "cannot load " << fixture << ": " << e.what() << "\n";
    return 1;
  }

  qcasino::QuantumCasinoConfig cfg;
  cfg.kind = 3;
  cfg.epsilon = 10.0;
  cfg.mode = qcasino::TraceMode::plain;

  const qcasino::QuantumLedger ledger =
      qcasino::play_kind3_with_coins(qcasino::make_pauli_strategy(), cfg, coins.coins);
  std::cout << qcasino::quantum_ledger_csv(ledger);
  std::cout << "final payoff: " << ledger.final_payoff << "\n";
  return 0;
}
