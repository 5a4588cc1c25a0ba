#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcasino/qcasino.hpp"

namespace qc = qcasino;

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qc::config_error("cannot write file: " + path);
  out << content;
}

std::string trim_copy(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Flat key=value configuration: each key names a long option of the
// subcommand being run, values given on the command line win, unknown keys
// are an error. Blank lines and lines starting with # are skipped.
void apply_config_file(CLI::App& sub, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw qc::config_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const std::string stripped = trim_copy(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw qc::config_error("malformed config line (expected key=value): " + stripped);
    }
    const std::string key = trim_copy(stripped.substr(0, eq));
    std::string value = trim_copy(stripped.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    CLI::Option* op = key == "config" ? nullptr : sub.get_option_no_throw("--" + key);
    if (op == nullptr) throw qc::config_error("unknown config key: " + key);
    if (op->count() > 0) continue;
    try {
      op->add_result(value);
      op->run_callback();
    } catch (const CLI::Error& e) {
      throw qc::config_error("bad config value for " + key + ": " + e.what());
    }
  }
}

// JSON summaries go to stdout by default or to --out; either way the bytes
// are identical for identical configs and seeds.
void emit_summary(const qc::json& summary, const std::string& out_path) {
  const std::string text = summary.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

qc::json base_summary(const std::string& command, std::uint64_t seed) {
  qc::json j;
  j["artifact_version"] = std::string(qc::k_artifact_version);
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

// Histories of length 0..4 in length-lexicographic order; the 31 rows of the
// built-in strategy tables.
std::vector<std::string> table_histories() {
  std::vector<std::string> rows;
  for (int len = 0; len <= 4; ++len) {
    for (unsigned v = 0; v < (1u << len); ++v) {
      std::string h(static_cast<std::size_t>(len), '0');
      for (int b = 0; b < len; ++b) {
        if ((v >> (len - 1 - b)) & 1u) h[static_cast<std::size_t>(b)] = '1';
      }
      rows.push_back(std::move(h));
    }
  }
  return rows;
}

struct TableGolden {
  std::string strategy;
  // One bet character per history row, in table_histories() order.
  std::string bets;
};

const std::vector<TableGolden>& table_goldens() {
  static const std::vector<TableGolden> goldens = {
      {"bet-on-last", "-010101010101010101010101010101"},
      {"bet-less-frequent", "-101--011101000111-1--01--0-000"},
  };
  return goldens;
}

int run_tables(const std::string& format, bool corrupt_golden) {
  const std::vector<std::string> histories = table_histories();
  bool mismatch = false;
  std::ostringstream text;
  std::ostringstream csv;
  csv << "strategy,history,bet\n";
  for (const TableGolden& golden : table_goldens()) {
    std::string expected = golden.bets;
    if (corrupt_golden) expected[1] = expected[1] == '0' ? '1' : '0';
    const qc::ClassicalStrategy& strategy = qc::find_strategy(golden.strategy);
    text << "strategy: " << golden.strategy << "\n";
    text << "history bet\n";
    for (std::size_t i = 0; i < histories.size(); ++i) {
      const char bet = qc::bet_char(strategy.decide(histories[i]));
      const std::string& shown = histories[i];
      const std::string cell = shown.empty() ? "lambda" : shown;
      text << cell << " " << bet << "\n";
      csv << golden.strategy << ',' << cell << ',' << bet << '\n';
      if (bet != expected[i]) mismatch = true;
    }
    text << "\n";
  }
  std::cout << (format == "csv" ? csv.str() : text.str());
  if (mismatch) {
    std::cerr << "table mismatch against built-in golden copy\n";
    return 1;
  }
  return 0;
}

qc::json classical_ledger_summary(const qc::PayoffLedger& ledger) {
  long long bets = 0;
  long long wins = 0;
  long long prev = 0;
  for (const qc::TossRecord& r : ledger.records) {
    if (qc::bet_placed(r.bet)) {
      ++bets;
      if (r.payoff_after > prev) ++wins;
    }
    prev = r.payoff_after;
  }
  qc::json j;
  j["final_payoff"] = ledger.final_payoff;
  j["tosses"] = static_cast<long long>(ledger.records.size());
  j["bets"] = bets;
  j["wins"] = wins;
  j["losses"] = bets - wins;
  return j;
}

qc::json quantum_ledger_summary(const qc::QuantumLedger& ledger) {
  long long bets = 0;
  long long wins = 0;
  long long prev = 0;
  for (const qc::QuantumTossRecord& r : ledger.records) {
    if (r.bet_placed) {
      ++bets;
      if (r.payoff_after > prev) ++wins;
    }
    prev = r.payoff_after;
  }
  qc::json j;
  j["final_payoff"] = ledger.final_payoff;
  j["tosses"] = static_cast<long long>(ledger.records.size());
  j["bets"] = bets;
  j["wins"] = wins;
  j["losses"] = bets - wins;
  return j;
}

qc::PureState named_pure_bet(const std::string& name) {
  const double s = 1.0 / std::sqrt(2.0);
  if (name == "zero") return qc::make_pure_state({qc::cdouble{1, 0}, qc::cdouble{0, 0}});
  if (name == "one") return qc::make_pure_state({qc::cdouble{0, 0}, qc::cdouble{1, 0}});
  if (name == "plus") return qc::make_pure_state({qc::cdouble{s, 0}, qc::cdouble{s, 0}});
  throw qc::config_error("unknown pure bet '" + name + "'; known: zero, one, plus");
}

qc::CMatrix named_matrix_bet(const std::string& name) {
  if (name == "sigma-x") return qc::pauli_x();
  if (name == "sigma-y") return qc::pauli_y();
  if (name == "sigma-z") return qc::pauli_z();
  if (name == "identity") return qc::CMatrix::identity(2);
  throw qc::config_error("unknown matrix bet '" + name +
                         "'; known: sigma-x, sigma-y, sigma-z, identity");
}

qc::AnyQuantumStrategy select_quantum_strategy(int kind, std::string strategy,
                                               const std::string& bet) {
  if (kind == 1) {
    if (!bet.empty()) return qc::make_constant_pure_bet(named_pure_bet(bet), "bet-" + bet);
    if (strategy.empty()) strategy = "bet-zero";
    if (strategy == "never-bet") return qc::make_never_bet_kind1();
    if (strategy == "bet-zero") return qc::make_constant_pure_bet(named_pure_bet("zero"), "bet-zero");
    throw qc::config_error("unknown kind-1 strategy '" + strategy +
                           "'; known: bet-zero, never-bet (or use --bet)");
  }
  if (kind == 2) {
    if (!bet.empty()) {
      if (bet != "maximally-mixed") {
        throw qc::config_error("unknown mixed bet '" + bet + "'; known: maximally-mixed");
      }
      return qc::make_constant_mixed_bet(qc::maximally_mixed_qubit(), "maximally-mixed");
    }
    if (strategy.empty()) strategy = "maximally-mixed";
    if (strategy == "never-bet") return qc::make_never_bet_kind2();
    if (strategy == "maximally-mixed") {
      return qc::make_constant_mixed_bet(qc::maximally_mixed_qubit(), "maximally-mixed");
    }
    throw qc::config_error("unknown kind-2 strategy '" + strategy +
                           "'; known: maximally-mixed, never-bet (or use --bet)");
  }
  if (!bet.empty()) return qc::make_constant_matrix_bet(named_matrix_bet(bet), "bet-" + bet);
  if (strategy.empty()) strategy = "pauli";
  if (strategy == "pauli") return qc::make_pauli_strategy();
  if (strategy == "never-bet") return qc::make_never_bet_kind3();
  throw qc::config_error("unknown kind-3 strategy '" + strategy +
                         "'; known: pauli, never-bet (or use --bet)");
}

std::string strategy_display_name(const qc::AnyQuantumStrategy& s) {
  if (std::holds_alternative<qc::QuantumStrategyKind1>(s)) {
    return std::get<qc::QuantumStrategyKind1>(s).name;
  }
  if (std::holds_alternative<qc::QuantumStrategyKind2>(s)) {
    return std::get<qc::QuantumStrategyKind2>(s).name;
  }
  return std::get<qc::QuantumStrategyKind3>(s).name;
}

qc::MetricKind parse_metric(const std::string& name) {
  if (name == "trace") return qc::MetricKind::trace;
  if (name == "angle") return qc::MetricKind::angle;
  throw qc::config_error("metric must be trace or angle");
}

qc::MatrixDistance parse_distance(const std::string& name) {
  if (name == "spectral") return qc::MatrixDistance::spectral;
  if (name == "operator") return qc::MatrixDistance::operator_norm;
  throw qc::config_error("distance must be spectral or operator");
}

qc::TraceMode parse_mode(const std::string& name) {
  if (name == "normalized") return qc::TraceMode::normalized;
  if (name == "plain") return qc::TraceMode::plain;
  throw qc::config_error("mode must be normalized or plain");
}

qc::json config_echo_quantum(const qc::QuantumCasinoConfig& cfg, const std::string& strategy_name) {
  qc::json j;
  j["kind"] = cfg.kind;
  j["epsilon"] = cfg.epsilon;
  j["tosses"] = cfg.n_tosses;
  j["edge"] = cfg.edge;
  j["metric"] = cfg.metric == qc::MetricKind::trace ? "trace" : "angle";
  j["distance"] = cfg.distance == qc::MatrixDistance::spectral ? "spectral" : "operator";
  j["mode"] = cfg.mode == qc::TraceMode::normalized ? "normalized" : "plain";
  j["strategy"] = strategy_name;
  return j;
}

std::vector<long long> parse_lengths(const std::string& csv_list) {
  std::vector<long long> out;
  std::stringstream ss(csv_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
    if (out.back() < 1) throw qc::config_error("trend lengths must be positive");
  }
  if (out.empty()) throw qc::config_error("trend list is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casino laboratory for classical and quantum gambling strategies"};
  app.require_subcommand(1);

  // tables
  auto* tables = app.add_subcommand("tables", "Print the built-in strategy tables");
  std::string tables_format = "text";
  bool corrupt_golden = false;
  tables->add_option("--format", tables_format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}));
  tables->add_flag("--corrupt-golden", corrupt_golden, "Test hook: corrupt the golden copy")
      ->group("");

  // classical
  auto* classical = app.add_subcommand("classical", "Play or sample the classical casino");
  std::string cl_strategy = "bet-on-last";
  long long cl_tosses = 10000;
  std::string cl_results;
  long long cl_trials = 0;
  std::uint64_t cl_seed = 42;
  std::string cl_csv;
  std::string cl_out;
  classical->add_option("--strategy", cl_strategy, "Strategy name");
  classical->add_option("--tosses", cl_tosses, "Number of tosses")->check(CLI::PositiveNumber);
  classical->add_option("--results", cl_results, "Fixed result string of 0/1 symbols");
  classical->add_option("--trials", cl_trials, "Monte Carlo trials (0 = single game)")
      ->check(CLI::NonNegativeNumber);
  classical->add_option("--seed", cl_seed, "Random seed");
  classical->add_option("--csv", cl_csv, "Write the game ledger CSV to this path");
  classical->add_option("--out", cl_out, "Write the JSON summary to this path");
  std::string cl_config;
  classical->add_option("--config", cl_config, "Flat key=value configuration file");

  // quantum
  auto* quantum = app.add_subcommand("quantum", "Play a quantum casino of kind 1, 2 or 3");
  int q_kind = 3;
  long long q_tosses = 10000;
  double q_epsilon = -1.0;
  double q_edge = 10.0;
  std::string q_metric = "trace";
  std::string q_distance = "spectral";
  std::string q_mode = "normalized";
  std::string q_strategy;
  std::string q_bet;
  std::string q_fixtures;
  std::uint64_t q_seed = 42;
  std::string q_csv;
  std::string q_out;
  quantum->add_option("--kind", q_kind, "Casino kind")->check(CLI::Range(1, 3));
  quantum->add_option("--tosses", q_tosses, "Number of tosses")->check(CLI::PositiveNumber);
  quantum->add_option("--epsilon", q_epsilon, "Win radius (default 10 for kind 3, 0.25 otherwise)");
  quantum->add_option("--edge", q_edge, "Kind-3 entry square edge")->check(CLI::PositiveNumber);
  quantum->add_option("--metric", q_metric, "Kind-1/2 metric")
      ->check(CLI::IsMember({"trace", "angle"}));
  quantum->add_option("--distance", q_distance, "Kind-3 distance convention")
      ->check(CLI::IsMember({"spectral", "operator"}));
  quantum->add_option("--mode", q_mode, "Kind-3 decision-functional mode")
      ->check(CLI::IsMember({"normalized", "plain"}));
  quantum->add_option("--strategy", q_strategy, "Strategy name (default: pauli for kind 3)");
  quantum->add_option("--bet", q_bet, "Constant bet name (overrides --strategy)");
  quantum->add_option("--fixtures", q_fixtures, "Kind-3 fixed-coin fixture JSON; replays it");
  quantum->add_option("--seed", q_seed, "Random seed");
  quantum->add_option("--csv", q_csv, "Write the game ledger CSV to this path");
  quantum->add_option("--out", q_out, "Write the JSON summary to this path");
  std::string q_config;
  quantum->add_option("--config", q_config, "Flat key=value configuration file");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "State metrics and entanglement reports");
  std::string m_input;
  bool m_fuzz = false;
  long long m_trials = 10000;
  std::uint64_t m_seed = 42;
  std::string m_out;
  metrics->add_option("--input", m_input, "State fixture JSON path");
  metrics->add_flag("--fuzz-bounds", m_fuzz, "Random search over the distance/fidelity bounds");
  metrics->add_option("--trials", m_trials, "Fuzz trials")->check(CLI::PositiveNumber);
  metrics->add_option("--seed", m_seed, "Random seed");
  metrics->add_option("--out", m_out, "Write the JSON report to this path");
  std::string m_config;
  metrics->add_option("--config", m_config, "Flat key=value configuration file");

  // montecarlo
  auto* mc = app.add_subcommand("montecarlo", "Monte Carlo payoff campaigns");
  std::string mc_kind = "classical";
  std::string mc_strategy;
  std::string mc_bet;
  long long mc_tosses = 100;
  long long mc_trials = 1000;
  double mc_epsilon = -1.0;
  double mc_edge = 10.0;
  std::string mc_metric = "trace";
  std::string mc_distance = "spectral";
  std::string mc_mode = "normalized";
  std::string mc_trend;
  std::uint64_t mc_seed = 42;
  std::string mc_csv;
  std::string mc_out;
  mc->add_option("--kind", mc_kind, "classical, 1, 2 or 3")
      ->check(CLI::IsMember({"classical", "1", "2", "3"}));
  mc->add_option("--strategy", mc_strategy, "Strategy name");
  mc->add_option("--bet", mc_bet, "Constant bet name for quantum kinds");
  mc->add_option("--tosses", mc_tosses, "Tosses per trial")->check(CLI::PositiveNumber);
  mc->add_option("--trials", mc_trials, "Number of trials")->check(CLI::Range(2ll, 100000000ll));
  mc->add_option("--epsilon", mc_epsilon, "Win radius (default 10 for kind 3, 0.25 otherwise)");
  mc->add_option("--edge", mc_edge, "Kind-3 entry square edge")->check(CLI::PositiveNumber);
  mc->add_option("--metric", mc_metric, "Kind-1/2 metric")
      ->check(CLI::IsMember({"trace", "angle"}));
  mc->add_option("--distance", mc_distance, "Kind-3 distance convention")
      ->check(CLI::IsMember({"spectral", "operator"}));
  mc->add_option("--mode", mc_mode, "Kind-3 decision-functional mode")
      ->check(CLI::IsMember({"normalized", "plain"}));
  mc->add_option("--trend", mc_trend, "Comma list of game lengths for a lucky-fraction trend");
  mc->add_option("--seed", mc_seed, "Random seed");
  mc->add_option("--csv", mc_csv, "Write trend points as CSV to this path");
  mc->add_option("--out", mc_out, "Write the JSON summary to this path");
  std::string mc_config;
  mc->add_option("--config", mc_config, "Flat key=value configuration file");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_config_file(*classical, cl_config);
    apply_config_file(*quantum, q_config);
    apply_config_file(*metrics, m_config);
    apply_config_file(*mc, mc_config);

    if (tables->parsed()) {
      return run_tables(tables_format, corrupt_golden);
    }

    if (classical->parsed()) {
      const qc::ClassicalStrategy& strategy = qc::find_strategy(cl_strategy);
      qc::json summary = base_summary("classical", cl_seed);
      qc::json cfg;
      cfg["strategy"] = strategy.name;
      if (!cl_results.empty()) {
        qc::require_bit_string(cl_results);
        cfg["results"] = cl_results;
        summary["config"] = cfg;
        const qc::PayoffLedger ledger = qc::play_results(strategy, cl_results);
        summary["result"] = classical_ledger_summary(ledger);
        if (!cl_csv.empty()) write_file(cl_csv, qc::classical_ledger_csv(ledger));
      } else if (cl_trials > 0) {
        cfg["tosses"] = cl_tosses;
        cfg["trials"] = cl_trials;
        summary["config"] = cfg;
        const qc::MeanStderr stats =
            qc::montecarlo_mean_payoff(strategy, cl_tosses, cl_trials, cl_seed);
        qc::json r;
        r["mean_payoff"] = stats.mean;
        r["std_error"] = stats.std_error;
        r["lucky_fraction"] = qc::lucky_fraction(strategy, cl_tosses, cl_trials, cl_seed);
        summary["result"] = r;
      } else {
        cfg["tosses"] = cl_tosses;
        summary["config"] = cfg;
        qc::BitSource source = qc::random_bit_source(qc::SeededRng(cl_seed));
        const qc::PayoffLedger ledger = qc::play(strategy, source, cl_tosses);
        summary["result"] = classical_ledger_summary(ledger);
        if (!cl_csv.empty()) write_file(cl_csv, qc::classical_ledger_csv(ledger));
      }
      emit_summary(summary, cl_out);
      return 0;
    }

    if (quantum->parsed()) {
      qc::QuantumCasinoConfig cfg;
      cfg.kind = q_kind;
      cfg.epsilon = q_epsilon > 0 ? q_epsilon : qc::default_epsilon(q_kind);
      cfg.n_tosses = q_tosses;
      cfg.edge = q_edge;
      cfg.metric = parse_metric(q_metric);
      cfg.distance = parse_distance(q_distance);
      cfg.mode = parse_mode(q_mode);
      cfg.seed = q_seed;
      const qc::AnyQuantumStrategy strategy = select_quantum_strategy(q_kind, q_strategy, q_bet);
      qc::QuantumLedger ledger;
      if (!q_fixtures.empty()) {
        if (q_kind != 3) throw qc::config_error("--fixtures applies to kind 3 only");
        const qc::CoinFixture fixture = qc::load_coin_fixture(q_fixtures);
        ledger = qc::play_kind3_with_coins(std::get<qc::QuantumStrategyKind3>(strategy), cfg,
                                           fixture.coins);
        cfg.n_tosses = static_cast<long long>(fixture.coins.size());
      } else {
        ledger = qc::play_any(strategy, cfg);
      }
      qc::json summary = base_summary("quantum", q_seed);
      summary["config"] = config_echo_quantum(cfg, strategy_display_name(strategy));
      if (!q_fixtures.empty()) summary["config"]["fixtures"] = q_fixtures;
      summary["result"] = quantum_ledger_summary(ledger);
      if (!q_csv.empty()) write_file(q_csv, qc::quantum_ledger_csv(ledger));
      emit_summary(summary, q_out);
      return 0;
    }

    if (metrics->parsed()) {
      if (m_input.empty() && !m_fuzz) {
        throw qc::config_error("metrics needs --input and/or --fuzz-bounds");
      }
      qc::json summary = base_summary("metrics", m_seed);
      qc::json cfg;
      if (!m_input.empty()) cfg["input"] = m_input;
      cfg["fuzz_bounds"] = m_fuzz;
      if (m_fuzz) cfg["trials"] = m_trials;
      summary["config"] = cfg;
      qc::json result;

      if (!m_input.empty()) {
        const qc::StateFixture fixture = qc::load_state_fixture(m_input);
        std::vector<std::pair<std::string, qc::DensityMatrix>> all;
        for (const auto& s : fixture.states) all.emplace_back(s.name, qc::projector(s.state));
        for (const auto& d : fixture.density_matrices) {
          all.emplace_back(d.name, qc::make_density_matrix(d.matrix));
        }
        qc::json pairs = qc::json::array();
        for (std::size_t i = 0; i < all.size(); ++i) {
          for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i].second.dim() != all[j].second.dim()) continue;
            qc::json p;
            p["a"] = all[i].first;
            p["b"] = all[j].first;
            p["trace_distance"] = qc::trace_distance(all[i].second, all[j].second);
            p["fidelity"] = qc::fidelity(all[i].second, all[j].second);
            p["angle"] = qc::angle_distance(all[i].second, all[j].second);
            pairs.push_back(std::move(p));
          }
        }
        result["pairs"] = std::move(pairs);
        qc::json schmidt_reports = qc::json::array();
        for (const auto& s : fixture.states) {
          if (s.state.dim() < 4 || !qc::is_power_of_two(s.state.dim())) continue;
          const int n = s.state.n_qubits();
          qc::json rep;
          rep["state"] = s.name;
          qc::json cuts = qc::json::array();
          for (int k = 1; k <= n - 1; ++k) {
            const qc::SchmidtData data = qc::schmidt(s.state, k);
            qc::json cut;
            cut["cut"] = k;
            cut["coefficients"] = data.coefficients;
            cut["schmidt_number"] = qc::schmidt_number(s.state, k);
            cuts.push_back(std::move(cut));
          }
          rep["cuts"] = std::move(cuts);
          rep["entanglement_degree"] = qc::entanglement_degree(s.state);
          schmidt_reports.push_back(std::move(rep));
        }
        result["schmidt"] = std::move(schmidt_reports);
      }

      if (m_fuzz) {
        qc::SeededRng rng(m_seed);
        long long printed_violations = 0;
        long long standard_violations = 0;
        qc::json first_example;
        for (long long t = 0; t < m_trials; ++t) {
          double d = 0.0;
          double f = 0.0;
          if (t % 2 == 0) {
            const qc::PureState a = qc::sample_pure_state(rng);
            const qc::PureState b = qc::sample_pure_state(rng);
            d = qc::pure_trace_distance(a, b);
            f = qc::overlap(a, b);
          } else {
            const qc::DensityMatrix a = qc::sample_density_matrix(rng);
            const qc::DensityMatrix b = qc::sample_density_matrix(rng);
            d = qc::trace_distance(a, b);
            f = qc::fidelity(a, b);
          }
          if (d > std::sqrt(std::max(0.0, 1.0 - f)) + 1e-9) {
            ++printed_violations;
            if (first_example.empty()) {
              first_example["trace_distance"] = d;
              first_example["fidelity"] = f;
              first_example["sqrt_one_minus_f"] = std::sqrt(std::max(0.0, 1.0 - f));
            }
          }
          if (d > std::sqrt(std::max(0.0, 1.0 - f * f)) + 1e-9) ++standard_violations;
        }
        qc::json fuzz;
        fuzz["trials"] = m_trials;
        fuzz["violations_of_sqrt_one_minus_f_bound"] = printed_violations;
        fuzz["violations_of_sqrt_one_minus_f_squared_bound"] = standard_violations;
        if (!first_example.empty()) fuzz["first_violation"] = first_example;
        result["bound_fuzz"] = std::move(fuzz);
      }

      summary["result"] = std::move(result);
      emit_summary(summary, m_out);
      return 0;
    }

    if (mc->parsed()) {
      qc::json summary = base_summary("montecarlo", mc_seed);
      qc::json cfg;
      cfg["kind"] = mc_kind;
      cfg["tosses"] = mc_tosses;
      cfg["trials"] = mc_trials;
      qc::json result;
      std::string trend_csv = "n_tosses,lucky_fraction,mean_payoff,std_error\n";

      if (mc_kind == "classical") {
        if (mc_strategy.empty()) mc_strategy = "bet-on-last";
        const qc::ClassicalStrategy& strategy = qc::find_strategy(mc_strategy);
        cfg["strategy"] = strategy.name;
        const qc::MeanStderr stats =
            qc::montecarlo_mean_payoff(strategy, mc_tosses, mc_trials, mc_seed);
        result["mean_payoff"] = stats.mean;
        result["std_error"] = stats.std_error;
        result["lucky_fraction"] = qc::lucky_fraction(strategy, mc_tosses, mc_trials, mc_seed);
        if (!mc_trend.empty()) {
          qc::json points = qc::json::array();
          for (long long n : parse_lengths(mc_trend)) {
            const qc::MeanStderr s = qc::montecarlo_mean_payoff(strategy, n, mc_trials, mc_seed);
            const double lucky = qc::lucky_fraction(strategy, n, mc_trials, mc_seed);
            qc::json p;
            p["n_tosses"] = n;
            p["lucky_fraction"] = lucky;
            p["mean_payoff"] = s.mean;
            p["std_error"] = s.std_error;
            points.push_back(std::move(p));
            trend_csv += std::to_string(n) + ',' + qc::format_double(lucky) + ',' +
                         qc::format_double(s.mean) + ',' + qc::format_double(s.std_error) + '\n';
          }
          result["trend"] = std::move(points);
        }
      } else {
        const int kind = std::stoi(mc_kind);
        qc::QuantumCasinoConfig qcfg;
        qcfg.kind = kind;
        qcfg.epsilon = mc_epsilon > 0 ? mc_epsilon : qc::default_epsilon(kind);
        qcfg.n_tosses = mc_tosses;
        qcfg.edge = mc_edge;
        qcfg.metric = parse_metric(mc_metric);
        qcfg.distance = parse_distance(mc_distance);
        qcfg.mode = parse_mode(mc_mode);
        qcfg.seed = mc_seed;
        const qc::AnyQuantumStrategy strategy =
            select_quantum_strategy(kind, mc_strategy, mc_bet);
        cfg = config_echo_quantum(qcfg, strategy_display_name(strategy));
        cfg["kind"] = mc_kind;
        cfg["trials"] = mc_trials;
        const qc::QuantumMonteCarlo stats = qc::montecarlo_quantum(strategy, qcfg, mc_trials);
        result["mean_payoff"] = stats.mean;
        result["std_error"] = stats.std_error;
        result["lucky_fraction"] = stats.lucky_fraction;
        if (!mc_trend.empty()) {
          qc::json points = qc::json::array();
          for (const qc::LuckyTrendPoint& pt :
               qc::lucky_trend(strategy, qcfg, mc_trials, parse_lengths(mc_trend))) {
            qc::json p;
            p["n_tosses"] = pt.n_tosses;
            p["lucky_fraction"] = pt.lucky_fraction;
            p["mean_payoff"] = pt.mean;
            p["std_error"] = pt.std_error;
            points.push_back(std::move(p));
            trend_csv += std::to_string(pt.n_tosses) + ',' + qc::format_double(pt.lucky_fraction) +
                         ',' + qc::format_double(pt.mean) + ',' +
                         qc::format_double(pt.std_error) + '\n';
          }
          result["trend"] = std::move(points);
        }
      }

      summary["config"] = cfg;
      summary["result"] = std::move(result);
      if (!mc_csv.empty()) {
        if (mc_trend.empty()) throw qc::config_error("--csv for montecarlo requires --trend");
        write_file(mc_csv, trend_csv);
      }
      emit_summary(summary, mc_out);
      return 0;
    }
  } catch (const qc::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qc::shape_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const qc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
