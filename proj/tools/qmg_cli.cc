// Copyright 2026 The QMG Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmg_cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qmg/analysis.h"
#include "qmg/config.h"
#include "qmg/errors.h"
#include "qmg/moves.h"

namespace qmg::cli {
namespace {

enum class Format { kCsv, kText };

struct Common {
  bool randomized = false;
  bool computational = false;
  int quad_points = 0;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::optional<Format> format;
};

void AddCommon(CLI::App* cmd, Common& c, bool with_measurement) {
  if (with_measurement) {
    auto* r = cmd->add_flag("--randomized", c.randomized,
                            "Average over a uniformly random measurement basis");
    auto* k = cmd->add_flag("--computational", c.computational,
                            "Measure in the computational basis");
    r->excludes(k);
    cmd->add_option("--quad-points", c.quad_points,
                    "Quadrature points for the basis average (default 4N+2)")
        ->check(CLI::PositiveNumber);
  }
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--out", c.out_path, "Write results to FILE");
  cmd->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::kCsv},
                                        {"text", Format::kText}},
          CLI::ignore_case));
}

// Writes through `out` or to the --out file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ValidationError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void Emit(const ResultTable& t, Format f, std::ostream& out) {
  if (f == Format::kCsv) {
    WriteCsv(t, out);
  } else {
    WriteText(t, out);
  }
}

int Payoff(const std::string& path, const Common& c, std::ostream& out) {
  ScenarioConfig config = LoadScenarioConfig(path);
  if (c.randomized) config.randomized = true;
  if (c.computational) config.randomized = false;
  if (c.quad_points > 0) config.quad_points = c.quad_points;
  if (c.seed) config.seed = *c.seed;
  const ScenarioResult result = RunScenario(config);
  Sink sink(c.out_path, out);
  if (c.format.value_or(Format::kText) == Format::kText) {
    WriteScenarioText(result, sink.get());
  } else {
    WriteCsv(ScenarioTable(result), sink.get());
  }
  return kExitOk;
}

int Table1(const Common& c, int threads, int grid, std::ostream& out,
           std::ostream& err) {
  Table1Options opt;
  opt.randomized = !c.computational;
  opt.threads = threads;
  opt.grid_points = grid;
  const auto cells = ReproduceTable1(opt);
  Sink sink(c.out_path, out);
  Emit(Table1Table(cells), c.format.value_or(Format::kCsv), sink.get());
  int mismatches = 0;
  for (const Table1Cell& cell : cells) {
    if (cell.payoff_matches && cell.delta_congruent) continue;
    ++mismatches;
    err << "mismatch: n=" << cell.published.n << " N=" << cell.published.n_players
        << " computed " << FormatReal(cell.optimum.payoff) << " at delta "
        << FormatReal(cell.optimum.delta) << ", listed "
        << cell.published.payoff.ToString() << " ("
        << (cell.payoff_matches ? "delta class differs" : "payoff differs")
        << ")\n";
  }
  return mismatches ? kExitMismatch : kExitOk;
}

int Figure1(const Common& c, const Figure1Options& opt, std::ostream& out) {
  const auto rows = ReproduceFigure1(opt);
  Sink sink(c.out_path, out);
  Emit(Figure1Table(rows), c.format.value_or(Format::kCsv), sink.get());
  return kExitOk;
}

int NeCheck(const Common& c, int players, int restarts,
            const std::optional<std::vector<double>>& profile,
            std::ostream& out) {
  const StrategyParams p = profile
                               ? StrategyParams{(*profile)[0], (*profile)[1],
                                                (*profile)[2]}
                               : NeStrategy(players);
  p.Validate();
  if (restarts < 1) throw ArgumentError("need at least one restart");
  const NashCheck check = VerifyNash(players, p, restarts, c.seed.value_or(0));
  const bool holds = check.improvement < kNashImprovementThreshold;
  ResultTable t;
  t.columns = {"players", "theta", "alpha", "beta", "restarts", "seed",
               "profile_payoff", "best_payoff", "improvement", "dev_theta",
               "dev_alpha", "dev_beta", "equilibrium"};
  t.rows.push_back({std::to_string(players), FormatReal(p.theta),
                    FormatReal(p.alpha), FormatReal(p.beta),
                    std::to_string(restarts), std::to_string(c.seed.value_or(0)),
                    FormatReal(check.profile_payoff), FormatReal(check.best_payoff),
                    FormatReal(check.improvement),
                    FormatReal(check.best_deviation.theta),
                    FormatReal(check.best_deviation.alpha),
                    FormatReal(check.best_deviation.beta), holds ? "yes" : "no"});
  Sink sink(c.out_path, out);
  Emit(t, c.format.value_or(Format::kText), sink.get());
  return holds ? kExitOk : kExitMismatch;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Quantum minority game toolkit", "qmg"};
  app.set_version_flag("--version", ToolVersion());
  app.require_subcommand(1);

  Common payoff_opts, table_opts, figure_opts, ne_opts, states_opts;

  std::string config_path;
  auto* payoff = app.add_subcommand("payoff", "Evaluate a scenario config");
  payoff->add_option("config", config_path, "Scenario YAML file")->required();
  AddCommon(payoff, payoff_opts, true);

  int threads = 1;
  int grid = 1024;
  auto* table1 = app.add_subcommand("table1", "GHZ coalition optima for n = 2..8");
  AddCommon(table1, table_opts, true);
  table1->add_option("--threads", threads)->check(CLI::PositiveNumber);
  table1->add_option("--grid-points", grid, "Delta grid over [0, pi)")
      ->check(CLI::PositiveNumber);

  Figure1Options fig;
  bool no_ghz = false;
  auto* figure1 =
      app.add_subcommand("figure1", "Classical vs entangled coalition payoffs");
  AddCommon(figure1, figure_opts, false);
  figure1->add_option("--n-min", fig.n_min, "Smallest coalition");
  figure1->add_option("--n-max", fig.n_max, "Largest coalition");
  figure1->add_option("--N-max", fig.n_players_max, "Largest player count");
  figure1->add_option("--threads", fig.threads)->check(CLI::PositiveNumber);
  figure1->add_flag("--no-ghz", no_ghz, "Skip the GHZ delta search");

  int players = 4;
  int restarts = 10000;
  std::optional<std::vector<double>> profile;
  auto* ne = app.add_subcommand("ne-check", "Search for a profitable deviation");
  AddCommon(ne, ne_opts, false);
  ne->add_option("--players", players, "Number of players (even)");
  ne->add_option("--restarts", restarts, "Random starting points");
  ne->add_option("--profile", profile, "theta alpha beta (default: equilibrium)")
      ->expected(3);

  bool list = false;
  int max_qubits = 4;
  auto* states = app.add_subcommand("states", "Dump the state library");
  AddCommon(states, states_opts, false);
  states->add_flag("--list", list, "List states with amplitudes");
  states->add_option("--max-qubits", max_qubits)->check(CLI::Range(2, 8));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << ToolVersion() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (payoff->parsed()) return Payoff(config_path, payoff_opts, out);
    if (table1->parsed()) return Table1(table_opts, threads, grid, out, err);
    if (figure1->parsed()) {
      fig.include_ghz = !no_ghz;
      return Figure1(figure_opts, fig, out);
    }
    if (ne->parsed()) return NeCheck(ne_opts, players, restarts, profile, out);
    if (states->parsed()) {
      Sink sink(states_opts.out_path, out);
      Emit(StateLibraryTable(max_qubits), states_opts.format.value_or(Format::kText),
           sink.get());
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitValidation;
}

}  // namespace qmg::cli
