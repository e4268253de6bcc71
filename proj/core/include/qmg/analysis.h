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

#ifndef QMG_ANALYSIS_H_
#define QMG_ANALYSIS_H_

// Equilibrium checks and the GHZ-coalition / coalition-comparison tables.
// Cell computations may run on several threads; every cell is a pure
// function of its inputs, so output is identical for any thread count.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qmg/coalitions.h"
#include "qmg/moves.h"
#include "qmg/rational.h"
#include "qmg/result_table.h"

namespace qmg {

struct NashCheck {
  double profile_payoff = 0.0;
  double best_payoff = 0.0;
  // best_payoff - profile_payoff; never below 0 because the profile itself is
  // a candidate deviation.
  double improvement = 0.0;
  StrategyParams best_deviation;
};

// All players start from Ghz(N) and play `profile` except player 1, whose
// best response is searched by Nelder-Mead from `restarts` uniform random
// starting points drawn from std::mt19937_64(seed).
NashCheck VerifyNash(int n_players, const StrategyParams& profile, int restarts,
                     std::uint64_t seed);

// Evidence standard for "is a Nash equilibrium".
inline constexpr double kNashImprovementThreshold = 1e-6;

struct Table1Entry {
  int n = 0;
  int n_players = 0;
  PiMultiple delta;
  Rational payoff;
};

// The published GHZ-coalition table: 20 cells, n in {2,4,6,8}, N in 5..10.
std::span<const Table1Entry> PublishedTable1();

struct Table1Options {
  bool randomized = true;
  int threads = 1;
  int grid_points = 1024;
};

struct Table1Cell {
  Table1Entry published;
  GhzOptimum optimum;
  std::optional<Rational> recognized;
  bool payoff_matches = false;   // |payoff - published| < 1e-9
  bool delta_congruent = false;  // optimum.delta == listed delta mod pi/n
};

std::vector<Table1Cell> ReproduceTable1(const Table1Options& options = {});
ResultTable Table1Table(std::span<const Table1Cell> cells);

// Period of the GHZ-coalition payoff in delta.
double GhzDeltaPeriod(int n);

struct Figure1Options {
  int n_min = 2;
  int n_max = 8;
  int n_players_max = 10;
  int threads = 1;
  bool include_ghz = true;  // even n only
};

struct Figure1Row {
  int n = 0;
  int n_players = 0;
  ClassicalOptimum classical;
  BalancedPhaseOptimum quantum;
  std::optional<GhzOptimum> ghz;
};

// One row per (n, N) with n_min <= n <= n_max and n < N <= n_players_max,
// randomized game throughout. Requires 2 <= n_min and n_players_max <= 12.
std::vector<Figure1Row> ReproduceFigure1(const Figure1Options& options = {});
ResultTable Figure1Table(std::span<const Figure1Row> rows);

// Named library states for up to `max_qubits` qubits with their nonzero
// amplitudes.
ResultTable StateLibraryTable(int max_qubits = 4);

}  // namespace qmg

#endif  // QMG_ANALYSIS_H_
