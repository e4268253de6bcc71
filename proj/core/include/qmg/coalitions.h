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

#ifndef QMG_COALITIONS_H_
#define QMG_COALITIONS_H_

// Coalitions of players in an N-player game. A coalition either shares an
// entangled block of qubits (quantum) or agrees on a joint classical choice.
// Players outside every coalition flip fair coins. Classical randomness is
// always a mixture over computational basis products, so a classical bit
// measured in a rotated basis behaves as a prepared |0> or |1>.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qmg/game.h"
#include "qmg/hilbert.h"

namespace qmg {

// n-qubit GHZ block, every member then plays M(pi/2, -delta, delta).
struct QuantumGhz {
  double delta = 0.0;
};

struct QuantumExplicit {
  StateVector block;
};

struct ClassicalDeterministic {
  std::string bits;
};

// Uniform mixture over the distinct orderings of a weight-w string.
struct ClassicalRandomPermutation {
  int weight = 0;
};

using CoalitionKind = std::variant<QuantumGhz, QuantumExplicit,
                                   ClassicalDeterministic,
                                   ClassicalRandomPermutation>;

struct CoalitionSpec {
  // 1-based player indices; block qubit j belongs to members[j].
  std::vector<int> members;
  CoalitionKind kind;

  int size() const { return static_cast<int>(members.size()); }
};

enum class OutsiderPolicy { kUniformRandomBit };

struct Scenario {
  int n_players = 0;
  std::vector<CoalitionSpec> coalitions;
  OutsiderPolicy outsider_policy = OutsiderPolicy::kUniformRandomBit;
};

// Throws ArgumentError for overlapping or out-of-range members and for blocks
// whose width does not match the member count.
void ValidateScenario(const Scenario& scenario);

// 1-based indices of players in no coalition, ascending.
std::vector<int> Outsiders(const Scenario& scenario);

// M(pi/2, -delta, delta)^{x n} applied to Ghz(n).
StateVector GhzCoalitionBlock(int n, double delta);

// Full N-qubit mixture: outsider coin flips, classical choices and quantum
// blocks, with tensor factors placed at their players' global positions.
MixedState ComposeScenario(const Scenario& scenario);

struct CoalitionPayoff {
  std::vector<double> coalition_means;  // one per scenario coalition
  PayoffVector payoffs;                 // every player
};

// Evaluates ComposeScenario via ExpectedPayoffsMixed. `quad` defaults to
// QuadratureSpec::Default(N).
CoalitionPayoff EvaluateCoalitions(const Scenario& scenario, bool randomized,
                                   std::optional<QuadratureSpec> quad = {});

// One coalition block against N - n fair-coin outsiders, evaluated without
// building the N-qubit register: the outsiders' mixture is invariant under
// the basis rotation, so only their ones-count (binomial) matters.
struct BlockPayoff {
  std::vector<double> member_payoffs;
  double outsider_payoff = 0.0;  // each outsider, identical by symmetry
  double coalition_mean = 0.0;
};

BlockPayoff BlockVersusRandomOutsiders(const StateVector& block,
                                       int n_players, bool randomized,
                                       std::optional<QuadratureSpec> quad = {});

// Same setting at a single fixed basis angle.
BlockPayoff BlockVersusRandomOutsidersAtPhi(const StateVector& block,
                                            int n_players, double phi);

struct CoalitionMonteCarlo {
  double mean = 0.0;
  double standard_error = 0.0;
  std::int64_t samples = 0;
};

// Monte Carlo estimate of the randomized coalition mean, phi ~ U[0, 2pi)
// from std::mt19937_64(seed).
CoalitionMonteCarlo MonteCarloCoalitionMean(const StateVector& block,
                                            int n_players, std::int64_t samples,
                                            std::uint64_t seed);

struct GhzSearchOptions {
  int grid_points = 1024;  // over [0, pi), step pi / grid_points
  std::optional<QuadratureSpec> quad;
};

struct GhzOptimum {
  double delta = 0.0;  // canonical, in [0, pi)
  double payoff = 0.0; // coalition mean
  double grid_delta = 0.0;
  double grid_payoff = 0.0;
};

// Best symmetric profile M(pi/2, -delta, delta) for an n-qubit GHZ coalition
// among N players: dense grid, then Brent refinement around the best cell.
// Ties on the grid go to the smallest delta. Odd n is UnsupportedError.
GhzOptimum OptimizeGhzDelta(int n, int n_players, bool randomized,
                            const GhzSearchOptions& options = {});

struct ClassicalOptimum {
  std::string bits;  // 0^{n-w} 1^w
  int weight = 0;
  double payoff = 0.0;
  std::vector<double> payoff_by_weight;  // index w = 0..n
};

// Exhaustive over ones-count; ties go to the smaller count.
ClassicalOptimum OptimizeClassical(int n, int n_players, bool randomized,
                                   std::optional<QuadratureSpec> quad = {});

struct BalancedPhaseOptimum {
  int best_ones = 0;
  double payoff = 0.0;
  std::vector<double> payoff_by_ones;  // index m - 1 for m = 1..n-1
  // The fixed rule m = n/2 - 1 (even n) or (n - 1)/2 (odd n), when it gives
  // a valid zero-sum state.
  std::optional<int> rule_ones;
  std::optional<double> rule_payoff;
};

// Randomized game, roots-of-unity phases, every m in 1..n-1.
BalancedPhaseOptimum OptimizeBalancedPhase(
    int n, int n_players, std::optional<QuadratureSpec> quad = {});

}  // namespace qmg

#endif  // QMG_COALITIONS_H_
