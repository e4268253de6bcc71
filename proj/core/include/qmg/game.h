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

#ifndef QMG_GAME_H_
#define QMG_GAME_H_

// Minority-game payoffs. Players whose choice is strictly rarer score 1;
// balanced and unanimous outcomes pay nobody.
//
// In the randomized game every qubit is measured in the basis
// LogicalBasis(phi) with phi uniform on [0, 2pi). After rotation each
// amplitude is a trigonometric polynomial of degree <= N in phi, so every
// outcome probability has degree <= 2N and the M-point uniform rule with
// M >= 2N + 1 reproduces the continuous phi-average exactly.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qmg/hilbert.h"

namespace qmg {

struct PayoffVector {
  std::vector<double> per_player;

  std::size_t size() const { return per_player.size(); }
  double operator[](std::size_t k) const { return per_player[k]; }
  double Sum() const;
};

// 0/1 payoff of each player for one measured outcome.
std::vector<int> MinorityPayoffs(std::uint64_t outcome, int n_players);
std::vector<int> MinorityPayoffs(std::string_view bits);

// Largest possible minority, floor((N - 1) / 2).
int MaxMinoritySize(int n_players);

// Payoffs from an outcome distribution over 2^N strings.
PayoffVector PayoffsFromProbabilities(std::span<const double> probabilities,
                                      int n_players);

// Computational-basis expected payoffs. N >= 2.
PayoffVector ExpectedPayoffs(const StateVector& state);

// Expected payoffs for one fixed logical basis.
PayoffVector ExpectedPayoffsAtPhi(const StateVector& state, double phi);

struct QuadratureSpec {
  int points = 0;
  // Permit points < 2N + 1 (the average is then only approximate).
  bool allow_inexact = false;

  // 4N + 2.
  static QuadratureSpec Default(int n_qubits);
  static int MinimumExact(int n_qubits) { return 2 * n_qubits + 1; }

  // Throws ValidationError when points < MinimumExact(n) and inexact rules
  // are not allowed, ArgumentError when points < 1.
  void Validate(int n_qubits) const;

  // j-th node 2 pi j / points.
  double Node(int j) const;
};

// phi-averaged outcome distribution.
std::vector<double> RandomizedOutcomeProbabilities(const StateVector& state,
                                                   const QuadratureSpec& quad);

// (1/M) sum_j ExpectedPayoffsAtPhi(state, 2 pi j / M).
PayoffVector ExpectedPayoffsRandomized(const StateVector& state,
                                       const QuadratureSpec& quad);

// Weighted average over the pure terms of a mixture.
PayoffVector ExpectedPayoffsMixed(const MixedState& mix, bool randomized,
                                  const QuadratureSpec& quad);

struct MonteCarloEstimate {
  PayoffVector mean;
  std::vector<double> standard_error;
  std::int64_t samples = 0;
};

// Draws phi ~ U[0, 2pi) from std::mt19937_64(seed) and averages
// ExpectedPayoffsAtPhi over the mixture. Independent of the quadrature path.
MonteCarloEstimate MonteCarloRandomized(const MixedState& mix,
                                        std::int64_t samples,
                                        std::uint64_t seed);
MonteCarloEstimate MonteCarloRandomized(const StateVector& state,
                                        std::int64_t samples,
                                        std::uint64_t seed);

}  // namespace qmg

#endif  // QMG_GAME_H_
