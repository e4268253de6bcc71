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

#include "qmg/game.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "qmg/errors.h"
#include "qmg/tolerance.h"

namespace qmg {
namespace {

void RequirePlayers(int n_players) {
  if (n_players < 2) throw ArgumentError("a minority game needs N >= 2");
}

// Accumulates p * payoff(outcome) into `acc`.
void AccumulateOutcome(std::uint64_t outcome, int n, double p,
                       std::vector<double>& acc) {
  const int ones = std::popcount(outcome);
  const int zeros = n - ones;
  if (ones == 0 || zeros == 0 || ones == zeros) return;
  const int minority_bit = ones < zeros ? 1 : 0;
  for (int k = 0; k < n; ++k) {
    if (PlayerBit(outcome, k, n) == minority_bit) acc[k] += p;
  }
}

}  // namespace

double PayoffVector::Sum() const {
  double s = 0.0;
  for (double x : per_player) s += x;
  return s;
}

std::vector<int> MinorityPayoffs(std::uint64_t outcome, int n_players) {
  RequirePlayers(n_players);
  std::vector<double> acc(static_cast<std::size_t>(n_players), 0.0);
  AccumulateOutcome(outcome, n_players, 1.0, acc);
  return std::vector<int>(acc.begin(), acc.end());
}

std::vector<int> MinorityPayoffs(std::string_view bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ArgumentError("bad bitstring");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return MinorityPayoffs(index, static_cast<int>(bits.size()));
}

int MaxMinoritySize(int n_players) { return (n_players - 1) / 2; }

PayoffVector PayoffsFromProbabilities(std::span<const double> probabilities,
                                      int n_players) {
  RequirePlayers(n_players);
  if (probabilities.size() != (std::size_t{1} << n_players)) {
    throw ArgumentError("probability vector has the wrong length");
  }
  std::vector<double> acc(static_cast<std::size_t>(n_players), 0.0);
  for (std::uint64_t b = 0; b < probabilities.size(); ++b) {
    if (probabilities[b] != 0.0) {
      AccumulateOutcome(b, n_players, probabilities[b], acc);
    }
  }
  return {std::move(acc)};
}

PayoffVector ExpectedPayoffs(const StateVector& state) {
  return PayoffsFromProbabilities(OutcomeProbabilities(state),
                                  state.n_qubits());
}

PayoffVector ExpectedPayoffsAtPhi(const StateVector& state, double phi) {
  return ExpectedPayoffs(RotateMeasurementBasis(state, phi));
}

QuadratureSpec QuadratureSpec::Default(int n_qubits) {
  return {4 * n_qubits + 2, false};
}

void QuadratureSpec::Validate(int n_qubits) const {
  if (points < 1) throw ArgumentError("quadrature needs at least one point");
  if (!allow_inexact && points < MinimumExact(n_qubits)) {
    throw ValidationError("quadrature with " + std::to_string(points) +
                          " points is not exact for " +
                          std::to_string(n_qubits) + " qubits (need >= " +
                          std::to_string(MinimumExact(n_qubits)) + ")");
  }
}

double QuadratureSpec::Node(int j) const {
  return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(points);
}

std::vector<double> RandomizedOutcomeProbabilities(const StateVector& state,
                                                   const QuadratureSpec& quad) {
  quad.Validate(state.n_qubits());
  std::vector<double> avg(state.dim(), 0.0);
  for (int j = 0; j < quad.points; ++j) {
    const StateVector rotated = RotateMeasurementBasis(state, quad.Node(j));
    for (std::size_t b = 0; b < avg.size(); ++b) avg[b] += std::norm(rotated[b]);
  }
  for (double& p : avg) p /= quad.points;
  return avg;
}

PayoffVector ExpectedPayoffsRandomized(const StateVector& state,
                                       const QuadratureSpec& quad) {
  // The payoff functional is linear in the probabilities, so averaging the
  // distribution first is the same as averaging payoffs per node.
  return PayoffsFromProbabilities(RandomizedOutcomeProbabilities(state, quad),
                                  state.n_qubits());
}

PayoffVector ExpectedPayoffsMixed(const MixedState& mix, bool randomized,
                                  const QuadratureSpec& quad) {
  const int n = mix.n_qubits();
  RequirePlayers(n);
  std::vector<double> acc(static_cast<std::size_t>(n), 0.0);
  for (const MixedState::Term& term : mix.terms()) {
    const PayoffVector p = randomized
                               ? ExpectedPayoffsRandomized(term.state, quad)
                               : ExpectedPayoffs(term.state);
    for (int k = 0; k < n; ++k) acc[k] += term.weight * p[k];
  }
  return {std::move(acc)};
}

MonteCarloEstimate MonteCarloRandomized(const MixedState& mix,
                                        std::int64_t samples,
                                        std::uint64_t seed) {
  if (samples < 1) throw ArgumentError("need at least one sample");
  const int n = mix.n_qubits();
  RequirePlayers(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::vector<double> sum(static_cast<std::size_t>(n), 0.0);
  std::vector<double> sum_sq(static_cast<std::size_t>(n), 0.0);
  for (std::int64_t s = 0; s < samples; ++s) {
    const double phi = angle(rng);
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (const MixedState::Term& term : mix.terms()) {
      const PayoffVector p = ExpectedPayoffsAtPhi(term.state, phi);
      for (int k = 0; k < n; ++k) x[k] += term.weight * p[k];
    }
    for (int k = 0; k < n; ++k) {
      sum[k] += x[k];
      sum_sq[k] += x[k] * x[k];
    }
  }
  MonteCarloEstimate est;
  est.samples = samples;
  est.mean.per_player.resize(static_cast<std::size_t>(n));
  est.standard_error.resize(static_cast<std::size_t>(n));
  const double count = static_cast<double>(samples);
  for (int k = 0; k < n; ++k) {
    const double mean = sum[k] / count;
    est.mean.per_player[k] = mean;
    if (samples > 1) {
      const double var =
          std::max(0.0, (sum_sq[k] - count * mean * mean) / (count - 1.0));
      est.standard_error[k] = std::sqrt(var / count);
    }
  }
  return est;
}

MonteCarloEstimate MonteCarloRandomized(const StateVector& state,
                                        std::int64_t samples,
                                        std::uint64_t seed) {
  return MonteCarloRandomized(MixedState::Pure(state), samples, seed);
}

}  // namespace qmg
