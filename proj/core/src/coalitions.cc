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

#include "qmg/coalitions.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include <boost/math/tools/minima.hpp>

#include "qmg/errors.h"
#include "qmg/moves.h"
#include "qmg/states.h"
#include "qmg/tolerance.h"

namespace qmg {
namespace {

struct Alternative {
  double weight;
  StateVector block;
};

// A tensor factor: where its qubits go and which pure blocks it can be in.
struct Factor {
  std::vector<int> positions;  // 0-based global qubit indices
  std::vector<Alternative> alternatives;
};

int KindWidth(const CoalitionKind& kind) {
  struct {
    int operator()(const QuantumGhz&) const { return -1; }
    int operator()(const QuantumExplicit& q) const { return q.block.n_qubits(); }
    int operator()(const ClassicalDeterministic& c) const {
      return static_cast<int>(c.bits.size());
    }
    int operator()(const ClassicalRandomPermutation&) const { return -1; }
  } visitor;
  return std::visit(visitor, kind);
}

std::vector<Alternative> Alternatives(const CoalitionSpec& c) {
  const int n = c.size();
  std::vector<Alternative> out;
  if (const auto* g = std::get_if<QuantumGhz>(&c.kind)) {
    out.push_back({1.0, GhzCoalitionBlock(n, g->delta)});
  } else if (const auto* q = std::get_if<QuantumExplicit>(&c.kind)) {
    out.push_back({1.0, q->block});
  } else if (const auto* d = std::get_if<ClassicalDeterministic>(&c.kind)) {
    out.push_back({1.0, StateVector::FromBits(d->bits)});
  } else {
    const int w = std::get<ClassicalRandomPermutation>(c.kind).weight;
    const auto strings = WeightClass(n, w);
    for (std::uint64_t b : strings) {
      out.push_back({1.0 / static_cast<double>(strings.size()),
                     StateVector::Basis(n, b)});
    }
  }
  return out;
}

double Canonical(double delta) {
  double d = std::fmod(delta, kPi);
  if (d < 0.0) d += kPi;
  if (d >= kPi) d = 0.0;
  return d;
}

// Minority odds for a block of weight w against k fair coins, per weight.
struct OutsiderOdds {
  std::vector<double> ones_win;  // the 1s are the strict minority
  std::vector<double> zeros_win;
  std::vector<double> outsider;  // mean outsider payoff
};

OutsiderOdds ComputeOutsiderOdds(int n, int n_players) {
  const int k = n_players - n;
  std::vector<double> coin(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    coin[j] = static_cast<double>(Binomial(k, j)) / std::ldexp(1.0, k);
  }
  OutsiderOdds odds;
  odds.ones_win.assign(static_cast<std::size_t>(n) + 1, 0.0);
  odds.zeros_win.assign(static_cast<std::size_t>(n) + 1, 0.0);
  odds.outsider.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (int w = 0; w <= n; ++w) {
    for (int j = 0; j <= k; ++j) {
      const int ones = w + j;
      const int zeros = n_players - ones;
      if (ones == 0 || zeros == 0 || ones == zeros) continue;
      if (ones < zeros) {
        odds.ones_win[w] += coin[j];
        if (k > 0) odds.outsider[w] += coin[j] * j / k;
      } else {
        odds.zeros_win[w] += coin[j];
        if (k > 0) odds.outsider[w] += coin[j] * (k - j) / k;
      }
    }
  }
  return odds;
}

// Coalition payoffs for a block outcome distribution against k fair coins.
BlockPayoff ConvolveWithOutsiders(std::span<const double> block_probs, int n,
                                  int n_players) {
  const OutsiderOdds odds = ComputeOutsiderOdds(n, n_players);
  BlockPayoff out;
  out.member_payoffs.assign(static_cast<std::size_t>(n), 0.0);
  for (std::uint64_t c = 0; c < block_probs.size(); ++c) {
    const double pc = block_probs[c];
    if (pc == 0.0) continue;
    const int w = std::popcount(c);
    out.outsider_payoff += pc * odds.outsider[w];
    for (int i = 0; i < n; ++i) {
      out.member_payoffs[i] +=
          pc * (PlayerBit(c, i, n) ? odds.ones_win[w] : odds.zeros_win[w]);
    }
  }
  double sum = 0.0;
  for (double x : out.member_payoffs) sum += x;
  out.coalition_mean = sum / n;
  return out;
}

void CheckBlockGame(const StateVector& block, int n_players) {
  if (n_players < 2) throw ArgumentError("a minority game needs N >= 2");
  if (block.n_qubits() > n_players) {
    throw ArgumentError("coalition block wider than the player count");
  }
  if (n_players > kMaxQubits) throw ArgumentError("too many players");
}

void CheckSizes(int n, int n_players) {
  if (n < 2 || n > n_players) {
    throw ArgumentError("coalition size " + std::to_string(n) +
                        " outside [2, N = " + std::to_string(n_players) + "]");
  }
  if (n_players > kMaxQubits) throw ArgumentError("too many players");
}

}  // namespace

void ValidateScenario(const Scenario& scenario) {
  const int n = scenario.n_players;
  if (n < 2 || n > kMaxQubits) {
    throw ArgumentError("player count " + std::to_string(n) + " out of range");
  }
  std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t ci = 0; ci < scenario.coalitions.size(); ++ci) {
    const CoalitionSpec& c = scenario.coalitions[ci];
    const std::string name = "coalition " + std::to_string(ci + 1);
    if (c.members.empty()) throw ArgumentError(name + " has no members");
    for (int p : c.members) {
      if (p < 1 || p > n) {
        throw ArgumentError(name + ": player " + std::to_string(p) +
                            " outside [1, " + std::to_string(n) + "]");
      }
      if (taken[static_cast<std::size_t>(p)]) {
        throw ArgumentError(name + ": player " + std::to_string(p) +
                            " already belongs to a coalition");
      }
      taken[static_cast<std::size_t>(p)] = true;
    }
    const int width = KindWidth(c.kind);
    if (width >= 0 && width != c.size()) {
      throw ArgumentError(name + ": block width " + std::to_string(width) +
                          " does not match " + std::to_string(c.size()) +
                          " members");
    }
    if (const auto* d = std::get_if<ClassicalDeterministic>(&c.kind)) {
      if (d->bits.find_first_not_of("01") != std::string::npos) {
        throw ArgumentError(name + ": bits must be 0/1");
      }
    }
    if (const auto* r = std::get_if<ClassicalRandomPermutation>(&c.kind)) {
      if (r->weight < 0 || r->weight > c.size()) {
        throw ArgumentError(name + ": weight outside [0, members]");
      }
    }
  }
}

std::vector<int> Outsiders(const Scenario& scenario) {
  std::vector<bool> taken(static_cast<std::size_t>(scenario.n_players) + 1,
                          false);
  for (const CoalitionSpec& c : scenario.coalitions) {
    for (int p : c.members) {
      if (p >= 1 && p <= scenario.n_players) {
        taken[static_cast<std::size_t>(p)] = true;
      }
    }
  }
  std::vector<int> out;
  for (int p = 1; p <= scenario.n_players; ++p) {
    if (!taken[static_cast<std::size_t>(p)]) out.push_back(p);
  }
  return out;
}

StateVector GhzCoalitionBlock(int n, double delta) {
  return ApplyUniformMove(Ghz(n), UnitaryFromParams(SymmetricProfile(delta)));
}

MixedState ComposeScenario(const Scenario& scenario) {
  ValidateScenario(scenario);
  std::vector<Factor> factors;
  for (const CoalitionSpec& c : scenario.coalitions) {
    Factor f;
    for (int p : c.members) f.positions.push_back(p - 1);
    f.alternatives = Alternatives(c);
    factors.push_back(std::move(f));
  }
  for (int p : Outsiders(scenario)) {
    factors.push_back({{p - 1},
                       {{0.5, StateVector::Basis(1, 0)},
                        {0.5, StateVector::Basis(1, 1)}}});
  }

  // Tensor-order qubit t ends up at global position new_position[t].
  std::vector<int> new_position;
  for (const Factor& f : factors) {
    new_position.insert(new_position.end(), f.positions.begin(),
                        f.positions.end());
  }
  const bool identity_layout =
      std::is_sorted(new_position.begin(), new_position.end());

  std::vector<MixedState::Term> terms;
  std::vector<std::size_t> choice(factors.size(), 0);
  while (true) {
    double weight = 1.0;
    std::vector<StateVector> blocks;
    blocks.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Alternative& a = factors[i].alternatives[choice[i]];
      weight *= a.weight;
      blocks.push_back(a.block);
    }
    StateVector joint = Tensor(blocks);
    if (!identity_layout) joint = PermuteQubits(joint, new_position);
    terms.push_back({weight, std::move(joint)});

    // Odometer, last factor fastest.
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++choice[i] < factors[i].alternatives.size()) break;
      choice[i] = 0;
      if (i == 0) return MixedState(std::move(terms));
    }
  }
}

CoalitionPayoff EvaluateCoalitions(const Scenario& scenario, bool randomized,
                                   std::optional<QuadratureSpec> quad) {
  const MixedState mix = ComposeScenario(scenario);
  const QuadratureSpec q =
      quad.value_or(QuadratureSpec::Default(scenario.n_players));
  CoalitionPayoff out;
  out.payoffs = ExpectedPayoffsMixed(mix, randomized, q);
  for (const CoalitionSpec& c : scenario.coalitions) {
    double sum = 0.0;
    for (int p : c.members) sum += out.payoffs[static_cast<std::size_t>(p - 1)];
    out.coalition_means.push_back(sum / c.size());
  }
  return out;
}

BlockPayoff BlockVersusRandomOutsiders(const StateVector& block,
                                       int n_players, bool randomized,
                                       std::optional<QuadratureSpec> quad) {
  CheckBlockGame(block, n_players);
  if (!randomized) {
    return ConvolveWithOutsiders(OutcomeProbabilities(block), block.n_qubits(),
                                 n_players);
  }
  const QuadratureSpec q = quad.value_or(QuadratureSpec::Default(n_players));
  return ConvolveWithOutsiders(RandomizedOutcomeProbabilities(block, q),
                               block.n_qubits(), n_players);
}

BlockPayoff BlockVersusRandomOutsidersAtPhi(const StateVector& block,
                                            int n_players, double phi) {
  CheckBlockGame(block, n_players);
  return ConvolveWithOutsiders(
      OutcomeProbabilities(RotateMeasurementBasis(block, phi)),
      block.n_qubits(), n_players);
}

CoalitionMonteCarlo MonteCarloCoalitionMean(const StateVector& block,
                                            int n_players, std::int64_t samples,
                                            std::uint64_t seed) {
  CheckBlockGame(block, n_players);
  if (samples < 1) throw ArgumentError("need at least one sample");
  const int n = block.n_qubits();
  // The coalition mean of an outcome depends only on its weight.
  const OutsiderOdds odds = ComputeOutsiderOdds(n, n_players);
  std::vector<double> mean_of(block.dim());
  for (std::uint64_t c = 0; c < block.dim(); ++c) {
    const int w = std::popcount(c);
    mean_of[c] = (w * odds.ones_win[w] + (n - w) * odds.zeros_win[w]) / n;
  }
  std::vector<Amplitude> buffer(block.dim());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t s = 0; s < samples; ++s) {
    std::copy(block.amplitudes().begin(), block.amplitudes().end(),
              buffer.begin());
    RotateMeasurementBasisInPlace(buffer, n, angle(rng));
    double x = 0.0;
    for (std::uint64_t c = 0; c < buffer.size(); ++c) {
      x += std::norm(buffer[c]) * mean_of[c];
    }
    sum += x;
    sum_sq += x * x;
  }
  const double count = static_cast<double>(samples);
  CoalitionMonteCarlo out;
  out.samples = samples;
  out.mean = sum / count;
  if (samples > 1) {
    const double var =
        std::max(0.0, (sum_sq - count * out.mean * out.mean) / (count - 1.0));
    out.standard_error = std::sqrt(var / count);
  }
  return out;
}

GhzOptimum OptimizeGhzDelta(int n, int n_players, bool randomized,
                            const GhzSearchOptions& options) {
  if (n % 2 != 0) {
    throw UnsupportedError("GHZ coalitions of odd size " + std::to_string(n) +
                           " have no symmetric optimum");
  }
  CheckSizes(n, n_players);
  if (options.grid_points < 1) throw ArgumentError("empty delta grid");
  const QuadratureSpec quad =
      options.quad.value_or(QuadratureSpec::Default(n_players));

  auto payoff = [&](double delta) {
    return BlockVersusRandomOutsiders(GhzCoalitionBlock(n, delta), n_players,
                                      randomized, quad)
        .coalition_mean;
  };

  const double step = kPi / options.grid_points;
  GhzOptimum best;
  best.grid_payoff = -1.0;
  for (int j = 0; j < options.grid_points; ++j) {
    const double delta = step * j;
    const double value = payoff(delta);
    if (value > best.grid_payoff + kAssertionTolerance) {
      best.grid_payoff = value;
      best.grid_delta = delta;
    }
  }

  const auto [arg, neg] = boost::math::tools::brent_find_minima(
      [&](double d) { return -payoff(d); }, best.grid_delta - step,
      best.grid_delta + step, std::numeric_limits<double>::digits / 2);
  if (-neg > best.grid_payoff) {
    best.delta = Canonical(arg);
    best.payoff = -neg;
  } else {
    best.delta = best.grid_delta;
    best.payoff = best.grid_payoff;
  }
  return best;
}

ClassicalOptimum OptimizeClassical(int n, int n_players, bool randomized,
                                   std::optional<QuadratureSpec> quad) {
  CheckSizes(n, n_players);
  ClassicalOptimum best;
  best.payoff = -1.0;
  for (int w = 0; w <= n; ++w) {
    const std::string bits =
        std::string(static_cast<std::size_t>(n - w), '0') +
        std::string(static_cast<std::size_t>(w), '1');
    const double value =
        BlockVersusRandomOutsiders(StateVector::FromBits(bits), n_players,
                                   randomized, quad)
            .coalition_mean;
    best.payoff_by_weight.push_back(value);
    if (value > best.payoff + kAssertionTolerance) {
      best.payoff = value;
      best.weight = w;
      best.bits = bits;
    }
  }
  return best;
}

BalancedPhaseOptimum OptimizeBalancedPhase(int n, int n_players,
                                           std::optional<QuadratureSpec> quad) {
  CheckSizes(n, n_players);
  BalancedPhaseOptimum best;
  best.payoff = -1.0;
  for (int m = 1; m < n; ++m) {
    const StateVector block =
        BalancedPhaseState({n, m, PhaseRule::kRootsOfUnity, {}});
    const double value =
        BlockVersusRandomOutsiders(block, n_players, true, quad).coalition_mean;
    best.payoff_by_ones.push_back(value);
    if (value > best.payoff + kAssertionTolerance) {
      best.payoff = value;
      best.best_ones = m;
    }
  }
  const int rule = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
  if (rule > 0 && rule < n) {
    best.rule_ones = rule;
    best.rule_payoff = best.payoff_by_ones[static_cast<std::size_t>(rule - 1)];
  }
  return best;
}

}  // namespace qmg
