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

#include "qmg/analysis.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "qmg/errors.h"
#include "qmg/game.h"
#include "qmg/states.h"
#include "qmg/tolerance.h"

namespace qmg {
namespace {

// Runs fn(i) for i in [0, count) on up to `threads` workers; each index is
// written by exactly one worker.
void ParallelFor(std::size_t count, int threads,
                 const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
}

// Player 1's payoff as a function of their own unitary, everyone else fixed.
class BestResponseObjective {
 public:
  BestResponseObjective(int n_players, const StrategyParams& profile)
      : n_(n_players) {
    const LocalUnitary u = UnitaryFromParams(profile);
    StateVector s = Ghz(n_players);
    for (int k = 1; k < n_players; ++k) s = ApplyMoveToQubit(s, k, u);
    others_.assign(s.amplitudes().begin(), s.amplitudes().end());
    wins_.resize(others_.size());
    for (std::uint64_t b = 0; b < others_.size(); ++b) {
      wins_[b] = MinorityPayoffs(b, n_players)[0];
    }
  }

  // Unconstrained angles; M(theta, alpha, beta) is unitary for any reals.
  double operator()(const std::array<double, 3>& x) const {
    const double c = std::cos(x[0] / 2.0);
    const double s = std::sin(x[0] / 2.0);
    const Amplitude i(0.0, 1.0);
    const Amplitude u00 = std::polar(c, x[1]);
    const Amplitude u01 = i * std::polar(s, x[2]);
    const Amplitude u10 = i * std::polar(s, -x[2]);
    const Amplitude u11 = std::polar(c, -x[1]);
    const std::size_t half = others_.size() / 2;
    double payoff = 0.0;
    for (std::size_t b = 0; b < half; ++b) {
      const Amplitude a0 = others_[b];
      const Amplitude a1 = others_[b + half];
      payoff += std::norm(u00 * a0 + u01 * a1) * wins_[b] +
                std::norm(u10 * a0 + u11 * a1) * wins_[b + half];
    }
    return payoff;
  }

  int n_players() const { return n_; }

 private:
  int n_;
  std::vector<Amplitude> others_;
  std::vector<double> wins_;
};

struct SimplexResult {
  std::array<double, 3> x;
  double value;
};

// Nelder-Mead maximization in three dimensions.
SimplexResult NelderMeadMax(const BestResponseObjective& f,
                            std::array<double, 3> start, double step) {
  using Point = std::array<double, 3>;
  std::array<Point, 4> p;
  std::array<double, 4> v;
  p[0] = start;
  for (int d = 0; d < 3; ++d) {
    p[d + 1] = start;
    p[d + 1][d] += step;
  }
  for (int i = 0; i < 4; ++i) v[i] = f(p[i]);

  auto lerp = [](const Point& a, const Point& b, double t) {
    Point r;
    for (int d = 0; d < 3; ++d) r[d] = a[d] + t * (b[d] - a[d]);
    return r;
  };

  for (int iter = 0; iter < 2000; ++iter) {
    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return v[a] > v[b]; });
    const int best = order[0];
    const int worst = order[3];
    const int second_worst = order[2];

    double diameter = 0.0;
    for (int i = 1; i < 4; ++i) {
      for (int d = 0; d < 3; ++d) {
        diameter = std::max(diameter, std::abs(p[order[i]][d] - p[best][d]));
      }
    }
    if (v[best] - v[worst] < 1e-13 && diameter < 1e-8) break;

    Point centroid{0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
      for (int d = 0; d < 3; ++d) centroid[d] += p[order[i]][d] / 3.0;
    }
    const Point reflected = lerp(centroid, p[worst], -1.0);
    const double vr = f(reflected);
    if (vr > v[best]) {
      const Point expanded = lerp(centroid, p[worst], -2.0);
      const double ve = f(expanded);
      if (ve > vr) {
        p[worst] = expanded;
        v[worst] = ve;
      } else {
        p[worst] = reflected;
        v[worst] = vr;
      }
      continue;
    }
    if (vr > v[second_worst]) {
      p[worst] = reflected;
      v[worst] = vr;
      continue;
    }
    const bool outside = vr > v[worst];
    const Point contracted =
        outside ? lerp(centroid, reflected, 0.5) : lerp(centroid, p[worst], 0.5);
    const double vc = f(contracted);
    if (vc > std::max(vr, v[worst])) {
      p[worst] = contracted;
      v[worst] = vc;
      continue;
    }
    for (int i = 0; i < 4; ++i) {
      if (i == best) continue;
      p[i] = lerp(p[best], p[i], 0.5);
      v[i] = f(p[i]);
    }
  }
  const int best =
      static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
  return {p[best], v[best]};
}

constexpr std::array<Table1Entry, 20> kTable1 = {{
    {2, 5, {1, 8}, {1, 2}},     {2, 6, {1, 8}, {5, 16}},
    {2, 7, {1, 8}, {1, 2}},     {2, 8, {1, 8}, {11, 32}},
    {2, 9, {1, 8}, {1, 2}},     {2, 10, {1, 8}, {93, 256}},
    {4, 5, {3, 16}, {3, 8}},    {4, 6, {3, 16}, {1, 4}},
    {4, 7, {3, 16}, {11, 32}},  {4, 8, {3, 16}, {15, 64}},
    {4, 9, {3, 16}, {49, 128}}, {4, 10, {3, 16}, {67, 256}},
    {6, 6, {1, 24}, {5, 16}},   {6, 7, {1, 24}, {5, 16}},
    {6, 8, {1, 24}, {3, 16}},   {6, 9, {1, 24}, {45, 128}},
    {6, 10, {1, 24}, {35, 128}}, {8, 8, {3, 32}, {11, 32}},
    {8, 9, {3, 32}, {11, 32}},  {8, 10, {3, 32}, {67, 256}},
}};

std::string Cell(const std::optional<Rational>& r) {
  return r ? r->ToString() : std::string();
}

}  // namespace

NashCheck VerifyNash(int n_players, const StrategyParams& profile, int restarts,
                     std::uint64_t seed) {
  if (n_players < 2 || n_players > kMaxQubits) {
    throw ArgumentError("player count out of range");
  }
  if (restarts < 1) throw ArgumentError("need at least one restart");
  const BestResponseObjective objective(n_players, profile);

  NashCheck out;
  out.profile_payoff = objective({profile.theta, profile.alpha, profile.beta});
  out.best_payoff = out.profile_payoff;
  out.best_deviation = profile;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  for (int r = 0; r < restarts; ++r) {
    const std::array<double, 3> start{theta(rng), phase(rng), phase(rng)};
    const SimplexResult found = NelderMeadMax(objective, start, 0.5);
    if (found.value > out.best_payoff) {
      out.best_payoff = found.value;
      out.best_deviation = CanonicalParams(found.x[0], found.x[1], found.x[2]);
    }
  }
  out.improvement = out.best_payoff - out.profile_payoff;
  return out;
}

std::span<const Table1Entry> PublishedTable1() { return kTable1; }

double GhzDeltaPeriod(int n) { return kPi / n; }

std::vector<Table1Cell> ReproduceTable1(const Table1Options& options) {
  std::vector<Table1Cell> cells(kTable1.size());
  ParallelFor(kTable1.size(), options.threads, [&](std::size_t i) {
    const Table1Entry& e = kTable1[i];
    Table1Cell& cell = cells[i];
    cell.published = e;
    GhzSearchOptions search;
    search.grid_points = options.grid_points;
    cell.optimum = OptimizeGhzDelta(e.n, e.n_players, options.randomized, search);
    cell.recognized = RecognizeRational(cell.optimum.payoff);
    cell.payoff_matches =
        std::abs(cell.optimum.payoff - e.payoff.value()) < 1e-9;
    const double period = GhzDeltaPeriod(e.n);
    const double offset =
        std::fmod(std::abs(cell.optimum.delta - e.delta.radians()), period);
    cell.delta_congruent = std::min(offset, period - offset) < 1e-6;
  });
  return cells;
}

ResultTable Table1Table(std::span<const Table1Cell> cells) {
  ResultTable t;
  t.columns = {"n",          "N",           "listed_delta", "delta",
               "payoff",     "payoff_exact", "published",   "payoff_match",
               "delta_match"};
  for (const Table1Cell& c : cells) {
    t.rows.push_back({std::to_string(c.published.n),
                      std::to_string(c.published.n_players),
                      c.published.delta.ToString(), FormatReal(c.optimum.delta),
                      FormatReal(c.optimum.payoff), Cell(c.recognized),
                      c.published.payoff.ToString(),
                      c.payoff_matches ? "yes" : "no",
                      c.delta_congruent ? "yes" : "no"});
  }
  return t;
}

std::vector<Figure1Row> ReproduceFigure1(const Figure1Options& options) {
  if (options.n_min < 2 || options.n_max < options.n_min ||
      options.n_players_max > 12 || options.n_players_max <= options.n_min) {
    throw ArgumentError("figure ranges must satisfy 2 <= n_min <= n_max < N_max <= 12");
  }
  std::vector<std::pair<int, int>> grid;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    for (int N = n + 1; N <= options.n_players_max; ++N) grid.emplace_back(n, N);
  }
  std::vector<Figure1Row> rows(grid.size());
  ParallelFor(grid.size(), options.threads, [&](std::size_t i) {
    const auto [n, N] = grid[i];
    Figure1Row& row = rows[i];
    row.n = n;
    row.n_players = N;
    row.classical = OptimizeClassical(n, N, true);
    row.quantum = OptimizeBalancedPhase(n, N);
    if (options.include_ghz && n % 2 == 0) {
      row.ghz = OptimizeGhzDelta(n, N, true);
    }
  });
  return rows;
}

ResultTable Figure1Table(std::span<const Figure1Row> rows) {
  ResultTable t;
  t.columns = {"n",
               "N",
               "classical_bits",
               "classical_payoff",
               "classical_exact",
               "quantum_m",
               "quantum_payoff",
               "quantum_exact",
               "rule_m",
               "rule_payoff",
               "ghz_delta",
               "ghz_payoff"};
  for (const Figure1Row& r : rows) {
    std::vector<std::string> line{
        std::to_string(r.n),
        std::to_string(r.n_players),
        r.classical.bits,
        FormatReal(r.classical.payoff),
        Cell(RecognizeRational(r.classical.payoff)),
        std::to_string(r.quantum.best_ones),
        FormatReal(r.quantum.payoff),
        Cell(RecognizeRational(r.quantum.payoff)),
        r.quantum.rule_ones ? std::to_string(*r.quantum.rule_ones) : "",
        r.quantum.rule_payoff ? FormatReal(*r.quantum.rule_payoff) : "",
        r.ghz ? FormatReal(r.ghz->delta) : "",
        r.ghz ? FormatReal(r.ghz->payoff) : ""};
    t.rows.push_back(std::move(line));
  }
  return t;
}

ResultTable StateLibraryTable(int max_qubits) {
  if (max_qubits < 2 || max_qubits > 8) {
    throw ArgumentError("state listing supports 2..8 qubits");
  }
  std::vector<std::pair<std::string, StateVector>> library;
  library.emplace_back("singlet", Singlet());
  for (int n = 2; n <= max_qubits; ++n) {
    const std::string s = std::to_string(n);
    library.emplace_back("ghz" + s, Ghz(n));
    library.emplace_back("w" + s, WState(n));
    library.emplace_back("wbar" + s, WState(n, true));
    library.emplace_back("wstar" + s, WStar(n));
    if (n % 2 == 0) library.emplace_back("alternating_w" + s, AlternatingW(n));
    for (int m = 1; m < n; ++m) {
      library.emplace_back("balanced" + s + "_m" + std::to_string(m),
                           BalancedPhaseState({n, m, PhaseRule::kRootsOfUnity, {}}));
    }
  }
  ResultTable t;
  t.columns = {"state", "qubits", "basis", "re", "im"};
  for (const auto& [name, state] : library) {
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
      if (std::abs(state[b]) < kAssertionTolerance) continue;
      t.rows.push_back({name, std::to_string(state.n_qubits()),
                        BitString(b, state.n_qubits()),
                        FormatReal(state[b].real()),
                        FormatReal(state[b].imag())});
    }
  }
  return t;
}

}  // namespace qmg
