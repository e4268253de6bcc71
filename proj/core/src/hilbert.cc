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

#include "qmg/hilbert.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "qmg/errors.h"
#include "qmg/tolerance.h"

namespace qmg {
namespace {

void CheckQubitCount(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ArgumentError("qubit count " + std::to_string(n_qubits) +
                        " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

// In-place 2x2 action on qubit `qubit` (0-based, player order).
void ApplyInPlace(std::span<Amplitude> amps, int n_qubits, int qubit,
                  const LocalUnitary& u) {
  const std::size_t stride = std::size_t{1} << (n_qubits - 1 - qubit);
  const std::size_t dim = amps.size();
  for (std::size_t block = 0; block < dim; block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) {
      const Amplitude a0 = amps[i];
      const Amplitude a1 = amps[i + stride];
      amps[i] = u.m[0] * a0 + u.m[1] * a1;
      amps[i + stride] = u.m[2] * a0 + u.m[3] * a1;
    }
  }
}

void CheckUnitary(const LocalUnitary& u) {
  const double defect = u.UnitarityDefect();
  if (!(defect <= kValidationTolerance)) {
    throw ValidationError("move is not unitary (defect " +
                          std::to_string(defect) + ")");
  }
}

}  // namespace

std::string BitString(std::uint64_t index, int n_qubits) {
  std::string bits(static_cast<std::size_t>(n_qubits), '0');
  for (int k = 0; k < n_qubits; ++k) {
    if (PlayerBit(index, k, n_qubits)) bits[static_cast<std::size_t>(k)] = '1';
  }
  return bits;
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  CheckQubitCount(n_qubits);
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw ArgumentError("expected " + std::to_string(1ull << n_qubits) +
                        " amplitudes, got " +
                        std::to_string(amplitudes_.size()));
  }
  const double norm2 = SquaredNorm();
  if (!(std::abs(norm2 - 1.0) <= kValidationTolerance)) {
    throw ValidationError("state is not normalized (|psi|^2 = " +
                          std::to_string(norm2) + ")");
  }
}

StateVector StateVector::Basis(int n_qubits, std::uint64_t index) {
  CheckQubitCount(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw ArgumentError("basis index out of range");
  std::vector<Amplitude> amps(dim);
  amps[index] = 1.0;
  return StateVector(Trusted{}, n_qubits, std::move(amps));
}

StateVector StateVector::FromBits(std::string_view bits) {
  if (bits.empty()) throw ArgumentError("empty bitstring");
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ArgumentError("bitstring may only contain '0' and '1': " +
                          std::string(bits));
    }
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return Basis(static_cast<int>(bits.size()), index);
}

double StateVector::SquaredNorm() const {
  double sum = 0.0;
  for (const Amplitude& a : amplitudes_) sum += std::norm(a);
  return sum;
}

StateVector StateBuilder::Adopt(int n_qubits, std::vector<Amplitude> amplitudes) {
  CheckQubitCount(n_qubits);
  if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
    throw ArgumentError("amplitude count does not match qubit count");
  }
  return StateVector(StateVector::Trusted{}, n_qubits, std::move(amplitudes));
}

MixedState::MixedState(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw ArgumentError("mixture needs at least one term");
  const int n = terms_.front().state.n_qubits();
  double total = 0.0;
  for (const Term& t : terms_) {
    if (!(t.weight > 0.0)) throw ValidationError("mixture weight must be > 0");
    if (t.state.n_qubits() != n) {
      throw ArgumentError("mixture terms have different qubit counts");
    }
    total += t.weight;
  }
  if (!(std::abs(total - 1.0) <= kValidationTolerance)) {
    throw ValidationError("mixture weights sum to " + std::to_string(total));
  }
}

MixedState MixedState::Pure(StateVector state) {
  std::vector<Term> terms;
  terms.push_back({1.0, std::move(state)});
  return MixedState(std::move(terms));
}

LocalUnitary LocalUnitary::Identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

LocalUnitary LocalUnitary::Adjoint() const {
  return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

double LocalUnitary::UnitarityDefect() const {
  const LocalUnitary p = Adjoint() * *this;
  return std::max({std::abs(p.m[0] - 1.0), std::abs(p.m[1]), std::abs(p.m[2]),
                   std::abs(p.m[3] - 1.0)});
}

LocalUnitary operator*(const LocalUnitary& a, const LocalUnitary& b) {
  return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
           a.m[2] * b.m[0] + a.m[3] * b.m[2],
           a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

StateVector ApplyLocalMoves(const StateVector& state,
                            std::span<const LocalUnitary> moves) {
  const int n = state.n_qubits();
  if (moves.size() != static_cast<std::size_t>(n)) {
    throw ArgumentError("expected " + std::to_string(n) + " moves, got " +
                        std::to_string(moves.size()));
  }
  for (const LocalUnitary& u : moves) CheckUnitary(u);
  std::vector<Amplitude> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
  for (int k = 0; k < n; ++k) ApplyInPlace(amps, n, k, moves[k]);
  return StateBuilder::Adopt(n, std::move(amps));
}

StateVector ApplyUniformMove(const StateVector& state, const LocalUnitary& move) {
  CheckUnitary(move);
  const int n = state.n_qubits();
  std::vector<Amplitude> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
  for (int k = 0; k < n; ++k) ApplyInPlace(amps, n, k, move);
  return StateBuilder::Adopt(n, std::move(amps));
}

StateVector ApplyMoveToQubit(const StateVector& state, int qubit,
                             const LocalUnitary& move) {
  const int n = state.n_qubits();
  if (qubit < 0 || qubit >= n) throw ArgumentError("qubit index out of range");
  CheckUnitary(move);
  std::vector<Amplitude> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
  ApplyInPlace(amps, n, qubit, move);
  return StateBuilder::Adopt(n, std::move(amps));
}

LocalUnitary LogicalBasis(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {{Amplitude(c, 0.0), Amplitude(0.0, s), Amplitude(0.0, s),
           Amplitude(c, 0.0)}};
}

void RotateMeasurementBasisInPlace(std::span<Amplitude> amplitudes, int n_qubits,
                                   double phi) {
  if (!std::isfinite(phi)) throw ArgumentError("phi must be finite");
  if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
    throw ArgumentError("buffer size does not match qubit count");
  }
  const LocalUnitary dagger = LogicalBasis(phi).Adjoint();
  for (int k = 0; k < n_qubits; ++k) ApplyInPlace(amplitudes, n_qubits, k, dagger);
}

StateVector RotateMeasurementBasis(const StateVector& state, double phi) {
  const int n = state.n_qubits();
  std::vector<Amplitude> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
  RotateMeasurementBasisInPlace(amps, n, phi);
  return StateBuilder::Adopt(n, std::move(amps));
}

std::vector<double> OutcomeProbabilities(const StateVector& state) {
  std::vector<double> p(state.dim());
  std::transform(state.amplitudes().begin(), state.amplitudes().end(),
                 p.begin(), [](const Amplitude& a) { return std::norm(a); });
  return p;
}

StateVector Tensor(std::span<const StateVector> states) {
  if (states.empty()) throw ArgumentError("tensor of an empty list");
  int total = 0;
  for (const StateVector& s : states) total += s.n_qubits();
  CheckQubitCount(total);
  std::vector<Amplitude> acc(states.front().amplitudes().begin(),
                             states.front().amplitudes().end());
  for (std::size_t f = 1; f < states.size(); ++f) {
    const auto rhs = states[f].amplitudes();
    std::vector<Amplitude> next(acc.size() * rhs.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == Amplitude{}) continue;
      for (std::size_t j = 0; j < rhs.size(); ++j) {
        next[i * rhs.size() + j] = acc[i] * rhs[j];
      }
    }
    acc = std::move(next);
  }
  return StateBuilder::Adopt(total, std::move(acc));
}

StateVector Tensor(std::initializer_list<StateVector> states) {
  return Tensor(std::span<const StateVector>(states.begin(), states.size()));
}

StateVector PermuteQubits(const StateVector& state,
                          std::span<const int> new_position) {
  const int n = state.n_qubits();
  if (new_position.size() != static_cast<std::size_t>(n)) {
    throw ArgumentError("permutation size does not match qubit count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : new_position) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw ArgumentError("not a permutation of the qubits");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Amplitude> out(state.dim());
  for (std::uint64_t b = 0; b < state.dim(); ++b) {
    std::uint64_t target = 0;
    for (int k = 0; k < n; ++k) {
      if (PlayerBit(b, k, n)) {
        target |= std::uint64_t{1} << (n - 1 - new_position[k]);
      }
    }
    out[target] = state[b];
  }
  return StateBuilder::Adopt(n, std::move(out));
}

bool EqualUpToGlobalPhase(const StateVector& a, const StateVector& b,
                          double tolerance) {
  if (a.n_qubits() != b.n_qubits()) return false;
  // Best phase aligns <b|a> onto the positive real axis.
  Amplitude overlap{};
  for (std::size_t i = 0; i < a.dim(); ++i) overlap += std::conj(b[i]) * a[i];
  const Amplitude phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Amplitude(1.0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::abs(a[i] - phase * b[i]) > tolerance) return false;
  }
  return true;
}

}  // namespace qmg
