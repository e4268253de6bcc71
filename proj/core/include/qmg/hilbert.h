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

#ifndef QMG_HILBERT_H_
#define QMG_HILBERT_H_

// Dense statevector core.
//
// Basis convention used everywhere in qmg: player k (1-based) owns bit k of
// the basis index with player 1 the most significant bit, so index b encodes
// the ket |b_1 b_2 ... b_N> read left to right. Global phase is never
// normalized away; compare states via probabilities or EqualUpToGlobalPhase.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmg {

using Amplitude = std::complex<double>;

// Value of player `player` (0-based) in basis index `index` of an n-qubit
// register.
inline int PlayerBit(std::uint64_t index, int player, int n_qubits) {
  return static_cast<int>((index >> (n_qubits - 1 - player)) & 1u);
}

// "0111" style rendering of a basis index, player 1 first.
std::string BitString(std::uint64_t index, int n_qubits);

// Unit-norm vector of 2^n complex amplitudes.
class StateVector {
 public:
  // Throws ArgumentError on a size mismatch or n outside [1, kMaxQubits],
  // ValidationError if the norm deviates from 1 by more than
  // kValidationTolerance.
  StateVector(int n_qubits, std::vector<Amplitude> amplitudes);

  static StateVector Basis(int n_qubits, std::uint64_t index);
  // Computational basis state from a bitstring such as "0110".
  static StateVector FromBits(std::string_view bits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& operator[](std::size_t index) const {
    return amplitudes_[index];
  }

  double SquaredNorm() const;

 private:
  struct Trusted {};
  StateVector(Trusted, int n_qubits, std::vector<Amplitude> amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

  friend class StateBuilder;

  int n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

// Builds a StateVector from amplitudes produced by a norm-preserving
// computation. Only checks shape; used internally by unitary pipelines.
class StateBuilder {
 public:
  static StateVector Adopt(int n_qubits, std::vector<Amplitude> amplitudes);
};

// Convex mixture of pure states sharing one register size. Classical
// randomness (outsider coin flips, classical coalitions) lives here rather
// than in superpositions.
class MixedState {
 public:
  struct Term {
    double weight;
    StateVector state;
  };

  // Weights must be positive and sum to 1 within kValidationTolerance.
  explicit MixedState(std::vector<Term> terms);
  static MixedState Pure(StateVector state);

  int n_qubits() const { return terms_.front().state.n_qubits(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<Term> terms_;
};

// 2x2 single-qubit operator, row-major: {u00, u01, u10, u11}.
struct LocalUnitary {
  std::array<Amplitude, 4> m;

  static LocalUnitary Identity();

  LocalUnitary Adjoint() const;
  // Max entrywise deviation of U^dagger U from the identity.
  double UnitarityDefect() const;
  bool IsUnitary(double tolerance) const {
    return UnitarityDefect() <= tolerance;
  }
};

// Matrix product a*b (apply b first).
LocalUnitary operator*(const LocalUnitary& a, const LocalUnitary& b);

// Returns (M_1 x M_2 x ... x M_N)|psi>. moves.size() must equal
// state.n_qubits() (ArgumentError); every move must be unitary within
// kValidationTolerance (ValidationError).
StateVector ApplyLocalMoves(const StateVector& state,
                            std::span<const LocalUnitary> moves);

// Same move on every qubit.
StateVector ApplyUniformMove(const StateVector& state, const LocalUnitary& move);

// Single move on one qubit (0-based), identity elsewhere.
StateVector ApplyMoveToQubit(const StateVector& state, int qubit,
                             const LocalUnitary& move);

// U(phi) whose columns are the logical states
//   |0>_L = cos(phi)|0> + i sin(phi)|1>,  |1>_L = i sin(phi)|0> + cos(phi)|1>.
LocalUnitary LogicalBasis(double phi);

// Returns U(phi)^dagger applied to every qubit, so that computational-basis
// probabilities of the result equal logical-basis probabilities of `state`.
StateVector RotateMeasurementBasis(const StateVector& state, double phi);

// In-place form of RotateMeasurementBasis on a raw amplitude buffer of size
// 2^n_qubits; no normalization check.
void RotateMeasurementBasisInPlace(std::span<Amplitude> amplitudes, int n_qubits,
                                   double phi);

// p[b] = |amp[b]|^2.
std::vector<double> OutcomeProbabilities(const StateVector& state);

// Kronecker product in the given (player) order. Empty input is an
// ArgumentError; so is a total width above kMaxQubits.
StateVector Tensor(std::span<const StateVector> states);
StateVector Tensor(std::initializer_list<StateVector> states);

// Moves qubit k of `state` to position new_position[k]. new_position must be a
// permutation of 0..n-1.
StateVector PermuteQubits(const StateVector& state,
                          std::span<const int> new_position);

// max_b |a[b] - e^{i gamma} b[b]| <= tolerance for the best-fitting gamma.
bool EqualUpToGlobalPhase(const StateVector& a, const StateVector& b,
                          double tolerance);

}  // namespace qmg

#endif  // QMG_HILBERT_H_
