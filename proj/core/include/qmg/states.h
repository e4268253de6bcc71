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

#ifndef QMG_STATES_H_
#define QMG_STATES_H_

// Initial states used as game resources: GHZ, W and its variants, the
// classical weight-1 mixture, and "balanced-phase" superpositions over one
// Hamming-weight class whose coefficients sum to zero. The zero-sum condition
// makes the all-0 and all-1 outcomes impossible in every rotated basis of the
// form LogicalBasis(phi).

#include <cstdint>
#include <vector>

#include "qmg/hilbert.h"

namespace qmg {

// (|0...0> + i|1...1>)/sqrt(2). n >= 1.
StateVector Ghz(int n);

// Equal superposition of the weight-1 strings, or of the weight-(n-1)
// strings when `conjugate` is set (W-bar). n >= 2.
StateVector WState(int n, bool conjugate = false);

// Weight-1 superposition with amplitude exp(2 pi i (k-1)/n)/sqrt(n) on the
// string whose single 1 belongs to player k. n >= 2.
StateVector WStar(int n);

// (|01> - |10>)/sqrt(2).
StateVector Singlet();

enum class PhaseRule {
  kRootsOfUnity,    // e^{2 pi i j / c}, j = 0..c-1
  kAlternatingSign, // (-1)^j, requires c even
  kExplicit,        // caller-supplied coefficients
};

struct BalancedPhaseSpec {
  int n_qubits = 0;
  int ones = 0;  // Hamming weight m of the superposed strings
  PhaseRule rule = PhaseRule::kRootsOfUnity;
  // Only read for kExplicit; one entry per weight-m string, in ascending
  // lexicographic order, normalized.
  std::vector<Amplitude> coefficients;
};

// Basis indices of weight-m strings in ascending lexicographic order of the
// bitstring (equivalently ascending index, player 1 being the MSB).
std::vector<std::uint64_t> WeightClass(int n, int m);

// Normalized coefficient list c_j over WeightClass(n, m) induced by `spec`.
// Throws ArgumentError for m out of range and ValidationError when explicit
// coefficients are unnormalized or do not sum to zero.
std::vector<Amplitude> BalancedPhaseCoefficients(const BalancedPhaseSpec& spec);

StateVector BalancedPhaseState(const BalancedPhaseSpec& spec);

// W state with alternating signs, (-1)^j over the weight-1 strings in
// lexicographic order. n even.
StateVector AlternatingW(int n);

// Uniform classical mixture of the weight-1 basis states. n >= 2.
MixedState MixedBalanced(int n);

std::uint64_t Binomial(int n, int k);

}  // namespace qmg

#endif  // QMG_STATES_H_
