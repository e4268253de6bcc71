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

#ifndef QMG_MOVES_H_
#define QMG_MOVES_H_

// Single-qubit strategies
//
//   M(theta, alpha, beta) = [ e^{i alpha} cos(theta/2)    i e^{i beta} sin(theta/2)
//                             i e^{-i beta} sin(theta/2)  e^{-i alpha} cos(theta/2) ]
//
// with theta in [0, pi] and alpha, beta in [-pi, pi], plus the symmetric
// GHZ equilibria M(pi/2, -delta, delta) and the coalition focal deltas.

#include <cstdint>
#include <string>

#include "qmg/hilbert.h"

namespace qmg {

// Exact angle num/den * pi. Kept rational until a matrix is built so that
// equality against tabulated deltas is exact.
struct PiMultiple {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // Reduced, positive denominator.
  static PiMultiple Of(std::int64_t num, std::int64_t den);

  double radians() const;
  // "3pi/16", "-pi/8", "0", "pi".
  std::string ToString() const;

  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

struct StrategyParams {
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  // Throws ArgumentError unless theta in [0, pi], alpha/beta in [-pi, pi]
  // (each with kValidationTolerance slack) and all finite.
  void Validate() const;

  friend bool operator==(const StrategyParams&, const StrategyParams&) = default;
};

LocalUnitary UnitaryFromParams(const StrategyParams& p);

// Maps arbitrary real (theta, alpha, beta) into the canonical ranges while
// preserving the unitary up to a global phase.
StrategyParams CanonicalParams(double theta, double alpha, double beta);

// M(pi/2, -delta, delta), with delta wrapped into (-pi, pi].
StrategyParams SymmetricProfile(double delta);

// Family of symmetric GHZ equilibria M(pi/2, eta - delta, eta + delta),
// delta = (4 branch + 1) pi / (4 N).
struct NeFamilyParams {
  int n_players = 0;
  int branch = 0;
  double eta = 0.0;
  PiMultiple delta;
};

// Requires an even player count >= 4; odd counts raise UnsupportedError.
NeFamilyParams NeFamily(int n_players, int branch = 0, double eta = 0.0);
StrategyParams StrategyFromFamily(const NeFamilyParams& family);

// Focal member (branch 0, eta 0): M(pi/2, -pi/(4N), pi/(4N)).
StrategyParams NeStrategy(int n_players);

// Focal delta for an n-qubit GHZ coalition: 3pi/(4n) when n mod 4 == 0,
// pi/(4n) when n mod 4 == 2. Either choice collapses the transformed GHZ
// block onto even-weight strings. Odd n raises UnsupportedError.
PiMultiple CoalitionDelta(int coalition_size);

}  // namespace qmg

#endif  // QMG_MOVES_H_
