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

#ifndef QMG_TOLERANCE_H_
#define QMG_TOLERANCE_H_

namespace qmg {

// Inputs (unitaries, state norms, mixture weights) are rejected beyond this.
inline constexpr double kValidationTolerance = 1e-9;

// Internal invariants and exact-value comparisons.
inline constexpr double kAssertionTolerance = 1e-12;

// Dense statevectors only: 2^20 amplitudes is the hard ceiling.
inline constexpr int kMaxQubits = 20;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace qmg

#endif  // QMG_TOLERANCE_H_
