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

#include "qmg/states.h"

#include <bit>
#include <cmath>
#include <string>

#include "qmg/errors.h"
#include "qmg/tolerance.h"

namespace qmg {
namespace {

void RequireAtLeast(int n, int min, const char* what) {
  if (n < min) {
    throw ArgumentError(std::string(what) + " needs at least " +
                        std::to_string(min) + " qubits, got " +
                        std::to_string(n));
  }
}

StateVector FromClass(int n, const std::vector<std::uint64_t>& indices,
                      const std::vector<Amplitude>& coefficients) {
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (std::size_t j = 0; j < indices.size(); ++j) {
    amps[indices[j]] = coefficients[j];
  }
  return StateVector(n, std::move(amps));
}

}  // namespace

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

StateVector Ghz(int n) {
  RequireAtLeast(n, 1, "GHZ state");
  if (n > kMaxQubits) throw ArgumentError("GHZ state too large");
  std::vector<Amplitude> amps(std::size_t{1} << n);
  const double r = 1.0 / std::sqrt(2.0);
  amps.front() = Amplitude(r, 0.0);
  amps.back() += Amplitude(0.0, r);
  return StateVector(n, std::move(amps));
}

std::vector<std::uint64_t> WeightClass(int n, int m) {
  if (n < 1 || n > kMaxQubits) throw ArgumentError("qubit count out of range");
  if (m < 0 || m > n) throw ArgumentError("weight out of range");
  std::vector<std::uint64_t> out;
  out.reserve(Binomial(n, m));
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    if (std::popcount(b) == m) out.push_back(b);
  }
  return out;
}

StateVector WState(int n, bool conjugate) {
  RequireAtLeast(n, 2, "W state");
  const auto indices = WeightClass(n, conjugate ? n - 1 : 1);
  const std::vector<Amplitude> c(indices.size(),
                                 Amplitude(1.0 / std::sqrt(double(n)), 0.0));
  return FromClass(n, indices, c);
}

StateVector WStar(int n) {
  RequireAtLeast(n, 2, "W* state");
  std::vector<Amplitude> amps(std::size_t{1} << n);
  const double r = 1.0 / std::sqrt(double(n));
  for (int k = 0; k < n; ++k) {
    const std::uint64_t index = std::uint64_t{1} << (n - 1 - k);
    amps[index] = std::polar(r, 2.0 * kPi * k / n);
  }
  return StateVector(n, std::move(amps));
}

StateVector Singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return StateVector(2, {0.0, r, -r, 0.0});
}

std::vector<Amplitude> BalancedPhaseCoefficients(const BalancedPhaseSpec& spec) {
  const int n = spec.n_qubits;
  const int m = spec.ones;
  if (n < 1 || n > kMaxQubits) throw ArgumentError("qubit count out of range");
  if (m < 0 || m > n) {
    throw ArgumentError("ones count " + std::to_string(m) + " outside [0, " +
                        std::to_string(n) + "]");
  }
  const std::uint64_t c = Binomial(n, m);
  std::vector<Amplitude> coefficients;
  switch (spec.rule) {
    case PhaseRule::kRootsOfUnity: {
      if (m == 0 || m == n) {
        throw ArgumentError("roots-of-unity phases need 0 < m < n");
      }
      const double r = 1.0 / std::sqrt(double(c));
      for (std::uint64_t j = 0; j < c; ++j) {
        coefficients.push_back(std::polar(r, 2.0 * kPi * double(j) / double(c)));
      }
      break;
    }
    case PhaseRule::kAlternatingSign: {
      if (c % 2 != 0) {
        throw ArgumentError("alternating signs need an even number of strings");
      }
      const double r = 1.0 / std::sqrt(double(c));
      for (std::uint64_t j = 0; j < c; ++j) {
        coefficients.emplace_back(j % 2 == 0 ? r : -r, 0.0);
      }
      break;
    }
    case PhaseRule::kExplicit: {
      if (spec.coefficients.size() != c) {
        throw ArgumentError("expected " + std::to_string(c) +
                            " coefficients, got " +
                            std::to_string(spec.coefficients.size()));
      }
      double norm2 = 0.0;
      Amplitude sum{};
      for (const Amplitude& a : spec.coefficients) {
        norm2 += std::norm(a);
        sum += a;
      }
      if (!(std::abs(norm2 - 1.0) <= kValidationTolerance)) {
        throw ValidationError("coefficients are not normalized");
      }
      if (!(std::abs(sum) <= kValidationTolerance)) {
        throw ValidationError(
            "coefficients do not sum to zero (polygon not closed, |sum| = " +
            std::to_string(std::abs(sum)) + ")");
      }
      coefficients = spec.coefficients;
      break;
    }
  }
  return coefficients;
}

StateVector BalancedPhaseState(const BalancedPhaseSpec& spec) {
  return FromClass(spec.n_qubits, WeightClass(spec.n_qubits, spec.ones),
                   BalancedPhaseCoefficients(spec));
}

StateVector AlternatingW(int n) {
  RequireAtLeast(n, 2, "alternating W state");
  return BalancedPhaseState({n, 1, PhaseRule::kAlternatingSign, {}});
}

MixedState MixedBalanced(int n) {
  RequireAtLeast(n, 2, "balanced mixture");
  std::vector<MixedState::Term> terms;
  for (std::uint64_t b : WeightClass(n, 1)) {
    terms.push_back({1.0 / n, StateVector::Basis(n, b)});
  }
  return MixedState(std::move(terms));
}

}  // namespace qmg
