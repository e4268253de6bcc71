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

#include "qmg/moves.h"

#include <cmath>
#include <numeric>
#include <string>

#include "qmg/errors.h"
#include "qmg/tolerance.h"

namespace qmg {
namespace {

// Wrap into (-pi, pi].
double WrapAngle(double x) {
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) y += 2.0 * kPi;
  return y;
}

bool InRange(double x, double lo, double hi) {
  return std::isfinite(x) && x >= lo - kValidationTolerance &&
         x <= hi + kValidationTolerance;
}

}  // namespace

PiMultiple PiMultiple::Of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArgumentError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

double PiMultiple::radians() const {
  return static_cast<double>(num) * kPi / static_cast<double>(den);
}

std::string PiMultiple::ToString() const {
  if (num == 0) return "0";
  std::string s;
  if (num == -1) {
    s = "-pi";
  } else if (num == 1) {
    s = "pi";
  } else {
    s = std::to_string(num) + "pi";
  }
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

void StrategyParams::Validate() const {
  if (!InRange(theta, 0.0, kPi)) {
    throw ArgumentError("theta = " + std::to_string(theta) +
                        " outside [0, pi]");
  }
  if (!InRange(alpha, -kPi, kPi) || !InRange(beta, -kPi, kPi)) {
    throw ArgumentError("alpha/beta outside [-pi, pi]");
  }
}

LocalUnitary UnitaryFromParams(const StrategyParams& p) {
  p.Validate();
  const double c = std::cos(p.theta / 2.0);
  const double s = std::sin(p.theta / 2.0);
  const Amplitude i(0.0, 1.0);
  return {{std::polar(c, p.alpha), i * std::polar(s, p.beta),
           i * std::polar(s, -p.beta), std::polar(c, -p.alpha)}};
}

StrategyParams CanonicalParams(double theta, double alpha, double beta) {
  // M(theta + 2pi) = -M(theta); M(-theta, a, b) = M(theta, a, b + pi);
  // M(2pi - theta, a, b) = -M(theta, a, b + pi).
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  if (t > kPi) {
    t = 2.0 * kPi - t;
    beta += kPi;
  }
  return {t, WrapAngle(alpha), WrapAngle(beta)};
}

StrategyParams SymmetricProfile(double delta) {
  const double d = WrapAngle(delta);
  return {kPi / 2.0, -d, d};
}

NeFamilyParams NeFamily(int n_players, int branch, double eta) {
  if (n_players % 2 != 0) {
    throw UnsupportedError(
        "a shared GHZ state gives no quantum equilibrium for odd N = " +
        std::to_string(n_players));
  }
  if (n_players < 4) {
    throw ArgumentError("the GHZ equilibrium family needs N >= 4");
  }
  return {n_players, branch, eta,
          PiMultiple::Of(4 * static_cast<std::int64_t>(branch) + 1,
                         4 * static_cast<std::int64_t>(n_players))};
}

StrategyParams StrategyFromFamily(const NeFamilyParams& family) {
  const double d = family.delta.radians();
  return CanonicalParams(kPi / 2.0, family.eta - d, family.eta + d);
}

StrategyParams NeStrategy(int n_players) {
  const PiMultiple d = NeFamily(n_players).delta;
  return {kPi / 2.0, -d.radians(), d.radians()};
}

PiMultiple CoalitionDelta(int coalition_size) {
  if (coalition_size < 2) {
    throw ArgumentError("coalition size must be at least 2");
  }
  if (coalition_size % 2 != 0) {
    throw UnsupportedError(
        "no symmetric GHZ profile is optimal for an odd coalition of " +
        std::to_string(coalition_size));
  }
  const std::int64_t den = 4 * static_cast<std::int64_t>(coalition_size);
  return coalition_size % 4 == 0 ? PiMultiple::Of(3, den)
                                 : PiMultiple::Of(1, den);
}

}  // namespace qmg
