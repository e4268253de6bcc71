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

#include <bit>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qmg/errors.h"
#include "qmg/hilbert.h"
#include "qmg/states.h"
#include "qmg/tolerance.h"
#include "support/oracle.h"

namespace qmg {
namespace {

constexpr double kTol = 1e-12;

void ExpectMatrixNear(const LocalUnitary& a, const std::array<Amplitude, 4>& b) {
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(a.m[k] - b[k]), 0.0, kTol) << k;
}

TEST(MovesTest, UnitaryFromParamsNamedCases) {
  const Amplitude i(0.0, 1.0);
  ExpectMatrixNear(UnitaryFromParams({0, 0, 0}), {1.0, 0.0, 0.0, 1.0});
  ExpectMatrixNear(UnitaryFromParams({kPi, 0, 0}), {0.0, i, i, 0.0});

  // (cos(pi/16)(I + i X) - sin(pi/16)(iY + iZ)) / sqrt(2).
  const double c = std::cos(kPi / 16), s = std::sin(kPi / 16);
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<Amplitude, 4> ne{r * (c - i * s), r * (i * c - s),
                                    r * (i * c + s), r * (c + i * s)};
  ExpectMatrixNear(UnitaryFromParams({kPi / 2, -kPi / 16, kPi / 16}), ne);
}

TEST(MovesTest, UnitaryFromParamsMatchesOracleAndIsUnitary) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(0.0, kPi), ang(-kPi, kPi);
  for (int trial = 0; trial < 500; ++trial) {
    const StrategyParams p{th(rng), ang(rng), ang(rng)};
    const LocalUnitary u = UnitaryFromParams(p);
    EXPECT_LT(u.UnitarityDefect(), kTol);
    const auto o = oracle::Strategy(p.theta, p.alpha, p.beta);
    ExpectMatrixNear(u, {o[0], o[1], o[2], o[3]});
  }
}

TEST(MovesTest, ParameterValidation) {
  EXPECT_THROW(UnitaryFromParams({-0.1, 0, 0}), ArgumentError);
  EXPECT_THROW(UnitaryFromParams({kPi + 0.1, 0, 0}), ArgumentError);
  EXPECT_THROW(UnitaryFromParams({1.0, 4.0, 0}), ArgumentError);
  EXPECT_THROW(UnitaryFromParams({1.0, 0, -4.0}), ArgumentError);
  EXPECT_THROW(UnitaryFromParams({NAN, 0, 0}), ArgumentError);
  EXPECT_NO_THROW(UnitaryFromParams({kPi, -kPi, kPi}));
}

TEST(MovesTest, CanonicalParamsPreservesOperatorUpToSign) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> wide(-10.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double t = wide(rng), a = wide(rng), b = wide(rng);
    const StrategyParams p = CanonicalParams(t, a, b);
    EXPECT_NO_THROW(p.Validate());
    const auto raw = oracle::Strategy(t, a, b);
    const LocalUnitary u = UnitaryFromParams(p);
    // Equal up to a sign.
    const Amplitude sign =
        std::abs(raw[0]) > std::abs(raw[1]) ? u.m[0] / raw[0] : u.m[1] / raw[1];
    EXPECT_NEAR(std::abs(std::abs(sign.real()) - 1.0), 0.0, 1e-9);
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::abs(u.m[k] - sign * raw[k]), 0.0, 1e-9);
    }
  }
}

TEST(MovesTest, NeStrategy) {
  EXPECT_EQ(NeStrategy(4), (StrategyParams{kPi / 2, -kPi / 16, kPi / 16}));
  EXPECT_EQ(NeStrategy(6), (StrategyParams{kPi / 2, -kPi / 24, kPi / 24}));
  const StrategyParams n8 = NeStrategy(8);
  EXPECT_NEAR(n8.alpha, -kPi / 32, kTol);
  EXPECT_NEAR(n8.beta, kPi / 32, kTol);
  EXPECT_THROW(NeStrategy(5), UnsupportedError);
  EXPECT_THROW(NeStrategy(2), ArgumentError);
}

TEST(MovesTest, NeFamilyDelta) {
  EXPECT_EQ(NeFamily(4).delta, PiMultiple::Of(1, 16));
  EXPECT_EQ(NeFamily(4, 1).delta, PiMultiple::Of(5, 16));
  EXPECT_EQ(NeFamily(6, 2).delta, PiMultiple::Of(9, 24));
  const StrategyParams p = StrategyFromFamily(NeFamily(4));
  EXPECT_NEAR(p.alpha, -kPi / 16, kTol);
  EXPECT_NEAR(p.beta, kPi / 16, kTol);
}

TEST(MovesTest, CoalitionDelta) {
  EXPECT_EQ(CoalitionDelta(2), PiMultiple::Of(1, 8));
  EXPECT_EQ(CoalitionDelta(4), PiMultiple::Of(3, 16));
  EXPECT_EQ(CoalitionDelta(6), PiMultiple::Of(1, 24));
  EXPECT_EQ(CoalitionDelta(8), PiMultiple::Of(3, 32));
  EXPECT_THROW(CoalitionDelta(3), UnsupportedError);
  EXPECT_THROW(CoalitionDelta(1), ArgumentError);
}

TEST(MovesTest, PiMultiple) {
  EXPECT_EQ(PiMultiple::Of(6, 32), PiMultiple::Of(3, 16));
  EXPECT_EQ(PiMultiple::Of(1, -8), PiMultiple::Of(-1, 8));
  EXPECT_EQ(PiMultiple::Of(3, 16).ToString(), "3pi/16");
  EXPECT_EQ(PiMultiple::Of(-1, 8).ToString(), "-pi/8");
  EXPECT_EQ(PiMultiple::Of(1, 1).ToString(), "pi");
  EXPECT_EQ(PiMultiple::Of(0, 5).ToString(), "0");
  EXPECT_DOUBLE_EQ(PiMultiple::Of(3, 16).radians(), 3 * kPi / 16);
  EXPECT_THROW(PiMultiple::Of(1, 0), ArgumentError);
}

TEST(MovesTest, NeProfileLeavesOnlyOddWeights) {
  const auto p = OutcomeProbabilities(
      ApplyUniformMove(Ghz(4), UnitaryFromParams(NeStrategy(4))));
  for (std::uint64_t b = 0; b < 16; ++b) {
    EXPECT_NEAR(p[b], std::popcount(b) % 2 ? 0.125 : 0.0, kTol) << b;
  }
}

TEST(MovesTest, CoalitionDeltaCollapsesParity) {
  for (int n = 2; n <= 10; n += 2) {
    const double d = CoalitionDelta(n).radians();
    const auto p = OutcomeProbabilities(
        ApplyUniformMove(Ghz(n), UnitaryFromParams(SymmetricProfile(d))));
    double odd = 0.0;
    for (std::uint64_t b = 0; b < p.size(); ++b) {
      if (std::popcount(b) % 2) odd += p[b];
    }
    EXPECT_LT(odd, kTol) << "n=" << n;
  }
  // Four qubits: 1/8 on 0000, 1111 and each weight-2 string.
  const auto p = OutcomeProbabilities(ApplyUniformMove(
      Ghz(4), UnitaryFromParams(SymmetricProfile(3 * kPi / 16))));
  for (std::uint64_t b = 0; b < 16; ++b) {
    EXPECT_NEAR(p[b], std::popcount(b) % 2 ? 0.0 : 0.125, kTol) << b;
  }
}

}  // namespace
}  // namespace qmg
