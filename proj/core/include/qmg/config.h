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

#ifndef QMG_CONFIG_H_
#define QMG_CONFIG_H_

// Scenario configuration files (YAML) and the scenario runner.
//
//   players: 4
//   randomized: true
//   quad_points: 18          # optional, default 4N + 2
//   seed: 7                  # Monte Carlo cross-check seed
//   monte_carlo_samples: 0   # 0 disables the cross-check
//   coalitions:
//     - kind: state          # ghz | state | classical | classical_random
//       members: [1, 2]
//       state: singlet       # ghz w wbar wstar singlet balanced
//                            # alternating_w amplitudes
//     - kind: classical
//       members: [3, 4]
//       bits: "01"
//
// ghz coalitions take `delta` ("3pi/16", "focal" or radians); balanced
// states take `ones`; explicit blocks take `amplitudes: [[re, im], ...]`.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qmg/coalitions.h"
#include "qmg/errors.h"
#include "qmg/result_table.h"

namespace qmg {

class ConfigError : public ValidationError {
 public:
  // line/column are 1-based; 0 when unknown.
  ConfigError(const std::string& message, int line, int column,
              std::string field = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  int column_;
  std::string field_;
};

struct CoalitionConfig {
  enum class Kind { kGhz, kState, kClassical, kClassicalRandom };

  Kind kind = Kind::kState;
  std::vector<int> members;
  std::string delta;  // kGhz
  std::string state;  // kState
  int ones = 0;       // kState with state == "balanced"
  std::vector<Amplitude> amplitudes;  // kState with state == "amplitudes"
  std::string bits;   // kClassical
  int weight = 0;     // kClassicalRandom

  friend bool operator==(const CoalitionConfig&, const CoalitionConfig&) = default;
};

struct ScenarioConfig {
  std::string name;
  int n_players = 0;
  std::vector<CoalitionConfig> coalitions;
  bool randomized = false;
  int quad_points = 0;  // 0 selects 4N + 2
  std::uint64_t seed = 0;
  std::int64_t monte_carlo_samples = 0;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Throws ConfigError with line/column and the offending field.
ScenarioConfig ParseScenarioConfig(std::string_view text);
ScenarioConfig LoadScenarioConfig(const std::string& path);

std::string SerializeScenarioConfig(const ScenarioConfig& config);

// "3pi/16", "-pi/8", "pi", "0.25" (radians).
double ParseAngle(std::string_view text);

// Semantic checks (overlaps, widths, unknown state names) raise
// ArgumentError / UnsupportedError naming the coalition.
Scenario ToScenario(const ScenarioConfig& config);

struct ScenarioResult {
  ScenarioConfig config;
  int quad_points = 0;  // 0 in the computational basis
  CoalitionPayoff payoff;
  std::optional<MonteCarloEstimate> monte_carlo;
  std::string tool_version;
};

ScenarioResult RunScenario(const ScenarioConfig& config);

// `key: value` lines, one fact per line.
void WriteScenarioText(const ScenarioResult& result, std::ostream& out);
// player,role,payoff,payoff_exact rows.
ResultTable ScenarioTable(const ScenarioResult& result);

std::string ToolVersion();

}  // namespace qmg

#endif  // QMG_CONFIG_H_
