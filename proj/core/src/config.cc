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

#include "qmg/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "qmg/moves.h"
#include "qmg/rational.h"
#include "qmg/states.h"
#include "qmg/tolerance.h"

#ifndef QMG_VERSION
#define QMG_VERSION "unknown"
#endif

namespace qmg {
namespace {

[[noreturn]] void Fail(const YAML::Node& node, const std::string& field,
                       const std::string& message) {
  const YAML::Mark mark = node.Mark();
  const bool known = !mark.is_null();
  throw ConfigError(message, known ? mark.line + 1 : 0,
                    known ? mark.column + 1 : 0, field);
}

template <typename T>
T Scalar(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) Fail(node, field, "expected a scalar");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    Fail(node, field, "cannot read value '" + node.Scalar() + "'");
  }
}

void RejectUnknownKeys(const YAML::Node& map, const std::set<std::string>& known,
                       const std::string& where) {
  for (const auto& kv : map) {
    const std::string key = kv.first.as<std::string>();
    if (!known.contains(key)) {
      Fail(kv.first, where + key, "unknown key '" + key + "'");
    }
  }
}

const char* KindName(CoalitionConfig::Kind kind) {
  switch (kind) {
    case CoalitionConfig::Kind::kGhz: return "ghz";
    case CoalitionConfig::Kind::kState: return "state";
    case CoalitionConfig::Kind::kClassical: return "classical";
    case CoalitionConfig::Kind::kClassicalRandom: return "classical_random";
  }
  return "?";
}

CoalitionConfig ParseCoalition(const YAML::Node& node, std::size_t index) {
  const std::string where = fmt::format("coalitions[{}].", index);
  if (!node.IsMap()) Fail(node, where, "coalition must be a mapping");
  RejectUnknownKeys(node,
                    {"kind", "members", "delta", "state", "ones", "amplitudes",
                     "bits", "weight"},
                    where);
  CoalitionConfig c;
  const YAML::Node kind = node["kind"];
  if (!kind) Fail(node, where + "kind", "missing 'kind'");
  const std::string k = Scalar<std::string>(kind, where + "kind");
  if (k == "ghz") {
    c.kind = CoalitionConfig::Kind::kGhz;
  } else if (k == "state") {
    c.kind = CoalitionConfig::Kind::kState;
  } else if (k == "classical") {
    c.kind = CoalitionConfig::Kind::kClassical;
  } else if (k == "classical_random") {
    c.kind = CoalitionConfig::Kind::kClassicalRandom;
  } else {
    Fail(kind, where + "kind", "unknown coalition kind '" + k + "'");
  }

  const YAML::Node members = node["members"];
  if (!members) Fail(node, where + "members", "missing 'members'");
  if (!members.IsSequence() || members.size() == 0) {
    Fail(members, where + "members", "members must be a non-empty list");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    c.members.push_back(
        Scalar<int>(members[i], fmt::format("{}members[{}]", where, i)));
  }

  auto require = [&](const char* key) {
    const YAML::Node v = node[key];
    if (!v) Fail(node, where + key, std::string("missing '") + key + "'");
    return v;
  };
  switch (c.kind) {
    case CoalitionConfig::Kind::kGhz: {
      c.delta = node["delta"] ? Scalar<std::string>(node["delta"], where + "delta")
                              : "focal";
      if (c.delta != "focal") {
        try {
          ParseAngle(c.delta);
        } catch (const ArgumentError& e) {
          Fail(node["delta"], where + "delta", e.what());
        }
      }
      break;
    }
    case CoalitionConfig::Kind::kState: {
      c.state = Scalar<std::string>(require("state"), where + "state");
      if (node["ones"]) c.ones = Scalar<int>(node["ones"], where + "ones");
      if (const YAML::Node amps = node["amplitudes"]) {
        if (!amps.IsSequence()) {
          Fail(amps, where + "amplitudes", "amplitudes must be a list");
        }
        for (std::size_t i = 0; i < amps.size(); ++i) {
          const std::string f = fmt::format("{}amplitudes[{}]", where, i);
          const YAML::Node a = amps[i];
          if (a.IsScalar()) {
            c.amplitudes.emplace_back(Scalar<double>(a, f), 0.0);
          } else if (a.IsSequence() && a.size() == 2) {
            c.amplitudes.emplace_back(Scalar<double>(a[0], f),
                                      Scalar<double>(a[1], f));
          } else {
            Fail(a, f, "amplitude must be a number or [re, im]");
          }
        }
      }
      break;
    }
    case CoalitionConfig::Kind::kClassical:
      c.bits = Scalar<std::string>(require("bits"), where + "bits");
      break;
    case CoalitionConfig::Kind::kClassicalRandom:
      c.weight = Scalar<int>(require("weight"), where + "weight");
      break;
  }
  return c;
}

StateVector NamedState(const CoalitionConfig& c, const std::string& where) {
  const int n = static_cast<int>(c.members.size());
  const std::string& s = c.state;
  if (s == "ghz") return Ghz(n);
  if (s == "w") return WState(n);
  if (s == "wbar") return WState(n, true);
  if (s == "wstar") return WStar(n);
  if (s == "alternating_w") return AlternatingW(n);
  if (s == "balanced") return BalancedPhaseState({n, c.ones, PhaseRule::kRootsOfUnity, {}});
  if (s == "singlet") {
    if (n != 2) throw ArgumentError(where + ": singlet needs exactly 2 members");
    return Singlet();
  }
  if (s == "amplitudes") {
    if (c.amplitudes.size() != (std::size_t{1} << n)) {
      throw ArgumentError(fmt::format("{}: expected {} amplitudes for {} members",
                                      where, 1u << n, n));
    }
    return StateVector(n, c.amplitudes);
  }
  throw ArgumentError(where + ": unknown state '" + s + "'");
}

std::string Exact(double x) {
  const auto r = RecognizeRational(x);
  return r ? r->ToString() : std::string("-");
}

}  // namespace

ConfigError::ConfigError(const std::string& message, int line, int column,
                         std::string field)
    : ValidationError(line > 0 ? fmt::format("line {}, column {}: {}{}", line,
                                             column,
                                             field.empty() ? "" : field + ": ",
                                             message)
                               : (field.empty() ? "" : field + ": ") + message),
      line_(line),
      column_(column),
      field_(std::move(field)) {}

double ParseAngle(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw ArgumentError("empty angle");
  const auto pi_at = s.find("pi");
  if (pi_at == std::string::npos) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ArgumentError("cannot parse angle '" + s + "'");
    }
    return value;
  }
  // [sign][integer]pi[/integer]
  const std::string head = s.substr(0, pi_at);
  const std::string tail = s.substr(pi_at + 2);
  std::int64_t num = 1;
  if (head == "-") {
    num = -1;
  } else if (!head.empty() && head != "+") {
    const auto [ptr, ec] =
        std::from_chars(head.data() + (head[0] == '+'), head.data() + head.size(), num);
    if (ec != std::errc() || ptr != head.data() + head.size()) {
      throw ArgumentError("cannot parse angle '" + s + "'");
    }
  }
  std::int64_t den = 1;
  if (!tail.empty()) {
    if (tail[0] != '/') throw ArgumentError("cannot parse angle '" + s + "'");
    const auto [ptr, ec] =
        std::from_chars(tail.data() + 1, tail.data() + tail.size(), den);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || den == 0) {
      throw ArgumentError("cannot parse angle '" + s + "'");
    }
  }
  return PiMultiple::Of(num, den).radians();
}

ScenarioConfig ParseScenarioConfig(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (!root.IsMap()) throw ConfigError("config must be a YAML mapping", 1, 1);
  RejectUnknownKeys(root,
                    {"name", "players", "randomized", "quad_points", "seed",
                     "monte_carlo_samples", "coalitions"},
                    "");
  ScenarioConfig config;
  if (root["name"]) config.name = Scalar<std::string>(root["name"], "name");
  if (!root["players"]) Fail(root, "players", "missing 'players'");
  config.n_players = Scalar<int>(root["players"], "players");
  if (config.n_players < 2 || config.n_players > kMaxQubits) {
    Fail(root["players"], "players",
         fmt::format("players must be in [2, {}]", kMaxQubits));
  }
  if (root["randomized"]) {
    config.randomized = Scalar<bool>(root["randomized"], "randomized");
  }
  if (root["quad_points"]) {
    config.quad_points = Scalar<int>(root["quad_points"], "quad_points");
    if (config.quad_points < 0) {
      Fail(root["quad_points"], "quad_points", "must be >= 0");
    }
  }
  if (root["seed"]) config.seed = Scalar<std::uint64_t>(root["seed"], "seed");
  if (root["monte_carlo_samples"]) {
    config.monte_carlo_samples =
        Scalar<std::int64_t>(root["monte_carlo_samples"], "monte_carlo_samples");
    if (config.monte_carlo_samples < 0) {
      Fail(root["monte_carlo_samples"], "monte_carlo_samples", "must be >= 0");
    }
  }
  if (const YAML::Node list = root["coalitions"]) {
    if (!list.IsSequence()) Fail(list, "coalitions", "coalitions must be a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      config.coalitions.push_back(ParseCoalition(list[i], i));
    }
  }
  return config;
}

ScenarioConfig LoadScenarioConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path, 0, 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseScenarioConfig(buffer.str());
}

std::string SerializeScenarioConfig(const ScenarioConfig& config) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  if (!config.name.empty()) out << YAML::Key << "name" << YAML::Value << config.name;
  out << YAML::Key << "players" << YAML::Value << config.n_players;
  out << YAML::Key << "randomized" << YAML::Value << config.randomized;
  if (config.quad_points != 0) {
    out << YAML::Key << "quad_points" << YAML::Value << config.quad_points;
  }
  out << YAML::Key << "seed" << YAML::Value << config.seed;
  if (config.monte_carlo_samples != 0) {
    out << YAML::Key << "monte_carlo_samples" << YAML::Value
        << config.monte_carlo_samples;
  }
  out << YAML::Key << "coalitions" << YAML::Value << YAML::BeginSeq;
  for (const CoalitionConfig& c : config.coalitions) {
    out << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << KindName(c.kind);
    out << YAML::Key << "members" << YAML::Value << YAML::Flow << c.members;
    switch (c.kind) {
      case CoalitionConfig::Kind::kGhz:
        out << YAML::Key << "delta" << YAML::Value << c.delta;
        break;
      case CoalitionConfig::Kind::kState:
        out << YAML::Key << "state" << YAML::Value << c.state;
        if (c.ones != 0) out << YAML::Key << "ones" << YAML::Value << c.ones;
        if (!c.amplitudes.empty()) {
          out << YAML::Key << "amplitudes" << YAML::Value << YAML::BeginSeq;
          for (const Amplitude& a : c.amplitudes) {
            out << YAML::Flow << YAML::BeginSeq << YAML::DoublePrecision(17)
                << a.real() << a.imag() << YAML::EndSeq;
          }
          out << YAML::EndSeq;
        }
        break;
      case CoalitionConfig::Kind::kClassical:
        out << YAML::Key << "bits" << YAML::Value << YAML::DoubleQuoted << c.bits;
        break;
      case CoalitionConfig::Kind::kClassicalRandom:
        out << YAML::Key << "weight" << YAML::Value << c.weight;
        break;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

Scenario ToScenario(const ScenarioConfig& config) {
  Scenario scenario;
  scenario.n_players = config.n_players;
  for (std::size_t i = 0; i < config.coalitions.size(); ++i) {
    const CoalitionConfig& c = config.coalitions[i];
    const std::string where = fmt::format("coalition {}", i + 1);
    CoalitionSpec spec;
    spec.members = c.members;
    switch (c.kind) {
      case CoalitionConfig::Kind::kGhz: {
        const int n = static_cast<int>(c.members.size());
        const double delta = c.delta == "focal" ? CoalitionDelta(n).radians()
                                                : ParseAngle(c.delta);
        spec.kind = QuantumGhz{delta};
        break;
      }
      case CoalitionConfig::Kind::kState:
        spec.kind = QuantumExplicit{NamedState(c, where)};
        break;
      case CoalitionConfig::Kind::kClassical:
        spec.kind = ClassicalDeterministic{c.bits};
        break;
      case CoalitionConfig::Kind::kClassicalRandom:
        spec.kind = ClassicalRandomPermutation{c.weight};
        break;
    }
    scenario.coalitions.push_back(std::move(spec));
  }
  ValidateScenario(scenario);
  return scenario;
}

ScenarioResult RunScenario(const ScenarioConfig& config) {
  const Scenario scenario = ToScenario(config);
  ScenarioResult result;
  result.config = config;
  result.tool_version = ToolVersion();
  std::optional<QuadratureSpec> quad;
  if (config.randomized) {
    quad = config.quad_points > 0 ? QuadratureSpec{config.quad_points, false}
                                  : QuadratureSpec::Default(config.n_players);
    result.quad_points = quad->points;
  }
  result.payoff = EvaluateCoalitions(scenario, config.randomized, quad);
  if (config.randomized && config.monte_carlo_samples > 0) {
    result.monte_carlo = MonteCarloRandomized(ComposeScenario(scenario),
                                              config.monte_carlo_samples,
                                              config.seed);
  }
  return result;
}

void WriteScenarioText(const ScenarioResult& r, std::ostream& out) {
  const ScenarioConfig& c = r.config;
  out << "tool_version: " << r.tool_version << '\n';
  if (!c.name.empty()) out << "name: " << c.name << '\n';
  out << "players: " << c.n_players << '\n';
  out << "measurement: " << (c.randomized ? "randomized" : "computational")
      << '\n';
  out << "quad_points: " << r.quad_points << '\n';
  out << "seed: " << c.seed << '\n';
  for (std::size_t k = 0; k < r.payoff.payoffs.size(); ++k) {
    const double p = r.payoff.payoffs[k];
    out << "payoff." << k + 1 << ": " << FormatReal(p) << " (" << Exact(p)
        << ")\n";
  }
  out << "payoff.sum: " << FormatReal(r.payoff.payoffs.Sum()) << '\n';
  for (std::size_t i = 0; i < c.coalitions.size(); ++i) {
    const CoalitionConfig& cc = c.coalitions[i];
    std::string members;
    for (std::size_t j = 0; j < cc.members.size(); ++j) {
      if (j) members += ',';
      members += std::to_string(cc.members[j]);
    }
    const double mean = r.payoff.coalition_means[i];
    out << "coalition." << i + 1 << ".kind: " << KindName(cc.kind) << '\n';
    out << "coalition." << i + 1 << ".members: " << members << '\n';
    out << "coalition." << i + 1 << ".mean: " << FormatReal(mean) << " ("
        << Exact(mean) << ")\n";
  }
  if (r.monte_carlo) {
    out << "monte_carlo.samples: " << r.monte_carlo->samples << '\n';
    for (std::size_t k = 0; k < r.monte_carlo->mean.size(); ++k) {
      out << "monte_carlo." << k + 1 << ": "
          << FormatReal(r.monte_carlo->mean[k]) << " +- "
          << FormatReal(r.monte_carlo->standard_error[k]) << '\n';
    }
  }
}

ResultTable ScenarioTable(const ScenarioResult& r) {
  std::vector<int> coalition_of(static_cast<std::size_t>(r.config.n_players) + 1,
                                0);
  for (std::size_t i = 0; i < r.config.coalitions.size(); ++i) {
    for (int p : r.config.coalitions[i].members) {
      coalition_of[static_cast<std::size_t>(p)] = static_cast<int>(i) + 1;
    }
  }
  ResultTable t;
  t.columns = {"player", "coalition", "payoff", "payoff_exact"};
  for (int p = 1; p <= r.config.n_players; ++p) {
    const double x = r.payoff.payoffs[static_cast<std::size_t>(p - 1)];
    const int c = coalition_of[static_cast<std::size_t>(p)];
    t.rows.push_back({std::to_string(p), c ? std::to_string(c) : "outsider",
                      FormatReal(x), Exact(x)});
  }
  return t;
}

std::string ToolVersion() { return QMG_VERSION; }

}  // namespace qmg
