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

#ifndef QMG_TESTS_SUPPORT_ORACLE_H_
#define QMG_TESTS_SUPPORT_ORACLE_H_

// Slow reference computations for tests. Nothing here calls into the qmg
// evaluation path: operators are built as dense 2^N x 2^N Kronecker
// products, minorities are counted on strings, and phi-averages use dense
// rectangle grids.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace qmg::oracle {

using C = std::complex<double>;
using Mat2 = std::array<C, 4>;  // row-major
inline constexpr double kPi = 3.14159265358979323846;

inline Mat2 Strategy(double theta, double alpha, double beta) {
  const C i(0.0, 1.0);
  return {std::exp(i * alpha) * std::cos(theta / 2),
          i * std::exp(i * beta) * std::sin(theta / 2),
          i * std::exp(-i * beta) * std::sin(theta / 2),
          std::exp(-i * alpha) * std::cos(theta / 2)};
}

// U(phi)^dagger for the logical basis cos|0> + i sin|1>, i sin|0> + cos|1>.
inline Mat2 LogicalDagger(double phi) {
  const C i(0.0, 1.0);
  return {std::cos(phi), -i * std::sin(phi), -i * std::sin(phi), std::cos(phi)};
}

inline std::string Bits(std::uint64_t b, int n) {
  std::string s;
  for (int k = n - 1; k >= 0; --k) s += ((b >> k) & 1u) ? '1' : '0';
  return s;
}

// Dense (U_1 x ... x U_N) |psi>, U_1 acting on the leftmost character.
inline std::vector<C> KronApply(const std::vector<C>& psi,
                                const std::vector<Mat2>& moves) {
  const int n = static_cast<int>(moves.size());
  const std::size_t dim = std::size_t{1} << n;
  std::vector<C> out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string rb = Bits(r, n);
    for (std::size_t c = 0; c < dim; ++c) {
      if (psi[c] == C{}) continue;
      const std::string cb = Bits(c, n);
      C entry = 1.0;
      for (int k = 0; k < n; ++k) {
        entry *= moves[k][(rb[k] - '0') * 2 + (cb[k] - '0')];
      }
      out[r] += entry * psi[c];
    }
  }
  return out;
}

inline std::vector<double> Minority(const std::string& bits) {
  int ones = 0;
  for (char c : bits) ones += c == '1';
  const int zeros = static_cast<int>(bits.size()) - ones;
  std::vector<double> pay(bits.size(), 0.0);
  if (ones == 0 || zeros == 0 || ones == zeros) return pay;
  const char minority = ones < zeros ? '1' : '0';
  for (std::size_t k = 0; k < bits.size(); ++k) pay[k] = bits[k] == minority;
  return pay;
}

inline std::vector<double> Payoffs(const std::vector<C>& psi, int n) {
  std::vector<double> pay(static_cast<std::size_t>(n), 0.0);
  for (std::size_t b = 0; b < psi.size(); ++b) {
    const double p = std::norm(psi[b]);
    if (p == 0.0) continue;
    const auto m = Minority(Bits(b, n));
    for (int k = 0; k < n; ++k) pay[k] += p * m[k];
  }
  return pay;
}

inline std::vector<double> PayoffsAtPhi(const std::vector<C>& psi, int n,
                                        double phi) {
  return Payoffs(KronApply(psi, std::vector<Mat2>(n, LogicalDagger(phi))), n);
}

// Rectangle rule with `points` nodes on [0, 2pi).
inline std::vector<double> PhiAverage(
    const std::function<std::vector<double>(double)>& f, int points) {
  std::vector<double> acc;
  for (int j = 0; j < points; ++j) {
    const auto v = f(2 * kPi * j / points);
    if (acc.empty()) acc.assign(v.size(), 0.0);
    for (std::size_t k = 0; k < v.size(); ++k) acc[k] += v[k];
  }
  for (double& x : acc) x /= points;
  return acc;
}

// Product basis state measured in the logical basis: each qubit reads the
// opposite value with probability sin^2(phi). Payoffs by enumeration.
inline std::vector<double> ProductStatePayoffsAtPhi(const std::string& bits,
                                                    double phi) {
  const int n = static_cast<int>(bits.size());
  const double flip = std::sin(phi) * std::sin(phi);
  std::vector<double> pay(static_cast<std::size_t>(n), 0.0);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const std::string out = Bits(b, n);
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= out[k] == bits[k] ? 1.0 - flip : flip;
    const auto m = Minority(out);
    for (int k = 0; k < n; ++k) pay[k] += p * m[k];
  }
  return pay;
}

// Coalition mean of `block_bits` (players 1..n) with fair-coin outsiders,
// enumerating every outsider string.
inline double ClassicalCoalitionMeanAtPhi(const std::string& block_bits,
                                          int n_players, double phi) {
  const int n = static_cast<int>(block_bits.size());
  const int k = n_players - n;
  double total = 0.0;
  for (std::uint64_t o = 0; o < (std::uint64_t{1} << k); ++o) {
    const std::string full = block_bits + (k ? Bits(o, k) : std::string());
    const auto pay = ProductStatePayoffsAtPhi(full, phi);
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += pay[i];
    total += mean / n;
  }
  return total / std::ldexp(1.0, k);
}

inline std::vector<C> Kron(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

// Coalition mean of an entangled block (players 1..n) with fair-coin
// outsiders at one phi, via dense N-qubit registers per outsider string.
inline double BlockCoalitionMeanAtPhi(const std::vector<C>& block, int n,
                                      int n_players, double phi) {
  const int k = n_players - n;
  double total = 0.0;
  for (std::uint64_t o = 0; o < (std::uint64_t{1} << k); ++o) {
    std::vector<C> outsider(std::size_t{1} << k);
    outsider[o] = 1.0;
    const auto full = k ? Kron(block, outsider) : block;
    const auto pay = PayoffsAtPhi(full, n_players, phi);
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += pay[i];
    total += mean / n;
  }
  return total / std::ldexp(1.0, k);
}

inline std::vector<C> RandomState(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<C> v(std::size_t{1} << n);
  double norm = 0.0;
  for (C& a : v) {
    a = C(g(rng), g(rng));
    norm += std::norm(a);
  }
  for (C& a : v) a /= std::sqrt(norm);
  return v;
}

inline Mat2 RandomUnitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  const Mat2 m = Strategy(theta(rng), ang(rng), ang(rng));
  const C phase = std::exp(C(0.0, ang(rng)));
  return {phase * m[0], phase * m[1], phase * m[2], phase * m[3]};
}

}  // namespace qmg::oracle

#endif  // QMG_TESTS_SUPPORT_ORACLE_H_
