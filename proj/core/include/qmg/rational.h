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

#ifndef QMG_RATIONAL_H_
#define QMG_RATIONAL_H_

#include <cstdint>
#include <optional>
#include <string>

namespace qmg {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  // "17/72", "0", "1".
  std::string ToString() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Smallest-denominator p/q (q <= max_den) within `tolerance` of x, if any.
std::optional<Rational> RecognizeRational(double x, std::int64_t max_den = 1024,
                                          double tolerance = 1e-9);

}  // namespace qmg

#endif  // QMG_RATIONAL_H_
