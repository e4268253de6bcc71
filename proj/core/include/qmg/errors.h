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

#ifndef QMG_ERRORS_H_
#define QMG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qmg {

// Malformed call: wrong sizes, out-of-range parameters, overlapping players.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well-formed but fails a numerical check (non-unitary matrix,
// unnormalized state, inexact quadrature, coefficients not summing to zero).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Requested game configuration has no defined answer in this model, e.g. a
// symmetric GHZ profile for an odd number of qubits.
class UnsupportedError : public std::logic_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qmg

#endif  // QMG_ERRORS_H_
