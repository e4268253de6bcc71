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

#ifndef QMG_RESULT_TABLE_H_
#define QMG_RESULT_TABLE_H_

#include <ostream>
#include <string>
#include <vector>

namespace qmg {

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Fixed 12-decimal rendering used for every emitted float.
std::string FormatReal(double x);

// Header row then one line per row; LF line ends; fields containing a comma
// or quote are double-quoted.
void WriteCsv(const ResultTable& table, std::ostream& out);

// Space-aligned columns for terminals.
void WriteText(const ResultTable& table, std::ostream& out);

}  // namespace qmg

#endif  // QMG_RESULT_TABLE_H_
