// Copyright 2026 The swipt-ee Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swipt/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "swipt/error.hpp"
#include "swipt/solve_result.hpp"

namespace swipt {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void SolverConfig::validate() const {
  if (!(delta > 0.0)) throw InvalidArgument("delta must be > 0");
  if (max_outer < 1 || max_inner < 1) throw InvalidArgument("iteration caps must be >= 1");
  if (!(step0 > 0.0)) throw InvalidArgument("step0 must be > 0");
  if (!(kkt_tol > 0.0)) throw InvalidArgument("kkt_tol must be > 0");
}

void Trace::add(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw InvalidArgument("trace row width does not match the header");
  }
  rows.push_back(std::move(row));
}

void Trace::write_csv(std::ostream& os) const {
  for (size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

}  // namespace swipt
