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

#ifndef SWIPT_CSV_HPP_
#define SWIPT_CSV_HPP_

#include <string>

namespace swipt {

// Nine significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

}  // namespace swipt

#endif  // SWIPT_CSV_HPP_
