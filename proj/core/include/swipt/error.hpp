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

#ifndef SWIPT_ERROR_HPP_
#define SWIPT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace swipt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad dimensions, out-of-range indices, mismatched lengths, invalid params.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An eigensolver or similar decomposition did not converge.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

// Net power P = zeta*P_T + P_C - E is not strictly positive.
class NonPositivePowerError : public Error {
 public:
  using Error::Error;
};

// The QoS constraints cannot be met. `constraint` names the violated one
// ("rate", "energy", "power", ...); `phase` is set by multi-phase solvers.
class InfeasibleError : public Error {
 public:
  InfeasibleError(std::string constraint, const std::string& what,
                  std::string phase = {})
      : Error(what), constraint_(std::move(constraint)),
        phase_(std::move(phase)) {}

  const std::string& constraint() const { return constraint_; }
  const std::string& phase() const { return phase_; }

 private:
  std::string constraint_;
  std::string phase_;
};

// An iterative method hit its cap. Carries the best iterate found so far as
// a flat vector (layout documented by the raising function).
class IterationLimitError : public Error {
 public:
  IterationLimitError(const std::string& what, std::vector<double> best)
      : Error(what), best_(std::move(best)) {}

  const std::vector<double>& best_iterate() const { return best_; }

 private:
  std::vector<double> best_;
};

// Malformed run configuration. `field` is a JSON-pointer-like path.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace swipt

#endif  // SWIPT_ERROR_HPP_
