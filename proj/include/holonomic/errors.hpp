// Copyright 2026 The Holonomic Authors
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace holonomic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HOLONOMIC_DEFINE_ERROR(Name)          \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(std::string(#Name ": ") + what) {} \
  }

HOLONOMIC_DEFINE_ERROR(ForbiddenTransition);
HOLONOMIC_DEFINE_ERROR(InvalidSystem);
HOLONOMIC_DEFINE_ERROR(InvalidPotential);
HOLONOMIC_DEFINE_ERROR(NegativeCycle);
HOLONOMIC_DEFINE_ERROR(NotHolonomic);
HOLONOMIC_DEFINE_ERROR(InfeasibleTarget);
HOLONOMIC_DEFINE_ERROR(NotSubaction);
HOLONOMIC_DEFINE_ERROR(NotCalibrated);
HOLONOMIC_DEFINE_ERROR(NotTransitive);
HOLONOMIC_DEFINE_ERROR(NotInOmega);
HOLONOMIC_DEFINE_ERROR(NotExtreme);
HOLONOMIC_DEFINE_ERROR(HypothesisFails);
HOLONOMIC_DEFINE_ERROR(HorizonTooSmall);
HOLONOMIC_DEFINE_ERROR(ClassCountMismatch);

#undef HOLONOMIC_DEFINE_ERROR

/// Discount schedule exhausted before the normalized iterates settled.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& what) : Error("NonConvergence: " + what) {}
};

/// Malformed experiment configuration; carries the offending line (0 if unknown).
class ConfigError : public Error {
 public:
  ConfigError(int line, const std::string& what)
      : Error("ConfigError" + (line > 0 ? " (line " + std::to_string(line) + ")" : std::string()) +
              ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace holonomic
