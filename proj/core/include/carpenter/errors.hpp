// Copyright 2026 The Carpenter Lab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace carpenter {

// A construction would leave the configured dyadic level range.
class LevelOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Prescribed diagonal data that no projection can realize (or that the chosen
// construction path cannot reach).
class InfeasibleTarget : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed matrix / profile / target files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Post-condition checks on a constructed object failed. This signals a bug,
// not a data condition.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace carpenter
