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

#include <iosfwd>
#include <string>
#include <vector>

#include "carpenter/matrix.hpp"

namespace carpenter {

/// Text matrix format.
///
///   DYADIC-MATRIX v1        (or GENERAL-MATRIX v1)
///   level <k>               (or dim <N>)
///   N lines of N whitespace-separated `re,im` tokens
///
/// The writer picks the dyadic header whenever N is a power of two and
/// prints shortest round-trip decimals; the reader accepts any decimal
/// spelling. Reader errors throw FormatError.
void write_matrix(std::ostream& os, const CMatrix& m);
std::string matrix_to_string(const CMatrix& m);
CMatrix read_matrix(std::istream& is);
CMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const CMatrix& m);

// One diagonal value per line (blank lines and '#' comments skipped).
std::vector<double> read_targets(std::istream& is);
std::vector<double> read_targets_file(const std::string& path);

}  // namespace carpenter
