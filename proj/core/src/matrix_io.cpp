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

#include "carpenter/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "carpenter/errors.hpp"
#include "carpenter/format.hpp"
#include "carpenter/level.hpp"

namespace carpenter {
namespace {

constexpr const char* kDyadicHeader = "DYADIC-MATRIX v1";
constexpr const char* kGeneralHeader = "GENERAL-MATRIX v1";

double parse_decimal(std::string_view text, std::size_t line_no) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last || !std::isfinite(v)) {
    throw FormatError("line " + std::to_string(line_no) + ": bad number '" + std::string(text) +
                      "'");
  }
  return v;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

void write_matrix(std::ostream& os, const CMatrix& m) {
  const std::size_t n = m.dim();
  if (is_power_of_two(n)) {
    os << kDyadicHeader << '\n' << "level " << level_of_dim(n).k << '\n';
  } else {
    os << kGeneralHeader << '\n' << "dim " << n << '\n';
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) os << ' ';
      os << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
    }
    os << '\n';
  }
}

std::string matrix_to_string(const CMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

CMatrix read_matrix(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty matrix file");
  line = strip_cr(line);
  const bool dyadic = line == kDyadicHeader;
  if (!dyadic && line != kGeneralHeader) {
    throw FormatError("line 1: expected '" + std::string(kDyadicHeader) + "' or '" +
                      kGeneralHeader + "', got '" + line + "'");
  }
  if (!std::getline(is, line)) throw FormatError("line 2: missing size line");
  std::istringstream size_line(strip_cr(line));
  std::string key;
  long long value = -1;
  std::string extra;
  size_line >> key >> value;
  if (!size_line || (size_line >> extra) || key != (dyadic ? "level" : "dim") || value < 0 ||
      (dyadic && value > 20) || (!dyadic && value > (1LL << 20))) {
    throw FormatError(std::string("line 2: expected '") + (dyadic ? "level <k>" : "dim <N>") +
                      "', got '" + strip_cr(line) + "'");
  }
  const std::size_t n = dyadic ? (std::size_t{1} << value) : static_cast<std::size_t>(value);
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t line_no = i + 3;
    if (!std::getline(is, line)) {
      throw FormatError("line " + std::to_string(line_no) + ": missing matrix row");
    }
    std::istringstream row(strip_cr(line));
    std::string token;
    std::size_t j = 0;
    while (row >> token) {
      if (j >= n) throw FormatError("line " + std::to_string(line_no) + ": too many entries");
      const auto comma = token.find(',');
      if (comma == std::string::npos) {
        throw FormatError("line " + std::to_string(line_no) + ": entry '" + token +
                          "' is not of the form re,im");
      }
      const std::string_view tv(token);
      m(i, j) = Complex(parse_decimal(tv.substr(0, comma), line_no),
                        parse_decimal(tv.substr(comma + 1), line_no));
      ++j;
    }
    if (j != n) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                        " entries, got " + std::to_string(j));
    }
  }
  while (std::getline(is, line)) {
    if (strip_cr(line).find_first_not_of(" \t") != std::string::npos) {
      throw FormatError("trailing content after matrix rows");
    }
  }
  return m;
}

CMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open matrix file '" + path + "'");
  try {
    return read_matrix(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_matrix_file(const std::string& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_matrix(out, m);
}

std::vector<double> read_targets(std::istream& is) {
  std::vector<double> d;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    line = strip_cr(line);
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t");
    d.push_back(parse_decimal(std::string_view(line).substr(b, e - b + 1), line_no));
  }
  if (d.empty()) throw FormatError("target file has no values");
  return d;
}

std::vector<double> read_targets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open target file '" + path + "'");
  try {
    return read_targets(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace carpenter
