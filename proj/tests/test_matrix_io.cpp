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

#include <gtest/gtest.h>

#include <sstream>

#include "carpenter/errors.hpp"
#include "carpenter/matrix_io.hpp"
#include "carpenter/random.hpp"

namespace carpenter {
namespace {

CMatrix parse(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

TEST(MatrixIo, WritesDyadicHeader) {
  const CMatrix a(2, {0.0, Complex(0.5, -1.0), 0.1, 1.0});
  EXPECT_EQ(matrix_to_string(a), "DYADIC-MATRIX v1\nlevel 1\n0,0 0.5,-1\n0.1,0 1,0\n");
}

TEST(MatrixIo, WritesGeneralHeaderForOtherSizes) {
  EXPECT_EQ(matrix_to_string(CMatrix::identity(3)),
            "GENERAL-MATRIX v1\ndim 3\n1,0 0,0 0,0\n0,0 1,0 0,0\n0,0 0,0 1,0\n");
}

TEST(MatrixIo, RoundTripIsBitExact) {
  Rng rng(4);
  for (int k = 0; k <= 4; ++k) {
    const CMatrix a = random_general(Level{k}, rng);
    EXPECT_EQ(parse(matrix_to_string(a)), a);
  }
  const CMatrix c(3, {1.0 / 3, 2.0, 3.0, 4.0, Complex(5.0, 1e-300), 6.0, 7.0, 8.0, 9.0});
  EXPECT_EQ(parse(matrix_to_string(c)), c);
}

TEST(MatrixIo, AcceptsAlternateSpellings) {
  const CMatrix a = parse("DYADIC-MATRIX v1\r\nlevel 1\r\n+1.0,0   2e0,-0.0\n  0,0 1,0\n\n");
  EXPECT_EQ(a(0, 0), Complex(1.0));
  EXPECT_EQ(a(0, 1), Complex(2.0));
}

TEST(MatrixIo, Errors) {
  EXPECT_THROW(parse(""), FormatError);
  EXPECT_THROW(parse("MATRIX\nlevel 1\n"), FormatError);
  EXPECT_THROW(parse("DYADIC-MATRIX v1\ndim 2\n"), FormatError);
  EXPECT_THROW(parse("DYADIC-MATRIX v1\nlevel -1\n"), FormatError);
  EXPECT_THROW(parse("DYADIC-MATRIX v1\nlevel 1\n1,0 0,0\n"), FormatError);
  EXPECT_THROW(parse("DYADIC-MATRIX v1\nlevel 1\n1,0 0,0\n0,0\n"), FormatError);
  EXPECT_THROW(parse("DYADIC-MATRIX v1\nlevel 1\n1,0 0,0 0,0\n0,0 1,0\n"), FormatError);
  EXPECT_THROW(parse("DYADIC-MATRIX v1\nlevel 1\n1 0\n0,0 1,0\n"), FormatError);
  EXPECT_THROW(parse("DYADIC-MATRIX v1\nlevel 1\n1,x 0,0\n0,0 1,0\n"), FormatError);
  EXPECT_THROW(parse("DYADIC-MATRIX v1\nlevel 1\nnan,0 0,0\n0,0 1,0\n"), FormatError);
  EXPECT_THROW(parse("DYADIC-MATRIX v1\nlevel 1\n1,0 0,0\n0,0 1,0\nextra\n"), FormatError);
}

TEST(MatrixIo, ErrorNamesTheLine) {
  try {
    parse("GENERAL-MATRIX v1\ndim 2\n1,0 0,0\n0,0 oops,0\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(Targets, ParsesValuesAndSkipsComments) {
  std::istringstream is("# target\n0.9\n  0.7 \n\n0.3\n0.1\n");
  EXPECT_EQ(read_targets(is), (std::vector<double>{0.9, 0.7, 0.3, 0.1}));
}

TEST(Targets, Errors) {
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_targets(empty), FormatError);
  std::istringstream bad("0.5\nhalf\n");
  EXPECT_THROW(read_targets(bad), FormatError);
  EXPECT_THROW(read_targets_file("/nonexistent/targets.txt"), FormatError);
}

}  // namespace
}  // namespace carpenter
