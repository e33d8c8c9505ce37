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

#include "carpenter/random.hpp"

#include <Eigen/Eigenvalues>

#include <limits>
#include <stdexcept>

namespace carpenter {

long long Rng::uniform_int(long long lo, long long hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(engine_());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long long>(x % span);
}

CMatrix random_general(Level level, Rng& rng) {
  CMatrix a(level.dim());
  for (auto& z : a.data()) {
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    z = Complex(re, im);
  }
  return a;
}

CMatrix random_selfadjoint(Level level, Rng& rng) {
  const CMatrix g = random_general(level, rng);
  CMatrix a(level.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    a(i, i) = Complex(g(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      a(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

CMatrix random_projection(Level level, Rng& rng) {
  const CMatrix h = random_selfadjoint(level, rng);
  const auto n = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = h(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  // Spectrum of h lies in [-n, n]; (h/n + 1)/2 maps it into [0,1], and rounding
  // at 1/2 keeps exactly the eigenvectors with positive eigenvalue.
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    if (solver.eigenvalues()(c) > 0.0) {
      const auto v = solver.eigenvectors().col(c);
      p.noalias() += v * v.adjoint();
    }
  }
  CMatrix out(h.dim());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = p(i, j);
  return out;
}

CMatrix random_real_diagonal(Level level, Rng& rng, double lo, double hi) {
  CMatrix a(level.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) a(i, i) = Complex(rng.uniform(lo, hi), 0.0);
  return a;
}

CMatrix named_seed(const std::string& name, Level level, Rng& rng) {
  if (name == "diag01") {
    CMatrix a(level.dim());
    for (std::size_t i = 1; i < a.dim(); i += 2) a(i, i) = 1.0;
    return a;
  }
  if (name == "identity") return CMatrix::identity(level.dim());
  if (name == "rand-sa") return random_selfadjoint(level, rng);
  if (name == "rand-proj") return random_projection(level, rng);
  if (name == "rand-general") return random_general(level, rng);
  if (name == "rand-diag") return random_real_diagonal(level, rng);
  throw std::invalid_argument("unknown seed name '" + name + "'");
}

}  // namespace carpenter
