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

#include "carpenter/dyadic.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace carpenter {

std::vector<double> x_discrete(Level level) {
  const std::size_t n = level.dim();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::ldexp(static_cast<double>(i + 1), -level.k);
  return x;
}

double selfadjoint_defect(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

double idempotence_defect(const CMatrix& a) {
  return std::sqrt(frobenius_sq(multiply(a, a) - a));
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

StructureFlags classify(const CMatrix& a, const ToleranceConfig& cfg) {
  cfg.validate();
  StructureFlags flags;
  flags.selfadjoint = selfadjoint_defect(a) <= cfg.proj_tol;
  if (!flags.selfadjoint) return flags;
  flags.projection = idempotence_defect(a) <= cfg.proj_tol;
  const auto ev = hermitian_eigenvalues(a);
  flags.positive = ev.empty() || ev.front() >= -cfg.proj_tol;
  return flags;
}

}  // namespace carpenter
