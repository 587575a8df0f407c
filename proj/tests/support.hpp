/*
 * Copyright 2026 The modman Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MODMAN_TESTS_SUPPORT_HPP
#define MODMAN_TESTS_SUPPORT_HPP

#include <cstdint>

#include "modman/matfun.hpp"
#include "modman/random.hpp"

namespace modman::testing {

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

inline HermitianMatrix diag(std::initializer_list<double> d) {
  return HermitianMatrix::diagonal(std::span<const double>(d.begin(), d.size()));
}

inline DensityMatrix diag_state(std::initializer_list<double> d) {
  return DensityMatrix::diagonal(std::span<const double>(d.begin(), d.size()));
}

inline HermitianMatrix random_traceless(Rng& rng, int n) {
  const HermitianMatrix h = random_hermitian(rng, n);
  return h - HermitianMatrix::identity(n) * (h.trace() / n);
}

/// exp(a) by scaling and squaring of a truncated Taylor series; shares no
/// code with the spectral implementation.
inline CMatrix taylor_exp(const CMatrix& a) {
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    norm *= 0.5;
    ++squarings;
  }
  const CMatrix scaled = a / std::ldexp(1.0, squarings);
  CMatrix term = CMatrix::Identity(a.rows(), a.cols());
  CMatrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace modman::testing

#endif  // MODMAN_TESTS_SUPPORT_HPP
