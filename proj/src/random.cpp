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

#include "modman/random.hpp"

#include <numbers>
#include <vector>

namespace modman {

namespace {

std::mt19937_64 keyed_engine(std::initializer_list<std::uint64_t> key) {
  std::vector<std::uint32_t> words;
  for (std::uint64_t k : key) {
    words.push_back(static_cast<std::uint32_t>(k));
    words.push_back(static_cast<std::uint32_t>(k >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::initializer_list<std::uint64_t> key) : engine_(keyed_engine(key)) {}

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CMatrix random_gaussian_matrix(Rng& rng, int n) {
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      a(i, j) = Complex(re, im);
    }
  }
  return a;
}

DensityMatrix random_density(Rng& rng, int n) {
  const CMatrix a = random_gaussian_matrix(rng, n);
  const CMatrix m = a * a.adjoint() + (1e-3 / n) * CMatrix::Identity(n, n);
  return DensityMatrix::normalized(HermitianMatrix(CMatrix(0.5 * (m + m.adjoint()))));
}

HermitianMatrix random_hermitian(Rng& rng, int n) {
  const CMatrix g = random_gaussian_matrix(rng, n);
  const HermitianMatrix h(CMatrix(0.5 * (g + g.adjoint())));
  return h * (1.0 / operator_norm(h));
}

CMatrix random_operator(Rng& rng, int n) {
  const CMatrix g = random_gaussian_matrix(rng, n);
  return g / operator_norm(g);
}

}  // namespace modman
