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

#ifndef MODMAN_RANDOM_HPP
#define MODMAN_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

#include "modman/matfun.hpp"

namespace modman {

/// Seeded source of random instances.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the standard.
/// Uniform and Gaussian variates are derived here rather than through the
/// <random> distributions, whose algorithms are implementation-defined, so a
/// seed reproduces the same instances on every platform.
class Rng {
 public:
  static constexpr const char* kGeneratorName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Independent stream keyed by several integers (seed, check, trial, ...),
  /// mixed through std::seed_seq.
  Rng(std::initializer_list<std::uint64_t> key);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal variate (Box-Muller, cosine branch).
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// n x n matrix with i.i.d. standard complex Gaussian entries.
CMatrix random_gaussian_matrix(Rng& rng, int n);

/// Normalized A A^dagger + eps 1 with eps = 1e-3 / n.
DensityMatrix random_density(Rng& rng, int n);

/// Gaussian Hermitian matrix scaled to unit operator norm.
HermitianMatrix random_hermitian(Rng& rng, int n);

/// Gaussian matrix scaled to unit operator norm; a generic element of the
/// algebra.
CMatrix random_operator(Rng& rng, int n);

}  // namespace modman

#endif  // MODMAN_RANDOM_HPP
