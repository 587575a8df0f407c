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

#include <gtest/gtest.h>

#include <cmath>

#include "modman/divergence.hpp"
#include "support.hpp"

namespace modman {
namespace {

using testing::diag_state;
using testing::max_abs;

const double kKl = 0.5 * std::log(4.0 / 3.0);  // 0.1438410...

TEST(RelativeModular, ReducesToModularOperator) {
  Rng rng({3, 1});
  const DensityMatrix rho = random_density(rng, 4);
  const RelativeModularOperator d(rho, rho);
  const GnsSpace g(rho);
  const ConeVector v{random_operator(rng, 4)};
  EXPECT_LE(max_abs((d.apply(v) - apply_modular_power(g, 1.0, v)).mat), 1e-10);
  EXPECT_LE(max_abs((d.apply_power(Complex(0.2, 0.5), v) -
                     apply_modular_power(g, Complex(0.2, 0.5), v))
                        .mat),
            1e-10);
}

TEST(RelativeModular, DiagonalSpectrum) {
  const RelativeModularOperator d(diag_state({0.2, 0.8}), diag_state({0.4, 0.6}));
  const Eigen::MatrixXd ev = d.eigenvalues();
  const double s[2] = {0.2, 0.8};
  const double t[2] = {0.4, 0.6};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) EXPECT_NEAR(ev(i, j), s[i] / t[j], 1e-15);
  }
}

TEST(RelativeModular, Eigenvectors) {
  Rng rng({3, 2});
  const RelativeModularOperator d(random_density(rng, 3), random_density(rng, 3));
  const Eigen::MatrixXd ev = d.eigenvalues();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const ConeVector e = d.eigenvector(i, j);
      ConeVector scaled{e.mat * ev(i, j)};
      EXPECT_LE(max_abs((d.apply(e) - scaled).mat), 1e-10 * std::max(1.0, ev(i, j)));
    }
  }
}

TEST(RelativeModular, DirectAction) {
  Rng rng({3, 3});
  const DensityMatrix sigma = random_density(rng, 4);
  const DensityMatrix tau = random_density(rng, 4);
  const RelativeModularOperator d(sigma, tau);
  const CMatrix m = random_operator(rng, 4);
  const CMatrix expected = sigma.matrix() * m * tau.matrix().inverse();
  EXPECT_LE(max_abs(d.apply(ConeVector{m}).mat - expected), 1e-10 * max_abs(expected));
}

TEST(RelativeModular, PowersAndLog) {
  Rng rng({3, 4});
  const RelativeModularOperator d(random_density(rng, 3), random_density(rng, 3));
  const ConeVector v{random_operator(rng, 3)};
  const ConeVector twice = d.apply_power(0.5, d.apply_power(0.5, v));
  EXPECT_LE(max_abs((twice - d.apply(v)).mat), 1e-10 * max_abs(d.apply(v).mat));
  // log Delta = d/dz Delta^z at z = 0.
  const double eps = 1e-5;
  const CMatrix fd = (d.apply_power(eps, v).mat - d.apply_power(-eps, v).mat) / (2 * eps);
  EXPECT_LE(max_abs(d.apply_log(v).mat - fd), 1e-6);
}

TEST(RelativeModular, TomitaAndInverse) {
  Rng rng({3, 5});
  const DensityMatrix sigma = random_density(rng, 4);
  const DensityMatrix tau = random_density(rng, 4);
  const RelativeModularOperator forward(sigma, tau);
  const RelativeModularOperator backward(tau, sigma);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix x = random_operator(rng, 4);
    const ConeVector x_psi = forward.psi().left(x);
    const ConeVector image = forward.apply_tomita(x_psi);
    EXPECT_LE(max_abs(image.mat - forward.phi().left(x.adjoint()).mat), 1e-10);
    EXPECT_LE(max_abs(backward.apply_tomita(image).mat - x_psi.mat), 1e-10);
  }
}

TEST(RelativeModular, DimensionMismatch) {
  EXPECT_THROW(RelativeModularOperator(DensityMatrix::maximally_mixed(2),
                                       DensityMatrix::maximally_mixed(3)),
               DimensionMismatch);
  EXPECT_THROW(umegaki_divergence(DensityMatrix::maximally_mixed(2),
                                  DensityMatrix::maximally_mixed(3)),
               DimensionMismatch);
}

TEST(Divergence, ScalarKullbackLeibler) {
  const DensityMatrix sigma = diag_state({0.5, 0.5});
  const DensityMatrix tau = diag_state({0.25, 0.75});
  EXPECT_NEAR(araki_divergence(sigma, tau), kKl, 1e-14);
  EXPECT_NEAR(umegaki_divergence(sigma, tau), kKl, 1e-14);
  EXPECT_NEAR(araki_dual_form(sigma, tau), kKl, 1e-14);
  EXPECT_NEAR(kKl, 0.1438410, 1e-7);
}

TEST(Divergence, VanishesOnEqualStates) {
  Rng rng({3, 6});
  const DensityMatrix rho = random_density(rng, 5);
  EXPECT_NEAR(araki_divergence(rho, rho), 0.0, 1e-13);
  EXPECT_NEAR(umegaki_divergence(rho, rho), 0.0, 1e-13);
  EXPECT_NEAR(araki_dual_form(rho, rho), 0.0, 1e-13);
}

TEST(Divergence, ThreeWayAgreement) {
  Rng rng({3, 7});
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const DensityMatrix sigma = random_density(rng, n);
    const DensityMatrix tau = random_density(rng, n);
    const double a = araki_divergence(sigma, tau);
    EXPECT_NEAR(a, umegaki_divergence(sigma, tau), 1e-9);
    EXPECT_NEAR(a, araki_dual_form(sigma, tau), 1e-9);
  }
}

TEST(Divergence, NonnegativeOnRandomPairs) {
  Rng rng({3, 8});
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 7;
    EXPECT_GE(araki_divergence(random_density(rng, n), random_density(rng, n)), 0.0);
  }
}

TEST(Divergence, SmallDivergenceMeansCloseStates) {
  Rng rng({3, 9});
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix sigma = random_density(rng, 4);
    const HermitianMatrix delta = testing::random_traceless(rng, 4);
    for (double scale : {1e-1, 1e-3, 1e-5, 1e-7}) {
      const double step = scale * sigma.min_eigenvalue();
      const DensityMatrix tau(sigma.hermitian() + delta * step);
      if (araki_divergence(sigma, tau) <= 1e-10) {
        EXPECT_LE(operator_norm(CMatrix(sigma.matrix() - tau.matrix())), 1e-5);
      }
    }
  }
}

}  // namespace
}  // namespace modman
