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

#include "modman/standard_form.hpp"
#include "support.hpp"

namespace modman {
namespace {

using testing::diag;
using testing::diag_state;
using testing::max_abs;

TEST(StandardForm, OmegaOfMaximallyMixedState) {
  const GnsSpace g = build_standard_form(DensityMatrix::maximally_mixed(3));
  EXPECT_LE(max_abs(g.omega().mat - CMatrix::Identity(3, 3) / std::sqrt(3.0)), 1e-15);
}

TEST(StandardForm, OmegaOfDiagonalState) {
  const GnsSpace g(diag_state({0.2, 0.8}));
  EXPECT_NEAR(g.omega().mat(0, 0).real(), std::sqrt(0.2), 1e-15);
  EXPECT_NEAR(g.omega().mat(1, 1).real(), std::sqrt(0.8), 1e-15);
  EXPECT_NEAR(g.omega().norm(), 1.0, 1e-15);
}

TEST(StandardForm, VectorStateReproducesTrace) {
  Rng rng({2, 1});
  const GnsSpace g(random_density(rng, 5));
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix x = random_operator(rng, 5);
    const Complex vector_state = g.omega().left(x).inner(g.omega());
    EXPECT_LE(std::abs(vector_state - g.rho().expectation(x)), 1e-12);
    EXPECT_LE(std::abs(g.state(x) - (g.rho().matrix() * x).trace()), 1e-12);
  }
}

TEST(ModularOperator, FixesOmega) {
  Rng rng({2, 2});
  const GnsSpace g(random_density(rng, 4));
  for (Complex z : {Complex(0.3), Complex(1.0), Complex(0.0, 2.0), Complex(-0.4, 0.7)}) {
    EXPECT_LE(max_abs((apply_modular_power(g, z, g.omega()) - g.omega()).mat), 1e-12);
  }
}

TEST(ModularOperator, SquareRootMovesRhoAcross) {
  Rng rng({2, 3});
  const GnsSpace g(random_density(rng, 4));
  const CMatrix x = random_operator(rng, 4);
  const ConeVector v = g.omega().left(x);
  const ConeVector half = apply_modular_power(g, 0.5, v);
  EXPECT_LE(max_abs(half.mat - g.sqrt_rho() * x), 1e-12);
}

TEST(ModularOperator, ImaginaryPowersAreUnitary) {
  Rng rng({2, 4});
  const GnsSpace g(random_density(rng, 4));
  const ConeVector v{random_operator(rng, 4)};
  for (double t : {0.1, 1.0, 7.5}) {
    EXPECT_NEAR(apply_modular_power(g, Complex(0.0, t), v).norm(), v.norm(), 1e-10);
  }
}

TEST(ModularOperator, GroupLaw) {
  Rng rng({2, 5});
  const GnsSpace g(random_density(rng, 3));
  const ConeVector v{random_operator(rng, 3)};
  const ConeVector two_steps =
      apply_modular_power(g, 0.2, apply_modular_power(g, Complex(0.1, 0.4), v));
  const ConeVector one_step = apply_modular_power(g, Complex(0.3, 0.4), v);
  EXPECT_LE(max_abs((two_steps - one_step).mat), 1e-10 * std::max(1.0, max_abs(one_step.mat)));
}

TEST(ModularConjugation, InvolutionAndAntiunitary) {
  Rng rng({2, 6});
  const GnsSpace g(random_density(rng, 4));
  const ConeVector v{random_operator(rng, 4)};
  const ConeVector w{random_operator(rng, 4)};
  EXPECT_LE(max_abs((modular_conjugate(modular_conjugate(v)) - v).mat), 0.0);
  EXPECT_LE(max_abs((modular_conjugate(g.omega()) - g.omega()).mat), 1e-15);
  // (Jv, Jw) = (w, v).
  EXPECT_LE(std::abs(modular_conjugate(v).inner(modular_conjugate(w)) - w.inner(v)), 1e-14);
}

TEST(Tomita, MapsXOmegaToAdjoint) {
  Rng rng({2, 7});
  const GnsSpace g(random_density(rng, 4));
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix x = random_operator(rng, 4);
    const ConeVector s = apply_tomita(g, g.omega().left(x));
    EXPECT_LE(max_abs(s.mat - g.omega().left(x.adjoint()).mat), 1e-10);
  }
}

TEST(ModularFlow, TrivialCases) {
  Rng rng({2, 8});
  const GnsSpace g(random_density(rng, 3));
  const CMatrix x = random_operator(rng, 3);
  EXPECT_LE(max_abs(modular_flow(g, x, 0.0) - x), 1e-14);
  const GnsSpace tracial(DensityMatrix::maximally_mixed(3));
  EXPECT_LE(max_abs(modular_flow(tracial, x, Complex(0.4, -0.9)) - x), 1e-14);
}

TEST(ModularFlow, DiagonalClosedForm) {
  const GnsSpace g(diag_state({0.2, 0.3, 0.5}));
  Rng rng({2, 9});
  const CMatrix x = random_operator(rng, 3);
  const double t = 0.8;
  const CMatrix flowed = modular_flow(g, x, t);
  const double p[3] = {0.2, 0.3, 0.5};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Complex phase = std::exp(Complex(0.0, t * (std::log(p[j]) - std::log(p[i]))));
      EXPECT_LE(std::abs(flowed(i, j) - phase * x(i, j)), 1e-14);
    }
  }
}

TEST(ModularFlow, LeavesStateInvariant) {
  Rng rng({2, 10});
  const GnsSpace g(random_density(rng, 4));
  const CMatrix x = random_operator(rng, 4);
  for (double t : {-3.0, 0.5, 11.0}) {
    EXPECT_LE(std::abs(g.state(modular_flow(g, x, t)) - g.state(x)), 1e-10);
  }
}

TEST(Kms, TracialStateIsTrivial) {
  Rng rng({2, 11});
  const GnsSpace g(DensityMatrix::maximally_mixed(3));
  const CMatrix x = random_operator(rng, 3);
  const CMatrix y = random_operator(rng, 3);
  EXPECT_LE(kms_boundary_check(g, x, y, 0.4), 1e-15);
}

TEST(Kms, IdentityPartnerGivesConstantFunction) {
  Rng rng({2, 12});
  const GnsSpace g(random_density(rng, 4));
  const HermitianMatrix x = random_hermitian(rng, 4);
  const CMatrix one = CMatrix::Identity(4, 4);
  for (double t : {0.0, 1.0, 2.5}) {
    EXPECT_LE(kms_boundary_check(g, x.matrix(), one, t), 1e-10);
  }
}

TEST(Kms, RandomOperators) {
  Rng rng({2, 13});
  for (int trial = 0; trial < 20; ++trial) {
    const GnsSpace g(random_density(rng, 4));
    const CMatrix x = random_operator(rng, 4);
    const CMatrix y = random_operator(rng, 4);
    for (double t : {0.0, 0.3, 1.7}) EXPECT_LE(kms_boundary_check(g, x, y, t), 1e-10);
  }
}

TEST(Kms, DetectsWrongTemperature) {
  // Both sides evaluated at a state that is not the one the flow is built
  // from must disagree; the check is not vacuous.
  Rng rng({2, 14});
  const GnsSpace g(random_density(rng, 3));
  const CMatrix x = random_operator(rng, 3);
  const CMatrix y = random_operator(rng, 3);
  const Complex wrong = g.state(modular_flow(g, x, Complex(0.2, -0.5)) * y);
  const Complex right = g.state(y * modular_flow(g, x, 0.2));
  EXPECT_GT(std::abs(wrong - right), 1e-6);
}

TEST(Cones, NaturalConeSamplesAreMembers) {
  Rng rng({2, 15});
  const GnsSpace g(random_density(rng, 4));
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix x = random_operator(rng, 4);
    // x J x Omega = vec(x rho^{1/2} x^dagger).
    const ConeVector v = modular_conjugate(g.omega().left(x)).left(x);
    EXPECT_LE(max_abs(v.mat - x * g.sqrt_rho() * x.adjoint()), 1e-14);
    EXPECT_TRUE(cone_membership(g, v, 0.25, 1e-10));
    EXPECT_LE(max_abs((modular_conjugate(v) - v).mat), 1e-14);
  }
}

TEST(Cones, NaturalConeIsPsdMatrices) {
  Rng rng({2, 16});
  const GnsSpace g(random_density(rng, 3));
  EXPECT_TRUE(cone_membership(g, ConeVector{diag({1.0, 0.5, 0.0}).matrix()}, 0.25, 1e-12));
  EXPECT_FALSE(cone_membership(g, ConeVector{diag({1.0, -0.5, 0.2}).matrix()}, 0.25, 1e-12));
  EXPECT_FALSE(cone_membership(g, ConeVector{testing::random_traceless(rng, 3).matrix() *
                                             Complex(0.0, 1.0)},
                               0.25, 1e-12));
}

TEST(Cones, AlgebraAndCommutantCones) {
  Rng rng({2, 17});
  const GnsSpace g(random_density(rng, 3));
  const CMatrix a = random_operator(rng, 3);
  const CMatrix positive = a * a.adjoint();
  // alpha = 0: x Omega with x >= 0; alpha = 1/2: y Omega with y >= 0 in the commutant.
  EXPECT_TRUE(cone_membership(g, g.omega().left(positive), 0.0, 1e-10));
  EXPECT_TRUE(cone_membership(g, g.omega().right(positive), 0.5, 1e-10));
  EXPECT_FALSE(cone_membership(g, g.omega().left(-positive), 0.0, 1e-10));
  EXPECT_THROW(cone_membership(g, g.omega(), 0.7, 1e-10), PreconditionError);
}

TEST(VectorStates, RoundTrips) {
  Rng rng({2, 18});
  const DensityMatrix rho = random_density(rng, 4);
  const GnsSpace g(rho);
  EXPECT_LE(max_abs(state_of_vector(g.omega()).matrix() - rho.matrix()), 1e-14);
  EXPECT_LE(max_abs(state_of_vector(ConeVector{CMatrix::Identity(3, 3) / std::sqrt(3.0)})
                        .matrix() -
                    CMatrix::Identity(3, 3) / 3.0),
            1e-15);
  EXPECT_LE(max_abs(vector_of_state(rho).mat - g.sqrt_rho()), 1e-14);
}

TEST(VectorStates, InnerProductOracle) {
  Rng rng({2, 19});
  const CMatrix a = random_operator(rng, 4);
  CMatrix m = a * a.adjoint();
  m /= m.norm();
  const ConeVector v{m};
  const DensityMatrix sigma = state_of_vector(v);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix x = random_operator(rng, 4);
    EXPECT_LE(std::abs(sigma.expectation(x) - v.left(x).inner(v)), 1e-12);
  }
}

TEST(RadonNikodym, TrivialAtOmega) {
  Rng rng({2, 20});
  const GnsSpace g(random_density(rng, 3));
  EXPECT_LE(max_abs(commutant_rn(g, g.omega()) - CMatrix::Identity(3, 3)), 1e-12);
  EXPECT_LE(max_abs(algebra_rn(g, g.omega()) - CMatrix::Identity(3, 3)), 1e-12);
  EXPECT_NEAR(majorization_bound(g, g.omega()), 1.0, 1e-12);
}

TEST(RadonNikodym, CommutantClosedForm) {
  const GnsSpace g(diag_state({0.5, 0.5}));
  const ConeVector phi{diag({std::sqrt(0.3), std::sqrt(0.7)}).matrix()};
  const CMatrix b = commutant_rn(g, phi);
  EXPECT_NEAR(b(0, 0).real(), std::sqrt(0.6), 1e-14);
  EXPECT_NEAR(b(1, 1).real(), std::sqrt(1.4), 1e-14);
  EXPECT_NEAR(std::abs(b(0, 1)) + std::abs(b(1, 0)), 0.0, 1e-15);
}

TEST(RadonNikodym, DefiningRelationOfCommutantElement) {
  Rng rng({2, 21});
  const GnsSpace g(random_density(rng, 4));
  const ConeVector phi = vector_of_state(random_density(rng, 4));
  const CMatrix b = commutant_rn(g, phi);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix x = random_operator(rng, 4);
    // a' x Omega = x a' Omega = x Phi.
    EXPECT_LE(max_abs(x * g.sqrt_rho() * b - phi.left(x).mat), 1e-10);
  }
}

TEST(RadonNikodym, ClassicalDerivative) {
  const GnsSpace g(diag_state({0.1, 0.3, 0.6}));
  const double q[3] = {0.5, 0.25, 0.25};
  const double p[3] = {0.1, 0.3, 0.6};
  const ConeVector phi = vector_of_state(diag_state({0.5, 0.25, 0.25}));
  const CMatrix a = algebra_rn(g, phi);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(a(i, i).real(), std::sqrt(q[i] / p[i]), 1e-13);
}

TEST(RadonNikodym, AlgebraElementReproducesState) {
  Rng rng({2, 22});
  const GnsSpace g(random_density(rng, 4));
  const DensityMatrix sigma = random_density(rng, 4);
  const ConeVector phi = vector_of_state(sigma);
  const CMatrix a = algebra_rn(g, phi);
  const CMatrix b = commutant_rn(g, phi);
  // a = J a' J.
  EXPECT_LE(max_abs(a - b.adjoint()), 1e-12);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix x = random_operator(rng, 4);
    EXPECT_LE(std::abs(g.state(a.adjoint() * x * a) - sigma.expectation(x)), 1e-10);
  }
}

TEST(RadonNikodym, MajorizationConstant) {
  const GnsSpace g(diag_state({0.9, 0.1}));
  const ConeVector phi{diag({std::sqrt(0.5), std::sqrt(0.5)}).matrix()};
  EXPECT_NEAR(majorization_bound(g, phi), 5.0, 1e-12);
  const double b = operator_norm(commutant_rn(g, phi));
  EXPECT_NEAR(b * b, 5.0, 1e-10);
  EXPECT_THROW(commutant_rn(g, phi, 4.0), MajorizationError);
  EXPECT_THROW(algebra_rn(g, phi, 4.0), MajorizationError);
}

TEST(RadonNikodym, AlgebraElementNeedsNaturalCone) {
  Rng rng({2, 23});
  const GnsSpace g(random_density(rng, 3));
  ConeVector phi{random_operator(rng, 3)};
  phi.mat /= phi.norm();
  EXPECT_THROW(algebra_rn(g, phi), PreconditionError);
}

TEST(TangentFunctional, RequiresTraceZero) {
  EXPECT_THROW(TangentFunctional(diag({1.0, 0.0})), PreconditionError);
  EXPECT_NO_THROW(TangentFunctional(diag({1.0, -1.0})));
}

TEST(TangentSplit, ZeroFunctional) {
  Rng rng({2, 24});
  const GnsSpace g(random_density(rng, 3));
  const TangentSplit split = tangent_split(g, TangentFunctional::zero(3));
  EXPECT_EQ(split.lambda, 0.0);
  EXPECT_LE(max_abs(split.phi.matrix() - g.rho().matrix()), 0.0);
  EXPECT_LE(max_abs(split.psi.matrix() - g.rho().matrix()), 0.0);
}

TEST(TangentSplit, QubitExample) {
  const GnsSpace g(DensityMatrix::maximally_mixed(2));
  const TangentFunctional chi(diag({0.5, -0.5}));
  const TangentSplit split = tangent_split(g, chi);
  EXPECT_NEAR(split.step, 0.5, 1e-15);
  EXPECT_NEAR(split.phi.matrix()(0, 0).real(), 0.75, 1e-15);
  EXPECT_NEAR(split.phi.matrix()(1, 1).real(), 0.25, 1e-15);
  EXPECT_LE(max_abs(split.lambda * (split.phi.matrix() - split.psi.matrix()) -
                    chi.matrix().matrix()),
            1e-15);
}

TEST(TangentSplit, RandomFunctionals) {
  Rng rng({2, 25});
  for (int trial = 0; trial < 20; ++trial) {
    const GnsSpace g(random_density(rng, 4));
    const TangentFunctional chi(testing::random_traceless(rng, 4));
    const TangentSplit split = tangent_split(g, chi);
    EXPECT_LE(max_abs(split.lambda * (split.phi.matrix() - split.psi.matrix()) -
                      chi.matrix().matrix()),
              1e-14 * std::max(1.0, split.lambda));
    EXPECT_GE(split.phi.min_eigenvalue(), 1e-12);
    EXPECT_GE(split.psi.min_eigenvalue(), 1e-12);
    const CMatrix x = random_operator(rng, 4);
    const Complex recombined =
        split.lambda * (split.phi.expectation(x) - split.psi.expectation(x));
    EXPECT_LE(std::abs(recombined - chi(x)), 1e-13);
  }
}

}  // namespace
}  // namespace modman
