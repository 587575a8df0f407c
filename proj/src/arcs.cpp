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

#include "modman/arcs.hpp"

#include <algorithm>
#include <array>

#include "modman/divergence.hpp"

namespace modman {

NormalizedExponential normalized_exp(const HermitianMatrix& k) {
  SpectralDecomposition s = spectral_decompose(k);
  const double radius =
      std::max(std::abs(s.eigenvalues(0)), std::abs(s.eigenvalues(s.dim() - 1)));
  if (radius > kExpOverflowGuard) {
    throw OverflowError("exponent spectral radius " + std::to_string(radius) +
                        " exceeds the overflow guard");
  }
  const double zeta = log_sum_exp(s.eigenvalues);
  s.eigenvalues = (s.eigenvalues.array() - zeta).exp().matrix();
  return {DensityMatrix::from_spectrum(std::move(s)), zeta};
}

ExponentialArc::ExponentialArc(DensityMatrix rho, HermitianMatrix h)
    : rho_(std::move(rho)), h_(std::move(h)), log_rho_(rho_.log()) {
  if (h_.dim() != rho_.dim()) {
    throw DimensionMismatch("ExponentialArc: generator and base point differ in size");
  }
}

HermitianMatrix ExponentialArc::exponent(double t) const {
  return log_rho_ + h_ * t;
}

DensityMatrix arc_point(const ExponentialArc& arc, double t) {
  if (t == 0.0) return arc.rho();
  return normalized_exp(arc.exponent(t)).state;
}

double log_partition(const ExponentialArc& arc, double t) {
  if (t == 0.0) return 0.0;
  const HermitianMatrix k = arc.exponent(t);
  const RVector& ev = spectral_decompose(k).eigenvalues;
  if (std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))) > kExpOverflowGuard) {
    throw OverflowError("log_partition: exponent exceeds the overflow guard");
  }
  return log_sum_exp(ev);
}

double arc_residual(const ExponentialArc& arc, const DensityMatrix& psi, double s,
                    double t) {
  const DensityMatrix gs = arc_point(arc, s);
  const DensityMatrix gt = arc_point(arc, t);
  const double lhs = umegaki_divergence(psi, gt);
  const double rhs = umegaki_divergence(psi, gs) + umegaki_divergence(gs, gt) +
                     (t - s) * (arc.energy(gs) - arc.energy(psi));
  return std::abs(lhs - rhs);
}

double potential(const ExponentialArc& arc, double t) {
  return umegaki_divergence(arc.rho(), arc_point(arc, t)) + t * arc.energy(arc.rho());
}

double legendre_dual(const ExponentialArc& arc, double alpha) {
  auto objective = [&](double t) { return alpha * t - potential(arc, t); };

  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0;
  double hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  // The maximizer may sit on the boundary of [0, 1].
  const std::array<double, 4> candidates = {f1, f2, objective(0.0), objective(1.0)};
  return *std::max_element(candidates.begin(), candidates.end());
}

double energy_along(const ExponentialArc& arc, double t) {
  return arc.energy(arc_point(arc, t));
}

TangentFunctional arc_derivative(const ExponentialArc& arc, double t) {
  const DensityMatrix g = arc_point(arc, t);
  const SpectralDecomposition log_g{g.eigenvalues().array().log().matrix(),
                                    g.eigenvectors()};
  const HermitianMatrix centered =
      arc.generator() - HermitianMatrix::identity(arc.dim()) * arc.energy(g);
  return TangentFunctional(frechet_exp(log_g, centered));
}

HermitianMatrix generator_between(const DensityMatrix& rho,
                                  const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("generator_between");
  const HermitianMatrix h = sigma.log() - rho.log();
  const HermitianMatrix centered =
      h - HermitianMatrix::identity(rho.dim()) * rho.expectation(h);
  if (operator_norm(centered) <= 1e-12 &&
      operator_norm(CMatrix(rho.matrix() - sigma.matrix())) > 1e-10) {
    throw ConstantGeneratorError("generator_between: distinct states with a constant generator");
  }
  return centered;
}

ExponentialArc subarc(const ExponentialArc& arc, double s, double t) {
  return ExponentialArc(arc_point(arc, s), arc.generator() * (t - s));
}

double compose_arcs(const DensityMatrix& rho, const HermitianMatrix& h,
                    const HermitianMatrix& k) {
  const DensityMatrix phi = arc_point(ExponentialArc(rho, h), 1.0);
  const DensityMatrix two_step = arc_point(ExponentialArc(phi, k), 1.0);
  const DensityMatrix one_step = arc_point(ExponentialArc(rho, h + k), 1.0);
  return operator_norm(CMatrix(two_step.matrix() - one_step.matrix()));
}

}  // namespace modman
