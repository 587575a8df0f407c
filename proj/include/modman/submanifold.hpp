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

#ifndef MODMAN_SUBMANIFOLD_HPP
#define MODMAN_SUBMANIFOLD_HPP

#include <span>
#include <vector>

#include "modman/arcs.hpp"
#include "modman/matfun.hpp"
#include "modman/standard_form.hpp"

namespace modman {

/// Natural (exponential) coordinates of a point of a submanifold.
struct ThetaPoint {
  RVector coords;
};

/// Expectation coordinates eta_i = Tr(omega_theta h_i).
struct EtaPoint {
  RVector coords;
};

/// Finite-dimensional exponential family
///   omega_theta = exp(log rho + theta^i h_i - zeta(theta))
/// through a reference state rho.
///
/// Generators are centered on construction (Tr(rho h_i) = 0) and must be
/// linearly independent: their Kubo-Mori Gram matrix at rho needs a smallest
/// eigenvalue above 1e-10. With `orthonormalize` they are additionally
/// Gram-Schmidt orthonormalized in that scalar product.
class SubmanifoldModel {
 public:
  SubmanifoldModel(DensityMatrix rho, std::vector<HermitianMatrix> generators,
                   bool orthonormalize = false);

  int dim() const { return rho_.dim(); }
  int size() const { return static_cast<int>(generators_.size()); }
  const DensityMatrix& rho() const { return rho_; }
  const std::vector<HermitianMatrix>& generators() const { return generators_; }
  const HermitianMatrix& log_rho() const { return log_rho_; }

  /// theta^i h_i.
  HermitianMatrix combination(const ThetaPoint& theta) const;
  /// Kubo-Mori Gram matrix of the generators at rho.
  Eigen::MatrixXd gram() const;

 private:
  DensityMatrix rho_;
  std::vector<HermitianMatrix> generators_;
  HermitianMatrix log_rho_;
};

DensityMatrix state_at(const SubmanifoldModel& model, const ThetaPoint& theta);

EtaPoint dual_coords(const SubmanifoldModel& model, const ThetaPoint& theta);

/// Phi(theta) = D(omega||omega_theta) + theta^i omega(h_i).
double potential_theta(const SubmanifoldModel& model, const ThetaPoint& theta);

/// zeta(theta) = log Tr exp(log rho + theta^i h_i); equal to Phi(theta) for
/// centered generators.
double log_partition_theta(const SubmanifoldModel& model, const ThetaPoint& theta);

/// g_ij = (h_i, h_j) in the Kubo-Mori product at omega_theta.
Eigen::MatrixXd metric_at(const SubmanifoldModel& model, const ThetaPoint& theta);

struct SolveOptions {
  double tolerance = 1e-12;   // on ||eta(theta) - eta||_inf
  double accept = 1e-10;      // residual still accepted if progress stalls
  int max_iterations = 200;
  double armijo = 1e-4;
  int max_halvings = 60;
  double theta_limit = 1e3;   // ||theta||_inf beyond this means eta is unattainable
};

/// Inverts the dual coordinates by damped Newton iteration on the convex gap
/// Phi(theta) - theta . eta, starting at theta = 0. Throws NotAttainedError
/// when the iteration fails, which signals eta outside the open range of
/// the dual coordinates.
ThetaPoint solve_theta(const SubmanifoldModel& model, const EtaPoint& eta,
                       const SolveOptions& options = {});

/// State at (1 - t) theta_a + t theta_b: a straight line in natural
/// coordinates.
DensityMatrix e_geodesic(const SubmanifoldModel& model, const ThetaPoint& theta_a,
                         const ThetaPoint& theta_b, double t);

/// Mixture (1 - t) sigma_a + t sigma_b, t in [0, 1].
DensityMatrix m_geodesic(const DensityMatrix& sigma_a, const DensityMatrix& sigma_b,
                         double t);

/// |D(psi||g_t) - D(psi||g_s) - D(g_s||g_t)| along the arc g_u = omega_{u theta}.
/// psi must share the energy of g_s: PreconditionError if
/// |Tr(psi h) - Tr(g_s h)| > 1e-8 for h = theta^i h_i.
double pythagorean_residual(const SubmanifoldModel& model, const DensityMatrix& psi,
                            const ThetaPoint& theta, double s, double t);

/// Spread (max - min) over the grid of the Kubo-Mori product at gamma_t of a
/// fixed tangent functional chi with the arc velocity. Vanishes exactly when
/// the velocity is transported by the dual of the mixture connection.
double connection_duality_variation(const ExponentialArc& arc,
                                    const TangentFunctional& chi,
                                    std::span<const double> ts);

}  // namespace modman

#endif  // MODMAN_SUBMANIFOLD_HPP
