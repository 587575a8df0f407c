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

#ifndef MODMAN_ARCS_HPP
#define MODMAN_ARCS_HPP

#include "modman/matfun.hpp"
#include "modman/standard_form.hpp"

namespace modman {

struct NormalizedExponential {
  DensityMatrix state;    // exp(k - zeta)
  double log_partition;   // zeta = log Tr exp(k)
};

/// Gibbs-type normalization of exp(k). The partition function is computed
/// by log-sum-exp on the spectrum of k. Throws OverflowError when the
/// spectral radius of k exceeds kExpOverflowGuard, and FaithfulnessError when
/// the normalized state falls below the faithfulness floor.
NormalizedExponential normalized_exp(const HermitianMatrix& k);

/// Exponential arc t -> gamma_t = exp(log rho + t h - zeta(t)) through rho
/// with generator h and energy function psi -> Tr(psi h).
///
/// Any real t is accepted; the arc is analytic in t, so nothing is lost by
/// leaving the unit interval.
class ExponentialArc {
 public:
  ExponentialArc(DensityMatrix rho, HermitianMatrix h);

  int dim() const { return rho_.dim(); }
  const DensityMatrix& rho() const { return rho_; }
  const HermitianMatrix& generator() const { return h_; }
  const HermitianMatrix& log_rho() const { return log_rho_; }

  /// log rho + t h.
  HermitianMatrix exponent(double t) const;
  /// Tr(psi h).
  double energy(const DensityMatrix& psi) const { return psi.expectation(h_); }

 private:
  DensityMatrix rho_;
  HermitianMatrix h_;
  HermitianMatrix log_rho_;
};

DensityMatrix arc_point(const ExponentialArc& arc, double t);

/// zeta(t) = log Tr exp(log rho + t h). zeta(0) = 0 exactly.
double log_partition(const ExponentialArc& arc, double t);

/// Residual of the defining identity
///   D(psi||g_t) = D(psi||g_s) + D(g_s||g_t) + (t - s)(h(g_s) - h(psi))
/// with the Umegaki divergence.
double arc_residual(const ExponentialArc& arc, const DensityMatrix& psi, double s,
                    double t);

/// Phi(t) = D(gamma_0||gamma_t) + t h(gamma_0), computed from the divergence.
double potential(const ExponentialArc& arc, double t);

/// Phi^*(alpha) = sup_{0 <= t <= 1} (alpha t - Phi(t)), maximized by golden
/// section search (the objective is strictly concave).
double legendre_dual(const ExponentialArc& arc, double alpha);

/// h(gamma_t) = Tr(gamma_t h); strictly increasing unless h is a multiple of 1.
double energy_along(const ExponentialArc& arc, double t);

/// Velocity of the arc, d/dt gamma_t, as the traceless matrix
/// int_0^1 gamma_t^u (h - gamma_t(h)) gamma_t^{1-u} du.
TangentFunctional arc_derivative(const ExponentialArc& arc, double t);

/// Generator of the arc from rho to sigma, log sigma - log rho shifted so
/// that Tr(rho h) = 0.
HermitianMatrix generator_between(const DensityMatrix& rho,
                                  const DensityMatrix& sigma);

/// The sub-arc eps -> gamma_{(1-eps)s + eps t}, as an arc through gamma_s
/// with generator (t - s) h.
ExponentialArc subarc(const ExponentialArc& arc, double s, double t);

/// Operator-norm distance between the endpoint reached by the arc with
/// generator h followed by the arc with generator k, and the endpoint of the
/// single arc with generator h + k.
double compose_arcs(const DensityMatrix& rho, const HermitianMatrix& h,
                    const HermitianMatrix& k);

}  // namespace modman

#endif  // MODMAN_ARCS_HPP
