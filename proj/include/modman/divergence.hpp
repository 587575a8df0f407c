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

#ifndef MODMAN_DIVERGENCE_HPP
#define MODMAN_DIVERGENCE_HPP

#include "modman/matfun.hpp"
#include "modman/standard_form.hpp"

namespace modman {

/// Relative modular operator Delta_{Phi,Psi} for Phi = vec(sigma^{1/2}) and
/// Psi = vec(tau^{1/2}).
///
/// Acts as vec(M) -> vec(sigma M tau^{-1}). With sigma = sum s_i |u_i><u_i|
/// and tau = sum t_j |v_j><v_j| its eigenvectors are vec(|u_i><v_j|) with
/// eigenvalues s_i / t_j, so every function of it is applied entrywise in
/// the (sigma-basis, tau-basis) frame.
class RelativeModularOperator {
 public:
  RelativeModularOperator(DensityMatrix sigma, DensityMatrix tau);

  int dim() const { return sigma_.dim(); }
  const DensityMatrix& sigma() const { return sigma_; }
  const DensityMatrix& tau() const { return tau_; }
  ConeVector phi() const { return vector_of_state(sigma_); }
  ConeVector psi() const { return vector_of_state(tau_); }

  /// Grid of eigenvalues, entry (i, j) = s_i / t_j.
  Eigen::MatrixXd eigenvalues() const;
  /// vec(|u_i><v_j|), eigenvector for eigenvalue s_i / t_j.
  ConeVector eigenvector(int i, int j) const;

  ConeVector apply(const ConeVector& v) const;
  /// Delta^z for complex z.
  ConeVector apply_power(Complex z, const ConeVector& v) const;
  ConeVector apply_log(const ConeVector& v) const;
  /// S_{Phi,Psi} = J Delta^{1/2}, which maps x Psi to x^* Phi.
  ConeVector apply_tomita(const ConeVector& v) const;

 private:
  template <typename F>
  ConeVector apply_spectral(F&& f, const ConeVector& v) const;

  DensityMatrix sigma_;
  DensityMatrix tau_;
};

RelativeModularOperator relative_modular(const DensityMatrix& sigma,
                                         const DensityMatrix& tau);

/// ((log Delta_{Phi,Psi}) Phi, Phi) evaluated in the double eigenbasis:
/// sum_ij s_i |<u_i|v_j>|^2 (ln s_i - ln t_j). Nats.
double araki_divergence(const DensityMatrix& sigma, const DensityMatrix& tau);

/// Tr sigma (log sigma - log tau). Nats.
double umegaki_divergence(const DensityMatrix& sigma, const DensityMatrix& tau);

/// -((log Delta_{Psi,Phi}) Phi, Phi), using the reversed relative modular
/// operator. Nats.
double araki_dual_form(const DensityMatrix& sigma, const DensityMatrix& tau);

}  // namespace modman

#endif  // MODMAN_DIVERGENCE_HPP
