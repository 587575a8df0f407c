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

#ifndef MODMAN_STANDARD_FORM_HPP
#define MODMAN_STANDARD_FORM_HPP

#include <limits>

#include "modman/matfun.hpp"

// Standard form of the n x n matrix algebra in the GNS representation of a
// faithful state rho.
//
// The Hilbert space C^{n^2} is identified with n x n matrices through vec;
// the algebra acts by left multiplication, (A (x) 1) vec(M) = vec(A M), and
// its commutant by right multiplication, (1 (x) B^T) vec(M) = vec(M B).
// No operator on C^{n^2} is ever materialized: every action below is a pair
// of n x n matrix products.

namespace modman {

/// Vector vec(M) of the GNS space, stored as the matrix M.
///
/// Vectors that represent states lie in the natural positive cone: M is
/// positive semidefinite with unit Hilbert-Schmidt norm.
struct ConeVector {
  CMatrix mat;

  int dim() const { return static_cast<int>(mat.rows()); }
  /// (this, other) = Tr(other^dagger this); linear in the first argument.
  Complex inner(const ConeVector& other) const;
  double norm() const { return mat.norm(); }

  /// (a (x) 1) vec(M) = vec(a M).
  ConeVector left(const CMatrix& a) const { return {a * mat}; }
  /// (1 (x) b^T) vec(M) = vec(M b).
  ConeVector right(const CMatrix& b) const { return {mat * b}; }

  ConeVector operator-(const ConeVector& o) const { return {mat - o.mat}; }
};

/// Hermitian functional x -> Tr(c x) with Tr c = 0; an element of the
/// tangent space at any point of the state manifold.
class TangentFunctional {
 public:
  /// Throws PreconditionError if |Tr c| > 1e-12.
  explicit TangentFunctional(HermitianMatrix c);

  static TangentFunctional zero(int n) {
    return TangentFunctional(HermitianMatrix::zero(n));
  }

  int dim() const { return c_.dim(); }
  const HermitianMatrix& matrix() const { return c_; }
  Complex operator()(const CMatrix& x) const;

 private:
  HermitianMatrix c_;
};

/// GNS representation of the reference state omega(x) = Tr(rho x) with
/// cyclic and separating vector Omega = vec(rho^{1/2}). Inverse temperature
/// is fixed to 1.
class GnsSpace {
 public:
  explicit GnsSpace(DensityMatrix rho);

  int dim() const { return rho_.dim(); }
  const DensityMatrix& rho() const { return rho_; }
  const ConeVector& omega() const { return omega_; }
  const CMatrix& sqrt_rho() const { return omega_.mat; }
  const CMatrix& inv_sqrt_rho() const { return inv_sqrt_rho_; }

  /// omega(x) = (x Omega, Omega).
  Complex state(const CMatrix& x) const;

 private:
  DensityMatrix rho_;
  ConeVector omega_;
  CMatrix inv_sqrt_rho_;
};

GnsSpace build_standard_form(const DensityMatrix& rho);

/// Delta^z vec(M) = vec(rho^z M rho^{-z}).
ConeVector apply_modular_power(const GnsSpace& g, Complex z, const ConeVector& v);

/// J vec(M) = vec(M^dagger). Conjugate-linear involution.
ConeVector modular_conjugate(const ConeVector& v);

/// S = J Delta^{1/2}; satisfies S x Omega = x^* Omega.
ConeVector apply_tomita(const GnsSpace& g, const ConeVector& v);

/// tau_w(x) = rho^{-iw} x rho^{iw}, analytic in complex w.
CMatrix modular_flow(const GnsSpace& g, const CMatrix& x, Complex w);

/// |omega(tau_{t-i}(x) y) - omega(y tau_t(x))|: the KMS boundary relation
/// at inverse temperature 1, with the left side obtained by analytic
/// continuation of the modular flow.
double kms_boundary_check(const GnsSpace& g, const CMatrix& x, const CMatrix& y,
                          double t);

/// Membership of vec(M) in the cone V^alpha, alpha in [0, 1/2]: holds iff
/// rho^{-alpha} M rho^{alpha-1/2} is Hermitian positive semidefinite. The
/// tolerance is relative to max(1, ||rho^{-alpha} M rho^{alpha-1/2}||).
bool cone_membership(const GnsSpace& g, const ConeVector& v, double alpha,
                     double tol);

/// Density matrix M M^dagger of the vector state x -> (x vec(M), vec(M)).
DensityMatrix state_of_vector(const ConeVector& v);
/// The unique natural-cone representative vec(sigma^{1/2}).
ConeVector vector_of_state(const DensityMatrix& sigma);

/// Smallest lambda with omega_Phi(x^* x) <= lambda omega(x^* x) for every x,
/// i.e. ||rho^{-1/2} M_Phi||^2 in operator norm.
double majorization_bound(const GnsSpace& g, const ConeVector& phi);

/// Matrix B of the commutant element a' = 1 (x) B^T with a' Omega = Phi,
/// B = rho^{-1/2} M_Phi. Throws MajorizationError when the majorization
/// constant exceeds max_bound.
CMatrix commutant_rn(const GnsSpace& g, const ConeVector& phi,
                     double max_bound = std::numeric_limits<double>::infinity());

/// Element a = M_Phi rho^{-1/2} of the algebra with Phi = a Omega and
/// omega_Phi(x) = omega(a^* x a). Phi must lie in the natural cone
/// (PreconditionError otherwise); MajorizationError as for commutant_rn.
CMatrix algebra_rn(const GnsSpace& g, const ConeVector& phi,
                   double max_bound = std::numeric_limits<double>::infinity());

struct TangentSplit {
  double lambda;      // chi = lambda (phi - psi)
  double step;        // s in phi = rho + s c, psi = rho - s c
  DensityMatrix phi;
  DensityMatrix psi;
};

/// Writes chi as lambda (phi - psi) with (phi + psi)/2 = rho and both phi, psi
/// faithful. The step is half the largest s keeping rho +- s c positive
/// semidefinite. chi = 0 gives (0, rho, rho).
TangentSplit tangent_split(const GnsSpace& g, const TangentFunctional& chi);

}  // namespace modman

#endif  // MODMAN_STANDARD_FORM_HPP
