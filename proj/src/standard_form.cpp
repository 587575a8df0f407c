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

#include "modman/standard_form.hpp"

#include <algorithm>

namespace modman {

namespace {

void require_dim(const GnsSpace& g, const CMatrix& m, const char* where) {
  if (m.rows() != g.dim() || m.cols() != g.dim()) {
    throw DimensionMismatch(std::string(where) + ": expected " +
                            std::to_string(g.dim()) + "x" +
                            std::to_string(g.dim()) + " matrix");
  }
}

}  // namespace

Complex ConeVector::inner(const ConeVector& other) const {
  return (other.mat.adjoint() * mat).trace();
}

TangentFunctional::TangentFunctional(HermitianMatrix c) {
  const double tr = c.trace();
  if (std::abs(tr) > 1e-12) {
    throw PreconditionError("tangent functional must vanish on the identity; Tr c = " +
                            std::to_string(tr));
  }
  // Remove the admitted residual trace so chi(1) = 0 up to rounding.
  c_ = c - HermitianMatrix::identity(c.dim()) * (tr / c.dim());
}

Complex TangentFunctional::operator()(const CMatrix& x) const {
  return (c_.matrix().transpose().array() * x.array()).sum();
}

GnsSpace::GnsSpace(DensityMatrix rho)
    : rho_(std::move(rho)),
      omega_{rho_.power(0.5).matrix()},
      inv_sqrt_rho_(rho_.power(-0.5).matrix()) {}

Complex GnsSpace::state(const CMatrix& x) const {
  require_dim(*this, x, "GnsSpace::state");
  return omega_.left(x).inner(omega_);
}

GnsSpace build_standard_form(const DensityMatrix& rho) { return GnsSpace(rho); }

ConeVector apply_modular_power(const GnsSpace& g, Complex z, const ConeVector& v) {
  require_dim(g, v.mat, "apply_modular_power");
  return {matrix_power_complex(g.rho(), z) * v.mat *
          matrix_power_complex(g.rho(), -z)};
}

ConeVector modular_conjugate(const ConeVector& v) { return {v.mat.adjoint()}; }

ConeVector apply_tomita(const GnsSpace& g, const ConeVector& v) {
  return modular_conjugate(apply_modular_power(g, 0.5, v));
}

CMatrix modular_flow(const GnsSpace& g, const CMatrix& x, Complex w) {
  require_dim(g, x, "modular_flow");
  const Complex i(0.0, 1.0);
  return matrix_power_complex(g.rho(), -i * w) * x *
         matrix_power_complex(g.rho(), i * w);
}

double kms_boundary_check(const GnsSpace& g, const CMatrix& x, const CMatrix& y,
                          double t) {
  require_dim(g, y, "kms_boundary_check");
  const Complex i(0.0, 1.0);
  const Complex w(t, -1.0);
  // omega(tau_w(x) y) = Tr(rho^{1-iw} x rho^{iw} y), with bounded powers only.
  const Complex upper = (matrix_power_complex(g.rho(), 1.0 - i * w) * x *
                         matrix_power_complex(g.rho(), i * w) * y)
                            .trace();
  const Complex lower = g.state(y * modular_flow(g, x, t));
  return std::abs(upper - lower);
}

bool cone_membership(const GnsSpace& g, const ConeVector& v, double alpha,
                     double tol) {
  if (alpha < 0.0 || alpha > 0.5) {
    throw PreconditionError("cone_membership: alpha must lie in [0, 1/2]");
  }
  if (tol < 0.0) throw PreconditionError("cone_membership: negative tolerance");
  require_dim(g, v.mat, "cone_membership");
  const CMatrix x =
      g.rho().power(-alpha).matrix() * v.mat * g.rho().power(alpha - 0.5).matrix();
  const double scale = std::max(1.0, x.norm());
  if (0.5 * (x - x.adjoint()).norm() > tol * scale) return false;
  const CMatrix herm = 0.5 * (x + x.adjoint());
  return spectral_decompose(HermitianMatrix(herm)).eigenvalues(0) >= -tol * scale;
}

DensityMatrix state_of_vector(const ConeVector& v) {
  return DensityMatrix(HermitianMatrix(CMatrix(v.mat * v.mat.adjoint())));
}

ConeVector vector_of_state(const DensityMatrix& sigma) {
  return {sigma.power(0.5).matrix()};
}

double majorization_bound(const GnsSpace& g, const ConeVector& phi) {
  require_dim(g, phi.mat, "majorization_bound");
  const double norm = operator_norm(CMatrix(g.inv_sqrt_rho() * phi.mat));
  return norm * norm;
}

CMatrix commutant_rn(const GnsSpace& g, const ConeVector& phi, double max_bound) {
  const double bound = majorization_bound(g, phi);
  if (bound > max_bound) {
    throw MajorizationError("vector state is not majorized by " +
                            std::to_string(max_bound) + " omega (needs " +
                            std::to_string(bound) + ")");
  }
  return g.inv_sqrt_rho() * phi.mat;
}

CMatrix algebra_rn(const GnsSpace& g, const ConeVector& phi, double max_bound) {
  if (!cone_membership(g, phi, 0.25, 1e-10)) {
    throw PreconditionError("algebra_rn: vector is not in the natural positive cone");
  }
  const double bound = majorization_bound(g, phi);
  if (bound > max_bound) {
    throw MajorizationError("vector state is not majorized by " +
                            std::to_string(max_bound) + " omega (needs " +
                            std::to_string(bound) + ")");
  }
  return phi.mat * g.inv_sqrt_rho();
}

TangentSplit tangent_split(const GnsSpace& g, const TangentFunctional& chi) {
  if (chi.dim() != g.dim()) throw DimensionMismatch("tangent_split");
  const CMatrix& c = chi.matrix().matrix();
  if (c.norm() == 0.0) {
    return {0.0, 0.0, g.rho(), g.rho()};
  }
  // rho +- s c >= 0  <=>  1 +- s K >= 0 with K = rho^{-1/2} c rho^{-1/2}.
  const HermitianMatrix k(CMatrix(g.inv_sqrt_rho() * c * g.inv_sqrt_rho()));
  const double s_max = 1.0 / operator_norm(k);
  const double s = 0.5 * s_max;
  const HermitianMatrix& rho = g.rho().hermitian();
  return {1.0 / (2.0 * s), s, DensityMatrix(rho + chi.matrix() * s),
          DensityMatrix(rho - chi.matrix() * s)};
}

}  // namespace modman
