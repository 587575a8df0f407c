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

#include "modman/matfun.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace modman {

namespace {

std::string describe(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionMismatch("HermitianMatrix: expected a non-empty square matrix, got " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw DomainError("HermitianMatrix: non-finite entry");
  }
  correction_ = 0.5 * (m - m.adjoint()).norm();
  if (correction_ > kHermitizationLimit) {
    throw HermiticityError("HermitianMatrix: anti-Hermitian part " +
                           describe(correction_) + " exceeds " +
                           describe(kHermitizationLimit));
  }
  mat_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::identity(int n) {
  return HermitianMatrix(CMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::zero(int n) {
  return HermitianMatrix(CMatrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
  RVector v(static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) v(static_cast<Eigen::Index>(i)) = d[i];
  return diagonal(v);
}

HermitianMatrix HermitianMatrix::diagonal(const RVector& d) {
  return HermitianMatrix(CMatrix(d.cast<Complex>().asDiagonal()));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw DimensionMismatch("HermitianMatrix::operator+");
  return HermitianMatrix(CMatrix(mat_ + o.mat_));
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw DimensionMismatch("HermitianMatrix::operator-");
  return HermitianMatrix(CMatrix(mat_ - o.mat_));
}

HermitianMatrix HermitianMatrix::operator-() const {
  return HermitianMatrix(CMatrix(-mat_));
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
  return HermitianMatrix(CMatrix(s * mat_));
}

// ---------------------------------------------------------------------------
// Spectral data

CMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

SpectralDecomposition spectral_decompose(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericError("spectral_decompose: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(const HermitianMatrix& m)
    : hermitian_(m), spectrum_(spectral_decompose(m)) {
  validate();
}

DensityMatrix::DensityMatrix(HermitianMatrix m, SpectralDecomposition s)
    : hermitian_(std::move(m)), spectrum_(std::move(s)) {
  validate();
}

void DensityMatrix::validate() const {
  const RVector& p = spectrum_.eigenvalues;
  if (p(0) < kFaithfulnessFloor) {
    throw FaithfulnessError("density matrix is not faithful: min eigenvalue " +
                            describe(p(0)) + " < " +
                            describe(kFaithfulnessFloor));
  }
  const double trace_error = std::abs(p.sum() - 1.0);
  if (trace_error > kTraceTolerance) {
    throw NormalizationError("density matrix trace deviates from 1 by " +
                             describe(trace_error));
  }
  const double residual = operator_norm(CMatrix(spectrum_.reconstruct() - matrix()));
  if (residual > 1e-10) {
    throw NumericError("density matrix spectral reconstruction error " +
                       describe(residual));
  }
}

DensityMatrix DensityMatrix::normalized(const HermitianMatrix& m) {
  const double tr = m.trace();
  if (!(tr > 0.0)) {
    throw FaithfulnessError("cannot normalize a matrix with non-positive trace");
  }
  return DensityMatrix(m * (1.0 / tr));
}

DensityMatrix DensityMatrix::from_spectrum(SpectralDecomposition s) {
  HermitianMatrix base(s.reconstruct());
  return DensityMatrix(std::move(base), std::move(s));
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  return DensityMatrix(HermitianMatrix::identity(n) * (1.0 / n));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> p) {
  return DensityMatrix(HermitianMatrix::diagonal(p));
}

HermitianMatrix DensityMatrix::log() const {
  return matrix_function(spectrum_, [](double p) { return std::log(p); });
}

HermitianMatrix DensityMatrix::power(double u) const {
  return matrix_function(spectrum_, [u](double p) { return std::pow(p, u); });
}

Complex DensityMatrix::expectation(const CMatrix& x) const {
  if (x.rows() != dim() || x.cols() != dim()) {
    throw DimensionMismatch("DensityMatrix::expectation");
  }
  // Tr(rho x) without forming the product.
  return (matrix().transpose().array() * x.array()).sum();
}

double DensityMatrix::expectation(const HermitianMatrix& x) const {
  return expectation(x.matrix()).real();
}

// ---------------------------------------------------------------------------
// Functions of matrices

HermitianMatrix expm(const HermitianMatrix& m) {
  return matrix_function(m, [](double x) { return std::exp(x); });
}

HermitianMatrix logm(const HermitianMatrix& m) {
  return matrix_function(m, [](double x) {
    return x > 0.0 ? std::log(x) : std::numeric_limits<double>::quiet_NaN();
  });
}

CMatrix matrix_power_complex(const DensityMatrix& rho, Complex z) {
  return rho.spectrum().apply(
      [z](double p) { return std::exp(z * std::log(p)); });
}

double exp_divided_difference(double x, double y) {
  // e^{(x+y)/2} sinh(d)/d with d = (x-y)/2; no cancellation for x close to y.
  const double mid = 0.5 * (x + y);
  const double d = 0.5 * (x - y);
  double sinhc;
  if (std::abs(d) < 1e-5) {
    const double d2 = d * d;
    sinhc = 1.0 + d2 / 6.0 * (1.0 + d2 / 20.0 * (1.0 + d2 / 42.0));
  } else {
    sinhc = std::sinh(d) / d;
  }
  return std::exp(mid) * sinhc;
}

HermitianMatrix frechet_exp(const SpectralDecomposition& a,
                            const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("frechet_exp");
  const CMatrix& u = a.eigenvectors;
  CMatrix bt = u.adjoint() * b.matrix() * u;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      bt(i, j) *= exp_divided_difference(a.eigenvalues(i), a.eigenvalues(j));
    }
  }
  return HermitianMatrix(CMatrix(u * bt * u.adjoint()));
}

HermitianMatrix frechet_exp(const HermitianMatrix& a, const HermitianMatrix& b) {
  return frechet_exp(spectral_decompose(a), b);
}

bool is_psd(const HermitianMatrix& m, double tol) {
  if (tol < 0.0) throw DomainError("is_psd: negative tolerance");
  return spectral_decompose(m).eigenvalues(0) >= -tol;
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double operator_norm(const HermitianMatrix& m) {
  const RVector& ev = spectral_decompose(m).eigenvalues;
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double log_sum_exp(const RVector& x) {
  const double top = x.maxCoeff();
  return top + std::log((x.array() - top).exp().sum());
}

}  // namespace modman
