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

#ifndef MODMAN_MATFUN_HPP
#define MODMAN_MATFUN_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "modman/errors.hpp"

namespace modman {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Largest anti-Hermitian part (Frobenius norm) silently removed on
/// construction of a HermitianMatrix.
inline constexpr double kHermitizationLimit = 1e-8;
/// Smallest admissible eigenvalue of a density matrix.
inline constexpr double kFaithfulnessFloor = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
/// Bound on the spectral radius of an exponent before exp() is refused.
inline constexpr double kExpOverflowGuard = 700.0;

/// Square complex matrix equal to its own adjoint.
///
/// The constructor replaces the input by (m + m^dagger)/2 and remembers the
/// size of the removed part; inputs whose anti-Hermitian part exceeds
/// kHermitizationLimit are rejected with HermiticityError.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const CMatrix& m);

  static HermitianMatrix identity(int n);
  static HermitianMatrix zero(int n);
  static HermitianMatrix diagonal(std::span<const double> d);
  static HermitianMatrix diagonal(const RVector& d);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const CMatrix& matrix() const { return mat_; }
  Complex operator()(int i, int j) const { return mat_(i, j); }
  /// Frobenius norm of the anti-Hermitian part dropped on construction.
  double hermitization_correction() const { return correction_; }

  double trace() const { return mat_.trace().real(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator-() const;
  HermitianMatrix operator*(double s) const;
  friend HermitianMatrix operator*(double s, const HermitianMatrix& m) {
    return m * s;
  }

 private:
  CMatrix mat_;
  double correction_ = 0.0;
};

struct SpectralDecomposition {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // unitary, columns are eigenvectors

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  /// U diag(f(lambda)) U^dagger for an arbitrary complex-valued f.
  template <typename F>
    requires std::invocable<F, double>
  CMatrix apply(F&& f) const {
    const int n = dim();
    Eigen::VectorXcd d(n);
    for (int i = 0; i < n; ++i) d(i) = Complex(f(eigenvalues(i)));
    return eigenvectors * d.asDiagonal() * eigenvectors.adjoint();
  }
  CMatrix reconstruct() const;
};

/// Faithful state: positive-definite Hermitian matrix of unit trace.
///
/// The spectral decomposition is computed once and cached; everything that
/// needs rho^u, log rho or the eigenbasis of rho reads it from here.
class DensityMatrix {
 public:
  explicit DensityMatrix(const HermitianMatrix& m);

  /// Rescales a positive-definite matrix to unit trace.
  static DensityMatrix normalized(const HermitianMatrix& m);
  /// Builds U diag(p) U^dagger from already-known spectral data.
  static DensityMatrix from_spectrum(SpectralDecomposition s);
  static DensityMatrix maximally_mixed(int n);
  static DensityMatrix diagonal(std::span<const double> p);

  int dim() const { return hermitian_.dim(); }
  const HermitianMatrix& hermitian() const { return hermitian_; }
  const CMatrix& matrix() const { return hermitian_.matrix(); }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  const RVector& eigenvalues() const { return spectrum_.eigenvalues; }
  const CMatrix& eigenvectors() const { return spectrum_.eigenvectors; }
  double min_eigenvalue() const { return spectrum_.eigenvalues(0); }

  HermitianMatrix log() const;
  HermitianMatrix power(double u) const;

  /// Tr(rho x).
  Complex expectation(const CMatrix& x) const;
  double expectation(const HermitianMatrix& x) const;

 private:
  DensityMatrix(HermitianMatrix m, SpectralDecomposition s);
  void validate() const;

  HermitianMatrix hermitian_;
  SpectralDecomposition spectrum_;
};

SpectralDecomposition spectral_decompose(const HermitianMatrix& m);

/// U diag(f(lambda)) U^dagger. Throws DomainError when f is not finite on
/// some eigenvalue.
template <typename F>
  requires std::invocable<F, double>
HermitianMatrix matrix_function(const SpectralDecomposition& s, F&& f) {
  RVector d(s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    d(i) = f(s.eigenvalues(i));
    if (!std::isfinite(d(i))) {
      throw DomainError("matrix_function: f is not finite at eigenvalue " +
                        std::to_string(s.eigenvalues(i)));
    }
  }
  return HermitianMatrix(s.eigenvectors * d.asDiagonal() *
                         s.eigenvectors.adjoint());
}

template <typename F>
  requires std::invocable<F, double>
HermitianMatrix matrix_function(const HermitianMatrix& m, F&& f) {
  return matrix_function(spectral_decompose(m), std::forward<F>(f));
}

HermitianMatrix expm(const HermitianMatrix& m);
HermitianMatrix logm(const HermitianMatrix& m);

/// rho^z = U diag(exp(z ln p)) U^dagger.
CMatrix matrix_power_complex(const DensityMatrix& rho, Complex z);

/// First divided difference of exp: (e^x - e^y)/(x - y), e^x on the diagonal.
double exp_divided_difference(double x, double y);

/// Directional derivative d/dt exp(a + t b) at t = 0, evaluated with the
/// Daleckii-Krein formula in the eigenbasis of a.
HermitianMatrix frechet_exp(const HermitianMatrix& a, const HermitianMatrix& b);
/// Same, with the spectral decomposition of a already available.
HermitianMatrix frechet_exp(const SpectralDecomposition& a,
                            const HermitianMatrix& b);

bool is_psd(const HermitianMatrix& m, double tol);

/// Largest singular value.
double operator_norm(const CMatrix& m);
/// Spectral radius of a Hermitian matrix, max |lambda|.
double operator_norm(const HermitianMatrix& m);

/// log sum_i exp(x_i) without overflow.
double log_sum_exp(const RVector& x);

}  // namespace modman

#endif  // MODMAN_MATFUN_HPP
