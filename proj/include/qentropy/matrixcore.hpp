// Copyright 2026 The qentropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra used by every other module.
//
// All routines are templated on the Eigen scalar so that the same code runs
// in double and in long double (the latter is used when re-checking
// near-degenerate results). Vectorization is row-major throughout:
//
//   vec(A)[i * cols + j] = A(i, j),   so vec(|i><j|) = |i> (x) |j>
//
// and vec(I_n) = sum_i |ii> is the unnormalized maximally entangled vector.

#ifndef QENTROPY_MATRIXCORE_HPP
#define QENTROPY_MATRIXCORE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "qentropy/errors.hpp"

namespace qent {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RealOf = typename Eigen::NumTraits<Scalar>::Real;

using Complex = std::complex<double>;
using CMat = Matrix<Complex>;
using Vec = Vector<Complex>;
using RVec = Eigen::VectorXd;
using Index = Eigen::Index;

/// Relative tolerance for accepting a matrix as Hermitian before symmetrizing.
inline constexpr double kHermitianTolerance = 1e-10;
/// Eigenvalues below this fraction of the largest are treated as exact zeros.
inline constexpr double kSpectrumClampRatio = 1e-12;

enum class Subsystem { A, B };

/// Largest entry modulus; 0 for an empty matrix.
template <typename Derived>
RealOf<typename Derived::Scalar> max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  return m.cwiseAbs().maxCoeff();
}

/// max |M(i,j) - conj(M(j,i))|.
template <typename Derived>
RealOf<typename Derived::Scalar> hermitian_residual(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<RealOf<typename Derived::Scalar>>::infinity();
  return max_abs(m - m.adjoint());
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double rel_tol = kHermitianTolerance) {
  using Real = RealOf<typename Derived::Scalar>;
  return hermitian_residual(m) <= Real(rel_tol) * (Real(1) + max_abs(m));
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = 1e-10) {
  using Scalar = typename Derived::Scalar;
  if (u.rows() != u.cols()) return false;
  const Matrix<Scalar> id = Matrix<Scalar>::Identity(u.rows(), u.cols());
  return max_abs(u.adjoint() * u - id) <= RealOf<Scalar>(tol);
}

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
template <typename DA, typename DB>
Matrix<typename DA::Scalar> tensor(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DB::Scalar>, "tensor: scalar types differ");
  Matrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Row-major stacking of a matrix into a column vector.
template <typename Derived>
Vector<typename Derived::Scalar> vec(const Eigen::MatrixBase<Derived>& a) {
  Vector<typename Derived::Scalar> v(a.size());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

template <typename Derived>
Matrix<typename Derived::Scalar> unvec(const Eigen::MatrixBase<Derived>& v, Index rows, Index cols) {
  if (v.cols() != 1 || rows < 1 || cols < 1 || v.rows() != rows * cols)
    throw DimensionMismatch("unvec: vector of length " + std::to_string(v.size()) +
                            " cannot be reshaped to " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  Matrix<typename Derived::Scalar> a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  return a;
}

/// Swap operator C^n (x) C^m -> C^m (x) C^n, S|mu>|nu> = |nu>|mu>.
template <typename Scalar = Complex>
Matrix<Scalar> swap_operator(Index n, Index m) {
  if (n < 1 || m < 1) throw DomainError("swap_operator: dimensions must be positive");
  Matrix<Scalar> s = Matrix<Scalar>::Zero(n * m, n * m);
  for (Index mu = 0; mu < n; ++mu)
    for (Index nu = 0; nu < m; ++nu) s(nu * n + mu, mu * m + nu) = Scalar(1);
  return s;
}

template <typename Scalar = Complex>
Matrix<Scalar> swap_operator(Index n) {
  return swap_operator<Scalar>(n, n);
}

/// Permutation P with P * vec(A (x) B) == vec(A) (x) vec(B) for A: C^mA -> C^nA
/// and B: C^mB -> C^nB.
///
/// vec(A (x) B) is indexed by (a, b, c, d) with row (a, b) and column (c, d);
/// vec(A) (x) vec(B) by (a, c, b, d). P exchanges the two middle indices.
template <typename Scalar = Complex>
Matrix<Scalar> bipartite_vec_permutation(Index nA, Index nB, Index mA, Index mB) {
  if (nA < 1 || nB < 1 || mA < 1 || mB < 1)
    throw DomainError("bipartite_vec_permutation: dimensions must be positive");
  const Index size = nA * nB * mA * mB;
  Matrix<Scalar> p = Matrix<Scalar>::Zero(size, size);
  for (Index a = 0; a < nA; ++a)
    for (Index b = 0; b < nB; ++b)
      for (Index c = 0; c < mA; ++c)
        for (Index d = 0; d < mB; ++d) {
          const Index from = ((a * nB + b) * mA + c) * mB + d;
          const Index to = ((a * mA + c) * nB + b) * mB + d;
          p(to, from) = Scalar(1);
        }
  return p;
}

template <typename Scalar>
struct HermitianEig {
  Vector<RealOf<Scalar>> values;  // descending
  Matrix<Scalar> vectors;         // column k belongs to values(k)
};

namespace detail {

template <typename Derived>
Matrix<typename Derived::Scalar> checked_symmetrize(const Eigen::MatrixBase<Derived>& m,
                                                    const char* where) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw DimensionMismatch(std::string(where) + ": matrix is " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
  if (!is_hermitian(m))
    throw NotHermitian(std::string(where) + ": Hermitian residual " +
                       std::to_string(static_cast<double>(hermitian_residual(m))));
  return (m + m.adjoint()) / RealOf<Scalar>(2);
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix, eigenvalues in descending order.
/// The input is symmetrized after the Hermiticity check.
template <typename Derived>
HermitianEig<typename Derived::Scalar> hermitian_eig(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(
      detail::checked_symmetrize(m, "hermitian_eig"));
  HermitianEig<Scalar> out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

/// Descending eigenvalues only.
template <typename Derived>
Vector<RealOf<typename Derived::Scalar>> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(
      detail::checked_symmetrize(m, "hermitian_eigenvalues"), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

/// Spectrum of a PSD matrix with roundoff-level eigenvalues set to zero.
template <typename Derived>
Vector<RealOf<typename Derived::Scalar>> psd_spectrum(const Eigen::MatrixBase<Derived>& m,
                                                      bool clamp = true) {
  using Real = RealOf<typename Derived::Scalar>;
  Vector<Real> values = hermitian_eigenvalues(m);
  if (!clamp || values.size() == 0) return values;
  const Real cutoff = Real(kSpectrumClampRatio) * std::max(values(0), Real(0));
  for (Index i = 0; i < values.size(); ++i)
    if (values(i) < cutoff) values(i) = 0;
  return values;
}

/// Schatten p-norm (sum_i s_i^p)^(1/p) over singular values, p >= 1.
/// p = infinity gives the operator norm.
template <typename Derived>
RealOf<typename Derived::Scalar> schatten_norm(const Eigen::MatrixBase<Derived>& m, double p) {
  using Scalar = typename Derived::Scalar;
  using Real = RealOf<Scalar>;
  if (!(p >= 1)) throw DomainError("schatten_norm: p must be >= 1, got " + std::to_string(p));
  Vector<Real> s;
  if (m.rows() == m.cols() && is_hermitian(m)) {
    s = hermitian_eigenvalues(m).cwiseAbs();
  } else {
    Eigen::JacobiSVD<Matrix<Scalar>> svd(m);
    s = svd.singularValues();
  }
  if (std::isinf(p)) return s.size() ? s.maxCoeff() : Real(0);
  Real total = 0;
  for (Index i = 0; i < s.size(); ++i) total += std::pow(s(i), Real(p));
  return std::pow(total, Real(1) / Real(p));
}

/// Partial trace of an operator on C^dimA (x) C^dimB, keeping the named factor.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& m, Index dim_a,
                                               Index dim_b, Subsystem keep) {
  using Scalar = typename Derived::Scalar;
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b)
    throw DimensionMismatch("partial_trace: " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " is not (" + std::to_string(dim_a) +
                            "*" + std::to_string(dim_b) + ")^2");
  if (keep == Subsystem::A) {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(dim_a, dim_a);
    for (Index i = 0; i < dim_a; ++i)
      for (Index j = 0; j < dim_a; ++j)
        out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    return out;
  }
  Matrix<Scalar> out = Matrix<Scalar>::Zero(dim_b, dim_b);
  for (Index i = 0; i < dim_a; ++i) out += m.block(i * dim_b, i * dim_b, dim_b, dim_b);
  return out;
}

/// exp(i H) for Hermitian H via its spectral decomposition; exactly unitary up
/// to the accuracy of the eigenvectors.
template <typename Derived>
Matrix<typename Derived::Scalar> unitary_exp(const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  const auto eig = hermitian_eig(h);
  Vector<Scalar> phases(eig.values.size());
  for (Index i = 0; i < phases.size(); ++i)
    phases(i) = std::polar(RealOf<Scalar>(1), eig.values(i));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

/// Hermitian n x n matrix from n^2 real coordinates: the diagonal first, then
/// (re, im) of each strictly upper entry in row-major order.
template <typename Scalar = Complex, typename Derived>
Matrix<Scalar> hermitian_from_coordinates(const Eigen::MatrixBase<Derived>& x, Index n) {
  using Real = RealOf<Scalar>;
  if (x.size() != n * n) throw DimensionMismatch("hermitian_from_coordinates: need n^2 values");
  Matrix<Scalar> h = Matrix<Scalar>::Zero(n, n);
  Index k = 0;
  for (Index i = 0; i < n; ++i) h(i, i) = Scalar(Real(x(k++)));
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Scalar z(Real(x(k)), Real(x(k + 1)));
      k += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  return h;
}

template <typename NewScalar, typename Derived>
Matrix<NewScalar> cast_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Real = RealOf<NewScalar>;
  Matrix<NewScalar> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      out(i, j) = NewScalar(Real(std::real(m(i, j))), Real(std::imag(m(i, j))));
  return out;
}

}  // namespace qent

#endif  // QENTROPY_MATRIXCORE_HPP
