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

// Test-only reference computations. Everything here is written from index
// definitions and deliberately avoids the library's own helpers.

#ifndef QENTROPY_TESTS_ORACLES_HPP
#define QENTROPY_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline double max_diff(const M& a, const M& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  return (a - b).cwiseAbs().maxCoeff();
}

/// (A (x) B)[(i*p + k), (j*q + l)] = A[i][j] B[k][l].
inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline M ket_bra(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  M e = M::Zero(n, n);
  e(i, j) = 1;
  return e;
}

/// Index-sum partial trace on C^da (x) C^db.
inline M trace_out_b(const M& m, Eigen::Index da, Eigen::Index db) {
  M out = M::Zero(da, da);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < da; ++j)
      for (Eigen::Index k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
  return out;
}

inline M trace_out_a(const M& m, Eigen::Index da, Eigen::Index db) {
  M out = M::Zero(db, db);
  for (Eigen::Index k = 0; k < db; ++k)
    for (Eigen::Index l = 0; l < db; ++l)
      for (Eigen::Index i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
  return out;
}

inline M apply(const std::vector<M>& kraus, const M& x) {
  M out = M::Zero(kraus.front().rows(), kraus.front().rows());
  for (const auto& k : kraus) out += k * x * k.adjoint();
  return out;
}

/// sum_ij Phi(|i><j|) (x) |i><j|, the action of Phi (x) id on sum_ij |ii><jj|.
inline M choi_by_action(const std::vector<M>& kraus) {
  const Eigen::Index n = kraus.front().cols();
  const Eigen::Index m = kraus.front().rows();
  M out = M::Zero(m * n, m * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out += kron(oracle::apply(kraus, ket_bra(n, i, j)), ket_bra(n, i, j));
  return out;
}

/// Eigenvalues through the general complex eigensolver, real parts sorted
/// descending.
inline std::vector<double> eigenvalues(const M& m) {
  Eigen::ComplexEigenSolver<M> solver(m, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    out.push_back(solver.eigenvalues()(i).real());
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline double shannon_bits(const std::vector<double>& p) {
  double s = 0;
  for (double x : p)
    if (x > 1e-14) s -= x * std::log2(x);
  return s;
}

inline double renyi_bits(const std::vector<double>& p, double order) {
  double total = 0;
  for (double x : p)
    if (x > 1e-14) total += std::pow(x, order);
  return std::log2(total) / (1 - order);
}

inline double entropy_bits(const M& rho) { return shannon_bits(eigenvalues(rho)); }

inline M gaussian(Eigen::Index r, Eigen::Index c, std::mt19937_64& g) {
  std::normal_distribution<double> n(0.0, 1.0);
  M out(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) out(i, j) = C(n(g), n(g));
  return out;
}

inline M hermitian(Eigen::Index n, std::mt19937_64& g) {
  const M a = gaussian(n, n, g);
  return (a + a.adjoint()) / 2.0;
}

inline M density(Eigen::Index n, std::mt19937_64& g) {
  const M a = gaussian(n, n, g);
  const M r = a * a.adjoint();
  return r / r.trace().real();
}

/// Gram-Schmidt on a Gaussian matrix.
inline M unitary(Eigen::Index n, std::mt19937_64& g) {
  M a = gaussian(n, n, g);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < j; ++k) a.col(j) -= a.col(k).dot(a.col(j)) * a.col(k);
    a.col(j).normalize();
  }
  return a;
}

/// Two-sample Kolmogorov-Smirnov statistic and asymptotic p-value.
inline double ks_p_value(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(double(i) / double(a.size()) - double(j) / double(b.size())));
  }
  const double ne = double(a.size()) * double(b.size()) / double(a.size() + b.size());
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  double p = 0;
  for (int k = 1; k <= 100; ++k)
    p += 2 * ((k % 2) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace oracle

#endif  // QENTROPY_TESTS_ORACLES_HPP
