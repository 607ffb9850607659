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

#include "qentropy/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qentropy/haar.hpp"

namespace qent {

namespace {

std::string shape(const CMat& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const Channel& c, const char* what) {
  if (!c.is_square())
    throw NonSquareChannel(std::string(what) + ": channel maps dimension " +
                           std::to_string(c.dim_in()) + " to " + std::to_string(c.dim_out()));
}

}  // namespace

KrausSet::KrausSet(std::vector<CMat> operators) : ops_(std::move(operators)) {
  if (ops_.empty()) throw DomainError("KrausSet: at least one operator is required");
  const CMat& first = ops_.front();
  if (first.rows() < 1 || first.cols() < 1) throw DimensionMismatch("KrausSet: empty operator");
  for (std::size_t i = 1; i < ops_.size(); ++i)
    if (ops_[i].rows() != first.rows() || ops_[i].cols() != first.cols())
      throw DimensionMismatch("KrausSet: operator " + std::to_string(i) + " is " +
                              shape(ops_[i]) + ", expected " + shape(first));
}

CMat KrausSet::completeness() const {
  CMat sum = CMat::Zero(dim_in(), dim_in());
  for (const auto& k : ops_) sum.noalias() += k.adjoint() * k;
  return sum;
}

CMat KrausSet::image_of_identity() const {
  CMat sum = CMat::Zero(dim_out(), dim_out());
  for (const auto& k : ops_) sum.noalias() += k * k.adjoint();
  return sum;
}

double KrausSet::trace_preservation_residual() const {
  return max_abs(completeness() - CMat::Identity(dim_in(), dim_in()));
}

double KrausSet::unitality_residual() const {
  if (dim_in() != dim_out()) return std::numeric_limits<double>::infinity();
  return max_abs(image_of_identity() - CMat::Identity(dim_out(), dim_out()));
}

Channel::Channel(KrausSet kraus) : kraus_(std::move(kraus)) {
  choi_ = choi_from_kraus(kraus_);
  tp_residual_ = kraus_.trace_preservation_residual();
  unital_residual_ = kraus_.unitality_residual();
  flags_.tp = tp_residual_ <= kFlagTolerance;
  flags_.unital = unital_residual_ <= kFlagTolerance;
}

Channel Channel::with_depolarizing_parameter(double x) const {
  Channel c = *this;
  c.depolarizing_x_ = x;
  return c;
}

Channel Channel::with_seed(Seed seed) const {
  Channel c = *this;
  c.seed_ = seed;
  return c;
}

DensityMatrix::DensityMatrix(const CMat& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw InvalidState("DensityMatrix: matrix is " + shape(m));
  if (!is_hermitian(m)) throw InvalidState("DensityMatrix: not Hermitian");
  m_ = (m + m.adjoint()) / 2.0;
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > 1e-10)
    throw InvalidState("DensityMatrix: trace " + std::to_string(tr) + " != 1");
  const double lmin = hermitian_eigenvalues(m_).minCoeff();
  if (lmin < -1e-10)
    throw InvalidState("DensityMatrix: negative eigenvalue " + std::to_string(lmin));
}

DensityMatrix DensityMatrix::pure(const Vec& psi) {
  const double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > 1e-12)
    throw InvalidState("DensityMatrix::pure: state vector has norm " + std::to_string(nrm));
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Index n) {
  return DensityMatrix(CMat::Identity(n, n) / double(n));
}

CMat choi_from_kraus(const KrausSet& k) {
  const Index d = k.dim_in() * k.dim_out();
  CMat j = CMat::Zero(d, d);
  for (const auto& op : k) {
    const Vec v = vec(op);
    j.noalias() += v * v.adjoint();
  }
  return j;
}

KrausSet kraus_from_choi(const CMat& choi, Index dim_in, Index dim_out) {
  if (dim_in < 1 || dim_out < 1 || choi.rows() != dim_in * dim_out ||
      choi.cols() != dim_in * dim_out)
    throw DimensionMismatch("kraus_from_choi: Choi matrix is " + shape(choi) + ", expected " +
                            std::to_string(dim_in * dim_out) + " square");
  const auto eig = hermitian_eig(choi);
  const Index last = eig.values.size() - 1;
  if (eig.values(last) < -1e-9)
    throw NotCompletelyPositive("kraus_from_choi: eigenvalue " +
                                std::to_string(eig.values(last)));
  const double cutoff = kSpectrumClampRatio * std::max(eig.values(0), 0.0);
  std::vector<CMat> ops;
  for (Index i = 0; i <= last; ++i) {
    if (eig.values(i) <= cutoff) break;
    ops.push_back(std::sqrt(eig.values(i)) * unvec(eig.vectors.col(i), dim_out, dim_in));
  }
  if (ops.empty()) throw DomainError("kraus_from_choi: Choi matrix is zero");
  return KrausSet(std::move(ops));
}

CMat apply(const KrausSet& k, const CMat& x) {
  if (x.rows() != k.dim_in() || x.cols() != k.dim_in())
    throw DimensionMismatch("apply: operator is " + shape(x) + ", channel input dimension " +
                            std::to_string(k.dim_in()));
  CMat out = CMat::Zero(k.dim_out(), k.dim_out());
  for (const auto& op : k) out.noalias() += op * x * op.adjoint();
  return out;
}

CMat apply(const Channel& c, const CMat& x) { return apply(c.kraus(), x); }

DensityMatrix apply(const Channel& c, const DensityMatrix& rho) {
  if (!c.is_trace_preserving())
    throw NotTracePreserving("apply: channel is not trace preserving");
  return DensityMatrix(apply(c.kraus(), rho.matrix()));
}

CMat apply_first_factor(const KrausSet& k, const CMat& x, Index other_dim) {
  const Index d = k.dim_in() * other_dim;
  if (x.rows() != d || x.cols() != d)
    throw DimensionMismatch("apply_first_factor: operator is " + shape(x));
  const CMat id = CMat::Identity(other_dim, other_dim);
  const Index out_d = k.dim_out() * other_dim;
  CMat out = CMat::Zero(out_d, out_d);
  for (const auto& op : k) {
    const CMat big = tensor(op, id);
    out.noalias() += big * x * big.adjoint();
  }
  return out;
}

CMat apply_second_factor(const KrausSet& k, const CMat& x, Index other_dim) {
  const Index d = k.dim_in() * other_dim;
  if (x.rows() != d || x.cols() != d)
    throw DimensionMismatch("apply_second_factor: operator is " + shape(x));
  const CMat id = CMat::Identity(other_dim, other_dim);
  const Index out_d = k.dim_out() * other_dim;
  CMat out = CMat::Zero(out_d, out_d);
  for (const auto& op : k) {
    const CMat big = tensor(id, op);
    out.noalias() += big * x * big.adjoint();
  }
  return out;
}

CMat max_entangled_projector(Index n) {
  const Vec v = vec(CMat::Identity(n, n));
  return v * v.adjoint();
}

Channel compose(const Channel& phi, const Channel& psi) {
  if (psi.dim_out() != phi.dim_in())
    throw DimensionMismatch("compose: inner channel outputs dimension " +
                            std::to_string(psi.dim_out()) + ", outer expects " +
                            std::to_string(phi.dim_in()));
  std::vector<CMat> ops;
  ops.reserve(phi.kraus().size() * psi.kraus().size());
  for (const auto& m : phi.kraus())
    for (const auto& n : psi.kraus()) ops.push_back(m * n);
  return Channel(KrausSet(std::move(ops)));
}

Channel tensor_channels(const Channel& phi, const Channel& psi) {
  std::vector<CMat> ops;
  ops.reserve(phi.kraus().size() * psi.kraus().size());
  for (const auto& m : phi.kraus())
    for (const auto& n : psi.kraus()) ops.push_back(tensor(m, n));
  return Channel(KrausSet(std::move(ops)));
}

KrausSet transposed_kraus(const KrausSet& k) {
  std::vector<CMat> ops;
  ops.reserve(k.size());
  for (const auto& op : k) ops.push_back(op.transpose());
  return KrausSet(std::move(ops));
}

Channel transpose_channel(const Channel& c) {
  require_square(c, "transpose_channel");
  Channel t(transposed_kraus(c.kraus()));
  if (c.depolarizing_parameter()) return t.with_depolarizing_parameter(*c.depolarizing_parameter());
  return t;
}

Channel adjoint_channel(const Channel& c) {
  require_square(c, "adjoint_channel");
  std::vector<CMat> ops;
  ops.reserve(c.kraus().size());
  for (const auto& op : c.kraus()) ops.push_back(op.adjoint());
  Channel a{KrausSet(std::move(ops))};
  if (c.depolarizing_parameter()) return a.with_depolarizing_parameter(*c.depolarizing_parameter());
  return a;
}

Channel identity_channel(Index n) {
  if (n < 1) throw DomainError("identity_channel: n must be >= 1");
  return Channel(KrausSet({CMat::Identity(n, n)}));
}

Channel unitary_channel(const CMat& u) {
  if (!is_unitary(u)) throw DomainError("unitary_channel: matrix is not unitary");
  return Channel(KrausSet({u}));
}

Channel unitary_mixture(const std::vector<double>& weights, const std::vector<CMat>& unitaries) {
  if (weights.size() != unitaries.size() || weights.empty())
    throw DimensionMismatch("unitary_mixture: need one weight per unitary");
  std::vector<CMat> ops;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0)) throw DomainError("unitary_mixture: negative weight");
    if (weights[i] == 0) continue;
    ops.push_back(std::sqrt(weights[i]) * unitaries[i]);
  }
  if (ops.empty()) throw DomainError("unitary_mixture: all weights are zero");
  return Channel(KrausSet(std::move(ops)));
}

Channel depolarizing(Index n, double x) {
  if (n < 2) throw DomainError("depolarizing: n must be >= 2");
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError("depolarizing: x must lie in [0, 1], got " + std::to_string(x));
  std::vector<CMat> ops;
  if (x < 1.0) ops.push_back(std::sqrt(1.0 - x) * CMat::Identity(n, n));
  if (x > 0.0) {
    const double amp = std::sqrt(x / double(n));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        CMat e = CMat::Zero(n, n);
        e(i, j) = amp;
        ops.push_back(std::move(e));
      }
  }
  return Channel(KrausSet(std::move(ops))).with_depolarizing_parameter(x);
}

CMat weyl_operator(Index n, Index a, Index b) {
  CMat w = CMat::Zero(n, n);
  const double two_pi_over_n = 2.0 * std::numbers::pi / double(n);
  // X^a Z^b |j> = omega^{b j} |j + a>.
  for (Index j = 0; j < n; ++j)
    w((j + a) % n, j) = std::polar(1.0, two_pi_over_n * double((b * j) % n));
  return w;
}

void depolarizing_as_unitary_mixture(Index n, double x, std::vector<double>& weights,
                                     std::vector<CMat>& unitaries) {
  if (n < 2 || !(x >= 0.0 && x <= 1.0)) throw DomainError("depolarizing_as_unitary_mixture");
  weights.clear();
  unitaries.clear();
  const double nn = double(n) * double(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      weights.push_back(a == 0 && b == 0 ? 1.0 - x + x / nn : x / nn);
      unitaries.push_back(weyl_operator(n, a, b));
    }
}

Channel random_cptp(Index n, Index k, Seed seed) {
  if (n < 2 || k < 1 || k > n * n)
    throw DomainError("random_cptp: need n >= 2 and 1 <= k <= n^2");
  Rng rng = make_rng(seed);
  const CMat u = haar_unitary(n * k, rng);
  std::vector<CMat> ops;
  ops.reserve(std::size_t(k));
  for (Index i = 0; i < k; ++i) ops.push_back(u.block(i * n, 0, n, n));
  return Channel(KrausSet(std::move(ops))).with_seed(seed);
}

Channel random_bistochastic(Index n, Index k, Seed seed) {
  if (n < 2 || k < 1) throw DomainError("random_bistochastic: need n >= 2 and k >= 1");
  Rng rng = make_rng(seed);
  std::vector<CMat> unitaries;
  for (Index i = 0; i < k; ++i) unitaries.push_back(haar_unitary(n, rng));
  const auto weights = dirichlet_uniform(std::size_t(k), rng);
  return unitary_mixture(weights, unitaries).with_seed(seed);
}

}  // namespace qent
