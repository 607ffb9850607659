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

// Completely positive maps in Kraus form and their Choi matrices.
//
// Two normalizations are kept apart by name:
//   dynamical_matrix()    J(Phi) = sum_i vec(K_i) vec(K_i)^dagger, trace dim_in for TP maps
//   jamiolkowski_state()  rho(Phi) = J(Phi) / dim_in, a density matrix for TP maps
// J lives on C^dim_out (x) C^dim_in, output factor first, which makes
// J(Phi) = (Phi (x) id)(vec(I) vec(I)^dagger) hold literally.

#ifndef QENTROPY_CHANNEL_HPP
#define QENTROPY_CHANNEL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qentropy/matrixcore.hpp"
#include "qentropy/random.hpp"

namespace qent {

/// Tolerance on ||sum K^dagger K - I||_max for the trace-preserving flag (and
/// the analogous unital one).
inline constexpr double kFlagTolerance = 1e-10;
/// Residual bound used when a bi-stochastic input is a hard precondition.
inline constexpr double kBistochasticPrecondition = 1e-8;

class KrausSet {
 public:
  /// Throws DomainError on an empty list, DimensionMismatch on ragged shapes.
  explicit KrausSet(std::vector<CMat> operators);

  Index dim_in() const { return ops_.front().cols(); }
  Index dim_out() const { return ops_.front().rows(); }
  std::size_t size() const { return ops_.size(); }
  const std::vector<CMat>& operators() const { return ops_; }
  const CMat& operator[](std::size_t i) const { return ops_[i]; }
  auto begin() const { return ops_.begin(); }
  auto end() const { return ops_.end(); }

  /// sum_i K_i^dagger K_i (identity iff trace preserving).
  CMat completeness() const;
  /// sum_i K_i K_i^dagger = Phi(I) (identity iff unital).
  CMat image_of_identity() const;

  double trace_preservation_residual() const;
  /// Infinite for non-square maps.
  double unitality_residual() const;

 private:
  std::vector<CMat> ops_;
};

struct ChannelFlags {
  bool cp = true;
  bool tp = false;
  bool unital = false;
  bool bistochastic() const { return tp && unital; }
};

/// Immutable CP map. The Choi matrix is computed once at construction.
class Channel {
 public:
  explicit Channel(KrausSet kraus);

  const KrausSet& kraus() const { return kraus_; }
  Index dim_in() const { return kraus_.dim_in(); }
  Index dim_out() const { return kraus_.dim_out(); }
  bool is_square() const { return dim_in() == dim_out(); }

  const CMat& dynamical_matrix() const { return choi_; }
  CMat jamiolkowski_state() const { return choi_ / double(dim_in()); }

  const ChannelFlags& flags() const { return flags_; }
  bool is_trace_preserving() const { return flags_.tp; }
  bool is_unital() const { return flags_.unital; }
  bool is_bistochastic() const { return flags_.bistochastic(); }
  double trace_preservation_residual() const { return tp_residual_; }
  double unitality_residual() const { return unital_residual_; }

  /// Set for members of the depolarizing family; enables closed-form paths.
  const std::optional<double>& depolarizing_parameter() const { return depolarizing_x_; }
  Channel with_depolarizing_parameter(double x) const;

  /// Seed the channel was sampled from, if any (carried into serialization).
  const std::optional<Seed>& seed() const { return seed_; }
  Channel with_seed(Seed seed) const;

 private:
  KrausSet kraus_;
  CMat choi_;
  ChannelFlags flags_;
  double tp_residual_ = 0;
  double unital_residual_ = 0;
  std::optional<double> depolarizing_x_;
  std::optional<Seed> seed_;
};

/// Hermitian, PSD, unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates (|tr - 1| <= 1e-10, lambda_min >= -1e-10) and symmetrizes;
  /// throws InvalidState otherwise.
  explicit DensityMatrix(const CMat& m);

  static DensityMatrix pure(const Vec& psi);
  static DensityMatrix maximally_mixed(Index n);

  const CMat& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }

 private:
  CMat m_;
};

/// J = sum_i vec(K_i) vec(K_i)^dagger.
CMat choi_from_kraus(const KrausSet& k);

/// Kraus operators sqrt(lambda_i) unvec(v_i) from the eigendecomposition of J.
/// Throws NotCompletelyPositive when lambda_min < -1e-9.
KrausSet kraus_from_choi(const CMat& choi, Index dim_in, Index dim_out);

/// sum_i K_i X K_i^dagger for an arbitrary operator X.
CMat apply(const KrausSet& k, const CMat& x);
CMat apply(const Channel& c, const CMat& x);
/// Requires a trace-preserving channel.
DensityMatrix apply(const Channel& c, const DensityMatrix& rho);

/// (Phi (x) id_other)(X) with Phi acting on the first tensor factor.
CMat apply_first_factor(const KrausSet& k, const CMat& x, Index other_dim);
/// (id_other (x) Phi)(X) with Phi acting on the second tensor factor.
CMat apply_second_factor(const KrausSet& k, const CMat& x, Index other_dim);

/// vec(I_n) vec(I_n)^dagger.
CMat max_entangled_projector(Index n);

/// Phi o Psi, i.e. Psi is applied first. Kraus set {M_i N_j}.
Channel compose(const Channel& phi, const Channel& psi);
/// Kraus set {M_i (x) N_j}.
Channel tensor_channels(const Channel& phi, const Channel& psi);

/// Kraus set {K_i^T}; defined for any shape.
KrausSet transposed_kraus(const KrausSet& k);
/// Phi^T with Kraus set {K_i^T}. Square channels only.
Channel transpose_channel(const Channel& c);
/// Phi^dagger with Kraus set {K_i^dagger}. Square channels only.
Channel adjoint_channel(const Channel& c);

Channel identity_channel(Index n);
Channel unitary_channel(const CMat& u);
/// sum_i w_i Ad_{U_i}; weights must be non-negative.
Channel unitary_mixture(const std::vector<double>& weights, const std::vector<CMat>& unitaries);

/// Lambda_{n,x}(rho) = (1 - x) rho + x tr(rho) I / n with x in [0, 1].
/// Kraus set {sqrt(1-x) I} u {sqrt(x/n) |i><j|}, zero operators omitted.
Channel depolarizing(Index n, double x);

/// Clock-and-shift operator X^a Z^b on C^n.
CMat weyl_operator(Index n, Index a, Index b);
/// Depolarizing channel written as a mixture of the n^2 Weyl unitaries.
void depolarizing_as_unitary_mixture(Index n, double x, std::vector<double>& weights,
                                     std::vector<CMat>& unitaries);

/// Haar-random Stinespring isometry sliced into k Kraus operators.
Channel random_cptp(Index n, Index k, Seed seed);
/// Dirichlet-weighted mixture of k Haar unitaries.
Channel random_bistochastic(Index n, Index k, Seed seed);

}  // namespace qent

#endif  // QENTROPY_CHANNEL_HPP
