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

#include "qentropy/entropy.hpp"

#include <algorithm>
#include <string>

#include "qentropy/haar.hpp"

namespace qent {

const char* unit_name(LogBase base) { return base == LogBase::two ? "bits" : "nats"; }

EntropyValue von_neumann_entropy(const DensityMatrix& rho, LogBase base) {
  return {spectrum_entropy(psd_spectrum(rho.matrix()), 1.0, base), 1.0, base};
}

EntropyValue renyi_entropy(const DensityMatrix& rho, double p, LogBase base) {
  if (!(p >= 0)) throw DomainError("renyi_entropy: order must be >= 0");
  if (p == 1.0) return von_neumann_entropy(rho, base);
  return {spectrum_entropy(psd_spectrum(rho.matrix()), p, base), p, base};
}

double purity(const CMat& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.squaredNorm();
}

EntropyValue map_entropy(const Channel& c, double p, LogBase base) {
  if (!c.is_trace_preserving())
    throw NotTracePreserving("map_entropy: rho(Phi) is a state only for TP channels");
  return renyi_entropy(DensityMatrix(c.jamiolkowski_state()), p, base);
}

double map_purity(const Channel& c) { return purity(c.jamiolkowski_state()); }

namespace {

void require_input_state(const Channel& c, const Vec& phi, const char* where) {
  if (phi.size() != c.dim_in())
    throw DimensionMismatch(std::string(where) + ": state has dimension " +
                            std::to_string(phi.size()) + ", channel input " +
                            std::to_string(c.dim_in()));
}

// Output purity and the Riemannian gradient direction G phi - f phi with
// G = Phi^dagger(Phi(|phi><phi|)).
struct PurityProbe {
  double value;
  Vec tangent;
};

PurityProbe probe(const KrausSet& k, const Vec& phi) {
  CMat sigma = CMat::Zero(k.dim_out(), k.dim_out());
  std::vector<Vec> images;
  images.reserve(k.size());
  for (const auto& op : k) {
    images.push_back(op * phi);
    sigma.noalias() += images.back() * images.back().adjoint();
  }
  Vec g = Vec::Zero(phi.size());
  for (std::size_t i = 0; i < k.size(); ++i) g.noalias() += k[i].adjoint() * (sigma * images[i]);
  const double value = sigma.squaredNorm();
  return {value, g - value * phi};
}

}  // namespace

double output_purity(const Channel& c, const Vec& phi) {
  require_input_state(c, phi, "output_purity");
  return purity(qent::apply(c.kraus(), CMat(phi * phi.adjoint())));
}

double output_purity_kraus_form(const Channel& c, const Vec& phi) {
  require_input_state(c, phi, "output_purity_kraus_form");
  const auto& k = c.kraus();
  double total = 0;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < k.size(); ++j)
      total += std::norm(phi.dot(k[i].adjoint() * (k[j] * phi)));
  return total;
}

MinOutputEntropy min_output_entropy_2(const Channel& c, const MinEntropyConfig& cfg,
                                      LogBase base) {
  if (cfg.restarts < 1) throw DomainError("min_output_entropy_2: restarts must be >= 1");
  const auto& k = c.kraus();
  const Index n = c.dim_in();
  MinOutputEntropy best;
  best.purity = -1;
  for (int r = 0; r < cfg.restarts; ++r) {
    Vec phi = random_pure_state(n, derive_seed(cfg.seed, {std::uint64_t(r)}));
    PurityProbe cur = probe(k, phi);
    double step = 1.0;
    for (int it = 0; it < cfg.max_iterations; ++it) {
      if (cur.tangent.norm() < 1e-14) break;
      const Vec trial_raw = phi + step * cur.tangent;
      const Vec trial = trial_raw / trial_raw.norm();
      const PurityProbe next = probe(k, trial);
      if (next.value > cur.value) {
        const double gain = next.value - cur.value;
        phi = trial;
        cur = next;
        step = std::min(step * 2.0, 1e3);
        if (gain < cfg.tolerance) break;
      } else {
        step *= 0.5;
        if (step < 1e-14) break;
      }
    }
    // Ties keep the lowest restart index.
    if (cur.value > best.purity) {
      best.purity = cur.value;
      best.witness = phi;
      best.best_restart = r;
    }
  }
  const double p = std::min(best.purity, 1.0);
  best.entropy = {-log_in(p, base), 2.0, base};
  return best;
}

DensityMatrix entropy_exchange_state(const Channel& c, const DensityMatrix& rho) {
  if (rho.dim() != c.dim_in())
    throw DimensionMismatch("entropy_exchange_state: state dimension " +
                            std::to_string(rho.dim()) + ", channel input " +
                            std::to_string(c.dim_in()));
  const auto& k = c.kraus();
  const Index m = Index(k.size());
  std::vector<CMat> left;
  left.reserve(k.size());
  for (const auto& op : k) left.push_back(op * rho.matrix());
  CMat sigma(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      // tr(A B^dagger) = sum_ab A_ab conj(B_ab)
      sigma(i, j) = (left[std::size_t(i)].array() * k[std::size_t(j)].conjugate().array()).sum();
  return DensityMatrix(sigma);
}

double depolarizing_output_purity(Index n, double x) {
  const double nn = double(n);
  return (1 - x) * (1 - x) + 2 * x * (1 - x) / nn + x * x / nn;
}

double depolarizing_map_purity(Index n, double x) {
  const double n2 = double(n) * double(n);
  const double top = 1 - x + x / n2;
  return top * top + (n2 - 1) * x * x / (n2 * n2);
}

double depolarizing_min_from_map(Index n, double s_map_2, LogBase base) {
  if (n < 2) throw DomainError("depolarizing_min_from_map: n must be >= 2");
  const double upper = 2 * log_in(double(n), base);
  const double slack = 1e-12 * (1 + upper);
  if (!(s_map_2 >= -slack && s_map_2 <= upper + slack))
    throw DomainError("depolarizing_min_from_map: S_2^map = " + std::to_string(s_map_2) +
                      " outside [0, 2 log n]");
  s_map_2 = std::clamp(s_map_2, 0.0, upper);
  const double nn = double(n);
  return -log_in((1 + nn * exp_in(-s_map_2, base)) / (nn + 1), base);
}

double depolarizing_map_from_min(Index n, double s_min_2, LogBase base) {
  if (n < 2) throw DomainError("depolarizing_map_from_min: n must be >= 2");
  const double upper = log_in(double(n), base);
  const double slack = 1e-12 * (1 + upper);
  if (!(s_min_2 >= -slack && s_min_2 <= upper + slack))
    throw DomainError("depolarizing_map_from_min: S_2^min outside [0, log n]");
  s_min_2 = std::clamp(s_min_2, 0.0, upper);
  const double eps = 1 - exp_in(-s_min_2, base);
  return -log_in(1 - (1 + 1 / double(n)) * eps, base);
}

}  // namespace qent
