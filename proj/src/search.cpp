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

#include "qentropy/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "qentropy/entropy.hpp"
#include "qentropy/haar.hpp"
#include "qentropy/parallel.hpp"

namespace qent {

namespace {

constexpr double kDepolarizingDrawRate = 0.1;
constexpr double kPureStateRate = 0.1;
constexpr double kMaximallyMixedRate = 0.1;
constexpr double kFeatureTolerance = 1e-6;
constexpr double kProbeStep = 1e-2;
constexpr double kSimplexStep = 5e-2;
constexpr double kMinGain = 1e-12;

template <typename Scalar>
RealOf<Scalar> entropy_bits(const Matrix<Scalar>& m, bool clamp = true) {
  return spectrum_entropy(psd_spectrum(m, clamp), 1.0, LogBase::two);
}

template <typename Scalar>
Matrix<Scalar> apply_mixture(const std::vector<RealOf<Scalar>>& w,
                             const std::vector<Matrix<Scalar>>& u, const Matrix<Scalar>& rho) {
  Matrix<Scalar> out = Matrix<Scalar>::Zero(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < w.size(); ++i) out += w[i] * (u[i] * rho * u[i].adjoint());
  return out;
}

void require_unitary_mixture(const MixtureParams& m, Index n, const char* where) {
  if (m.weights.empty() || m.weights.size() != m.unitaries.size())
    throw DimensionMismatch(std::string(where) + ": one weight per unitary required");
  double total = 0;
  for (std::size_t i = 0; i < m.weights.size(); ++i) {
    if (!(m.weights[i] >= 0)) throw NotBistochastic(std::string(where) + ": negative weight");
    if (m.unitaries[i].rows() != n || m.unitaries[i].cols() != n)
      throw DimensionMismatch(std::string(where) + ": unitary has the wrong shape");
    total += m.weights[i];
  }
  if (std::abs(total - 1.0) > kBistochasticPrecondition)
    throw NotBistochastic(std::string(where) + ": weights do not sum to 1");
}

void require_bistochastic(const Channel& c, Index n, const char* where) {
  if (!c.is_square() || c.dim_in() != n)
    throw DimensionMismatch(std::string(where) + ": channel does not act on the state space");
  if (c.trace_preservation_residual() > kBistochasticPrecondition ||
      c.unitality_residual() > kBistochasticPrecondition)
    throw NotBistochastic(std::string(where) + ": channel is not bi-stochastic");
}

CMat normalized_state(const CMat& factor) {
  const CMat rho = factor * factor.adjoint();
  const double tr = rho.trace().real();
  if (!(tr > 0)) throw InvalidState("state factor is zero");
  return rho / tr;
}

MixtureParams draw_mixture(Index n, Index k, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  if (uniform(rng) < kDepolarizingDrawRate) return depolarizing_mixture(n, uniform(rng));
  MixtureParams m;
  m.weights = dirichlet_uniform(std::size_t(k), rng);
  for (Index i = 0; i < k; ++i) m.unitaries.push_back(haar_unitary(n, rng));
  return m;
}

}  // namespace

const char* to_string(Optimizer o) {
  switch (o) {
    case Optimizer::random_only: return "random-only";
    case Optimizer::gradient: return "finite-difference-gradient";
    case Optimizer::simplex: return "simplex";
    case Optimizer::automatic: return "auto";
  }
  return "auto";
}

Optimizer parse_optimizer(const std::string& name) {
  if (name == "random-only") return Optimizer::random_only;
  if (name == "gradient" || name == "finite-difference-gradient") return Optimizer::gradient;
  if (name == "simplex") return Optimizer::simplex;
  if (name == "auto") return Optimizer::automatic;
  throw DomainError("unknown optimizer '" + name + "'");
}

void SearchConfig::validate() const {
  if (n < 2) throw DomainError("search: n must be >= 2");
  if (k_phi < 1 || k_psi < 1) throw DomainError("search: mixture sizes must be >= 1");
  if (trials < 1) throw DomainError("search: trials must be >= 1");
  if (max_iters < 1) throw DomainError("search: max_iters must be >= 1");
  if (!(slack_tolerance > 0)) throw DomainError("search: slack_tolerance must be > 0");
}

Optimizer SearchConfig::resolved_optimizer() const {
  if (optimizer != Optimizer::automatic) return optimizer;
  return std::max(k_phi, k_psi) <= 3 ? Optimizer::simplex : Optimizer::gradient;
}

Channel MixtureParams::channel() const {
  Channel c = unitary_mixture(weights, unitaries);
  return depolarizing_x ? c.with_depolarizing_parameter(*depolarizing_x) : c;
}

MixtureParams identity_mixture(Index n) { return {{1.0}, {CMat::Identity(n, n)}, std::nullopt}; }

MixtureParams depolarizing_mixture(Index n, double x) {
  MixtureParams m;
  depolarizing_as_unitary_mixture(n, x, m.weights, m.unitaries);
  m.depolarizing_x = x;
  return m;
}

CMat SlackRecord::state() const { return normalized_state(state_factor); }

SlackEntropies conjecture_entropies(const Channel& phi, const Channel& psi,
                                    const DensityMatrix& rho) {
  require_bistochastic(phi, rho.dim(), "conjecture_slack");
  require_bistochastic(psi, rho.dim(), "conjecture_slack");
  const CMat& r = rho.matrix();
  const CMat psi_r = qent::apply(psi, r);
  return {entropy_bits(r), entropy_bits(CMat(qent::apply(phi, r))), entropy_bits(psi_r),
          entropy_bits(CMat(qent::apply(phi, psi_r)))};
}

double conjecture_slack(const Channel& phi, const Channel& psi, const DensityMatrix& rho) {
  return conjecture_entropies(phi, psi, rho).slack();
}

SlackEntropies mixture_entropies(const MixtureParams& phi, const MixtureParams& psi,
                                 const CMat& rho) {
  const CMat psi_r = apply_mixture(psi.weights, psi.unitaries, rho);
  return {entropy_bits(rho), entropy_bits(apply_mixture(phi.weights, phi.unitaries, rho)),
          entropy_bits(psi_r), entropy_bits(apply_mixture(phi.weights, phi.unitaries, psi_r))};
}

SlackEntropies recompute(const SlackRecord& r) {
  const Index n = r.state_factor.rows();
  require_unitary_mixture(r.phi, n, "recompute");
  require_unitary_mixture(r.psi, n, "recompute");
  return mixture_entropies(r.phi, r.psi, r.state());
}

SlackRecord make_record(Seed seed, MixtureParams phi, MixtureParams psi, CMat state_factor) {
  SlackRecord r;
  r.seed = seed;
  r.phi = std::move(phi);
  r.psi = std::move(psi);
  r.state_factor = std::move(state_factor);
  r.entropies = recompute(r);
  r.slack = r.entropies.slack();
  return r;
}

double extended_precision_slack(const SlackRecord& r) {
  using LComplex = std::complex<long double>;
  using LMat = Matrix<LComplex>;
  auto cast_mixture = [](const MixtureParams& m, std::vector<long double>& w,
                         std::vector<LMat>& u) {
    for (std::size_t i = 0; i < m.weights.size(); ++i) {
      w.push_back(m.weights[i]);
      u.push_back(cast_matrix<LComplex>(m.unitaries[i]));
    }
  };
  std::vector<long double> wp, wq;
  std::vector<LMat> up, uq;
  cast_mixture(r.phi, wp, up);
  cast_mixture(r.psi, wq, uq);
  const LMat l = cast_matrix<LComplex>(r.state_factor);
  LMat rho = l * l.adjoint();
  rho /= rho.trace().real();
  auto sym = [](const LMat& m) -> LMat { return (m + m.adjoint()) / 2.0L; };
  rho = sym(rho);
  const LMat psi_r = sym(apply_mixture(wq, uq, rho));
  const long double s = entropy_bits(sym(apply_mixture(wp, up, rho)), false) +
                        entropy_bits(psi_r, false) - entropy_bits(rho, false) -
                        entropy_bits(sym(apply_mixture(wp, up, psi_r)), false);
  return double(s);
}

SlackRecord random_trial(const SearchConfig& cfg, std::int64_t trial) {
  const Seed seed = derive_seed(cfg.master_seed, {std::uint64_t(trial)});
  Rng rng = make_rng(seed);
  MixtureParams phi = draw_mixture(cfg.n, cfg.k_phi, rng);
  MixtureParams psi = draw_mixture(cfg.n, cfg.k_psi, rng);
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  CMat factor;
  std::string kind;
  if (u < kPureStateRate) {
    factor = CMat::Zero(cfg.n, cfg.n);
    factor.col(0) = random_pure_state(cfg.n, rng);
    kind = "pure";
  } else if (u < kPureStateRate + kMaximallyMixedRate) {
    factor = CMat::Identity(cfg.n, cfg.n);
    kind = "maximally-mixed";
  } else {
    factor = complex_gaussian(cfg.n, cfg.n, rng);
    kind = "hilbert-schmidt";
  }
  SlackRecord r = make_record(seed, std::move(phi), std::move(psi), std::move(factor));
  r.state_kind = kind;
  r.converged = true;
  if (r.slack < kCounterexampleThreshold) {
    r.counterexample_candidate = true;
    r.verified_slack = extended_precision_slack(r);
    r.verified_counterexample = *r.verified_slack < kCounterexampleThreshold;
  }
  return r;
}

std::vector<SlackRecord> random_search(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<SlackRecord> records(static_cast<std::size_t>(cfg.trials));
  parallel_for(records.size(), cfg.jobs,
               [&](std::size_t i) { records[i] = random_trial(cfg, std::int64_t(i)); });
  std::sort(records.begin(), records.end(), [](const SlackRecord& a, const SlackRecord& b) {
    return std::tie(a.slack, a.seed) < std::tie(b.slack, b.seed);
  });
  return records;
}

// ---------------------------------------------------------------------------
// Local descent

SlackObjective::SlackObjective(SlackRecord start) : start_(std::move(start)) {
  const Index n = start_.state_factor.rows();
  require_unitary_mixture(start_.phi, n, "SlackObjective");
  require_unitary_mixture(start_.psi, n, "SlackObjective");
  for (double w : start_.phi.weights) log_phi_.push_back(std::log(std::max(w, 1e-300)));
  for (double w : start_.psi.weights) log_psi_.push_back(std::log(std::max(w, 1e-300)));
  const std::size_t nn = std::size_t(n * n);
  dim_ = start_.phi.weights.size() * (1 + nn) + start_.psi.weights.size() * (1 + nn) + 2 * nn;
}

MixtureParams SlackObjective::mixture_at(const MixtureParams& base, const Eigen::VectorXd& x,
                                         std::size_t& offset,
                                         const std::vector<double>& log_weights) const {
  const std::size_t k = base.weights.size();
  const Index n = base.dim();
  const std::size_t begin = offset;
  MixtureParams m;
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) top = std::max(top, log_weights[i] + x(Index(offset + i)));
  double total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    m.weights.push_back(std::exp(log_weights[i] + x(Index(offset + i)) - top));
    total += m.weights.back();
  }
  for (double& w : m.weights) w /= total;
  offset += k;
  for (std::size_t i = 0; i < k; ++i) {
    const auto coords = x.segment(Index(offset), n * n);
    offset += std::size_t(n * n);
    if (coords.isZero(0.0))
      m.unitaries.push_back(base.unitaries[i]);
    else
      m.unitaries.push_back(base.unitaries[i] * unitary_exp(hermitian_from_coordinates(coords, n)));
  }
  if (x.segment(Index(begin), Index(offset - begin)).isZero(0.0)) {
    m.weights = base.weights;
    m.depolarizing_x = base.depolarizing_x;
  }
  return m;
}

CMat SlackObjective::factor_at(const Eigen::VectorXd& x, std::size_t offset) const {
  const Index n = start_.state_factor.rows();
  CMat l = start_.state_factor;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      l(i, j) += Complex(x(Index(offset)), x(Index(offset + 1)));
      offset += 2;
    }
  return l;
}

SlackRecord SlackObjective::record_at(const Eigen::VectorXd& x) const {
  if (std::size_t(x.size()) != dim_) throw DimensionMismatch("SlackObjective: wrong dimension");
  std::size_t offset = 0;
  MixtureParams phi = mixture_at(start_.phi, x, offset, log_phi_);
  MixtureParams psi = mixture_at(start_.psi, x, offset, log_psi_);
  SlackRecord r;
  r.seed = start_.seed;
  r.phi = std::move(phi);
  r.psi = std::move(psi);
  r.state_factor = factor_at(x, offset);
  r.state_kind = start_.state_kind;
  const double tr = r.state_factor.squaredNorm();
  if (!(tr > 1e-300)) {
    r.slack = std::numeric_limits<double>::infinity();
    return r;
  }
  r.entropies = mixture_entropies(r.phi, r.psi, r.state());
  r.slack = r.entropies.slack();
  return r;
}

double SlackObjective::operator()(const Eigen::VectorXd& x) const { return record_at(x).slack; }

Eigen::VectorXd finite_difference_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                                           const Eigen::VectorXd& x, double step) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd probe = x;
  for (Index i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + step;
    const double up = f(probe);
    probe(i) = x(i) - step;
    const double down = f(probe);
    probe(i) = x(i);
    g(i) = (up - down) / (2 * step);
  }
  return g;
}

namespace {

struct DescentResult {
  Eigen::VectorXd x;
  double value = 0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;
};

// Axis probes of fixed size; used to leave stationary points of the smooth
// part (e.g. pure states, where every first-order entropy change vanishes).
bool probe_axes(const SlackObjective& f, Eigen::VectorXd& x, double& value) {
  for (Index i = 0; i < x.size(); ++i)
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd y = x;
      y(i) += sign * kProbeStep;
      const double v = f(y);
      if (v < value - kMinGain) {
        x = std::move(y);
        value = v;
        return true;
      }
    }
  return false;
}

DescentResult gradient_descent(const SlackObjective& f, int max_iters) {
  DescentResult r;
  r.x = Eigen::VectorXd::Zero(Index(f.dimension()));
  r.value = f(r.x);
  const auto fn = [&](const Eigen::VectorXd& y) { return f(y); };
  double t = 0.1;
  for (r.iterations = 0; r.iterations < max_iters; ++r.iterations) {
    const double before = r.value;
    const Eigen::VectorXd g = finite_difference_gradient(fn, r.x, kGradientStep);
    const double gnorm = g.norm();
    bool moved = false;
    if (std::isfinite(gnorm) && gnorm > 1e-12) {
      const Eigen::VectorXd d = -g / gnorm;
      for (double step = std::min(t, 1.0); step > 1e-14; step /= 2) {
        const Eigen::VectorXd y = r.x + step * d;
        const double v = f(y);
        if (v <= r.value - 1e-4 * step * gnorm && v < r.value) {
          r.x = y;
          r.value = v;
          t = 2 * step;
          moved = true;
          break;
        }
      }
    }
    if (!moved) moved = probe_axes(f, r.x, r.value);
    r.trace.push_back(r.value);
    if (!moved || before - r.value < kMinGain) {
      r.converged = true;
      ++r.iterations;
      break;
    }
  }
  return r;
}

// Nelder-Mead with standard coefficients. One iteration is a sweep of
// `dimension` simplex updates; the trace holds the best vertex value.
DescentResult nelder_mead(const SlackObjective& f, int max_iters) {
  const Index d = Index(f.dimension());
  std::vector<Eigen::VectorXd> pts(std::size_t(d + 1), Eigen::VectorXd::Zero(d));
  std::vector<double> vals(std::size_t(d + 1));
  for (Index i = 0; i < d; ++i) pts[std::size_t(i + 1)](i) = kSimplexStep;
  for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = f(pts[i]);
  std::vector<std::size_t> order(pts.size());

  DescentResult r;
  auto sort_simplex = [&] {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  };
  sort_simplex();
  // The start is vertex 0; the best vertex can only improve from there.
  r.x = pts[0];
  r.value = vals[0];
  for (r.iterations = 0; r.iterations < max_iters; ++r.iterations) {
    const double before = r.value;
    for (Index step = 0; step < d; ++step) {
      sort_simplex();
      const std::size_t best = order.front(), worst = order.back(), second = order[order.size() - 2];
      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
      for (std::size_t i = 0; i + 1 < order.size(); ++i) centroid += pts[order[i]];
      centroid /= double(d);
      const Eigen::VectorXd xr = centroid + (centroid - pts[worst]);
      const double fr = f(xr);
      if (fr < vals[best]) {
        const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[worst]);
        const double fe = f(xe);
        if (fe < fr) {
          pts[worst] = xe, vals[worst] = fe;
        } else {
          pts[worst] = xr, vals[worst] = fr;
        }
      } else if (fr < vals[second]) {
        pts[worst] = xr, vals[worst] = fr;
      } else {
        const bool outside = fr < vals[worst];
        const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                                           : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
        const double fc = f(xc);
        if (fc < std::min(fr, vals[worst])) {
          pts[worst] = xc, vals[worst] = fc;
        } else {
          for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i == best) continue;
            pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
            vals[i] = f(pts[i]);
          }
        }
      }
    }
    sort_simplex();
    if (vals[order.front()] < r.value) {
      r.x = pts[order.front()];
      r.value = vals[order.front()];
    }
    r.trace.push_back(r.value);
    const double spread = vals[order.back()] - vals[order.front()];
    if (spread < kMinGain && before - r.value < kMinGain) {
      r.converged = true;
      ++r.iterations;
      break;
    }
  }
  return r;
}

}  // namespace

SlackRecord minimize_slack(const SearchConfig& cfg, const SlackRecord& start) {
  SlackRecord origin = start;
  origin.entropies = recompute(start);
  origin.slack = origin.entropies.slack();
  const Optimizer method = cfg.resolved_optimizer();
  if (method == Optimizer::random_only) {
    origin.origin = "descent";
    origin.converged = true;
    origin.trace = {origin.slack};
    return origin;
  }
  const SlackObjective objective(origin);
  const DescentResult d = method == Optimizer::simplex ? nelder_mead(objective, cfg.max_iters)
                                                       : gradient_descent(objective, cfg.max_iters);
  SlackRecord out = d.value < origin.slack ? objective.record_at(d.x) : origin;
  out.origin = "descent";
  out.converged = d.converged;
  out.iterations = d.iterations;
  out.trace.clear();
  out.trace.push_back(origin.slack);
  for (double v : d.trace) out.trace.push_back(std::min(v, out.trace.back()));
  out.counterexample_candidate = out.slack < kCounterexampleThreshold;
  out.verified_slack.reset();
  out.verified_counterexample = false;
  if (out.counterexample_candidate) {
    out.verified_slack = extended_precision_slack(out);
    out.verified_counterexample = *out.verified_slack < kCounterexampleThreshold;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Saturation

SaturationFeatures saturation_features(const SlackRecord& r) {
  const CMat rho = r.state();
  const Index n = rho.rows();
  const Channel phi = r.phi.channel();
  const Channel psi = r.psi.channel();
  const CMat a = phi.dynamical_matrix();
  const CMat b = transpose_channel(psi).dynamical_matrix();
  SaturationFeatures f;
  f.rho_distance = (rho - CMat::Identity(n, n) / double(n)).norm();
  f.phi_map_entropy = map_entropy(phi).value;
  f.psi_map_entropy = map_entropy(psi).value;
  f.commutation_residual = (a * b - b * a).norm();
  f.rho_purity = purity(rho);
  return f;
}

const std::vector<std::string>& saturation_labels() {
  static const std::vector<std::string> labels{
      "maximally mixed state", "unitary/unitary/any-ρ", "unitary Φ", "commuting Choi",
      "pure state",            "unclassified"};
  return labels;
}

std::string classify_saturation(const SaturationFeatures& f) {
  const auto& l = saturation_labels();
  if (f.rho_distance < kFeatureTolerance) return l[0];
  const bool phi_unitary = f.phi_map_entropy < kFeatureTolerance;
  const bool psi_unitary = f.psi_map_entropy < kFeatureTolerance;
  if (phi_unitary && psi_unitary) return l[1];
  if (phi_unitary) return l[2];
  if (f.commutation_residual < kFeatureTolerance) return l[3];
  if (f.rho_purity > 1 - kFeatureTolerance) return l[4];
  return l[5];
}

SaturationReport saturation_scan(const std::vector<SlackRecord>& records, const SearchConfig& cfg) {
  SaturationReport report;
  report.records = records.size();
  std::map<std::string, std::vector<Seed>> buckets;
  for (const auto& r : records) {
    if (std::abs(r.slack) >= cfg.slack_tolerance) continue;
    ++report.near_zero;
    buckets[classify_saturation(saturation_features(r))].push_back(r.seed);
  }
  for (const auto& label : saturation_labels()) {
    auto it = buckets.find(label);
    if (it == buckets.end()) continue;
    std::sort(it->second.begin(), it->second.end());
    report.clusters.push_back({label, std::move(it->second)});
  }
  return report;
}

}  // namespace qent
