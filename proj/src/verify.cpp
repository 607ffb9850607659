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

#include "qentropy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>

#include "qentropy/haar.hpp"
#include "qentropy/parallel.hpp"

namespace qent {

namespace {

constexpr double kMonteCarloFloor = 1e-12;

CheckComponent equality(std::string name, double lhs, double rhs, double tol) {
  return {std::move(name), lhs, rhs, -std::abs(lhs - rhs), tol};
}

/// Matrices compared entrywise; lhs/rhs record the deviation and 0.
CheckComponent matrix_equality(std::string name, const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(name + ": shapes differ");
  const double dev = max_abs(a - b);
  return {std::move(name), dev, 0.0, -dev, tol};
}

/// lhs <= rhs.
CheckComponent at_most(std::string name, double lhs, double rhs, double tol) {
  return {std::move(name), lhs, rhs, rhs - lhs, tol};
}

CheckComponent monte_carlo(std::string name, const ScalarEstimate& est, double exact) {
  const double excess = std::abs(est.mean - exact) - kMonteCarloSigmas * est.std_error;
  return {std::move(name), est.mean, exact, -std::max(0.0, excess), kMonteCarloFloor};
}

void require_tp(const Channel& c, const char* where) {
  if (!c.is_trace_preserving())
    throw NotTracePreserving(std::string(where) + ": channel is not trace preserving (residual " +
                             std::to_string(c.trace_preservation_residual()) + ")");
}

void require_bistochastic(const Channel& c, const char* where) {
  if (!c.is_square() || c.trace_preservation_residual() > kBistochasticPrecondition ||
      c.unitality_residual() > kBistochasticPrecondition)
    throw NotBistochastic(std::string(where) + ": channel is not bi-stochastic");
}

double vn(const CMat& m) {
  return von_neumann_entropy(DensityMatrix(m)).value;
}

double vn_map(const Channel& c) { return map_entropy(c, 1.0).value; }

// sum_ij tr(K_i K_i^dag K_j K_j^dag) = tr(Phi(I)^2).
double schwarz_sum(const KrausSet& k) { return k.image_of_identity().squaredNorm(); }

// sum_ij |tr K_i^dag K_j|^2.
double gram_sum(const KrausSet& k) {
  double total = 0;
  for (const auto& a : k)
    for (const auto& b : k) total += std::norm((a.adjoint() * b).trace());
  return total;
}

}  // namespace

void CheckReport::set_tolerance(double tol) {
  tolerance = tol;
  passed = margin >= -tolerance;
}

CheckReport make_report(std::string name, std::string digest, std::vector<CheckComponent> parts,
                        bool statistical, std::string note) {
  if (parts.empty()) throw DomainError("make_report: no components");
  CheckReport r;
  r.check_name = std::move(name);
  r.inputs_digest = std::move(digest);
  r.statistical = statistical;
  r.note = std::move(note);
  r.tolerance = parts.front().tolerance;
  double worst = std::numeric_limits<double>::infinity();
  bool all = true;
  for (const auto& p : parts) {
    r.lhs.push_back(p.lhs);
    r.rhs.push_back(p.rhs);
    worst = std::min(worst, p.margin + p.tolerance);
    all = all && p.passed();
  }
  r.margin = worst - r.tolerance;
  r.passed = all;
  r.components = std::move(parts);
  return r;
}

CheckReport check_tp_schwarz(const KrausSet& k, std::string digest) {
  if (k.trace_preservation_residual() > kFlagTolerance)
    throw NotTracePreserving("check_tp_schwarz: Kraus set is not trace preserving");
  if (k.dim_in() != k.dim_out()) throw NonSquareChannel("check_tp_schwarz: non-square map");
  const double n = double(k.dim_in());
  const double sum = schwarz_sum(k);
  const bool unital = k.unitality_residual() <= kFlagTolerance;
  const bool equality_case = std::abs(sum - n) < 1e-10;
  std::ostringstream note;
  note << "unital=" << (unital ? "true" : "false")
       << " equality=" << (equality_case ? "true" : "false");
  return make_report("tp_schwarz", std::move(digest), {at_most("n <= sum tr(KK^dag KK^dag)", n, sum, 1e-10)},
                     false, note.str());
}

CheckReport check_average_purity_identity(const Channel& c, std::int64_t samples, Seed seed,
                                          std::string digest) {
  require_tp(c, "check_average_purity_identity");
  const double n = double(c.dim_in());
  const double gram = gram_sum(c.kraus());
  const double closed = (schwarz_sum(c.kraus()) + gram) / (n * (n + 1));
  const ScalarEstimate est = sphere_monte_carlo(
      c.dim_in(), samples, seed, [&](const Vec& phi) { return output_purity(c, phi); });
  std::vector<CheckComponent> parts;
  parts.push_back(monte_carlo("sphere average of output purity", est, closed));
  parts.push_back(equality("sum |tr K_i^dag K_j|^2 == n^2 tr rho(Phi)^2", gram,
                           n * n * map_purity(c), 1e-10));
  std::ostringstream note;
  note << "mc_mean=" << est.mean << " std_error=" << est.std_error << " samples=" << est.samples;
  return make_report("average_purity", std::move(digest), std::move(parts), true, note.str());
}

CheckReport check_prop1_depolarizing_extremality(const Channel& c, const MinEntropyConfig& cfg,
                                                 std::string digest) {
  require_tp(c, "check_prop1_depolarizing_extremality");
  if (!c.is_square()) throw NonSquareChannel("check_prop1_depolarizing_extremality: non-square");
  const Index n = c.dim_in();
  const double map_p = map_purity(c);
  double max_purity = 0;
  bool statistical = true;
  std::string note;
  if (c.depolarizing_parameter()) {
    max_purity = depolarizing_output_purity(n, *c.depolarizing_parameter());
    statistical = false;
    note = "exact path: depolarizing closed form";
  } else {
    const auto est = min_output_entropy_2(c, cfg);
    max_purity = est.purity;
    note = "estimator path: " + std::to_string(cfg.restarts) +
           " restarts; estimated purity is a lower bound, so the check is conservative";
  }
  const double eps = 1.0 - max_purity;
  const double bound = 1.0 - (1.0 + 1.0 / double(n)) * eps;
  return make_report("prop1", std::move(digest),
                     {at_most("tr rho(Phi)^2 <= 1 - (1 + 1/n) eps", map_p, bound,
                              statistical ? kEstimatorTolerance : 1e-10)},
                     statistical, note);
}

CheckReport check_corollary_monotone(Index n, int grid, LogBase base) {
  if (n < 2 || grid < 3) throw DomainError("check_corollary_monotone: need n >= 2 and grid >= 3");
  double worst_formula = 0, worst_round_trip = 0;
  double min_step_min = std::numeric_limits<double>::infinity();
  double min_step_map = min_step_min;
  double prev_min = 0, prev_map = 0;
  Vec probe = Vec::Zero(n);
  probe(0) = 1;
  for (int i = 0; i < grid; ++i) {
    const double x = double(i) / double(grid - 1);
    const Channel c = depolarizing(n, x);
    const double s_map = map_entropy(c, 2.0, base).value;
    const double s_min = -log_in(output_purity(c, probe), base);
    worst_formula = std::max(worst_formula, std::abs(s_min - depolarizing_min_from_map(n, s_map, base)));
    worst_round_trip =
        std::max(worst_round_trip, std::abs(s_map - depolarizing_map_from_min(n, s_min, base)));
    if (i > 0) {
      min_step_min = std::min(min_step_min, s_min - prev_min);
      min_step_map = std::min(min_step_map, s_map - prev_map);
    }
    prev_min = s_min;
    prev_map = s_map;
  }
  std::vector<CheckComponent> parts;
  parts.push_back({"S2min direct vs closed form of S2map", worst_formula, 0, -worst_formula, 1e-9});
  parts.push_back({"S2map round trip", worst_round_trip, 0, -worst_round_trip, 1e-9});
  parts.push_back({"S2min non-decreasing in x", min_step_min, 0, min_step_min, 1e-12});
  parts.push_back({"S2map non-decreasing in x", min_step_map, 0, min_step_map, 1e-12});
  std::ostringstream digest;
  digest << "n=" << n << " grid=" << grid;
  return make_report("corollary", digest.str(), std::move(parts), false);
}

CheckReport check_choi_identities(const Channel& phi, const Channel& psi, std::string digest) {
  if (psi.dim_out() != phi.dim_in())
    throw DimensionMismatch("check_choi_identities: Psi outputs dimension " +
                            std::to_string(psi.dim_out()) + ", Phi expects " +
                            std::to_string(phi.dim_in()));
  const CMat p = bipartite_vec_permutation(phi.dim_out(), psi.dim_out(), phi.dim_in(), psi.dim_in());
  const CMat joint = tensor_channels(phi, psi).dynamical_matrix();
  const CMat permuted =
      p.adjoint() * tensor(phi.dynamical_matrix(), psi.dynamical_matrix()) * p;

  const CMat composed = compose(phi, psi).dynamical_matrix();
  const KrausSet psi_t = transposed_kraus(psi.kraus());
  const CMat via_phi = apply_first_factor(phi.kraus(), psi.dynamical_matrix(), psi.dim_in());
  const CMat via_psi_t = apply_second_factor(psi_t, phi.dynamical_matrix(), phi.dim_out());
  const Channel phi_x_psi_t = tensor_channels(phi, Channel(psi_t));
  const CMat via_both = qent::apply(phi_x_psi_t.kraus(), max_entangled_projector(phi.dim_in()));

  std::vector<CheckComponent> parts;
  parts.push_back(matrix_equality("J(Phi x Psi) == P^dag (J(Phi) x J(Psi)) P", joint, permuted,
                                  kIdentityTolerance));
  parts.push_back(matrix_equality("J(Phi o Psi) == (Phi x id)(J(Psi))", composed, via_phi,
                                  kIdentityTolerance));
  parts.push_back(matrix_equality("J(Phi o Psi) == (id x Psi^T)(J(Phi))", composed, via_psi_t,
                                  kIdentityTolerance));
  parts.push_back(matrix_equality("J(Phi o Psi) == (Phi x Psi^T)(|I><I|)", composed, via_both,
                                  kIdentityTolerance));
  return make_report("choi_identities", std::move(digest), std::move(parts), false);
}

CheckReport check_transpose_dual(const Channel& c, std::string digest) {
  if (!c.is_square()) throw NonSquareChannel("check_transpose_dual: non-square channel");
  const Index n = c.dim_in();
  const CMat s = swap_operator(n);
  const CMat& j = c.dynamical_matrix();
  const Channel t = transpose_channel(c);
  const Channel d = adjoint_channel(c);
  std::vector<CheckComponent> parts;
  parts.push_back(matrix_equality("J(Phi^T) == S J S", t.dynamical_matrix(), s * j * s,
                                  kIdentityTolerance));
  parts.push_back(matrix_equality("J(Phi^dag) == S J^T S", d.dynamical_matrix(),
                                  s * j.transpose() * s, kIdentityTolerance));
  if (c.is_bistochastic())
    parts.push_back(equality("S^map(Phi^T) == S^map(Phi)", vn_map(t), vn_map(c), 1e-10));
  return make_report("transpose_dual", std::move(digest), std::move(parts), false,
                     c.is_bistochastic() ? "bi-stochastic: map entropy compared" : "");
}

CheckReport check_additivity(const Channel& phi, const Channel& psi, double p, std::string digest) {
  require_tp(phi, "check_additivity");
  require_tp(psi, "check_additivity");
  if (!(p >= 0)) throw DomainError("check_additivity: p must be >= 0");
  const double joint = map_entropy(tensor_channels(phi, psi), p).value;
  const double sum = map_entropy(phi, p).value + map_entropy(psi, p).value;
  std::ostringstream note;
  note << "p=" << p;
  return make_report("additivity", std::move(digest),
                     {equality("S^map_p(Phi x Psi) == S^map_p(Phi) + S^map_p(Psi)", joint, sum,
                               kEntropyTolerance)},
                     false, note.str());
}

CheckReport check_lindblad(const Channel& c, const DensityMatrix& rho, std::string digest) {
  require_tp(c, "check_lindblad");
  if (rho.dim() != c.dim_in()) throw DimensionMismatch("check_lindblad: state dimension");
  const double s_rho = von_neumann_entropy(rho).value;
  const double s_out = von_neumann_entropy(qent::apply(c, rho)).value;
  const double s_sigma = von_neumann_entropy(entropy_exchange_state(c, rho)).value;
  return make_report("lindblad", std::move(digest),
                     {at_most("|S(sigma) - S(rho)| <= S(Lambda rho)", std::abs(s_sigma - s_rho),
                              s_out, kEntropyTolerance),
                      at_most("S(Lambda rho) <= S(sigma) + S(rho)", s_out, s_sigma + s_rho,
                              kEntropyTolerance)},
                     false);
}

CheckReport check_lindblad_jamiolkowski(const Channel& phi, const Channel& psi,
                                        std::string digest) {
  require_tp(phi, "check_lindblad_jamiolkowski");
  require_tp(psi, "check_lindblad_jamiolkowski");
  if (psi.dim_in() != phi.dim_in())
    throw DimensionMismatch("check_lindblad_jamiolkowski: Psi must act on Phi's input factor");
  std::vector<CMat> ops;
  const CMat id = CMat::Identity(phi.dim_out(), phi.dim_out());
  for (const auto& n : psi.kraus()) ops.push_back(tensor(id, n));
  const Channel lifted{KrausSet(std::move(ops))};
  const DensityMatrix rho(phi.jamiolkowski_state());
  CheckReport base = check_lindblad(lifted, rho, digest);
  std::vector<CheckComponent> parts = base.components;
  parts.push_back(equality("S(rho(Phi)) == S^map(Phi)", von_neumann_entropy(rho).value,
                           vn_map(phi), kEntropyTolerance));
  parts.push_back(equality("S(sigma) == S^map(Psi)",
                           von_neumann_entropy(entropy_exchange_state(lifted, rho)).value,
                           vn_map(psi), kEntropyTolerance));
  return make_report("lindblad_jamiolkowski", std::move(digest), std::move(parts), false);
}

CheckReport check_dynamical_subadditivity(const Channel& phi, const Channel& psi,
                                          std::string digest) {
  require_bistochastic(phi, "check_dynamical_subadditivity");
  require_bistochastic(psi, "check_dynamical_subadditivity");
  if (phi.dim_in() != psi.dim_in())
    throw DimensionMismatch("check_dynamical_subadditivity: dimensions differ");
  const double s_phi = vn_map(phi), s_psi = vn_map(psi);
  const double s_comp = vn_map(compose(phi, psi));
  return make_report("dynamical_subadditivity", std::move(digest),
                     {at_most("max{S(Phi), S(Psi)} <= S(Phi o Psi)", std::max(s_phi, s_psi),
                              s_comp, kEntropyTolerance),
                      at_most("S(Phi o Psi) <= S(Phi) + S(Psi)", s_comp, s_phi + s_psi,
                              kEntropyTolerance)},
                     false);
}

CheckReport check_entangled_input(const Channel& phi, const Channel& psi,
                                  const std::optional<CMat>& u, Seed seed, std::string digest) {
  require_bistochastic(phi, "check_entangled_input");
  require_bistochastic(psi, "check_entangled_input");
  const Index n = phi.dim_in();
  if (psi.dim_in() != n) throw DimensionMismatch("check_entangled_input: dimensions differ");
  const CMat unitary = u ? *u : haar_unitary(n, seed);
  if (unitary.rows() != n || !is_unitary(unitary))
    throw DomainError("check_entangled_input: U is not an n x n unitary");
  const Channel joint = tensor_channels(phi, psi);
  const Vec v = vec(unitary);
  const double middle = vn(qent::apply(joint, CMat(v * v.adjoint() / double(n))));
  const double s_phi = vn_map(phi), s_psi = vn_map(psi);
  const double at_identity = vn(qent::apply(joint, CMat(max_entangled_projector(n) / double(n))));
  const double reduced = vn_map(compose(phi, Channel(transposed_kraus(psi.kraus()))));
  return make_report(
      "entangled_input", std::move(digest),
      {at_most("max{S(Phi), S(Psi)} <= S((Phi x Psi)(|U><U|/n))", std::max(s_phi, s_psi), middle,
               kEntropyTolerance),
       at_most("S((Phi x Psi)(|U><U|/n)) <= S(Phi) + S(Psi)", middle, s_phi + s_psi,
               kEntropyTolerance),
       equality("S((Phi x Psi)(|I><I|/n)) == S^map(Phi o Psi^T)", at_identity, reduced, 1e-10)},
      false);
}

CheckReport check_sphere_average(const CMat& m, std::int64_t samples, Seed seed,
                                 std::string digest) {
  const double exact = sphere_average_closed_form(m);
  const auto est = sphere_average_monte_carlo(m, samples, seed);
  std::ostringstream note;
  note << "std_error=" << est.std_error << " samples=" << est.samples;
  return make_report("sphere_average", std::move(digest),
                     {monte_carlo("MC average of |<psi|M|psi>|^2 vs closed form", est, exact)},
                     true, note.str());
}

CheckReport check_twirl(const CMat& a, Index n, std::int64_t samples, Seed seed,
                        std::string digest) {
  const auto mc = twofold_twirl_monte_carlo(a, n, samples, seed);
  const auto verdict = compare_twirl_forms(a, n, mc);
  const double excess = std::max(0.0, verdict.corrected_max_z - kMonteCarloSigmas);
  std::ostringstream note;
  note << "supported_form=" << verdict.supported << " corrected_max_z=" << verdict.corrected_max_z
       << " printed_max_z=" << verdict.printed_max_z;
  return make_report("twirl", std::move(digest),
                     {{"corrected closed form within 4 SE entrywise (z excess)",
                       verdict.corrected_max_z, kMonteCarloSigmas, -excess, 0.0}},
                     true, note.str());
}

// ---------------------------------------------------------------------------
// Suite runner

namespace {

struct Task {
  std::string check;
  Index n;
  int instance;
  Seed seed;
};

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ULL;
  return h;
}

std::string digest_of(const Task& t, const std::string& extra = {}) {
  std::ostringstream out;
  out << "seed=" << t.seed << " n=" << t.n << " instance=" << t.instance;
  if (!extra.empty()) out << ' ' << extra;
  return out.str();
}

Index kraus_rank(Rng& rng, Index n) {
  return std::uniform_int_distribution<Index>(1, n * n)(rng);
}

Index mixture_size(Rng& rng) { return std::uniform_int_distribution<Index>(1, 4)(rng); }

std::vector<CheckReport> run_task(const Task& t, const SuiteConfig& cfg) {
  Rng rng = make_rng(t.seed);
  const Index n = t.n;
  auto sub = [&](std::uint64_t k) { return derive_seed(t.seed, {k}); };
  std::vector<CheckReport> out;
  if (t.check == "tp_schwarz") {
    const Channel c = t.instance % 2 == 0 ? random_cptp(n, kraus_rank(rng, n), sub(1))
                                          : random_bistochastic(n, mixture_size(rng), sub(1));
    out.push_back(check_tp_schwarz(c.kraus(), digest_of(t)));
  } else if (t.check == "average_purity") {
    const Channel c = random_cptp(n, kraus_rank(rng, n), sub(1));
    out.push_back(check_average_purity_identity(c, cfg.samples, sub(2), digest_of(t)));
  } else if (t.check == "prop1") {
    MinEntropyConfig mcfg;
    mcfg.restarts = cfg.restarts;
    mcfg.seed = sub(2);
    if (t.instance == 0) {
      const double x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      out.push_back(check_prop1_depolarizing_extremality(depolarizing(n, x), mcfg,
                                                         digest_of(t, "depolarizing")));
    } else {
      const Channel c = random_cptp(n, kraus_rank(rng, n), sub(1));
      out.push_back(check_prop1_depolarizing_extremality(c, mcfg, digest_of(t)));
    }
  } else if (t.check == "corollary") {
    out.push_back(check_corollary_monotone(n, 21, cfg.base));
  } else if (t.check == "choi_identities") {
    const Channel phi = random_cptp(n, kraus_rank(rng, n), sub(1));
    const Channel psi = random_cptp(n, kraus_rank(rng, n), sub(2));
    out.push_back(check_choi_identities(phi, psi, digest_of(t)));
  } else if (t.check == "transpose_dual") {
    const Channel c = t.instance % 2 == 0 ? random_cptp(n, kraus_rank(rng, n), sub(1))
                                          : random_bistochastic(n, mixture_size(rng), sub(1));
    out.push_back(check_transpose_dual(c, digest_of(t)));
  } else if (t.check == "additivity") {
    const Channel phi = random_cptp(n, kraus_rank(rng, n), sub(1));
    const Channel psi = random_cptp(n, kraus_rank(rng, n), sub(2));
    for (double p : {0.5, 2.0, 3.0}) out.push_back(check_additivity(phi, psi, p, digest_of(t)));
  } else if (t.check == "lindblad") {
    const Channel c = random_cptp(n, kraus_rank(rng, n), sub(1));
    const DensityMatrix rho(random_density_matrix(n, sub(2)));
    out.push_back(check_lindblad(c, rho, digest_of(t)));
  } else if (t.check == "lindblad_jamiolkowski") {
    const Channel phi = random_cptp(n, kraus_rank(rng, n), sub(1));
    const Channel psi = random_cptp(n, kraus_rank(rng, n), sub(2));
    out.push_back(check_lindblad_jamiolkowski(phi, psi, digest_of(t)));
  } else if (t.check == "dynamical_subadditivity") {
    const Channel phi = random_bistochastic(n, mixture_size(rng), sub(1));
    const Channel psi = random_bistochastic(n, mixture_size(rng), sub(2));
    out.push_back(check_dynamical_subadditivity(phi, psi, digest_of(t)));
  } else if (t.check == "entangled_input") {
    const Channel phi = random_bistochastic(n, mixture_size(rng), sub(1));
    const Channel psi = random_bistochastic(n, mixture_size(rng), sub(2));
    out.push_back(check_entangled_input(phi, psi, std::nullopt, sub(3), digest_of(t)));
  } else if (t.check == "sphere_average") {
    Rng mrng = make_rng(sub(1));
    out.push_back(check_sphere_average(complex_gaussian(n, n, mrng), cfg.samples, sub(2),
                                       digest_of(t)));
  } else if (t.check == "twirl") {
    Rng arng = make_rng(sub(1));
    const CMat g = complex_gaussian(n * n, n * n, arng);
    out.push_back(check_twirl(CMat((g + g.adjoint()) / 2.0), n, cfg.samples, sub(2),
                              digest_of(t)));
  }
  auto it = cfg.tolerance_overrides.find(t.check);
  if (it != cfg.tolerance_overrides.end())
    for (auto& r : out) r.set_tolerance(it->second);
  return out;
}

}  // namespace

const std::vector<std::string>& available_checks() {
  static const std::vector<std::string> names{
      "additivity",     "average_purity",  "choi_identities",       "corollary",
      "dynamical_subadditivity",           "entangled_input",       "lindblad",
      "lindblad_jamiolkowski",             "prop1",                 "sphere_average",
      "tp_schwarz",     "transpose_dual",  "twirl"};
  return names;
}

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  std::vector<std::string> selected;
  for (const auto& name : cfg.checks) {
    if (name == "all") {
      selected = available_checks();
      break;
    }
    const auto& all = available_checks();
    if (std::find(all.begin(), all.end(), name) == all.end())
      throw DomainError("unknown check '" + name + "'");
    selected.push_back(name);
  }
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  if (cfg.instances < 1) throw DomainError("run_suite: instances must be >= 1");

  std::vector<Task> tasks;
  for (const auto& check : selected)
    for (Index n : cfg.dims) {
      if (n < 2) throw DomainError("run_suite: dimensions must be >= 2");
      const int count = check == "corollary" ? 1 : cfg.instances;
      for (int i = 0; i < count; ++i)
        tasks.push_back({check, n, i,
                         derive_seed(cfg.seed, {name_hash(check), std::uint64_t(n),
                                                std::uint64_t(i)})});
    }

  std::vector<std::vector<CheckReport>> results(tasks.size());
  parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) { results[i] = run_task(tasks[i], cfg); });

  std::vector<CheckReport> merged;
  for (auto& r : results)
    for (auto& rep : r) merged.push_back(std::move(rep));
  return merged;
}

SuiteSummary summarize(const std::vector<CheckReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    ++s.total;
    if (r.passed)
      ++s.passed;
    else if (r.statistical)
      ++s.failed_statistical;
    else
      ++s.failed_exact;
  }
  return s;
}

}  // namespace qent
