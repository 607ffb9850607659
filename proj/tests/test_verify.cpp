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

#include <doctest.h>

#include "oracles.hpp"
#include "qentropy/haar.hpp"
#include "qentropy/verify.hpp"

using namespace qent;

namespace {

Channel haar_channel(Index n, Seed s) { return unitary_channel(haar_unitary(n, s)); }

// Amplitude damping: trace preserving, not unital for gamma > 0.
Channel amplitude_damping(double gamma) {
  CMat k0 = CMat::Zero(2, 2), k1 = CMat::Zero(2, 2);
  k0(0, 0) = 1;
  k0(1, 1) = std::sqrt(1 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  return Channel(KrausSet({k0, k1}));
}

DensityMatrix pure0(Index n) {
  Vec v = Vec::Zero(n);
  v(0) = 1;
  return DensityMatrix::pure(v);
}

void check_invariant(const CheckReport& r) {
  CHECK(r.passed == (r.margin >= -r.tolerance));
  CHECK(r.lhs.size() == r.components.size());
}

}  // namespace

TEST_CASE("report aggregation") {
  const auto r = make_report("x", "d",
                             {{"a", 1, 2, 0.5, 1e-3}, {"b", 0, 0, -2e-9, 1e-9}}, false);
  CHECK(!r.passed);
  CHECK(r.tolerance == 1e-3);
  check_invariant(r);
  // The failing component sits 1e-9 beyond its own tolerance.
  CHECK(r.margin == doctest::Approx(-1e-3 - 1e-9));
  CHECK_THROWS_AS(make_report("x", "", {}, false), DomainError);

  CheckReport loose = r;
  loose.set_tolerance(1.0);
  CHECK(loose.passed);
}

TEST_CASE("Schwarz bound for trace-preserving maps") {
  const auto unitary = check_tp_schwarz(haar_channel(3, 1).kraus());
  CHECK(unitary.passed);
  CHECK(std::abs(unitary.margin) <= 1e-12);
  CHECK(unitary.note.find("equality=true") != std::string::npos);

  for (Index n : {2, 3})
    for (double x : {0.0, 0.4, 1.0}) {
      const auto r = check_tp_schwarz(depolarizing(n, x).kraus());
      CHECK(std::abs(r.margin) <= 1e-9);
      CHECK(r.note.find("unital=true") != std::string::npos);
    }

  const auto strict = check_tp_schwarz(amplitude_damping(0.3).kraus());
  CHECK(strict.margin > 1e-3);
  for (Seed s = 0; s < 20; ++s) {
    const auto r = check_tp_schwarz(random_cptp(2, 2, s).kraus());
    CHECK(r.margin > 1e-6);
    CHECK(!r.statistical);
    check_invariant(r);
  }
  CHECK_THROWS_AS(check_tp_schwarz(KrausSet({CMat::Identity(2, 2) * 0.5})), NotTracePreserving);
  CHECK_THROWS_AS(check_tp_schwarz(KrausSet({CMat::Identity(3, 2)})), NonSquareChannel);
}

TEST_CASE("average purity identity") {
  const auto id = check_average_purity_identity(identity_channel(3), 1000, 1);
  CHECK(id.passed);
  CHECK(id.statistical);
  CHECK(id.rhs[0] == doctest::Approx(1));
  CHECK(std::abs(id.lhs[0] - 1) <= 1e-12);

  const auto dep = check_average_purity_identity(depolarizing(2, 0.5), 20000, 2);
  CHECK(dep.passed);
  CHECK(dep.rhs[0] == doctest::Approx(5.0 / 8));

  const auto rnd = check_average_purity_identity(random_cptp(3, 4, 3), 100000, 3);
  CHECK(rnd.passed);
  check_invariant(rnd);
  CHECK_THROWS_AS(check_average_purity_identity(Channel(KrausSet({CMat::Identity(2, 2) * 2.0})),
                                                1000, 1),
                  NotTracePreserving);
}

TEST_CASE("depolarizing extremality") {
  const auto dep = check_prop1_depolarizing_extremality(depolarizing(2, 0.5), {});
  CHECK(!dep.statistical);
  CHECK(std::abs(dep.margin) <= 1e-12);
  CHECK(dep.lhs[0] == doctest::Approx(7.0 / 16));
  CHECK(dep.rhs[0] == doctest::Approx(7.0 / 16));

  const auto u = check_prop1_depolarizing_extremality(haar_channel(3, 2), {});
  CHECK(u.statistical);
  CHECK(std::abs(u.margin) <= 1e-9);

  for (Seed s = 0; s < 20; ++s) {
    const auto r = check_prop1_depolarizing_extremality(random_cptp(2 + Index(s % 2), 2, s), {});
    CHECK(r.passed);
    CHECK(r.tolerance == kEstimatorTolerance);
  }
}

TEST_CASE("corollary") {
  const auto r = check_corollary_monotone(2, 21);
  CHECK(r.passed);
  CHECK(r.components.size() == 4);
  CHECK(r.components[0].lhs < 1e-9);
  for (Index n : {3, 4}) CHECK(check_corollary_monotone(n, 21, LogBase::e).passed);
  // Endpoints: x = 1 gives S2map = 2 log n and S2min = log n.
  const Channel full = depolarizing(3, 1.0);
  CHECK(map_entropy(full, 2).value == doctest::Approx(2 * std::log2(3.0)));
  CHECK(depolarizing_min_from_map(3, 2 * std::log2(3.0)) == doctest::Approx(std::log2(3.0)));
  CHECK_THROWS_AS(check_corollary_monotone(2, 2), DomainError);
}

TEST_CASE("Choi identities") {
  const auto trivial = check_choi_identities(identity_channel(2), identity_channel(2));
  CHECK(trivial.passed);
  CHECK(trivial.margin == doctest::Approx(0).scale(1e-15));

  CHECK(check_choi_identities(haar_channel(3, 4), haar_channel(3, 5)).passed);
  for (Seed s = 0; s < 20; ++s) {
    const auto r = check_choi_identities(random_cptp(2, 3, 2 * s), random_cptp(2, 3, 2 * s + 1));
    CHECK(r.passed);
    for (const auto& c : r.components) CHECK(c.lhs < 1e-11);
  }
  const Channel wide(KrausSet({CMat::Identity(3, 2)}));
  CHECK(check_choi_identities(random_cptp(3, 2, 1), wide).passed);
  CHECK_THROWS_AS(check_choi_identities(identity_channel(2), identity_channel(3)),
                  DimensionMismatch);
}

TEST_CASE("transpose and dual") {
  CHECK(check_transpose_dual(identity_channel(3)).passed);
  const auto bis = check_transpose_dual(random_bistochastic(3, 3, 7));
  CHECK(bis.passed);
  CHECK(bis.components.size() == 3);
  CHECK(check_transpose_dual(random_cptp(3, 2, 7)).components.size() == 2);
  CHECK_THROWS_AS(check_transpose_dual(Channel(KrausSet({CMat::Identity(3, 2)}))),
                  NonSquareChannel);
}

TEST_CASE("additivity") {
  const auto ii = check_additivity(identity_channel(2), identity_channel(2), 2);
  CHECK(ii.passed);
  CHECK(std::abs(ii.lhs[0]) <= 1e-12);

  const auto full = check_additivity(depolarizing(2, 1.0), depolarizing(2, 1.0), 1);
  CHECK(full.lhs[0] == doctest::Approx(4));
  CHECK(full.rhs[0] == doctest::Approx(4));

  for (double p : {0.5, 2.0, 3.0})
    for (Seed s = 0; s < 10; ++s) {
      const auto r = check_additivity(random_cptp(2, 2, s), random_cptp(3, 4, s + 50), p);
      CHECK(r.passed);
      CHECK(r.margin <= 0);
      CHECK(r.note == "p=" + std::string(p == 0.5 ? "0.5" : p == 2.0 ? "2" : "3"));
    }
  CHECK_THROWS_AS(check_additivity(identity_channel(2), identity_channel(2), -1), DomainError);
}

TEST_CASE("Lindblad inequality") {
  const auto u = check_lindblad(haar_channel(2, 3), pure0(2));
  CHECK(u.passed);
  for (const auto& c : u.components) CHECK(std::abs(c.margin) <= 1e-9);

  const auto full = check_lindblad(depolarizing(2, 1.0), pure0(2));
  CHECK(full.passed);
  // S(rho) = 0 and S(out) = S(sigma) = 1: the upper bound is tight.
  CHECK(std::abs(full.components[1].margin) <= 1e-9);
  CHECK(full.components[1].lhs == doctest::Approx(1));

  std::mt19937_64 g(5);
  for (Seed s = 0; s < 50; ++s) {
    const Index n = 2 + Index(s % 2);
    const auto r = check_lindblad(random_cptp(n, 1 + Index(s) % (n * n), s),
                                  DensityMatrix(oracle::density(n, g)));
    CHECK(r.passed);
  }

  for (Seed s = 0; s < 10; ++s) {
    const auto r = check_lindblad_jamiolkowski(random_cptp(2, 3, s), random_cptp(2, 2, s + 9));
    CHECK(r.passed);
    CHECK(r.components.size() == 4);
  }
  CHECK_THROWS_AS(check_lindblad(identity_channel(2), pure0(3)), DimensionMismatch);
}

TEST_CASE("dynamical subadditivity") {
  const auto ii = check_dynamical_subadditivity(identity_channel(2), identity_channel(2));
  CHECK(ii.passed);
  CHECK(std::abs(ii.margin) <= 1e-12);

  const Channel psi = random_bistochastic(3, 3, 4);
  const auto u = check_dynamical_subadditivity(haar_channel(3, 9), psi);
  CHECK(u.passed);
  CHECK(std::abs(u.components[0].margin) <= 1e-9);

  for (Seed s = 0; s < 30; ++s)
    CHECK(check_dynamical_subadditivity(random_bistochastic(2, 2, s),
                                        random_bistochastic(2, 3, s + 100))
              .passed);
  CHECK_THROWS_AS(check_dynamical_subadditivity(amplitude_damping(0.2), identity_channel(2)),
                  NotBistochastic);
}

TEST_CASE("entangled input") {
  const Channel phi = random_bistochastic(3, 2, 11);
  const auto r = check_entangled_input(phi, identity_channel(3), CMat(CMat::Identity(3, 3)), 0);
  CHECK(r.passed);
  CHECK(std::abs(r.components[0].margin) <= 1e-9);
  CHECK(std::abs(r.components[1].margin) <= 1e-9);

  for (Seed s = 0; s < 20; ++s) {
    const auto t = check_entangled_input(random_bistochastic(2, 2, s),
                                         random_bistochastic(2, 3, s + 1), std::nullopt, s);
    CHECK(t.passed);
  }
  CMat bad = CMat::Identity(3, 3);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(check_entangled_input(phi, phi, bad, 0), DomainError);
  CHECK_THROWS_AS(check_entangled_input(amplitude_damping(0.5), identity_channel(2), std::nullopt, 0),
                  NotBistochastic);
}

TEST_CASE("Monte Carlo checks") {
  CMat p = CMat::Zero(2, 2);
  p(0, 0) = 1;
  const auto r = check_sphere_average(p, 20000, 1);
  CHECK(r.passed);
  CHECK(r.statistical);
  CHECK(r.rhs[0] == doctest::Approx(1.0 / 3));

  const auto t = check_twirl(swap_operator(2), 2, 1000, 1);
  CHECK(t.passed);
  CHECK(t.note.find("supported_form=corrected") != std::string::npos);
}

TEST_CASE("suite runner") {
  SuiteConfig cfg;
  cfg.checks = {"additivity", "tp_schwarz", "choi_identities"};
  cfg.dims = {2, 3};
  cfg.instances = 3;
  cfg.seed = 5;
  const auto a = run_suite(cfg);
  // additivity runs three orders per instance.
  CHECK(a.size() == 2 * 3 * 3 + 2 * 3 + 2 * 3);
  CHECK(a.front().check_name == "additivity");
  CHECK(a.back().check_name == "tp_schwarz");
  CHECK(summarize(a).ok());

  cfg.jobs = 3;
  const auto b = run_suite(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].margin == b[i].margin);
    CHECK(a[i].inputs_digest == b[i].inputs_digest);
  }

  cfg.tolerance_overrides["tp_schwarz"] = 0.25;
  for (const auto& r : run_suite(cfg))
    if (r.check_name == "tp_schwarz") CHECK(r.tolerance == 0.25);

  cfg.checks = {"no_such_check"};
  CHECK_THROWS_AS(run_suite(cfg), DomainError);
  cfg.checks = {"all"};
  cfg.instances = 0;
  CHECK_THROWS_AS(run_suite(cfg), DomainError);

  CHECK(available_checks().size() == 13);
}

TEST_CASE("full default suite") {
  SuiteConfig cfg;
  cfg.instances = 2;
  cfg.samples = 5000;
  cfg.seed = 11;
  const auto reports = run_suite(cfg);
  const auto s = summarize(reports);
  CHECK(s.failed_exact == 0);
  CHECK(s.ok());
  for (const auto& r : reports) check_invariant(r);
}
