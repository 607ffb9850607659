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

#include <numbers>

#include "oracles.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/haar.hpp"

using namespace qent;

namespace {

DensityMatrix diag_state(std::initializer_list<double> d) {
  CMat m = CMat::Zero(Index(d.size()), Index(d.size()));
  Index i = 0;
  for (double x : d) m(i, i) = x, ++i;
  return DensityMatrix(m);
}

DensityMatrix random_state(Index n, std::mt19937_64& g) {
  return DensityMatrix(oracle::density(n, g));
}

DensityMatrix random_pure(Index n, std::mt19937_64& g) {
  const Vec v = oracle::gaussian(n, 1, g);
  return DensityMatrix::pure(v / v.norm());
}

// Output purity maximized over a Fibonacci lattice of Bloch vectors.
double bloch_purity(const Channel& c, double theta, double phi) {
  Vec psi(2);
  psi << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  const CMat out = oracle::apply(c.kraus().operators(), psi * psi.adjoint());
  return (out * out).trace().real();
}

struct GridMax {
  double coarse = 0;
  double refined = 0;
};

// Fibonacci grid on the Bloch sphere, then shrinking local grids around the
// best point.
GridMax grid_max_purity(const Channel& c, int points) {
  const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
  GridMax r;
  double theta = 0, phi = 0;
  for (int i = 0; i < points; ++i) {
    const double t = std::acos(1 - 2 * (i + 0.5) / points), f = golden * i;
    const double v = bloch_purity(c, t, f);
    if (v > r.coarse) r.coarse = v, theta = t, phi = f;
  }
  r.refined = r.coarse;
  for (double h = 0.02; h > 1e-9; h /= 5) {
    double bt = theta, bf = phi;
    for (int a = -10; a <= 10; ++a)
      for (int b = -10; b <= 10; ++b) {
        const double t = theta + h * a / 10, f = phi + h * b / 10;
        const double v = bloch_purity(c, t, f);
        if (v > r.refined) r.refined = v, bt = t, bf = f;
      }
    theta = bt, phi = bf;
  }
  return r;
}

}  // namespace

TEST_CASE("von Neumann entropy") {
  std::mt19937_64 g(1);
  CHECK(std::abs(von_neumann_entropy(random_pure(3, g)).value) <= 1e-12);
  for (Index n : {2, 3, 5}) {
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(n)).value ==
          doctest::Approx(std::log2(double(n))));
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(n), LogBase::e).value ==
          doctest::Approx(std::log(double(n))));
  }
  CHECK(std::abs(von_neumann_entropy(diag_state({0.75, 0.25})).value - 0.811278) < 1e-6);

  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = random_state(4, g);
    const double s = von_neumann_entropy(rho).value;
    CHECK(std::abs(s - oracle::entropy_bits(rho.matrix())) <= 1e-10);
    CHECK(s >= 0);
    CHECK(s <= 2 + 1e-9);
  }
}

TEST_CASE("Renyi entropy") {
  for (Index n : {2, 4}) {
    CHECK(renyi_entropy(DensityMatrix::maximally_mixed(n), 2).value ==
          doctest::Approx(std::log2(double(n))));
  }
  CHECK(std::abs(renyi_entropy(diag_state({0.75, 0.25}), 2).value + std::log2(5.0 / 8)) < 1e-12);
  CHECK(std::abs(renyi_entropy(diag_state({0.75, 0.25}), 2).value - 0.678072) < 1e-6);

  std::mt19937_64 g(2);
  const DensityMatrix pure = random_pure(3, g);
  for (double p : {0.5, 2.0, 3.0}) CHECK(std::abs(renyi_entropy(pure, p).value) <= 1e-10);
  CHECK(renyi_entropy(diag_state({0.5, 0.5, 0}), 0).value == doctest::Approx(1));
  CHECK(renyi_entropy(pure, 1.0).order == 1.0);
  CHECK_THROWS_AS(renyi_entropy(pure, -0.5), DomainError);

  SUBCASE("non-increasing in p") {
    const std::vector<double> grid{0.5, 1, 2, 3, 5};
    for (int t = 0; t < 50; ++t) {
      const DensityMatrix rho = random_state(3, g);
      for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        CHECK(renyi_entropy(rho, grid[i]).value >= renyi_entropy(rho, grid[i + 1]).value - 1e-12);
    }
  }

  SUBCASE("oracle and norm form") {
    for (int t = 0; t < 30; ++t) {
      const DensityMatrix rho = random_state(3, g);
      for (double p : {0.5, 2.0, 3.0}) {
        const double s = renyi_entropy(rho, p).value;
        CHECK(std::abs(s - oracle::renyi_bits(oracle::eigenvalues(rho.matrix()), p)) <= 1e-10);
        if (p >= 1)
          CHECK(std::abs(s - p / (1 - p) * std::log2(schatten_norm(rho.matrix(), p))) <= 1e-10);
      }
    }
  }

  SUBCASE("continuity at p = 1") {
    // Flat spectra have p-independent entropy, so the limit holds exactly.
    for (const DensityMatrix& rho : {random_pure(3, g), DensityMatrix::maximally_mixed(3)}) {
      const double s = von_neumann_entropy(rho).value;
      CHECK(std::abs(renyi_entropy(rho, 1 - 1e-4).value - s) <= 1e-6);
      CHECK(std::abs(renyi_entropy(rho, 1 + 1e-4).value - s) <= 1e-6);
    }
    // In general the deviation is first order in |p - 1|; the symmetric
    // average cancels it.
    for (int t = 0; t < 30; ++t) {
      const DensityMatrix rho = random_state(3, g);
      const double s = von_neumann_entropy(rho).value;
      const double lo = renyi_entropy(rho, 1 - 1e-4).value;
      const double hi = renyi_entropy(rho, 1 + 1e-4).value;
      CHECK(std::abs((lo + hi) / 2 - s) <= 1e-6);
      CHECK(lo >= s);
      CHECK(hi <= s);
      CHECK(std::abs(lo - s) <= 1e-3);
    }
  }
}

TEST_CASE("map entropy") {
  for (double p : {0.5, 1.0, 2.0, 3.0}) {
    CHECK(std::abs(map_entropy(identity_channel(3), p).value) <= 1e-10);
    CHECK(map_entropy(depolarizing(2, 1.0), p).value == doctest::Approx(2));
  }
  const double s2 = map_entropy(depolarizing(2, 0.5), 2).value;
  CHECK(std::abs(s2 + std::log2(7.0 / 16)) <= 1e-12);
  CHECK(std::abs(s2 - 1.192645) <= 1e-6);

  for (Seed s = 0; s < 30; ++s) {
    const Channel c = random_cptp(3, 1 + Index(s % 9), s);
    const CMat rho = c.jamiolkowski_state();
    CHECK(std::abs(map_entropy(c, 2).value + std::log2((rho * rho).trace().real())) <= 1e-11);
    CHECK(std::abs(map_purity(c) - (rho * rho).trace().real()) <= 1e-14);
  }
  for (Index n : {2, 3, 4})
    for (double x : {0.0, 0.3, 1.0})
      CHECK(std::abs(map_purity(depolarizing(n, x)) - depolarizing_map_purity(n, x)) <= 1e-14);

  const Channel not_tp(KrausSet({CMat::Identity(2, 2) * 0.5}));
  CHECK_THROWS_AS(map_entropy(not_tp, 2), NotTracePreserving);
}

TEST_CASE("output purity") {
  std::mt19937_64 g(3);
  const Vec phi = random_pure_state(2, Seed(5));
  CHECK(output_purity(identity_channel(2), phi) == doctest::Approx(1));
  CHECK(output_purity(depolarizing(2, 1.0), phi) == doctest::Approx(0.5));
  CHECK(output_purity(depolarizing(2, 0.5), phi) == doctest::Approx(5.0 / 8));

  for (int t = 0; t < 1000; ++t) {
    const Index n = 2 + t % 3;
    const Channel c = random_cptp(n, 1 + Index(t) % (n * n), Seed(t));
    const Vec v = random_pure_state(n, g);
    const double a = output_purity(c, v), b = output_purity_kraus_form(c, v);
    REQUIRE(std::abs(a - b) <= 1e-11);
    REQUIRE(a > 0);
    REQUIRE(a <= 1 + 1e-12);
  }
  CHECK_THROWS_AS(output_purity(identity_channel(2), Vec::Ones(3) / std::sqrt(3.0)),
                  DimensionMismatch);
}

TEST_CASE("minimum output entropy") {
  const CMat u = haar_unitary(3, Seed(1));
  const auto unit = min_output_entropy_2(unitary_channel(u));
  CHECK(std::abs(unit.entropy.value) <= 1e-12);

  MinEntropyConfig one;
  one.restarts = 1;
  for (Index n : {2, 3, 4})
    for (int i = 0; i <= 20; ++i) {
      const double x = i / 20.0;
      const auto est = min_output_entropy_2(depolarizing(n, x), one);
      REQUIRE(std::abs(est.purity - depolarizing_output_purity(n, x)) <= 1e-10);
      REQUIRE(std::abs(est.entropy.value + std::log2(depolarizing_output_purity(n, x))) <= 1e-8);
    }

  SUBCASE("witness reproduces the purity") {
    for (Seed s = 0; s < 10; ++s) {
      const Channel c = random_cptp(3, 3, s);
      const auto est = min_output_entropy_2(c);
      CHECK(std::abs(output_purity(c, est.witness) - est.purity) <= 1e-9);
      CHECK(std::abs(est.witness.norm() - 1) <= 1e-12);
    }
  }

  SUBCASE("dense Bloch-sphere grid at n = 2") {
    for (Seed s = 0; s < 5; ++s) {
      const Channel c = random_cptp(2, 2 + Index(s % 3), 100 + s);
      const GridMax grid = grid_max_purity(c, 1000000);
      const auto est = min_output_entropy_2(c);
      CHECK(est.purity >= grid.coarse - 1e-12);
      CHECK(std::abs(est.purity - grid.refined) <= 1e-6);
    }
  }

  SUBCASE("determinism") {
    const Channel c = random_cptp(3, 2, 9);
    MinEntropyConfig cfg;
    cfg.seed = 44;
    CHECK(min_output_entropy_2(c, cfg).purity == min_output_entropy_2(c, cfg).purity);
    cfg.restarts = 0;
    CHECK_THROWS_AS(min_output_entropy_2(c, cfg), DomainError);
  }
}

TEST_CASE("entropy exchange") {
  const CMat u = haar_unitary(2, Seed(3));
  std::mt19937_64 g(4);
  const DensityMatrix rho = random_state(2, g);
  const DensityMatrix one = entropy_exchange_state(unitary_channel(u), rho);
  CHECK(one.dim() == 1);
  CHECK(std::abs(one.matrix()(0, 0) - 1.0) <= 1e-12);

  const DensityMatrix sigma =
      entropy_exchange_state(depolarizing(2, 1.0), DensityMatrix::maximally_mixed(2));
  CHECK(oracle::max_diff(sigma.matrix(), CMat::Identity(4, 4) / 4.0) <= 1e-15);
  CHECK(von_neumann_entropy(sigma).value == doctest::Approx(2));

  for (Seed s = 0; s < 20; ++s) {
    const Channel phi = random_cptp(2, 1 + Index(s % 4), 2 * s);
    const Channel psi = random_cptp(2, 1 + Index((s + 1) % 4), 2 * s + 1);
    // Phi on the input factor of the Jamiolkowski state, whose marginal there is I/n.
    std::vector<CMat> lifted;
    for (const auto& m : phi.kraus()) lifted.push_back(tensor(CMat(CMat::Identity(2, 2)), m));
    const Channel id_phi{KrausSet(lifted)};
    const DensityMatrix sig =
        entropy_exchange_state(id_phi, DensityMatrix(psi.jamiolkowski_state()));
    CHECK(std::abs(sig.matrix().trace().real() - 1) <= 1e-11);
    CHECK(std::abs(von_neumann_entropy(sig).value - map_entropy(phi).value) <= 1e-9);
  }

  // Unitarily related Kraus sets give the same entropy.
  const Channel c = random_cptp(3, 3, 21);
  const CMat v = haar_unitary(3, Seed(22));
  std::vector<CMat> mixed;
  for (Index i = 0; i < 3; ++i) {
    CMat op = CMat::Zero(3, 3);
    for (Index j = 0; j < 3; ++j) op += v(i, j) * c.kraus()[std::size_t(j)];
    mixed.push_back(op);
  }
  const DensityMatrix r3 = random_state(3, g);
  CHECK(std::abs(von_neumann_entropy(entropy_exchange_state(c, r3)).value -
                 von_neumann_entropy(entropy_exchange_state(Channel(KrausSet(mixed)), r3)).value) <=
        1e-10);
  CHECK_THROWS_AS(entropy_exchange_state(c, rho), DimensionMismatch);
}

TEST_CASE("depolarizing map and min relation") {
  CHECK(std::abs(depolarizing_min_from_map(3, 0.0)) <= 1e-15);
  CHECK(std::abs(depolarizing_min_from_map(2, -std::log2(7.0 / 16)) + std::log2(5.0 / 8)) <=
        1e-12);
  CHECK(std::abs(depolarizing_min_from_map(2, 2.0) - 1.0) <= 1e-12);
  CHECK(std::abs(depolarizing_map_from_min(2, -std::log2(5.0 / 8)) + std::log2(7.0 / 16)) <= 1e-12);

  for (LogBase base : {LogBase::two, LogBase::e})
    for (Index n : {2, 3, 4}) {
      double prev = -1;
      for (int i = 0; i <= 50; ++i) {
        const double s = 2 * log_in(double(n), base) * i / 50.0;
        const double m = depolarizing_min_from_map(n, s, base);
        CHECK(m > prev);
        prev = m;
        CHECK(std::abs(depolarizing_map_from_min(n, m, base) - s) <= 1e-10);
      }
      for (int i = 0; i <= 20; ++i) {
        const double x = i / 20.0;
        const Channel d = depolarizing(n, x);
        const double s_map = map_entropy(d, 2, base).value;
        CHECK(std::abs(depolarizing_min_from_map(n, s_map, base) +
                       log_in(depolarizing_output_purity(n, x), base)) <= 1e-10);
      }
    }

  CHECK_THROWS_AS(depolarizing_min_from_map(2, 2.5), DomainError);
  CHECK_THROWS_AS(depolarizing_min_from_map(2, -0.1), DomainError);
  CHECK_THROWS_AS(depolarizing_map_from_min(2, 1.5), DomainError);
}
