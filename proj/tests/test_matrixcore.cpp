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
#include "qentropy/matrixcore.hpp"

using namespace qent;

namespace {

CMat diag(std::initializer_list<double> d) {
  CMat m = CMat::Zero(Index(d.size()), Index(d.size()));
  Index i = 0;
  for (double x : d) m(i, i) = x, ++i;
  return m;
}

CMat pauli_x() {
  CMat x = CMat::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1;
  return x;
}

CMat random_psd(Index n, std::mt19937_64& g) {
  const CMat a = oracle::gaussian(n, n, g);
  return a * a.adjoint();
}

}  // namespace

TEST_CASE("tensor") {
  CHECK(tensor(CMat::Identity(2, 2), CMat::Identity(2, 2)) == CMat(CMat::Identity(4, 4)));
  CHECK(tensor(diag({1, 2}), diag({3, 4})) == diag({3, 4, 6, 8}));

  std::mt19937_64 g(11);
  for (int t = 0; t < 20; ++t) {
    const CMat a = oracle::gaussian(2, 3, g), b = oracle::gaussian(3, 2, g);
    CHECK(oracle::max_diff(tensor(a, b), oracle::kron(a, b)) == 0.0);
  }

  SUBCASE("X (x) X on vec(I) equals vec(X I X^T)") {
    const CMat x = pauli_x();
    const Vec lhs = tensor(x, x) * vec(CMat(CMat::Identity(2, 2)));
    // Brute force over the 4x4 index expansion.
    Vec expected = Vec::Zero(4);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        for (Index k = 0; k < 2; ++k)
          for (Index l = 0; l < 2; ++l)
            expected(i * 2 + j) += x(i, k) * x(j, l) * (k == l ? 1.0 : 0.0);
    CHECK(oracle::max_diff(lhs, expected) == 0.0);
    CHECK(oracle::max_diff(lhs, vec(CMat(x * x.transpose()))) == 0.0);
  }
}

TEST_CASE("vec and unvec") {
  Vec v = vec(CMat(CMat::Identity(2, 2)));
  CHECK(v == (Vec(4) << 1, 0, 0, 1).finished());
  CMat e01 = CMat::Zero(2, 2);
  e01(0, 1) = 1;
  CHECK(vec(e01) == (Vec(4) << 0, 1, 0, 0).finished());
  CHECK(unvec((Vec(4) << 1, 0, 0, 1).finished(), 2, 2) == CMat(CMat::Identity(2, 2)));
  CHECK(unvec((Vec(4) << 0, 1, 0, 0).finished(), 2, 2) == e01);
  CHECK_THROWS_AS(unvec(Vec::Zero(5), 2, 2), DimensionMismatch);

  std::mt19937_64 g(3);
  for (int t = 0; t < 50; ++t) {
    const CMat a = oracle::gaussian(3, 4, g);
    CHECK(unvec(vec(a), 3, 4) == a);
  }
  for (Index r = 1; r <= 8; ++r)
    for (Index c = 1; c <= 8; ++c) {
      const CMat a = oracle::gaussian(r, c, g);
      REQUIRE(unvec(vec(a), r, c) == a);
    }

  SUBCASE("vec(|i><j|) is |i> (x) |j>") {
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j) {
        Vec expected = Vec::Zero(9);
        expected(i * 3 + j) = 1;
        CHECK(vec(oracle::ket_bra(3, i, j)) == expected);
      }
  }
}

TEST_CASE("swap operator") {
  CMat expected = CMat::Zero(4, 4);
  expected(0, 0) = expected(1, 2) = expected(2, 1) = expected(3, 3) = 1;
  CHECK(swap_operator(2, 2) == expected);

  for (Index n : {2, 3, 4}) {
    const CMat s = swap_operator(n);
    const Vec vi = vec(CMat(CMat::Identity(n, n)));
    CHECK(s * vi == vi);
    CHECK(s * s == CMat(CMat::Identity(n * n, n * n)));
    CHECK(s.transpose() == s);
  }

  std::mt19937_64 g(5);
  for (int t = 0; t < 20; ++t) {
    const CMat a = oracle::gaussian(3, 3, g), b = oracle::gaussian(3, 3, g);
    const CMat s = swap_operator(3);
    CHECK(oracle::max_diff(s * tensor(a, b) * s, oracle::kron(b, a)) <= 1e-12);
  }

  SUBCASE("rectangular swap exchanges factors") {
    const Vec mu = oracle::gaussian(2, 1, g), nu = oracle::gaussian(3, 1, g);
    const CMat s = swap_operator(2, 3);
    CHECK(oracle::max_diff(s * oracle::kron(mu, nu), oracle::kron(nu, mu)) <= 1e-14);
  }
}

TEST_CASE("bipartite vec permutation") {
  CHECK(bipartite_vec_permutation(1, 1, 1, 1) == CMat::Ones(1, 1));

  std::mt19937_64 g(7);
  for (Index na = 1; na <= 3; ++na)
    for (Index nb = 1; nb <= 3; ++nb)
      for (Index ma = 1; ma <= 3; ++ma)
        for (Index mb = 1; mb <= 3; ++mb) {
          const CMat p = bipartite_vec_permutation(na, nb, ma, mb);
          // Exactly one 1 per row and column.
          for (Index i = 0; i < p.rows(); ++i) {
            REQUIRE(p.row(i).cwiseAbs().sum() == 1.0);
            REQUIRE(p.col(i).cwiseAbs().sum() == 1.0);
          }
          for (int t = 0; t < 100; ++t) {
            const CMat a = oracle::gaussian(na, ma, g), b = oracle::gaussian(nb, mb, g);
            const Vec lhs = p * vec(oracle::kron(a, b));
            const Vec rhs = oracle::kron(vec(a), vec(b));
            REQUIRE(oracle::max_diff(lhs, rhs) == 0.0);
          }
        }
}

TEST_CASE("hermitian eigendecomposition") {
  auto e = hermitian_eig(diag({3, 1, 2}));
  CHECK(e.values(0) == doctest::Approx(3));
  CHECK(e.values(1) == doctest::Approx(2));
  CHECK(e.values(2) == doctest::Approx(1));

  e = hermitian_eig(pauli_x());
  CHECK(e.values(0) == doctest::Approx(1));
  CHECK(e.values(1) == doctest::Approx(-1));
  const double r = 1 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(e.vectors(0, 0)) - r) < 1e-12);
  CHECK(std::abs(e.vectors(0, 0) - e.vectors(1, 0)) < 1e-12);
  CHECK(std::abs(e.vectors(0, 1) + e.vectors(1, 1)) < 1e-12);

  std::mt19937_64 g(13);
  for (int t = 0; t < 100; ++t) {
    const CMat m = oracle::hermitian(8, g);
    const auto d = hermitian_eig(m);
    const CMat back = d.vectors * d.values.cast<Complex>().asDiagonal() * d.vectors.adjoint();
    CHECK(max_abs(CMat(back - m)) <= 1e-9 * (1 + max_abs(m)));
    CHECK(is_unitary(d.vectors, 1e-10));
    CHECK(std::abs(d.values.sum() - m.trace().real()) <= 1e-10);
    for (Index i = 0; i + 1 < d.values.size(); ++i) CHECK(d.values(i) >= d.values(i + 1));
  }

  CMat bad = CMat::Zero(2, 2);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(hermitian_eig(bad), NotHermitian);
}

TEST_CASE("schatten norm") {
  for (Index n : {2, 3, 5})
    for (double p : {1.0, 2.0, 3.0, 7.5}) {
      const CMat m = CMat::Identity(n, n) / double(n);
      CHECK(schatten_norm(m, p) == doctest::Approx(std::pow(double(n), 1 / p) / double(n)));
    }
  CHECK(schatten_norm(diag({0.5, 0.5, 0, 0}), 2) == doctest::Approx(std::sqrt(0.5)));
  CHECK(schatten_norm(diag({0.5, -2, 1}), INFINITY) == doctest::Approx(2));
  CHECK_THROWS_AS(schatten_norm(diag({1, 1}), 0.5), DomainError);

  std::mt19937_64 g(17);
  for (int t = 0; t < 50; ++t) {
    const CMat a = random_psd(2, g), b = random_psd(3, g);
    for (double p : {1.0, 2.0, 3.0})
      CHECK(std::abs(schatten_norm(tensor(a, b), p) - schatten_norm(a, p) * schatten_norm(b, p)) <=
            1e-10 * (1 + schatten_norm(tensor(a, b), p)));
    const CMat m = oracle::gaussian(4, 3, g);
    CHECK(std::abs(std::pow(schatten_norm(m, 2), 2) - (m.adjoint() * m).trace().real()) <= 1e-10);
  }
}

TEST_CASE("partial trace") {
  std::mt19937_64 g(19);
  const CMat rho = oracle::density(2, g), sigma = oracle::density(3, g);
  const CMat joint = tensor(rho, sigma);
  CHECK(oracle::max_diff(partial_trace(joint, 2, 3, Subsystem::A), rho) <= 1e-14);
  CHECK(oracle::max_diff(partial_trace(joint, 2, 3, Subsystem::B), sigma) <= 1e-14);

  for (Index n : {2, 3, 4}) {
    const Vec vi = vec(CMat(CMat::Identity(n, n)));
    const CMat omega = vi * vi.adjoint() / double(n);
    CHECK(oracle::max_diff(partial_trace(omega, n, n, Subsystem::A),
                           CMat(CMat::Identity(n, n) / double(n))) <= 1e-15);
  }

  for (int t = 0; t < 20; ++t) {
    const CMat m = oracle::gaussian(6, 6, g);
    const CMat ka = partial_trace(m, 2, 3, Subsystem::A);
    const CMat kb = partial_trace(m, 2, 3, Subsystem::B);
    CHECK(oracle::max_diff(ka, oracle::trace_out_b(m, 2, 3)) <= 1e-13);
    CHECK(oracle::max_diff(kb, oracle::trace_out_a(m, 2, 3)) <= 1e-13);
    CHECK(std::abs(ka.trace() - m.trace()) <= 1e-12);
  }
  CHECK_THROWS_AS(partial_trace(CMat::Zero(5, 5), 2, 3, Subsystem::A), DimensionMismatch);
}

TEST_CASE("unitary exponential and coordinates") {
  std::mt19937_64 g(23);
  const Eigen::VectorXd x = Eigen::VectorXd::Random(9);
  const CMat h = hermitian_from_coordinates(x, 3);
  CHECK(is_hermitian(h));
  CHECK(h(0, 0).real() == x(0));
  CHECK(h(0, 1) == Complex(x(3), x(4)));
  CHECK(is_unitary(unitary_exp(h), 1e-12));
  // exp(i diag(a)) = diag(e^{ia}).
  const CMat u = unitary_exp(diag({0.3, -1.2}));
  CHECK(std::abs(u(0, 0) - std::polar(1.0, 0.3)) < 1e-14);
  CHECK(std::abs(u(1, 1) - std::polar(1.0, -1.2)) < 1e-14);
}
