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

#include "qentropy/haar.hpp"

#include <algorithm>
#include <limits>

namespace qent {

CMat haar_unitary(Index n, Rng& rng) {
  if (n < 1) throw DomainError("haar_unitary: n must be >= 1");
  const CMat z = complex_gaussian(n, n, rng);
  Eigen::HouseholderQR<CMat> qr(z);
  CMat q = qr.householderQ();
  const CMat& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    const Complex phase = mag > 0 ? d / mag : Complex(1);
    q.col(j) *= phase;
  }
  return q;
}

CMat haar_unitary(Index n, Seed seed) {
  Rng rng = make_rng(seed);
  return haar_unitary(n, rng);
}

Vec random_pure_state(Index n, Rng& rng) {
  if (n < 1) throw DomainError("random_pure_state: n must be >= 1");
  return normalized_gaussian_vector(n, rng);
}

Vec random_pure_state(Index n, Seed seed) {
  Rng rng = make_rng(seed);
  return random_pure_state(n, rng);
}

CMat random_density_matrix(Index n, Index rank, Rng& rng) {
  if (n < 1 || rank < 1) throw DomainError("random_density_matrix: n and rank must be >= 1");
  const CMat g = complex_gaussian(n, rank, rng);
  const CMat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

CMat random_density_matrix(Index n, Seed seed) {
  Rng rng = make_rng(seed);
  return random_density_matrix(n, n, rng);
}

void StreamingMoments::merge(const StreamingMoments& other) {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const std::int64_t total = count + other.count;
  const double delta = other.mean - mean;
  mean += delta * double(other.count) / double(total);
  m2 += other.m2 + delta * delta * double(count) * double(other.count) / double(total);
  count = total;
}

double ScalarEstimate::z_score(double value) const {
  const double dev = std::abs(mean - value);
  if (std_error > 0) return dev / std_error;
  return dev > 0 ? std::numeric_limits<double>::infinity() : 0.0;
}

namespace {

double entry_z(double dev, double se, double floor) {
  dev = std::abs(dev);
  if (dev <= floor) return 0.0;
  if (se > 0) return (dev - floor) / se;
  return std::numeric_limits<double>::infinity();
}

}  // namespace

double MatrixEstimate::max_z_score(const CMat& value, double floor) const {
  if (value.rows() != mean.rows() || value.cols() != mean.cols())
    throw DimensionMismatch("MatrixEstimate: shape mismatch");
  double worst = 0;
  for (Index i = 0; i < mean.rows(); ++i)
    for (Index j = 0; j < mean.cols(); ++j) {
      const Complex d = mean(i, j) - value(i, j);
      worst = std::max(worst, entry_z(d.real(), std_error_re(i, j), floor));
      worst = std::max(worst, entry_z(d.imag(), std_error_im(i, j), floor));
    }
  return worst;
}

bool MatrixEstimate::agrees_with(const CMat& value, double sigmas, double floor) const {
  return max_z_score(value, floor) <= sigmas;
}

double sphere_average_closed_form(const CMat& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw DimensionMismatch("sphere_average_closed_form: matrix must be square");
  const double n = double(m.rows());
  const double hs = (m * m.adjoint()).trace().real();
  return (hs + std::norm(m.trace())) / (n * (n + 1));
}

ScalarEstimate sphere_average_monte_carlo(const CMat& m, std::int64_t samples, Seed seed) {
  if (m.rows() != m.cols()) throw DimensionMismatch("sphere_average_monte_carlo: non-square");
  if (samples < 100) throw DomainError("sphere_average_monte_carlo: need at least 100 samples");
  return sphere_monte_carlo(m.rows(), samples, seed, [&](const Vec& psi) {
    return std::norm(psi.dot(m * psi));
  });
}

const char* to_string(TwirlForm form) {
  return form == TwirlForm::corrected ? "corrected" : "printed";
}

TwirlCoefficients twofold_twirl_coefficients(const CMat& a, Index n, TwirlForm form) {
  if (n < 2) throw DomainError("twofold_twirl: n must be >= 2");
  if (a.rows() != n * n || a.cols() != n * n)
    throw DimensionMismatch("twofold_twirl: A must be n^2 x n^2");
  const CMat s = swap_operator(n);
  const Complex tr_a = a.trace();
  const Complex tr_as = (a * s).trace();
  const double nn = double(n);
  const double d = nn * nn - 1;
  if (form == TwirlForm::corrected)
    return {(tr_a - tr_as / nn) / d, (tr_as - tr_a / nn) / d};
  const Complex ci = tr_a / d - tr_as / (nn * d);
  const Complex cs = tr_a / (nn * d) - tr_as / d;
  return {ci * ci, -(cs * cs)};
}

CMat twofold_twirl_closed_form(const CMat& a, Index n, TwirlForm form) {
  const auto c = twofold_twirl_coefficients(a, n, form);
  return c.identity * CMat::Identity(n * n, n * n) + c.swap * swap_operator(n);
}

MatrixEstimate twofold_twirl_monte_carlo(const CMat& a, Index n, std::int64_t samples, Seed seed) {
  if (n < 1 || a.rows() != n * n || a.cols() != n * n)
    throw DimensionMismatch("twofold_twirl_monte_carlo: A must be n^2 x n^2");
  if (samples < 100) throw DomainError("twofold_twirl_monte_carlo: need at least 100 samples");
  const Index d = n * n;
  // Streaming entrywise moments of real and imaginary parts.
  Eigen::ArrayXXd mean_re = Eigen::ArrayXXd::Zero(d, d), mean_im = mean_re;
  Eigen::ArrayXXd m2_re = mean_re, m2_im = mean_re;
  std::int64_t count = 0;
  const std::int64_t blocks = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
  for (std::int64_t b = 0; b < blocks; ++b) {
    Rng rng = make_rng(derive_seed(seed, {std::uint64_t(b)}));
    const std::int64_t block_count = std::min(kMonteCarloBlock, samples - b * kMonteCarloBlock);
    Eigen::ArrayXXd bm_re = Eigen::ArrayXXd::Zero(d, d), bm_im = bm_re, b2_re = bm_re,
                    b2_im = bm_re;
    for (std::int64_t s = 0; s < block_count; ++s) {
      const CMat u = haar_unitary(n, rng);
      const CMat uu = tensor(u, u);
      const CMat x = uu * a * uu.adjoint();
      const double k = double(s + 1);
      const Eigen::ArrayXXd re = x.real().array(), im = x.imag().array();
      const Eigen::ArrayXXd dre = re - bm_re, dim = im - bm_im;
      bm_re += dre / k;
      bm_im += dim / k;
      b2_re += dre * (re - bm_re);
      b2_im += dim * (im - bm_im);
    }
    if (count == 0) {
      mean_re = bm_re, mean_im = bm_im, m2_re = b2_re, m2_im = b2_im;
      count = block_count;
      continue;
    }
    const double na = double(count), nb = double(block_count), nt = na + nb;
    const Eigen::ArrayXXd dre = bm_re - mean_re, dim = bm_im - mean_im;
    mean_re += dre * (nb / nt);
    mean_im += dim * (nb / nt);
    m2_re += b2_re + dre.square() * (na * nb / nt);
    m2_im += b2_im + dim.square() * (na * nb / nt);
    count += block_count;
  }
  MatrixEstimate est;
  est.mean.resize(d, d);
  est.mean.real() = mean_re.matrix();
  est.mean.imag() = mean_im.matrix();
  const double denom = count > 1 ? double(count - 1) * double(count) : 1.0;
  est.std_error_re = (m2_re / denom).sqrt().matrix();
  est.std_error_im = (m2_im / denom).sqrt().matrix();
  est.samples = count;
  est.seed = seed;
  return est;
}

TwirlFormVerdict compare_twirl_forms(const CMat& a, Index n, const MatrixEstimate& mc) {
  TwirlFormVerdict v;
  const CMat corrected = twofold_twirl_closed_form(a, n, TwirlForm::corrected);
  const CMat printed = twofold_twirl_closed_form(a, n, TwirlForm::printed);
  v.corrected_max_z = mc.max_z_score(corrected);
  v.printed_max_z = mc.max_z_score(printed);
  v.corrected_agrees = v.corrected_max_z <= kMonteCarloSigmas;
  v.printed_agrees = v.printed_max_z <= kMonteCarloSigmas;
  if (v.corrected_agrees && v.printed_agrees)
    v.supported = "both";
  else if (v.corrected_agrees)
    v.supported = "corrected";
  else if (v.printed_agrees)
    v.supported = "printed";
  else
    v.supported = "neither";
  return v;
}

TwirlSanity twirl_sanity(Index n, TwirlForm form) {
  const CMat id = CMat::Identity(n * n, n * n);
  const CMat s = swap_operator(n);
  TwirlSanity out;
  out.identity_error = max_abs(twofold_twirl_closed_form(id, n, form) - id);
  out.swap_error = max_abs(twofold_twirl_closed_form(s, n, form) - s);
  out.linearity_error = max_abs(twofold_twirl_closed_form(CMat(2.0 * id), n, form) -
                                2.0 * twofold_twirl_closed_form(id, n, form));
  return out;
}

}  // namespace qent
