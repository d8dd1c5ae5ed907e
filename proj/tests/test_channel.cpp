// chanest: learned OFDM channel estimation and sample-complexity analysis
// Copyright (C) 2026 The chanest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "chanest/analysis.hpp"
#include "chanest/channel.hpp"
#include "chanest/errors.hpp"

using namespace chanest;

TEST_CASE("centered usable indices skip DC and the band edges") {
  const OfdmConfig cfg = OfdmConfig::centered(16, 5);
  CHECK(cfg.cp_len == 4);
  CHECK(cfg.usable_indices == std::vector<int>{1, 2, 3, 14, 15});
  const OfdmConfig big = OfdmConfig::centered(512, 480);
  CHECK(big.usable_count() == 480);
  CHECK(std::find(big.usable_indices.begin(), big.usable_indices.end(), 0) == big.usable_indices.end());
  CHECK_THROWS_AS(OfdmConfig::centered(16, 16), InvalidArgument);
  CHECK_THROWS_AS(OfdmConfig::centered(18, 4), InvalidArgument);
}

TEST_CASE("exponential PDP matches the closed form") {
  // exp(-l/2) normalized, l = 0..2
  const RVector p = pdp_powers({PdpKind::Exponential, 2});
  REQUIRE(p.size() == 3);
  CHECK(p(0) == doctest::Approx(0.50648039).epsilon(1e-7));
  CHECK(p(1) == doctest::Approx(0.30719589).epsilon(1e-7));
  CHECK(p(2) == doctest::Approx(0.18632372).epsilon(1e-7));
  CHECK(pdp_powers({PdpKind::Exponential, 0})(0) == 1.0);
}

TEST_CASE("uniform PDP and normalization") {
  const RVector u = pdp_powers({PdpKind::Uniform, 16});
  REQUIRE(u.size() == 17);
  for (int i = 0; i < 17; ++i) CHECK(u(i) == doctest::Approx(1.0 / 17.0));
  for (int tau : {1, 5, 64}) CHECK(std::abs(pdp_powers({PdpKind::Exponential, tau}).sum() - 1.0) < 1e-12);
}

TEST_CASE("CP compatibility") {
  const OfdmConfig cfg = OfdmConfig::centered(64, 60);
  CHECK_NOTHROW(check_compatible({PdpKind::Uniform, 16}, cfg));
  CHECK_THROWS_AS(check_compatible({PdpKind::Uniform, 17}, cfg), InvalidArgument);
  CHECK_THROWS_AS(check_compatible({PdpKind::Uniform, -1}, cfg), InvalidArgument);
}

TEST_CASE("frequency correlation is Hermitian, PSD and unit-diagonal") {
  const OfdmConfig cfg = OfdmConfig::centered(64, 40);
  const CMatrix r = freq_correlation({PdpKind::Exponential, 8}, cfg);
  CHECK((r - r.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  for (int i = 0; i < r.rows(); ++i) CHECK(r(i, i).real() == doctest::Approx(1.0));
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(r, Eigen::EigenvaluesOnly);
  CHECK(eig.eigenvalues().minCoeff() >= -1e-9);
}

TEST_CASE("frequency correlation depends on index differences only") {
  OfdmConfig a = OfdmConfig::centered(32, 4);
  OfdmConfig b = a;
  for (int& i : b.usable_indices) i = (i + 5) % 32;
  const PdpSpec pdp{PdpKind::Exponential, 3};
  CHECK((freq_correlation(pdp, a) - freq_correlation(pdp, b)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("frequency correlation agrees with the tap-domain route") {
  const OfdmConfig cfg = OfdmConfig::centered(16, 12);
  const PdpSpec pdp{PdpKind::Exponential, 2};
  const CMatrix f = tap_to_cfr_matrix(cfg, 3);
  const RVector p = pdp_powers(pdp);
  const CMatrix via_taps = f * p.cast<cdouble>().asDiagonal() * f.adjoint();
  CHECK((via_taps - freq_correlation(pdp, cfg)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("sampled channels reproduce the correlation matrix") {
  const OfdmConfig cfg = OfdmConfig::centered(16, 8);
  const PdpSpec pdp{PdpKind::Exponential, 2};
  const ChannelSampler sampler(ChannelScenario::stationary(pdp, 0.0), cfg);
  Rng rng(11);
  CMatrix h, y;
  const int n = 200000;
  sampler.sample(rng, n, h, y);
  const CMatrix emp = h * h.adjoint() / static_cast<double>(n);
  // entries are averages of n products with unit-scale variance
  CHECK((emp - freq_correlation(pdp, cfg)).cwiseAbs().maxCoeff() < 5.0 / std::sqrt(n) * 2.0);
  const CMatrix noise = y - h;
  const double nv = noise.cwiseAbs2().mean();
  CHECK(nv == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("sampling is deterministic per seed") {
  const OfdmConfig cfg = OfdmConfig::centered(16, 8);
  const PdpSpec pdp{PdpKind::Exponential, 2};
  Rng a(5), b(5), c(6);
  const auto ra = sample_channel(pdp, cfg, a);
  const auto rb = sample_channel(pdp, cfg, b);
  const auto rc = sample_channel(pdp, cfg, c);
  CHECK(ra.cfr == rb.cfr);
  CHECK(ra.taps == rb.taps);
  CHECK(ra.cfr != rc.cfr);
  CHECK(observe_ls(ra.cfr, 0.0, a) == ra.cfr);
}

TEST_CASE("noise variance from SNR") {
  CHECK(noise_variance_from_snr(0.0) == 1.0);
  CHECK(noise_variance_from_snr(20.0) == doctest::Approx(0.01));
  CHECK(noise_variance_from_snr(-10.0) == doctest::Approx(10.0));
  CHECK(ChannelScenario::stationary({PdpKind::Exponential, 2}, 10.0).noise_variance() == doctest::Approx(0.1));
}

TEST_CASE("quasi-stationary delays are uniform over the set") {
  std::vector<int> set(16);
  std::iota(set.begin(), set.end(), 1);
  const ChannelSampler sampler(ChannelScenario::quasi_stationary(set, 10.0), OfdmConfig::centered(64, 60));
  Rng rng(21);
  std::vector<double> obs(16, 0.0), expected(16, 100000.0 / 16.0);
  for (int i = 0; i < 100000; ++i) obs[static_cast<std::size_t>(sampler.draw_tau(rng) - 1)] += 1.0;
  CHECK(chi_square_gof_pvalue(obs, expected) > 0.01);
}
