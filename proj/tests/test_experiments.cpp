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

#include "chanest/channel.hpp"
#include "chanest/errors.hpp"
#include "chanest/experiments.hpp"

using namespace chanest;

namespace {

const PdpSpec kPdp{PdpKind::Exponential, 2};

}  // namespace

TEST_CASE("noiseless training inputs equal labels") {
  Rng rng(1);
  const auto s = ChannelScenario::stationary(kPdp, std::numeric_limits<double>::infinity());
  const TrainingSet ts = generate_training_set(s, OfdmConfig::centered(16, 8), 20, rng);
  CHECK(ts.size() == 20);
  CHECK(ts.dimension() == 8);
  CHECK(ts.inputs == ts.labels);
}

TEST_CASE("training sets are reproducible per seed") {
  const auto s = ChannelScenario::quasi_stationary({1, 2, 3, 4}, 5.0);
  const OfdmConfig cfg = OfdmConfig::centered(16, 8);
  Rng a(4), b(4);
  CHECK(generate_training_set(s, cfg, 30, a).inputs == generate_training_set(s, cfg, 30, b).inputs);
  Rng c(4);
  CHECK_THROWS_AS(generate_training_set(s, cfg, 0, c), InvalidArgument);
}

TEST_CASE("LS error equals the noise variance") {
  const OfdmConfig cfg = OfdmConfig::centered(16, 8);
  const auto s = ChannelScenario::stationary(kPdp, 0.0);
  const EvalReport r = evaluate_mse(LsIdentity{}, s, cfg, 40000, EvalStream{3, 1, 1});
  CHECK(std::abs(r.mse - 1.0) <= 3.0 * r.mse_std_error);
  CHECK(r.n_trials == 40000);
  CHECK(r.estimator_id == "ls");
}

TEST_CASE("zero filter error equals the channel power") {
  const OfdmConfig cfg = OfdmConfig::centered(16, 8);
  const auto s = ChannelScenario::stationary(kPdp, 10.0);
  const Estimator zero = LinearWeights{CMatrix::Zero(8, 8)};
  const EvalReport r = evaluate_mse(zero, s, cfg, 40000, EvalStream{3, 2, 1});
  CHECK(std::abs(r.mse - 1.0) <= 3.0 * r.mse_std_error);
}

TEST_CASE("Monte Carlo LMMSE error matches theory") {
  std::uint64_t point = 10;
  for (auto [k, snr] : {std::pair{4, 0.0}, std::pair{12, 10.0}, std::pair{8, -5.0}}) {
    const OfdmConfig cfg = OfdmConfig::centered(16, k);
    const auto s = ChannelScenario::stationary(kPdp, snr);
    const CMatrix r = freq_correlation(kPdp, cfg);
    const EvalReport rep = evaluate_mse(lmmse_weights(r, s.noise_variance()), s, cfg, 40000, EvalStream{5, point++, 1});
    const double theory = lmmse_mse_theoretical(r, s.noise_variance());
    CHECK(std::abs(rep.mse - theory) <= 3.0 * rep.mse_std_error);
    REQUIRE(rep.alpha.has_value());
    CHECK(std::abs(*rep.alpha) <= 3.0 * rep.mse_std_error / theory);
  }
}

TEST_CASE("quasi-stationary reports carry no alpha") {
  const OfdmConfig cfg = OfdmConfig::centered(64, 60);
  const auto s = ChannelScenario::quasi_stationary({4, 8}, 10.0);
  const EvalReport r = evaluate_mse(LsIdentity{}, s, cfg, 2048, EvalStream{1, 1, 1});
  CHECK_FALSE(r.alpha.has_value());
}

TEST_CASE("evaluation is independent of the worker count") {
  const OfdmConfig cfg = OfdmConfig::centered(16, 12);
  const auto s = ChannelScenario::stationary(kPdp, 5.0);
  const Estimator w = lmmse_weights(freq_correlation(kPdp, cfg), s.noise_variance());
  const EvalReport a = evaluate_mse(w, s, cfg, 10000, EvalStream{9, 4, 1});
  const EvalReport b = evaluate_mse(w, s, cfg, 10000, EvalStream{9, 4, 4});
  CHECK(a.mse == b.mse);
  CHECK(a.mse_std_error == b.mse_std_error);
  const EvalReport c = evaluate_mse(w, s, cfg, 10000, EvalStream{9, 5, 1});
  CHECK(a.mse != c.mse);
}

TEST_CASE("standard errors shrink as one over root n") {
  const OfdmConfig cfg = OfdmConfig::centered(16, 8);
  const auto s = ChannelScenario::stationary(kPdp, 0.0);
  const EvalReport a = evaluate_mse(LsIdentity{}, s, cfg, 20000, EvalStream{2, 1, 1});
  const EvalReport b = evaluate_mse(LsIdentity{}, s, cfg, 40000, EvalStream{2, 2, 1});
  CHECK(b.mse_std_error / a.mse_std_error == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.1));
}

TEST_CASE("evaluation rejects mismatched estimators") {
  const OfdmConfig cfg = OfdmConfig::centered(16, 8);
  const auto s = ChannelScenario::stationary(kPdp, 0.0);
  const Estimator w = LinearWeights{CMatrix::Identity(4, 4)};
  CHECK_THROWS_AS(evaluate_mse(w, s, cfg, 100, EvalStream{}), DimensionMismatch);
  CHECK_THROWS_AS(evaluate_mse(LsIdentity{}, s, cfg, 0, EvalStream{}), InvalidArgument);
}

TEST_CASE("trained linear excess error follows D / (M - D)") {
  // complex Gaussian least squares: E[alpha] = D / (M - D)
  const OfdmConfig cfg = OfdmConfig::centered(16, 8);
  const auto s = ChannelScenario::stationary(kPdp, 0.0);
  double sum = 0.0;
  const int reps = 20;
  for (int i = 0; i < reps; ++i) {
    Rng rng = Rng::derive(77, StreamPurpose::Training, static_cast<std::uint64_t>(i));
    const Estimator w = train_linear(generate_training_set(s, cfg, 48, rng));
    sum += *evaluate_mse(w, s, cfg, 20000, EvalStream{77, static_cast<std::uint64_t>(i), 1}).alpha;
  }
  CHECK(sum / reps == doctest::Approx(8.0 / 40.0).epsilon(0.25));
}

TEST_CASE("scaled MSE difference") {
  CHECK(scaled_mse_difference(0.2, 0.2) == 0.0);
  CHECK(scaled_mse_difference(0.11, 0.10) == doctest::Approx(0.1));
  CHECK(scaled_mse_difference(0.09, 0.10) < 0.0);
  CHECK_THROWS_AS(scaled_mse_difference(0.1, 0.0), InvalidArgument);
}

TEST_CASE("symbol partitioning") {
  const OfdmConfig cfg = OfdmConfig::centered(512, 480);
  const auto blocks = partition_symbol(cfg, 60);
  CHECK(blocks.size() == 8);
  std::vector<int> joined;
  for (const auto& b : blocks) {
    CHECK(b.size() == 60);
    joined.insert(joined.end(), b.begin(), b.end());
  }
  CHECK(joined == cfg.usable_indices);
  CHECK(partition_symbol(cfg, 480).size() == 1);
  CHECK_THROWS_AS(partition_symbol(cfg, 7), NonDivisible);
  CHECK_THROWS_AS(partition_symbol(cfg, 0), InvalidArgument);
}
