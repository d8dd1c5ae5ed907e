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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chanest/channel.hpp"
#include "chanest/estimators.hpp"
#include "chanest/rng.hpp"
#include "chanest/training_set.hpp"

namespace chanest {

/// M independent (LS observation, true CFR) pairs drawn from the scenario.
TrainingSet generate_training_set(const ChannelScenario& scenario, const OfdmConfig& cfg, int m, Rng& rng);

struct EvalReport {
  std::string estimator_id;
  std::string scenario;
  double snr_db = 0.0;
  std::int64_t n_trials = 0;
  double mse = 0.0;
  double mse_std_error = 0.0;
  /// Scaled MSE difference against the analytic LMMSE optimum; stationary only.
  std::optional<double> alpha;
  nlohmann::json metadata = nlohmann::json::object();
};

struct NamedEstimator {
  std::string id;
  const Estimator* estimator = nullptr;
};

/// Where evaluation draws come from. Trials are cut into fixed-size chunks;
/// chunk c draws from Rng::derive(seed, Evaluation, point, c), so the result
/// does not depend on the number of workers.
struct EvalStream {
  std::uint64_t seed = 0;
  std::uint64_t point = 0;
  unsigned workers = 1;
};

inline constexpr int kEvalChunk = 1024;

/// Monte Carlo estimate of E|f(h_ls) - h|^2 / K for every estimator, all on the
/// same fresh realizations.
std::vector<EvalReport> evaluate_mse(std::span<const NamedEstimator> estimators, const ChannelScenario& scenario,
                                     const OfdmConfig& cfg, std::int64_t n_trials, const EvalStream& stream);

EvalReport evaluate_mse(const Estimator& e, const ChannelScenario& scenario, const OfdmConfig& cfg,
                        std::int64_t n_trials, const EvalStream& stream);

/// Single-threaded variant drawing its stream key from `rng`.
EvalReport evaluate_mse(const Estimator& e, const ChannelScenario& scenario, const OfdmConfig& cfg,
                        std::int64_t n_trials, Rng& rng);

/// (mse_learned - mse_opt) / mse_opt, reported as-is even when negative.
double scaled_mse_difference(double mse_learned, double mse_opt);

/// K / block contiguous blocks of usable subcarrier indices.
std::vector<std::vector<int>> partition_symbol(const OfdmConfig& cfg, int block);

/// One trained filter per block position, all on the same training symbols.
BlockwiseLinear train_blockwise(const TrainingSet& ts, int block);

}  // namespace chanest
