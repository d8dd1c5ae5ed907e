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

#include "chanest/experiments.hpp"

#include <cmath>

#include "chanest/errors.hpp"
#include "chanest/stats.hpp"

namespace chanest {

TrainingSet generate_training_set(const ChannelScenario& scenario, const OfdmConfig& cfg, int m, Rng& rng) {
  if (m < 1) throw InvalidArgument("training set size must be positive");
  const ChannelSampler sampler(scenario, cfg);
  TrainingSet ts;
  sampler.sample(rng, m, ts.labels, ts.inputs);
  ts.provenance = scenario.describe() + ", snr_db=" + std::to_string(scenario.snr_db) +
                  ", N=" + std::to_string(cfg.dft_size) + ", K=" + std::to_string(cfg.usable_count());
  return ts;
}

std::vector<EvalReport> evaluate_mse(std::span<const NamedEstimator> estimators, const ChannelScenario& scenario,
                                     const OfdmConfig& cfg, std::int64_t n_trials, const EvalStream& stream) {
  if (n_trials < 1) throw InvalidArgument("n_trials must be positive");
  const int k = cfg.usable_count();
  for (const auto& named : estimators) {
    const int d = estimator_dimension(*named.estimator);
    if (d != 0 && d != k)
      throw DimensionMismatch("estimator '" + named.id + "' has dimension " + std::to_string(d) +
                              " but the grid has " + std::to_string(k) + " usable subcarriers");
  }

  const ChannelSampler sampler(scenario, cfg);
  const auto n_chunks = static_cast<std::size_t>((n_trials + kEvalChunk - 1) / kEvalChunk);
  std::vector<std::vector<RunningStats>> partial(n_chunks, std::vector<RunningStats>(estimators.size()));

  parallel_for(n_chunks, stream.workers, [&](std::size_t c) {
    const auto begin = static_cast<std::int64_t>(c) * kEvalChunk;
    const int count = static_cast<int>(std::min<std::int64_t>(kEvalChunk, n_trials - begin));
    Rng rng = Rng::derive(stream.seed, StreamPurpose::Evaluation, stream.point, c);
    CMatrix cfr, ls;
    sampler.sample(rng, count, cfr, ls);
    for (std::size_t e = 0; e < estimators.size(); ++e) {
      const CMatrix est = apply_estimator_batch(*estimators[e].estimator, ls);
      const RVector err = (est - cfr).colwise().squaredNorm().transpose() / static_cast<double>(k);
      for (int t = 0; t < count; ++t) partial[c][e].add(err[t]);
    }
  });

  std::optional<double> optimum;
  if (const auto* pdp = std::get_if<PdpSpec>(&scenario.pdp_rule))
    optimum = lmmse_mse_theoretical(freq_correlation(*pdp, cfg), scenario.noise_variance());

  std::vector<EvalReport> reports;
  for (std::size_t e = 0; e < estimators.size(); ++e) {
    RunningStats total;
    for (const auto& chunk : partial) total.merge(chunk[e]);
    EvalReport r;
    r.estimator_id = estimators[e].id;
    r.scenario = scenario.describe();
    r.snr_db = scenario.snr_db;
    r.n_trials = n_trials;
    r.mse = total.mean();
    r.mse_std_error = total.std_error();
    if (optimum) {
      r.alpha = scaled_mse_difference(r.mse, *optimum);
      r.metadata["mse_optimum"] = *optimum;
      r.metadata["alpha_std_error"] = r.mse_std_error / *optimum;
    }
    r.metadata["seed"] = stream.seed;
    r.metadata["point"] = stream.point;
    reports.push_back(std::move(r));
  }
  return reports;
}

EvalReport evaluate_mse(const Estimator& e, const ChannelScenario& scenario, const OfdmConfig& cfg,
                        std::int64_t n_trials, const EvalStream& stream) {
  const NamedEstimator named{estimator_type(e), &e};
  return evaluate_mse(std::span<const NamedEstimator>(&named, 1), scenario, cfg, n_trials, stream).front();
}

EvalReport evaluate_mse(const Estimator& e, const ChannelScenario& scenario, const OfdmConfig& cfg,
                        std::int64_t n_trials, Rng& rng) {
  const EvalStream stream{rng.engine()(), 0, 1};
  return evaluate_mse(e, scenario, cfg, n_trials, stream);
}

double scaled_mse_difference(double mse_learned, double mse_opt) {
  if (!(mse_opt > 0.0)) throw InvalidArgument("optimal MSE must be positive");
  return (mse_learned - mse_opt) / mse_opt;
}

std::vector<std::vector<int>> partition_symbol(const OfdmConfig& cfg, int block) {
  const int k = cfg.usable_count();
  if (block < 1) throw InvalidArgument("block size must be positive");
  if (k % block != 0)
    throw NonDivisible("block size " + std::to_string(block) + " does not divide K=" + std::to_string(k));
  std::vector<std::vector<int>> blocks;
  for (int start = 0; start < k; start += block)
    blocks.emplace_back(cfg.usable_indices.begin() + start, cfg.usable_indices.begin() + start + block);
  return blocks;
}

BlockwiseLinear train_blockwise(const TrainingSet& ts, int block) {
  const int k = ts.dimension();
  if (block < 1) throw InvalidArgument("block size must be positive");
  if (k % block != 0)
    throw NonDivisible("block size " + std::to_string(block) + " does not divide K=" + std::to_string(k));
  BlockwiseLinear out;
  for (int start = 0; start < k; start += block) out.blocks.push_back(train_linear(ts.rows(start, block)));
  return out;
}

}  // namespace chanest
