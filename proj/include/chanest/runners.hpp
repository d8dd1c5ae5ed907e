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
#include <string>
#include <vector>

#include <json.hpp>

#include "chanest/analysis.hpp"
#include "chanest/mlp.hpp"
#include "chanest/plot.hpp"
#include "chanest/table.hpp"

namespace chanest {

/// Seed, parallelism and trial-count override shared by every runner.
struct RunContext {
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::optional<std::int64_t> trials;  ///< overrides every per-point trial count
};

inline constexpr std::int64_t kLinearTrials = 200000;
inline constexpr std::int64_t kMlpTrials = 20000;

/// A claim a runner verifies on its own output.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RunResult {
  std::string command;
  Table table;
  PlotSpec plot;
  nlohmann::json metadata = nlohmann::json::object();
  std::vector<Check> checks;

  bool all_passed() const;
};

struct AlphaCurveOptions {
  double epsilon = 0.05;
  std::vector<int> kappa_grid = default_kappa_grid();
};

struct Fig5Options {
  int dft_size = 16;
  std::vector<int> k_list{4, 8, 12};
  int m = 600;
  int tau_max = 2;
  std::vector<double> snr_db{-10, -5, 0, 5, 10, 15, 20};
};

struct AlphaVsKOptions {
  int m = 600;
  int tau_max = 2;
  std::vector<int> k_list{4, 8, 12, 20, 30, 40, 60, 80, 100, 120};
  std::vector<double> snr_db{-10, -5, 0, 10, 20};
  /// Fixed DFT size; by default the smallest power of two with at least four
  /// null carriers and a CP longer than tau_max.
  std::optional<int> dft_size;
};

struct AlphaVsMOptions {
  int dft_size = 256;
  std::vector<int> k_list{120, 180, 240};
  int tau_max = 2;
  double snr_db = 0.0;
  double alpha_target = 0.1;
  /// Training sizes; by default 200..4000 step 100 plus ceil(1.2 K) and 10 K.
  std::vector<int> m_grid;
};

struct DnnQuasiOptions {
  int dft_size = 64;
  int k = 60;
  std::vector<int> tau_set{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
  std::vector<double> snr_db{0, 10, 20};
  int m_small = 600;
  int m_large = 50000;
  MlpHyper hyper_small{};
  MlpHyper hyper_large{};
};

struct PartitionOptions {
  int dft_size = 512;
  int k = 480;
  int m = 600;
  int tau_max = 64;
  std::vector<int> blocks{30, 60, 120, 240, 480};
  std::vector<double> snr_db{-10, -5, 0, 5, 10, 15, 20, 25, 30};
};

/// Smallest power of two N with N > K + 4 and N / 4 >= tau_max.
int dft_size_for(int k, int tau_max);

/// Smallest grid M whose alpha, and every alpha at larger grid M, is <= target.
std::optional<int> required_sample_size(const std::vector<int>& m_grid, const std::vector<double>& alpha,
                                        double target);

RunResult run_alpha_curve(const AlphaCurveOptions& opt, const RunContext& ctx);
RunResult run_fig5(const Fig5Options& opt, const RunContext& ctx);
RunResult run_alpha_vs_k(const AlphaVsKOptions& opt, const RunContext& ctx);
RunResult run_alpha_vs_m(const AlphaVsMOptions& opt, const RunContext& ctx);
RunResult run_dnn_quasi(const DnnQuasiOptions& opt, const RunContext& ctx);
RunResult run_partition(const PartitionOptions& opt, const RunContext& ctx);

}  // namespace chanest
