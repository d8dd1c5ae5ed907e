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

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chanest/rng.hpp"
#include "chanest/types.hpp"

namespace chanest {

/// Frequency grid of one OFDM symbol.
struct OfdmConfig {
  int dft_size = 0;
  int cp_len = 0;
  /// Usable subcarrier indices in [1, N-1], ordered from the lowest positive
  /// frequency upward and then the negative half; DC is never usable.
  std::vector<int> usable_indices;

  int usable_count() const { return static_cast<int>(usable_indices.size()); }

  /// Centered allocation: {1..ceil(K/2)} U {N-floor(K/2)..N-1}, CP = N/4.
  static OfdmConfig centered(int dft_size, int usable_count);
};

enum class PdpKind { Exponential, Uniform };

struct PdpSpec {
  PdpKind kind = PdpKind::Exponential;
  int tau_max = 0;  ///< in sample periods
};

/// Per-realization maximum delay drawn uniformly from a finite set.
struct QuasiStationaryPdp {
  std::vector<int> tau_set;
  PdpKind kind = PdpKind::Exponential;
};

struct ChannelScenario {
  std::variant<PdpSpec, QuasiStationaryPdp> pdp_rule;
  double snr_db = 0.0;

  static ChannelScenario stationary(PdpSpec pdp, double snr_db);
  static ChannelScenario quasi_stationary(std::vector<int> tau_set, double snr_db);

  bool is_stationary() const { return std::holds_alternative<PdpSpec>(pdp_rule); }
  double noise_variance() const;
  /// Largest delay any realization can have.
  int max_tau() const;
  std::string describe() const;
};

struct ChannelRealization {
  CVector taps;
  CVector cfr;
};

/// Noise variance for unit-power pilots and channel: 10^(-snr/10).
double noise_variance_from_snr(double snr_db);

std::string to_string(PdpKind kind);

/// Throws InvalidArgument unless tau_max >= 0 and tau_max <= cp_len.
void check_compatible(const PdpSpec& spec, const OfdmConfig& cfg);

/// Tap powers for l = 0..tau_max, normalized to unit sum.
RVector pdp_powers(const PdpSpec& spec);

/// K x n_taps matrix with entries exp(-j 2 pi idx(k) l / N).
CMatrix tap_to_cfr_matrix(const OfdmConfig& cfg, int n_taps);

/// R_hh on the usable subcarriers; Hermitian with unit diagonal.
CMatrix freq_correlation(const PdpSpec& spec, const OfdmConfig& cfg);

ChannelRealization sample_channel(const PdpSpec& spec, const OfdmConfig& cfg, Rng& rng);

/// LS pilot observation cfr + n, n ~ CN(0, sigma2 I).
CVector observe_ls(const CVector& cfr, double sigma2, Rng& rng);

/// Batched generator of (true CFR, LS observation) pairs for a scenario. Each
/// column consumes the generator in the same order as drawing tau_max (quasi-
/// stationary only), then sample_channel, then observe_ls.
class ChannelSampler {
 public:
  ChannelSampler(const ChannelScenario& scenario, const OfdmConfig& cfg);

  /// Fills cfr and ls with `count` columns.
  void sample(Rng& rng, int count, CMatrix& cfr, CMatrix& ls) const;

  /// Draws one tau_max the way sample() does for each column.
  int draw_tau(Rng& rng) const;

  const OfdmConfig& config() const { return cfg_; }
  double noise_variance() const { return sigma2_; }

 private:
  OfdmConfig cfg_;
  double sigma2_;
  std::vector<int> taus_;
  std::vector<RVector> tap_std_;  // per candidate tau, sqrt of tap powers
  CMatrix dft_;                   // K x (max_tau + 1)
};

}  // namespace chanest
