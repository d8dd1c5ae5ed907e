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

#include "chanest/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "chanest/errors.hpp"

namespace chanest {

OfdmConfig OfdmConfig::centered(int dft_size, int usable_count) {
  if (dft_size < 4 || dft_size % 4 != 0)
    throw InvalidArgument("dft_size must be a positive multiple of 4, got " + std::to_string(dft_size));
  if (usable_count < 1 || usable_count > dft_size - 1)
    throw InvalidArgument("usable_count must be in [1, N-1], got " + std::to_string(usable_count));

  OfdmConfig cfg;
  cfg.dft_size = dft_size;
  cfg.cp_len = dft_size / 4;
  const int upper = (usable_count + 1) / 2;
  const int lower = usable_count / 2;
  for (int i = 1; i <= upper; ++i) cfg.usable_indices.push_back(i);
  for (int i = dft_size - lower; i < dft_size; ++i) cfg.usable_indices.push_back(i);
  return cfg;
}

ChannelScenario ChannelScenario::stationary(PdpSpec pdp, double snr_db) {
  return ChannelScenario{pdp, snr_db};
}

ChannelScenario ChannelScenario::quasi_stationary(std::vector<int> tau_set, double snr_db) {
  if (tau_set.empty()) throw InvalidArgument("quasi-stationary tau set is empty");
  return ChannelScenario{QuasiStationaryPdp{std::move(tau_set), PdpKind::Exponential}, snr_db};
}

double ChannelScenario::noise_variance() const { return noise_variance_from_snr(snr_db); }

int ChannelScenario::max_tau() const {
  if (const auto* fixed = std::get_if<PdpSpec>(&pdp_rule)) return fixed->tau_max;
  const auto& q = std::get<QuasiStationaryPdp>(pdp_rule);
  return *std::max_element(q.tau_set.begin(), q.tau_set.end());
}

std::string ChannelScenario::describe() const {
  std::ostringstream os;
  if (const auto* fixed = std::get_if<PdpSpec>(&pdp_rule)) {
    os << "stationary " << to_string(fixed->kind) << " tau_max=" << fixed->tau_max;
  } else {
    const auto& q = std::get<QuasiStationaryPdp>(pdp_rule);
    os << "quasi-stationary " << to_string(q.kind) << " tau_max in {";
    for (std::size_t i = 0; i < q.tau_set.size(); ++i) os << (i ? "," : "") << q.tau_set[i];
    os << "}";
  }
  return os.str();
}

double noise_variance_from_snr(double snr_db) { return std::pow(10.0, -snr_db / 10.0); }

std::string to_string(PdpKind kind) {
  return kind == PdpKind::Exponential ? "exponential" : "uniform";
}

void check_compatible(const PdpSpec& spec, const OfdmConfig& cfg) {
  if (spec.tau_max < 0) throw InvalidArgument("tau_max must be non-negative");
  if (spec.tau_max > cfg.cp_len)
    throw InvalidArgument("tau_max " + std::to_string(spec.tau_max) + " exceeds the CP length " +
                          std::to_string(cfg.cp_len));
}

RVector pdp_powers(const PdpSpec& spec) {
  if (spec.tau_max < 0) throw InvalidArgument("tau_max must be non-negative");
  const int n = spec.tau_max + 1;
  RVector p(n);
  if (spec.kind == PdpKind::Uniform || spec.tau_max == 0) {
    p.setConstant(1.0 / n);
    return p;
  }
  for (int l = 0; l < n; ++l) p[l] = std::exp(-static_cast<double>(l) / spec.tau_max);
  p /= p.sum();
  return p;
}

CMatrix tap_to_cfr_matrix(const OfdmConfig& cfg, int n_taps) {
  const int k = cfg.usable_count();
  CMatrix f(k, n_taps);
  for (int r = 0; r < k; ++r) {
    for (int l = 0; l < n_taps; ++l) {
      // reduce the phase index modulo N before scaling to keep the argument small
      const long long m = (static_cast<long long>(cfg.usable_indices[r]) * l) % cfg.dft_size;
      const double phase = -2.0 * std::numbers::pi * static_cast<double>(m) / cfg.dft_size;
      f(r, l) = std::polar(1.0, phase);
    }
  }
  return f;
}

CMatrix freq_correlation(const PdpSpec& spec, const OfdmConfig& cfg) {
  check_compatible(spec, cfg);
  const RVector p = pdp_powers(spec);
  const int k = cfg.usable_count();
  CMatrix r(k, k);
  for (int a = 0; a < k; ++a) {
    r(a, a) = 1.0;
    for (int b = a + 1; b < k; ++b) {
      cdouble acc = 0.0;
      const int diff = cfg.usable_indices[a] - cfg.usable_indices[b];
      for (int l = 0; l < p.size(); ++l) {
        long long m = (static_cast<long long>(diff) * l) % cfg.dft_size;
        const double phase = -2.0 * std::numbers::pi * static_cast<double>(m) / cfg.dft_size;
        acc += p[l] * std::polar(1.0, phase);
      }
      r(a, b) = acc;
      r(b, a) = std::conj(acc);
    }
  }
  return r;
}

ChannelRealization sample_channel(const PdpSpec& spec, const OfdmConfig& cfg, Rng& rng) {
  check_compatible(spec, cfg);
  const RVector p = pdp_powers(spec);
  ChannelRealization out;
  out.taps.resize(p.size());
  for (int l = 0; l < p.size(); ++l) out.taps[l] = rng.complex_normal(p[l]);
  out.cfr = tap_to_cfr_matrix(cfg, static_cast<int>(p.size())) * out.taps;
  return out;
}

CVector observe_ls(const CVector& cfr, double sigma2, Rng& rng) {
  if (!(sigma2 >= 0.0)) throw InvalidArgument("noise variance must be non-negative");
  CVector out = cfr;
  if (sigma2 == 0.0) return out;
  for (Eigen::Index k = 0; k < out.size(); ++k) out[k] += rng.complex_normal(sigma2);
  return out;
}

ChannelSampler::ChannelSampler(const ChannelScenario& scenario, const OfdmConfig& cfg)
    : cfg_(cfg), sigma2_(scenario.noise_variance()) {
  PdpKind kind;
  if (const auto* fixed = std::get_if<PdpSpec>(&scenario.pdp_rule)) {
    taus_ = {fixed->tau_max};
    kind = fixed->kind;
  } else {
    const auto& q = std::get<QuasiStationaryPdp>(scenario.pdp_rule);
    if (q.tau_set.empty()) throw InvalidArgument("quasi-stationary tau set is empty");
    taus_ = q.tau_set;
    kind = q.kind;
  }
  int max_tau = 0;
  for (int tau : taus_) {
    check_compatible(PdpSpec{kind, tau}, cfg_);
    tap_std_.push_back(pdp_powers(PdpSpec{kind, tau}).cwiseSqrt());
    max_tau = std::max(max_tau, tau);
  }
  dft_ = tap_to_cfr_matrix(cfg_, max_tau + 1);
}

int ChannelSampler::draw_tau(Rng& rng) const {
  if (taus_.size() == 1) return taus_.front();
  return taus_[rng.uniform_int(0, static_cast<int>(taus_.size()) - 1)];
}

void ChannelSampler::sample(Rng& rng, int count, CMatrix& cfr, CMatrix& ls) const {
  const int k = cfg_.usable_count();
  CMatrix taps = CMatrix::Zero(dft_.cols(), count);
  ls.resize(k, count);
  const bool quasi = taus_.size() > 1;
  for (int c = 0; c < count; ++c) {
    const std::size_t which = quasi ? static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(taus_.size()) - 1)) : 0;
    const RVector& std_dev = tap_std_[which];
    for (int l = 0; l < std_dev.size(); ++l) taps(l, c) = std_dev[l] * rng.complex_normal(1.0);
    if (sigma2_ > 0.0) {
      for (int r = 0; r < k; ++r) ls(r, c) = rng.complex_normal(sigma2_);
    } else {
      ls.col(c).setZero();
    }
  }
  cfr.noalias() = dft_ * taps;
  ls += cfr;
}

}  // namespace chanest
