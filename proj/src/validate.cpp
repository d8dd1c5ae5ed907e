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

#include "chanest/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "chanest/analysis.hpp"
#include "chanest/channel.hpp"
#include "chanest/errors.hpp"
#include "chanest/estimators.hpp"
#include "chanest/experiments.hpp"
#include "chanest/special.hpp"

namespace chanest {

namespace {

struct Entry {
  const char* name;
  bool quick;
  std::function<Check(const RunContext&)> run;
};

Check make(const char* name, bool passed, std::string detail = {}) { return {name, passed, std::move(detail)}; }

std::string fmt(double v) { return format_number(v); }

Check pdp_normalized(const RunContext&) {
  double worst = 0.0;
  for (PdpKind kind : {PdpKind::Exponential, PdpKind::Uniform})
    for (int tau : {0, 1, 2, 16, 64}) worst = std::max(worst, std::abs(pdp_powers({kind, tau}).sum() - 1.0));
  return make("pdp powers sum to one", worst < 1e-12, "max deviation " + fmt(worst));
}

Check correlation_hermitian_psd(const RunContext&) {
  double asym = 0.0, min_eig = 1e300;
  for (auto [n, k, tau] : {std::tuple{16, 12, 2}, std::tuple{64, 60, 16}, std::tuple{512, 120, 64}}) {
    const CMatrix r = freq_correlation({PdpKind::Exponential, tau}, OfdmConfig::centered(n, k));
    asym = std::max(asym, (r - r.adjoint()).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(r, Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, eig.eigenvalues().minCoeff());
  }
  return make("channel correlation Hermitian and PSD", asym < 1e-12 && min_eig >= -1e-9,
              "asymmetry " + fmt(asym) + ", min eigenvalue " + fmt(min_eig));
}

Check epsilon_identity(const RunContext&) {
  double worst = 0.0;
  for (int kappa : {2, 20, 200, 2000, 20000}) worst = std::max(worst, std::abs(epsilon_quadrature(kappa, 0.0) - 0.5));
  return make("epsilon(kappa, 0) = 0.5", worst <= 1e-6, "max deviation " + fmt(worst));
}

Check epsilon_monotone(const RunContext&) {
  bool in_alpha = true, in_kappa = true;
  const double alphas[] = {0.0, 0.02, 0.05, 0.1, 0.3, 1.0};
  for (int kappa : {20, 200, 2000}) {
    for (std::size_t i = 1; i < std::size(alphas); ++i)
      in_alpha = in_alpha && epsilon_quadrature(kappa, alphas[i]) < epsilon_quadrature(kappa, alphas[i - 1]);
  }
  for (double a : {0.05, 0.1, 0.3}) {
    double prev = 1.0;
    for (int kappa : {20, 100, 400, 1200, 5000}) {
      const double e = epsilon_quadrature(kappa, a);
      in_kappa = in_kappa && e <= prev;
      prev = e;
    }
  }
  return make("epsilon decreasing in alpha, non-increasing in kappa", in_alpha && in_kappa);
}

Check alpha_anchor(const RunContext&) {
  const double a = alpha_for_epsilon(1200, 0.05);
  return make("alpha(kappa=1200, eps=0.05) in [0.08, 0.12]", a >= 0.08 && a <= 0.12, "alpha " + fmt(a));
}

Check alpha_curve_decreasing(const RunContext&) {
  const auto grid = default_kappa_grid();
  const AlphaCurve curve = build_alpha_curve(grid, 0.05);
  bool ok = true;
  for (std::size_t i = 1; i < curve.points.size(); ++i) ok = ok && curve.points[i].alpha < curve.points[i - 1].alpha;
  return make("alpha curve strictly decreasing over kappa 100..5000", ok);
}

Check sufficient_size(const RunContext&) {
  const int m = sufficient_sample_size(0.1, 0.05);
  return make("sufficient sample size for alpha 0.1, eps 0.05 in [540, 660]", m >= 540 && m <= 660,
              "M " + std::to_string(m));
}

Check gamma_vs_wilson_hilferty(const RunContext&) {
  double worst = 0.0;
  for (double k : {1000.0, 2400.0, 10000.0, 20000.0})
    for (double z : {-3.0, -1.0, 0.0, 1.0, 3.0}) {
      const double x = k + z * std::sqrt(2.0 * k);
      worst = std::max(worst, std::abs(chi2_cdf(x, k) - chi2_cdf_wilson_hilferty(x, k)));
    }
  return make("chi2 cdf agrees with Wilson-Hilferty for kappa >= 1000", worst < 1e-4, "max deviation " + fmt(worst));
}

Check cdf_integrates_pdf(const RunContext& ctx) {
  Rng rng = Rng::derive(ctx.seed, StreamPurpose::Oracle, 1);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double k = 2.0 * rng.uniform_int(1, 10000);
    const double x = k * (0.5 + rng.uniform());
    // Simpson on [0, x] split into a fine grid around the bulk
    const int n = 20000;
    const double h = x / n;
    double s = chi2_pdf(0.0, k) + chi2_pdf(x, k);
    for (int j = 1; j < n; ++j) s += (j % 2 ? 4.0 : 2.0) * chi2_pdf(j * h, k);
    worst = std::max(worst, std::abs(s * h / 3.0 - chi2_cdf(x, k)));
  }
  return make("chi2 cdf equals the integral of the pdf", worst < 1e-6, "max deviation " + fmt(worst));
}

Check scaled_difference(const RunContext&) {
  const bool ok = scaled_mse_difference(0.3, 0.3) == 0.0 && std::abs(scaled_mse_difference(0.11, 0.10) - 0.1) < 1e-12;
  return make("scaled MSE difference arithmetic", ok);
}

Check partition_property(const RunContext&) {
  const OfdmConfig cfg = OfdmConfig::centered(512, 480);
  bool ok = true;
  for (int b : {30, 60, 120, 240, 480}) {
    const auto blocks = partition_symbol(cfg, b);
    std::vector<int> joined;
    for (const auto& blk : blocks) {
      ok = ok && static_cast<int>(blk.size()) == b;
      joined.insert(joined.end(), blk.begin(), blk.end());
    }
    ok = ok && joined == cfg.usable_indices;
  }
  bool rejects = false;
  try {
    partition_symbol(cfg, 7);
  } catch (const NonDivisible&) {
    rejects = true;
  }
  return make("partition blocks tile the usable indices", ok && rejects);
}

Check noiseless_training_set(const RunContext& ctx) {
  Rng rng = Rng::derive(ctx.seed, StreamPurpose::Oracle, 2);
  const auto scenario = ChannelScenario::stationary({PdpKind::Exponential, 2}, std::numeric_limits<double>::infinity());
  const TrainingSet ts = generate_training_set(scenario, OfdmConfig::centered(16, 8), 50, rng);
  return make("noiseless observations equal the channel", ts.inputs == ts.labels);
}

Check ls_mse(const RunContext& ctx) {
  const OfdmConfig cfg = OfdmConfig::centered(64, 60);
  bool ok = true;
  std::ostringstream detail;
  for (double snr : {-10.0, 0.0, 20.0}) {
    const auto scenario = ChannelScenario::stationary({PdpKind::Exponential, 2}, snr);
    const EvalReport r =
        evaluate_mse(LsIdentity{}, scenario, cfg, 20000, EvalStream{ctx.seed, 100 + static_cast<std::uint64_t>(snr + 20), ctx.workers});
    const double sigma2 = scenario.noise_variance();
    ok = ok && std::abs(r.mse - sigma2) <= 3.0 * r.mse_std_error;
    detail << " " << fmt(snr) << "dB:" << fmt(r.mse) << "/" << fmt(sigma2);
  }
  return make("LS MSE equals noise variance", ok, detail.str());
}

Check worker_invariance(const RunContext& ctx) {
  const OfdmConfig cfg = OfdmConfig::centered(16, 8);
  const auto scenario = ChannelScenario::stationary({PdpKind::Exponential, 2}, 5.0);
  const Estimator w = lmmse_weights(freq_correlation({PdpKind::Exponential, 2}, cfg), scenario.noise_variance());
  const EvalReport a = evaluate_mse(w, scenario, cfg, 5000, EvalStream{ctx.seed, 7, 1});
  const EvalReport b = evaluate_mse(w, scenario, cfg, 5000, EvalStream{ctx.seed, 7, 3});
  return make("evaluation independent of worker count", a.mse == b.mse && a.mse_std_error == b.mse_std_error);
}

Check residual_optimality(const RunContext& ctx) {
  Rng rng = Rng::derive(ctx.seed, StreamPurpose::Oracle, 3);
  const auto scenario = ChannelScenario::stationary({PdpKind::Exponential, 2}, 0.0);
  const TrainingSet ts = generate_training_set(scenario, OfdmConfig::centered(16, 8), 100, rng);
  const LinearWeights w = train_linear(ts);
  const double base = linear_training_loss(w, ts);
  bool ok = true;
  for (int i = 0; i < w.w.rows(); ++i)
    for (int j = 0; j < w.w.cols(); ++j)
      for (cdouble d : {cdouble(1e-3, 0), cdouble(-1e-3, 0), cdouble(0, 1e-3), cdouble(0, -1e-3)}) {
        LinearWeights p = w;
        p.w(i, j) += d;
        ok = ok && linear_training_loss(p, ts) >= base;
      }
  return make("trained weights minimize the training loss", ok);
}

Check lmmse_monotone_in_noise(const RunContext&) {
  const CMatrix r = freq_correlation({PdpKind::Exponential, 4}, OfdmConfig::centered(64, 40));
  double prev = 0.0;
  bool ok = true;
  for (double snr = 30.0; snr >= -10.0; snr -= 2.5) {
    const double v = lmmse_mse_theoretical(r, noise_variance_from_snr(snr));
    ok = ok && v >= prev;
    prev = v;
  }
  return make("theoretical LMMSE MSE non-decreasing in noise", ok);
}

Check quadrature_vs_monte_carlo(const RunContext& ctx) {
  int failures = 0;
  double worst = 0.0;
  std::uint64_t cell = 0;
  for (int kappa : {20, 100, 400, 1000, 2000})
    for (double a : {0.0, 0.05, 0.1, 0.3, 1.0}) {
      Rng rng = Rng::derive(ctx.seed, StreamPurpose::Oracle, 4, cell++);
      const std::int64_t n = 200000;
      const McEstimate mc = epsilon_monte_carlo(kappa, a, n, rng);
      const double q = epsilon_quadrature(kappa, a);
      // binomial error under the quadrature value, so empty tails stay finite
      const double se = std::max(std::sqrt(q * (1.0 - q) / static_cast<double>(n)), 1.0 / static_cast<double>(n));
      const double z = std::abs(mc.estimate - q) / se;
      worst = std::max(worst, z);
      if (z > 3.0) ++failures;
    }
  // 25 cells at 3 sigma: allow one stray exceedance
  return make("quadrature agrees with Monte Carlo on a 5x5 grid", failures <= 1,
              std::to_string(failures) + " cells beyond 3 std errors, max z " + fmt(worst));
}

Check training_loss_distribution(const RunContext& ctx) {
  Rng rng = Rng::derive(ctx.seed, StreamPurpose::Oracle, 5);
  const double p = training_loss_chi_square_pvalue(5, 10000, rng);
  return make("scaled training loss follows chi2(2M)", p > 0.01, "KS p-value " + fmt(p));
}

Check wiener_oracle(const RunContext& ctx) {
  bool ok = true;
  std::ostringstream detail;
  std::uint64_t point = 200;
  for (auto [k, snr] : {std::pair{4, -5.0}, std::pair{8, 0.0}, std::pair{12, 10.0}, std::pair{4, 20.0},
                        std::pair{8, 15.0}, std::pair{12, -10.0}}) {
    const OfdmConfig cfg = OfdmConfig::centered(16, k);
    const auto scenario = ChannelScenario::stationary({PdpKind::Exponential, 2}, snr);
    const CMatrix r = freq_correlation({PdpKind::Exponential, 2}, cfg);
    const double theory = lmmse_mse_theoretical(r, scenario.noise_variance());
    const EvalReport rep = evaluate_mse(lmmse_weights(r, scenario.noise_variance()), scenario, cfg, 50000,
                                        EvalStream{ctx.seed, point++, ctx.workers});
    ok = ok && std::abs(rep.mse - theory) <= 3.0 * rep.mse_std_error && rep.mse <= scenario.noise_variance();
    detail << " K" << k << "/" << fmt(snr) << "dB:" << fmt(rep.mse / theory);
  }
  return make("Monte Carlo LMMSE MSE matches theory", ok, "ratios" + detail.str());
}

Check gradient(const RunContext& ctx) {
  Rng rng = Rng::derive(ctx.seed, StreamPurpose::Oracle, 6);
  const double err = mlp_gradient_error(3, 3, 1e-5, rng);
  return make("MLP gradient matches central differences", err < 1e-4, "max relative error " + fmt(err));
}

Check tau_uniform(const RunContext& ctx) {
  std::vector<int> set(16);
  for (int i = 0; i < 16; ++i) set[static_cast<std::size_t>(i)] = i + 1;
  const ChannelSampler sampler(ChannelScenario::quasi_stationary(set, 10.0), OfdmConfig::centered(64, 60));
  Rng rng = Rng::derive(ctx.seed, StreamPurpose::Oracle, 7);
  std::vector<double> observed(16, 0.0), expected(16, 100000.0 / 16.0);
  for (int i = 0; i < 100000; ++i) observed[static_cast<std::size_t>(sampler.draw_tau(rng) - 1)] += 1.0;
  const double p = chi_square_gof_pvalue(observed, expected);
  return make("quasi-stationary delay draws are uniform", p > 0.01, "GOF p-value " + fmt(p));
}

Check std_error_scaling(const RunContext& ctx) {
  const OfdmConfig cfg = OfdmConfig::centered(16, 8);
  const auto scenario = ChannelScenario::stationary({PdpKind::Exponential, 2}, 0.0);
  const EvalReport a = evaluate_mse(LsIdentity{}, scenario, cfg, 20000, EvalStream{ctx.seed, 300, ctx.workers});
  const EvalReport b = evaluate_mse(LsIdentity{}, scenario, cfg, 40000, EvalStream{ctx.seed, 301, ctx.workers});
  const double ratio = b.mse_std_error / a.mse_std_error;
  return make("standard error shrinks as 1/sqrt(trials)", std::abs(ratio * std::sqrt(2.0) - 1.0) < 0.1,
              "ratio " + fmt(ratio));
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"pdp_normalized", true, pdp_normalized},
      {"correlation_hermitian_psd", true, correlation_hermitian_psd},
      {"epsilon_identity", true, epsilon_identity},
      {"epsilon_monotone", true, epsilon_monotone},
      {"alpha_anchor", true, alpha_anchor},
      {"gamma_vs_wilson_hilferty", true, gamma_vs_wilson_hilferty},
      {"scaled_difference", true, scaled_difference},
      {"partition_property", true, partition_property},
      {"noiseless_training_set", true, noiseless_training_set},
      {"ls_mse", true, ls_mse},
      {"worker_invariance", true, worker_invariance},
      {"residual_optimality", true, residual_optimality},
      {"lmmse_monotone_in_noise", true, lmmse_monotone_in_noise},
      {"gradient", true, gradient},
      {"alpha_curve_decreasing", false, alpha_curve_decreasing},
      {"sufficient_size", false, sufficient_size},
      {"cdf_integrates_pdf", false, cdf_integrates_pdf},
      {"quadrature_vs_monte_carlo", false, quadrature_vs_monte_carlo},
      {"training_loss_distribution", false, training_loss_distribution},
      {"wiener_oracle", false, wiener_oracle},
      {"tau_uniform", false, tau_uniform},
      {"std_error_scaling", false, std_error_scaling},
  };
  return entries;
}

}  // namespace

double training_loss_chi_square_pvalue(int m, int repetitions, Rng& rng) {
  if (m < 1 || repetitions < 2) throw InvalidArgument("chi-square check needs m >= 1 and at least two repetitions");
  const OfdmConfig cfg = OfdmConfig::centered(16, 4);
  const PdpSpec pdp{PdpKind::Exponential, 2};
  const auto scenario = ChannelScenario::stationary(pdp, 0.0);
  const double sigma2 = scenario.noise_variance();
  const CMatrix r = freq_correlation(pdp, cfg);
  const LinearWeights w = lmmse_weights(r, sigma2);
  const CMatrix err_cov = r - w.w * r;
  const double l_e = err_cov(0, 0).real();

  const ChannelSampler sampler(scenario, cfg);
  CMatrix cfr, ls;
  std::vector<double> stat(static_cast<std::size_t>(repetitions));
  for (int rep = 0; rep < repetitions; ++rep) {
    sampler.sample(rng, m, cfr, ls);
    const CMatrix est = w.w * ls;
    double xi = 0.0;
    for (int j = 0; j < m; ++j) xi += std::norm(est(0, j) - cfr(0, j));
    xi /= m;
    stat[static_cast<std::size_t>(rep)] = 2.0 * m * xi / l_e;
  }
  const double dof = 2.0 * m;
  const double d = ks_statistic(std::move(stat), [dof](double x) { return chi2_cdf(x, dof); });
  return ks_pvalue(d, static_cast<std::size_t>(repetitions));
}

double mlp_gradient_error(int dimension, int samples, double step, Rng& rng) {
  MlpEstimator net = MlpEstimator::glorot(dimension, rng);
  for (int i = 0; i < net.hidden_b.size(); ++i) net.hidden_b(i) = 0.1 * rng.normal();
  for (int i = 0; i < net.output_b.size(); ++i) net.output_b(i) = 0.1 * rng.normal();
  RMatrix x(2 * dimension, samples), t(2 * dimension, samples);
  for (int j = 0; j < samples; ++j)
    for (int i = 0; i < 2 * dimension; ++i) {
      x(i, j) = rng.normal();
      t(i, j) = rng.normal();
    }
  MlpGradient grad;
  net.loss_and_gradient(x, t, grad);
  const RVector analytic = flatten(grad);
  const RVector theta = net.flat_parameters();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    RVector p = theta;
    p(i) += step;
    net.set_flat_parameters(p);
    const double up = net.loss(x, t);
    p(i) -= 2.0 * step;
    net.set_flat_parameters(p);
    const double down = net.loss(x, t);
    const double numeric = (up - down) / (2.0 * step);
    const double scale = std::max({std::abs(numeric), std::abs(analytic(i)), 1e-6});
    worst = std::max(worst, std::abs(numeric - analytic(i)) / scale);
  }
  net.set_flat_parameters(theta);
  return worst;
}

RunResult run_validate(const ValidateOptions& opt, const RunContext& ctx) {
  RunResult r;
  r.command = "validate";
  r.table.columns = {"check", "tier", "passed", "detail"};
  for (const Entry& e : registry()) {
    if (opt.quick && !e.quick) continue;
    Check c;
    try {
      c = e.run(ctx);
    } catch (const std::exception& ex) {
      c = {e.name, false, std::string("error: ") + ex.what()};
    }
    r.table.add_row({std::string(e.name), std::string(e.quick ? "quick" : "full"), std::int64_t{c.passed ? 1 : 0},
                     c.detail});
    r.checks.push_back(std::move(c));
  }
  r.metadata = {{"command", r.command}, {"version", CHANEST_VERSION}, {"seed", ctx.seed}, {"quick", opt.quick}};
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  r.metadata["checks"] = std::move(checks);
  return r;
}

}  // namespace chanest
