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

#include "chanest/runners.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "chanest/channel.hpp"
#include "chanest/errors.hpp"
#include "chanest/estimators.hpp"
#include "chanest/experiments.hpp"
#include "chanest/serialization.hpp"

namespace chanest {

using nlohmann::json;

namespace {

enum RunnerId : std::uint64_t { kFig5 = 5, kAlphaVsK = 6, kAlphaVsM = 7, kDnnQuasi = 8, kPartition = 9 };

std::uint64_t point_id(RunnerId runner, std::uint64_t a, std::uint64_t b = 0) {
  return (static_cast<std::uint64_t>(runner) << 48) | (a << 24) | b;
}

std::int64_t trials_or(const RunContext& ctx, std::int64_t fallback) { return ctx.trials.value_or(fallback); }

json base_metadata(const std::string& command, const RunContext& ctx) {
  return {{"command", command},
          {"version", CHANEST_VERSION},
          {"seed", ctx.seed},
          {"trials_override", ctx.trials ? json(*ctx.trials) : json(nullptr)}};
}

std::string fmt(double v) { return format_number(v); }

void finish(RunResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  r.metadata["checks"] = std::move(checks);
}

}  // namespace

bool RunResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

int dft_size_for(int k, int tau_max) {
  int n = 4;
  while (n <= k + 4 || n / 4 < tau_max) n *= 2;
  return n;
}

std::optional<int> required_sample_size(const std::vector<int>& m_grid, const std::vector<double>& alpha,
                                        double target) {
  if (m_grid.size() != alpha.size()) throw InvalidArgument("grid and alpha lengths differ");
  std::optional<int> found;
  for (std::size_t i = m_grid.size(); i-- > 0;) {
    if (alpha[i] > target) break;
    found = m_grid[i];
  }
  return found;
}

RunResult run_alpha_curve(const AlphaCurveOptions& opt, const RunContext& ctx) {
  RunResult r;
  r.command = "alpha-curve";
  const AlphaCurve curve = build_alpha_curve(opt.kappa_grid, opt.epsilon);
  r.table.columns = {"kappa", "alpha", "epsilon"};
  Series s{"alpha (eps=" + fmt(opt.epsilon) + ")", {}, {}};
  for (const auto& p : curve.points) {
    r.table.add_row({std::int64_t{p.kappa}, p.alpha, opt.epsilon});
    s.x.push_back(p.kappa);
    s.y.push_back(p.alpha);
  }
  r.plot = {"Scaled MSE difference bound vs kappa", "kappa = 2M", "alpha", true, {s}};

  bool decreasing = true;
  for (std::size_t i = 1; i < curve.points.size(); ++i)
    decreasing = decreasing && curve.points[i].alpha < curve.points[i - 1].alpha;
  r.checks.push_back({"alpha strictly decreasing in kappa", decreasing, ""});

  r.metadata = base_metadata(r.command, ctx);
  r.metadata["config"] = {{"epsilon", opt.epsilon}, {"kappa_grid", opt.kappa_grid}};
  finish(r);
  return r;
}

RunResult run_fig5(const Fig5Options& opt, const RunContext& ctx) {
  RunResult r;
  r.command = "fig5";
  const std::int64_t trials = trials_or(ctx, kLinearTrials);
  r.table.columns = {"k",        "snr_db",           "mse_trained", "mse_trained_se", "mse_lmmse",
                     "mse_lmmse_se", "mse_lmmse_theory", "alpha",       "alpha_se"};
  const PdpSpec pdp{PdpKind::Exponential, opt.tau_max};

  bool alpha_ok = true, decreasing = true, optimal = true;
  std::ostringstream alpha_detail;
  double worst_alpha = -1e300;
  for (std::size_t ki = 0; ki < opt.k_list.size(); ++ki) {
    const OfdmConfig cfg = OfdmConfig::centered(opt.dft_size, opt.k_list[ki]);
    const CMatrix r_hh = freq_correlation(pdp, cfg);
    Series trained{"trained K=" + std::to_string(opt.k_list[ki]), {}, {}};
    Series lmmse{"LMMSE K=" + std::to_string(opt.k_list[ki]), {}, {}};
    double prev_theory = std::numeric_limits<double>::infinity();
    for (std::size_t si = 0; si < opt.snr_db.size(); ++si) {
      const auto scenario = ChannelScenario::stationary(pdp, opt.snr_db[si]);
      const double sigma2 = scenario.noise_variance();
      Rng train_rng = Rng::derive(ctx.seed, StreamPurpose::Training, kFig5, ki, si);
      const TrainingSet ts = generate_training_set(scenario, cfg, opt.m, train_rng);
      const Estimator learned = train_linear(ts);
      const Estimator optimum = lmmse_weights(r_hh, sigma2);
      const std::vector<NamedEstimator> named{{"trained", &learned}, {"lmmse", &optimum}};
      const auto reports =
          evaluate_mse(named, scenario, cfg, trials, EvalStream{ctx.seed, point_id(kFig5, ki, si), ctx.workers});
      const double theory = reports[0].metadata["mse_optimum"].get<double>();
      const double alpha = *reports[0].alpha;
      const double alpha_se = reports[0].metadata["alpha_std_error"].get<double>();
      r.table.add_row({std::int64_t{opt.k_list[ki]}, opt.snr_db[si], reports[0].mse, reports[0].mse_std_error,
                       reports[1].mse, reports[1].mse_std_error, theory, alpha, alpha_se});
      trained.x.push_back(opt.snr_db[si]);
      trained.y.push_back(reports[0].mse);
      lmmse.x.push_back(opt.snr_db[si]);
      lmmse.y.push_back(reports[1].mse);

      worst_alpha = std::max(worst_alpha, alpha);
      if (!(alpha < 0.15)) {
        alpha_ok = false;
        alpha_detail << " K=" << opt.k_list[ki] << "/snr=" << opt.snr_db[si] << ":" << fmt(alpha);
      }
      if (!(theory < prev_theory)) decreasing = false;
      prev_theory = theory;
      const double combined = std::hypot(reports[0].mse_std_error, reports[1].mse_std_error);
      if (reports[0].mse < reports[1].mse - 3.0 * combined) optimal = false;
    }
    r.plot.series.push_back(std::move(trained));
    r.plot.series.push_back(std::move(lmmse));
  }
  r.plot.title = "Trained linear vs LMMSE, N=" + std::to_string(opt.dft_size) + ", M=" + std::to_string(opt.m);
  r.plot.x_label = "SNR (dB)";
  r.plot.y_label = "MSE";
  r.plot.log_y = true;

  r.checks.push_back({"alpha < 0.15 at every point", alpha_ok, "max alpha " + fmt(worst_alpha) + alpha_detail.str()});
  r.checks.push_back({"LMMSE MSE decreasing in SNR", decreasing, ""});
  r.checks.push_back({"trained MSE >= LMMSE MSE - 3 combined std errors", optimal, ""});

  r.metadata = base_metadata(r.command, ctx);
  r.metadata["config"] = {{"dft_size", opt.dft_size}, {"k_list", opt.k_list}, {"m", opt.m},
                          {"tau_max", opt.tau_max},   {"snr_db", opt.snr_db}, {"trials", trials}};
  finish(r);
  return r;
}

RunResult run_alpha_vs_k(const AlphaVsKOptions& opt, const RunContext& ctx) {
  RunResult r;
  r.command = "alpha-vs-k";
  const std::int64_t trials = trials_or(ctx, kLinearTrials);
  r.table.columns = {"k", "dft_size", "snr_db", "mse_trained", "mse_trained_se", "mse_lmmse_theory", "alpha", "alpha_se"};
  const PdpSpec pdp{PdpKind::Exponential, opt.tau_max};

  // alpha[si][ki]
  std::vector<std::vector<double>> alpha(opt.snr_db.size(), std::vector<double>(opt.k_list.size()));
  json dft_sizes = json::array();
  for (std::size_t ki = 0; ki < opt.k_list.size(); ++ki) {
    const int n = opt.dft_size.value_or(dft_size_for(opt.k_list[ki], opt.tau_max));
    dft_sizes.push_back(n);
    const OfdmConfig cfg = OfdmConfig::centered(n, opt.k_list[ki]);
    for (std::size_t si = 0; si < opt.snr_db.size(); ++si) {
      const auto scenario = ChannelScenario::stationary(pdp, opt.snr_db[si]);
      Rng train_rng = Rng::derive(ctx.seed, StreamPurpose::Training, kAlphaVsK, ki, si);
      const Estimator learned = train_linear(generate_training_set(scenario, cfg, opt.m, train_rng));
      const EvalReport rep =
          evaluate_mse(learned, scenario, cfg, trials, EvalStream{ctx.seed, point_id(kAlphaVsK, ki, si), ctx.workers});
      alpha[si][ki] = *rep.alpha;
      r.table.add_row({std::int64_t{opt.k_list[ki]}, std::int64_t{n}, opt.snr_db[si], rep.mse, rep.mse_std_error,
                       rep.metadata["mse_optimum"].get<double>(), *rep.alpha,
                       rep.metadata["alpha_std_error"].get<double>()});
    }
  }

  for (std::size_t si = 0; si < opt.snr_db.size(); ++si) {
    Series s{"SNR " + fmt(opt.snr_db[si]) + " dB", {}, {}};
    for (std::size_t ki = 0; ki < opt.k_list.size(); ++ki) {
      s.x.push_back(opt.k_list[ki]);
      s.y.push_back(alpha[si][ki]);
    }
    r.plot.series.push_back(std::move(s));
  }
  r.plot.title = "Scaled MSE difference vs input dimension, M=" + std::to_string(opt.m);
  r.plot.x_label = "input dimension K";
  r.plot.y_label = "alpha";

  if (opt.k_list.size() >= 2) {
    const auto lo = static_cast<std::size_t>(std::min_element(opt.k_list.begin(), opt.k_list.end()) - opt.k_list.begin());
    const auto hi = static_cast<std::size_t>(std::max_element(opt.k_list.begin(), opt.k_list.end()) - opt.k_list.begin());
    bool grows = true;
    std::ostringstream detail;
    for (std::size_t si = 0; si < opt.snr_db.size(); ++si) {
      grows = grows && alpha[si][hi] > alpha[si][lo];
      detail << " snr=" << opt.snr_db[si] << ":" << fmt(alpha[si][lo]) << "->" << fmt(alpha[si][hi]);
    }
    r.checks.push_back({"alpha at the largest K exceeds alpha at the smallest K at every SNR", grows, detail.str()});

    const auto k12 = std::find(opt.k_list.begin(), opt.k_list.end(), 12);
    const auto k120 = std::find(opt.k_list.begin(), opt.k_list.end(), 120);
    if (k12 != opt.k_list.end() && k120 != opt.k_list.end()) {
      bool ordered = true;
      for (std::size_t si = 0; si < opt.snr_db.size(); ++si)
        ordered = ordered && alpha[si][static_cast<std::size_t>(k120 - opt.k_list.begin())] >
                                 alpha[si][static_cast<std::size_t>(k12 - opt.k_list.begin())];
      r.checks.push_back({"alpha(K=120) > alpha(K=12) at every SNR", ordered, ""});
    }
  }
  if (opt.snr_db.size() >= 2) {
    // the alpha-kappa relation does not involve the noise level
    double worst = 0.0;
    for (std::size_t ki = 0; ki < opt.k_list.size(); ++ki) {
      if (opt.k_list[ki] < 30) continue;
      double lo = 1e300, hi = -1e300, sum = 0.0;
      for (std::size_t si = 0; si < opt.snr_db.size(); ++si) {
        lo = std::min(lo, alpha[si][ki]);
        hi = std::max(hi, alpha[si][ki]);
        sum += alpha[si][ki];
      }
      worst = std::max(worst, (hi - lo) / (sum / static_cast<double>(opt.snr_db.size())));
    }
    r.checks.push_back({"alpha weakly SNR-dependent (relative spread < 0.5 for K >= 30)", worst < 0.5,
                        "worst relative spread " + fmt(worst)});
  }

  r.metadata = base_metadata(r.command, ctx);
  r.metadata["config"] = {{"m", opt.m},           {"tau_max", opt.tau_max}, {"k_list", opt.k_list},
                          {"snr_db", opt.snr_db}, {"dft_sizes", dft_sizes}, {"trials", trials}};
  finish(r);
  return r;
}

RunResult run_alpha_vs_m(const AlphaVsMOptions& opt, const RunContext& ctx) {
  RunResult r;
  r.command = "alpha-vs-m";
  const std::int64_t trials = trials_or(ctx, kLinearTrials);
  r.table.columns = {"k", "m", "mse_trained", "mse_trained_se", "mse_lmmse_theory", "alpha", "alpha_se"};
  const PdpSpec pdp{PdpKind::Exponential, opt.tau_max};
  const auto scenario = ChannelScenario::stationary(pdp, opt.snr_db);

  std::vector<std::optional<int>> m_req;
  json req = json::object();
  for (std::size_t ki = 0; ki < opt.k_list.size(); ++ki) {
    const int k = opt.k_list[ki];
    const OfdmConfig cfg = OfdmConfig::centered(opt.dft_size, k);
    std::vector<int> grid = opt.m_grid;
    if (grid.empty()) {
      for (int m = 200; m <= 4000; m += 100) grid.push_back(m);
      grid.push_back((12 * k + 9) / 10);
      grid.push_back(10 * k);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::erase_if(grid, [k](int m) { return m <= k; });

    Series s{"K=" + std::to_string(k), {}, {}};
    std::vector<double> alphas;
    for (std::size_t mi = 0; mi < grid.size(); ++mi) {
      const int m = grid[mi];
      Rng train_rng = Rng::derive(ctx.seed, StreamPurpose::Training, kAlphaVsM, ki, static_cast<std::uint64_t>(m));
      const Estimator learned = train_linear(generate_training_set(scenario, cfg, m, train_rng));
      const EvalReport rep = evaluate_mse(learned, scenario, cfg, trials,
                                          EvalStream{ctx.seed, point_id(kAlphaVsM, ki, static_cast<std::uint64_t>(m)), ctx.workers});
      alphas.push_back(*rep.alpha);
      r.table.add_row({std::int64_t{k}, std::int64_t{m}, rep.mse, rep.mse_std_error,
                       rep.metadata["mse_optimum"].get<double>(), *rep.alpha,
                       rep.metadata["alpha_std_error"].get<double>()});
      s.x.push_back(m);
      s.y.push_back(*rep.alpha);
    }
    r.plot.series.push_back(std::move(s));
    m_req.push_back(required_sample_size(grid, alphas, opt.alpha_target));
    req[std::to_string(k)] = m_req.back() ? json(*m_req.back()) : json(nullptr);
  }
  r.plot.title = "Scaled MSE difference vs training size, N=" + std::to_string(opt.dft_size);
  r.plot.x_label = "training size M";
  r.plot.y_label = "alpha";
  r.plot.log_y = true;

  const bool all_found = std::all_of(m_req.begin(), m_req.end(), [](const auto& v) { return v.has_value(); });
  bool ordered = all_found;
  double ratio_spread = std::numeric_limits<double>::infinity();
  if (all_found) {
    for (std::size_t i = 1; i < m_req.size(); ++i)
      if (opt.k_list[i] > opt.k_list[i - 1]) ordered = ordered && *m_req[i] > *m_req[i - 1];
    double lo = 1e300, hi = 0.0;
    for (std::size_t i = 0; i < m_req.size(); ++i) {
      const double ratio = static_cast<double>(*m_req[i]) / opt.k_list[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    ratio_spread = hi / lo;
  }
  r.checks.push_back({"required M increases with K", ordered, req.dump()});
  r.checks.push_back({"M_req/K within a factor 1.5 across K", ratio_spread < 1.5, "max/min ratio " + fmt(ratio_spread)});

  r.metadata = base_metadata(r.command, ctx);
  r.metadata["config"] = {{"dft_size", opt.dft_size}, {"k_list", opt.k_list}, {"tau_max", opt.tau_max},
                          {"snr_db", opt.snr_db},     {"alpha_target", opt.alpha_target}, {"trials", trials}};
  r.metadata["required_m"] = req;
  finish(r);
  return r;
}

RunResult run_dnn_quasi(const DnnQuasiOptions& opt, const RunContext& ctx) {
  RunResult r;
  r.command = "dnn-quasi";
  const std::int64_t linear_trials = trials_or(ctx, kLinearTrials);
  const std::int64_t mlp_trials = trials_or(ctx, kMlpTrials);
  const OfdmConfig cfg = OfdmConfig::centered(opt.dft_size, opt.k);
  const int tau_upper = *std::max_element(opt.tau_set.begin(), opt.tau_set.end());
  r.table.columns = {"snr_db",         "mse_ls",          "mse_ls_se",      "mse_robust_lmmse", "mse_robust_lmmse_se",
                     "mse_mlp_large", "mse_mlp_large_se", "mse_mlp_small", "mse_mlp_small_se"};
  Series ls_s{"LS", {}, {}}, robust_s{"robust LMMSE", {}, {}};
  Series large_s{"MLP M=" + std::to_string(opt.m_large), {}, {}}, small_s{"MLP M=" + std::to_string(opt.m_small), {}, {}};

  bool ls_ok = true;
  json training = json::array();
  std::optional<std::size_t> row10;
  for (std::size_t si = 0; si < opt.snr_db.size(); ++si) {
    const auto scenario = ChannelScenario::quasi_stationary(opt.tau_set, opt.snr_db[si]);
    const double sigma2 = scenario.noise_variance();

    const Estimator ls = LsIdentity{};
    const Estimator robust = robust_lmmse_weights(tau_upper, cfg, sigma2);
    const std::vector<NamedEstimator> linear{{"ls", &ls}, {"robust_lmmse", &robust}};
    const auto lin = evaluate_mse(linear, scenario, cfg, linear_trials,
                                  EvalStream{ctx.seed, point_id(kDnnQuasi, 0, si), ctx.workers});

    Rng data_large = Rng::derive(ctx.seed, StreamPurpose::Training, kDnnQuasi, 1, si);
    Rng data_small = Rng::derive(ctx.seed, StreamPurpose::Training, kDnnQuasi, 2, si);
    Rng init_large = Rng::derive(ctx.seed, StreamPurpose::MlpInit, kDnnQuasi, 1, si);
    Rng init_small = Rng::derive(ctx.seed, StreamPurpose::MlpInit, kDnnQuasi, 2, si);
    MlpEstimator large = train_mlp(generate_training_set(scenario, cfg, opt.m_large, data_large), opt.hyper_large, init_large);
    MlpEstimator small = train_mlp(generate_training_set(scenario, cfg, opt.m_small, data_small), opt.hyper_small, init_small);
    training.push_back({{"snr_db", opt.snr_db[si]},
                        {"large", {{"initial_loss", large.log.initial_loss}, {"final_loss", large.log.final_loss}, {"epochs", large.log.epochs}}},
                        {"small", {{"initial_loss", small.log.initial_loss}, {"final_loss", small.log.final_loss}, {"epochs", small.log.epochs}}}});
    const Estimator e_large = std::move(large), e_small = std::move(small);
    const std::vector<NamedEstimator> nets{{"mlp_large", &e_large}, {"mlp_small", &e_small}};
    const auto mlp = evaluate_mse(nets, scenario, cfg, mlp_trials, EvalStream{ctx.seed, point_id(kDnnQuasi, 1, si), ctx.workers});

    r.table.add_row({opt.snr_db[si], lin[0].mse, lin[0].mse_std_error, lin[1].mse, lin[1].mse_std_error, mlp[0].mse,
                     mlp[0].mse_std_error, mlp[1].mse, mlp[1].mse_std_error});
    for (auto* s : {&ls_s, &robust_s, &large_s, &small_s}) s->x.push_back(opt.snr_db[si]);
    ls_s.y.push_back(lin[0].mse);
    robust_s.y.push_back(lin[1].mse);
    large_s.y.push_back(mlp[0].mse);
    small_s.y.push_back(mlp[1].mse);
    if (std::abs(lin[0].mse - sigma2) > 4.0 * lin[0].mse_std_error) ls_ok = false;
    if (opt.snr_db[si] == 10.0) row10 = si;
  }
  r.plot = {"Quasi-stationary channel, N=" + std::to_string(opt.dft_size) + ", K=" + std::to_string(opt.k),
            "SNR (dB)", "MSE", true, {ls_s, robust_s, large_s, small_s}};

  r.checks.push_back({"LS MSE equals sigma^2 within 4 std errors", ls_ok, ""});
  if (row10) {
    const double robust = r.table.number(*row10, "mse_robust_lmmse");
    const double large = r.table.number(*row10, "mse_mlp_large");
    const double small = r.table.number(*row10, "mse_mlp_small");
    r.checks.push_back({"large-set MLP beats robust LMMSE at 10 dB", large < robust,
                        "mlp " + fmt(large) + " vs robust " + fmt(robust)});
    r.checks.push_back({"small-set MLP at least 2x worse than large-set MLP at 10 dB", small >= 2.0 * large,
                        "ratio " + fmt(small / large)});
  }

  r.metadata = base_metadata(r.command, ctx);
  r.metadata["config"] = {{"dft_size", opt.dft_size}, {"k", opt.k},          {"tau_set", opt.tau_set},
                          {"snr_db", opt.snr_db},     {"m_small", opt.m_small}, {"m_large", opt.m_large},
                          {"robust_tau_upper", tau_upper}, {"linear_trials", linear_trials}, {"mlp_trials", mlp_trials}};
  r.metadata["hyperparameters"] = {{"small", to_json(opt.hyper_small)}, {"large", to_json(opt.hyper_large)}};
  r.metadata["training"] = training;
  finish(r);
  return r;
}

RunResult run_partition(const PartitionOptions& opt, const RunContext& ctx) {
  RunResult r;
  r.command = "partition";
  r.metadata = base_metadata(r.command, ctx);
  const std::int64_t trials = trials_or(ctx, kLinearTrials);
  const OfdmConfig cfg = OfdmConfig::centered(opt.dft_size, opt.k);
  const PdpSpec pdp{PdpKind::Exponential, opt.tau_max};
  for (int b : opt.blocks) partition_symbol(cfg, b);  // validates divisibility up front
  r.table.columns = {"estimator", "block_size", "snr_db", "mse", "mse_se"};

  // mse[bi][si]; the LS baseline sits at index blocks.size()
  std::vector<std::vector<double>> mse(opt.blocks.size() + 1, std::vector<double>(opt.snr_db.size()));
  for (std::size_t si = 0; si < opt.snr_db.size(); ++si) {
    const auto scenario = ChannelScenario::stationary(pdp, opt.snr_db[si]);
    Rng train_rng = Rng::derive(ctx.seed, StreamPurpose::Training, kPartition, 0, si);
    const TrainingSet ts = generate_training_set(scenario, cfg, opt.m, train_rng);
    std::vector<Estimator> estimators;
    std::vector<std::string> ids;
    for (int b : opt.blocks) {
      estimators.emplace_back(train_blockwise(ts, b));
      ids.push_back("linear-" + std::to_string(b));
    }
    estimators.emplace_back(LsIdentity{});
    ids.push_back("ls");
    std::vector<NamedEstimator> named;
    for (std::size_t i = 0; i < estimators.size(); ++i) named.push_back({ids[i], &estimators[i]});
    const auto reports =
        evaluate_mse(named, scenario, cfg, trials, EvalStream{ctx.seed, point_id(kPartition, 0, si), ctx.workers});
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const std::int64_t block = i < opt.blocks.size() ? opt.blocks[i] : 1;
      r.table.add_row({ids[i], block, opt.snr_db[si], reports[i].mse, reports[i].mse_std_error});
      mse[i][si] = reports[i].mse;
    }
  }
  for (std::size_t i = 0; i <= opt.blocks.size(); ++i) {
    Series s{i < opt.blocks.size() ? "block " + std::to_string(opt.blocks[i]) : "LS", opt.snr_db, mse[i]};
    r.plot.series.push_back(std::move(s));
  }
  r.plot.title = "Symbol partitioning, N=" + std::to_string(opt.dft_size) + ", K=" + std::to_string(opt.k) +
                 ", M=" + std::to_string(opt.m);
  r.plot.x_label = "SNR (dB)";
  r.plot.y_label = "MSE";
  r.plot.log_y = true;

  auto block_index = [&](int b) -> std::optional<std::size_t> {
    const auto it = std::find(opt.blocks.begin(), opt.blocks.end(), b);
    if (it == opt.blocks.end()) return std::nullopt;
    return static_cast<std::size_t>(it - opt.blocks.begin());
  };
  auto snr_index = [&](double s) -> std::optional<std::size_t> {
    const auto it = std::find(opt.snr_db.begin(), opt.snr_db.end(), s);
    if (it == opt.snr_db.end()) return std::nullopt;
    return static_cast<std::size_t>(it - opt.snr_db.begin());
  };

  // SNR-averaged MSE in dB, the scale the curves are compared on
  json avg_db = json::object();
  std::vector<double> averages;
  for (std::size_t bi = 0; bi < opt.blocks.size(); ++bi) {
    double sum = 0.0;
    for (double v : mse[bi]) sum += 10.0 * std::log10(v);
    averages.push_back(sum / static_cast<double>(opt.snr_db.size()));
    avg_db[std::to_string(opt.blocks[bi])] = averages.back();
  }
  r.metadata["snr_averaged_mse_db"] = avg_db;
  if (const auto b60 = block_index(60)) {
    const auto best = static_cast<std::size_t>(std::min_element(averages.begin(), averages.end()) - averages.begin());
    r.checks.push_back({"block 60 has the lowest SNR-averaged MSE", best == *b60, avg_db.dump()});
    if (const auto s20 = snr_index(20.0)) {
      bool loss = true;
      std::ostringstream detail;
      for (int b : {240, 480}) {
        if (const auto bi = block_index(b)) {
          const double ratio = mse[*bi][*s20] / mse[*b60][*s20];
          loss = loss && ratio >= 2.0;
          detail << " block " << b << "/60 = " << fmt(ratio);
        }
      }
      r.checks.push_back({"blocks 240 and 480 at least 2x worse than block 60 at 20 dB", loss, detail.str()});
    }
  }
  const auto b30 = block_index(30), b120 = block_index(120);
  const auto lo = snr_index(-10.0), hi = snr_index(30.0);
  if (b30 && b120 && lo && hi) {
    const bool low = mse[*b30][*lo] < mse[*b120][*lo];
    const bool high = mse[*b120][*hi] < mse[*b30][*hi];
    r.checks.push_back({"block 30 beats 120 at -10 dB and 120 beats 30 at 30 dB", low && high,
                        "-10 dB: " + fmt(mse[*b30][*lo]) + " vs " + fmt(mse[*b120][*lo]) + "; 30 dB: " +
                            fmt(mse[*b30][*hi]) + " vs " + fmt(mse[*b120][*hi])});
  }

  r.metadata["config"] = {{"dft_size", opt.dft_size}, {"k", opt.k}, {"m", opt.m}, {"tau_max", opt.tau_max},
                          {"blocks", opt.blocks},     {"snr_db", opt.snr_db}, {"trials", trials}};
  finish(r);
  return r;
}

}  // namespace chanest
