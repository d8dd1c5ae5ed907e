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

#include "chanest/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "chanest/errors.hpp"

namespace chanest {

namespace {

constexpr int kPanels = 64;
constexpr double kWindowSigmas = 12.0;
constexpr double kTailBound = 1e-12;
constexpr double kAlphaTolerance = 1e-4;
constexpr double kAlphaCeiling = 1e3;

void check_kappa(int kappa) {
  if (kappa < 2 || kappa % 2 != 0)
    throw InvalidArgument("kappa must be an even integer >= 2, got " + std::to_string(kappa));
}

// Chernoff bound on P(chi2_k > x) for x > k.
double chernoff_upper_tail(double x, double k) {
  const double r = x / k;
  return std::exp(0.5 * k * (std::log(r) + 1.0 - r));
}

}  // namespace

double epsilon_quadrature(int kappa, double alpha) {
  check_kappa(kappa);
  if (!(alpha >= 0.0)) throw InvalidArgument("alpha must be non-negative");
  const double k = kappa;
  const double half_width = kWindowSigmas * std::sqrt(2.0 * k);
  const double lo = std::max(0.0, k - half_width);
  double hi = k + half_width;
  while (chernoff_upper_tail(hi, k) > kTailBound) hi += 0.25 * half_width;

  const double scale = 1.0 / (1.0 + alpha);
  auto integrand = [&](double s) { return chi2_cdf(s * scale, k) * chi2_pdf(s, k); };

  using Rule = boost::math::quadrature::gauss<double, 16>;
  const double panel = (hi - lo) / kPanels;
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double a = lo + i * panel;
    total += Rule::integrate(integrand, a, a + panel);
  }
  return total;
}

McEstimate epsilon_monte_carlo(int kappa, double alpha, std::int64_t n_samples, Rng& rng) {
  if (n_samples < 1) throw InvalidArgument("n_samples must be positive");
  if (kappa < 1) throw InvalidArgument("kappa must be positive");
  std::chi_squared_distribution<double> chi2(static_cast<double>(kappa));
  std::int64_t hits = 0;
  const double scale = 1.0 + alpha;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const double xi1 = chi2(rng.engine());
    const double xi2 = scale * chi2(rng.engine());
    if (xi1 >= xi2) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(n_samples);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples))};
}

double alpha_for_epsilon(int kappa, double eps_target) {
  check_kappa(kappa);
  if (!(eps_target > 0.0 && eps_target < 0.5)) throw InvalidArgument("eps_target must lie in (0, 0.5)");

  double lo = 0.0;
  double hi = 1.0;
  while (epsilon_quadrature(kappa, hi) > eps_target) {
    if (hi >= kAlphaCeiling)
      throw BracketFailure("no alpha below 1e3 reaches epsilon " + std::to_string(eps_target) +
                           " at kappa " + std::to_string(kappa));
    lo = hi;
    hi = std::min(2.0 * hi, kAlphaCeiling);
  }
  while (hi - lo > kAlphaTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (epsilon_quadrature(kappa, mid) > eps_target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

int sufficient_sample_size(double alpha_target, double eps_target) {
  if (!(alpha_target > 0.0)) throw InvalidArgument("alpha_target must be positive");
  auto satisfied = [&](int m) { return alpha_for_epsilon(2 * m, eps_target) <= alpha_target; };
  if (satisfied(1)) return 1;
  int lo = 1;  // unsatisfied
  int hi = 2;
  while (!satisfied(hi)) {
    lo = hi;
    if (hi > (1 << 24)) throw BracketFailure("required sample size exceeds 2^25");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (satisfied(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

AlphaCurve build_alpha_curve(std::span<const int> kappa_grid, double eps_target) {
  AlphaCurve curve;
  curve.epsilon = eps_target;
  for (std::size_t i = 0; i < kappa_grid.size(); ++i) {
    if (i > 0 && kappa_grid[i] <= kappa_grid[i - 1]) throw InvalidArgument("kappa grid must be strictly increasing");
    curve.points.push_back({kappa_grid[i], alpha_for_epsilon(kappa_grid[i], eps_target)});
  }
  return curve;
}

std::vector<int> default_kappa_grid() {
  std::vector<int> grid;
  for (int k = 100; k <= 5000; k += 100) grid.push_back(k);
  return grid;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw InvalidArgument("KS statistic needs samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double ks_pvalue(double statistic, std::size_t n) {
  const double rn = std::sqrt(static_cast<double>(n));
  return kolmogorov_survival((rn + 0.12 + 0.11 / rn) * statistic);
}

double chi_square_gof_pvalue(std::span<const double> observed, std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.size() < 2)
    throw InvalidArgument("goodness-of-fit needs matching bins, at least two");
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double diff = observed[i] - expected[i];
    stat += diff * diff / expected[i];
  }
  const double dof = static_cast<double>(observed.size() - 1);
  return regularized_gamma_q(0.5 * dof, 0.5 * stat);
}

}  // namespace chanest
