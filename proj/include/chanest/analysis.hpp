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
#include <functional>
#include <span>
#include <vector>

#include "chanest/rng.hpp"
#include "chanest/special.hpp"

namespace chanest {

/// Probability that the optimal estimator's training loss is at least the
/// learned estimator's when both losses follow scaled chi-square laws with
/// kappa = 2M degrees of freedom and the learned MSE is (1 + alpha) times the
/// optimum:  eps = int_0^inf F_kappa(s / (1 + alpha)) p_kappa(s) ds.
///
/// Composite 16-point Gauss-Legendre over 64 panels on
/// [max(0, kappa - 12 sqrt(2 kappa)), kappa + 12 sqrt(2 kappa)], with the upper
/// end pushed out until the Chernoff tail bound drops below 1e-12.
double epsilon_quadrature(int kappa, double alpha);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Fraction of independent pairs with xi1 >= xi2, xi1 ~ chi2(kappa)/kappa and
/// xi2 ~ (1 + alpha) chi2(kappa)/kappa, with its binomial standard error.
McEstimate epsilon_monte_carlo(int kappa, double alpha, std::int64_t n_samples, Rng& rng);

/// The alpha >= 0 solving epsilon_quadrature(kappa, alpha) = eps_target.
/// Bracket by doubling up to 1e3, then bisection to 1e-4 in alpha.
double alpha_for_epsilon(int kappa, double eps_target);

/// Smallest M with alpha_for_epsilon(2M, eps_target) <= alpha_target.
int sufficient_sample_size(double alpha_target, double eps_target);

struct AlphaPoint {
  int kappa = 0;
  double alpha = 0.0;
};

struct AlphaCurve {
  double epsilon = 0.05;
  std::vector<AlphaPoint> points;
};

/// kappa_grid must be strictly increasing with even positive entries.
AlphaCurve build_alpha_curve(std::span<const int> kappa_grid, double eps_target);

/// 100, 200, ..., 5000.
std::vector<int> default_kappa_grid();

/// One-sample Kolmogorov-Smirnov statistic sup |F_n - F|.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Asymptotic p-value of the KS statistic for n samples (Stephens' correction).
double ks_pvalue(double statistic, std::size_t n);

/// Pearson goodness-of-fit p-value for counts against expected frequencies.
double chi_square_gof_pvalue(std::span<const double> observed, std::span<const double> expected);

}  // namespace chanest
