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

namespace chanest {

/// Regularized lower incomplete gamma P(a, x) for a > 0. Series for
/// x < a + 1, Lentz continued fraction for Q otherwise, both scaled by the
/// log-space prefactor exp(a ln x - x - lgamma(a)).
/// Throws NonConverged after 10^4 iterations.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

/// Density of the chi-square distribution with `dof` degrees of freedom.
double chi2_pdf(double x, double dof);

/// P(dof/2, x/2); zero for x <= 0.
double chi2_cdf(double x, double dof);

/// Wilson-Hilferty cube-root normal approximation of the chi-square CDF.
double chi2_cdf_wilson_hilferty(double x, double dof);

double standard_normal_cdf(double z);

/// Asymptotic Kolmogorov survival function P(K > lambda).
double kolmogorov_survival(double lambda);

}  // namespace chanest
