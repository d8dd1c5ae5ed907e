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

#include "chanest/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chanest/errors.hpp"

namespace chanest {

namespace {

constexpr int kMaxIterations = 10000;
constexpr double kTolerance = 1e-16;

// exp(a ln x - x - lgamma(a))
double gamma_prefactor(double a, double x) { return std::exp(a * std::log(x) - x - std::lgamma(a)); }

double lower_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kTolerance) return sum * gamma_prefactor(a, x);
  }
  throw NonConverged("incomplete gamma series did not converge for a=" + std::to_string(a) +
                     ", x=" + std::to_string(x));
}

double upper_continued_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kTolerance) return h * gamma_prefactor(a, x);
  }
  throw NonConverged("incomplete gamma continued fraction did not converge for a=" + std::to_string(a) +
                     ", x=" + std::to_string(x));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0)) throw InvalidArgument("incomplete gamma needs a > 0");
  if (std::isnan(x)) return x;
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return lower_series(a, x);
  return 1.0 - upper_continued_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw InvalidArgument("incomplete gamma needs a > 0");
  if (std::isnan(x)) return x;
  if (x <= 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return 1.0 - lower_series(a, x);
  return upper_continued_fraction(a, x);
}

double chi2_pdf(double x, double dof) {
  if (!(dof > 0.0)) throw InvalidArgument("chi-square degrees of freedom must be positive");
  if (x < 0.0) return 0.0;
  const double k = 0.5 * dof;
  if (x == 0.0) {
    if (dof < 2.0) return std::numeric_limits<double>::infinity();
    return dof == 2.0 ? 0.5 : 0.0;
  }
  return std::exp((k - 1.0) * std::log(x) - 0.5 * x - k * std::log(2.0) - std::lgamma(k));
}

double chi2_cdf(double x, double dof) {
  if (!(dof > 0.0)) throw InvalidArgument("chi-square degrees of freedom must be positive");
  return regularized_gamma_p(0.5 * dof, 0.5 * x);
}

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double chi2_cdf_wilson_hilferty(double x, double dof) {
  if (x <= 0.0) return 0.0;
  const double v = 2.0 / (9.0 * dof);
  const double z = (std::cbrt(x / dof) - (1.0 - v)) / std::sqrt(v);
  return standard_normal_cdf(z);
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;  // series converges slowly here; the value is 1 to double precision
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace chanest
