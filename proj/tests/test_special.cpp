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

#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "chanest/errors.hpp"
#include "chanest/rng.hpp"
#include "chanest/special.hpp"

using namespace chanest;

TEST_CASE("regularized gamma against reference values") {
  CHECK(regularized_gamma_p(5.0, 3.0) == doctest::Approx(0.18473675547622787).epsilon(1e-13));
  CHECK(regularized_gamma_p(0.5, 0.1) == doctest::Approx(0.34527915398142317).epsilon(1e-13));
  CHECK(regularized_gamma_p(100.0, 90.0) == doctest::Approx(0.15822098918643007).epsilon(1e-12));
  CHECK(regularized_gamma_q(1000.0, 1100.0) == doctest::Approx(0.0010593232539299773).epsilon(1e-10));
  CHECK(regularized_gamma_p(10000.0, 9800.0) == doctest::Approx(0.02220754381396969).epsilon(1e-10));
}

TEST_CASE("regularized gamma against boost on random points") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const double a = 0.5 * rng.uniform_int(1, 20000);
    const double x = a * (0.2 + 1.8 * rng.uniform());
    const double p = regularized_gamma_p(a, x);
    const double ref = boost::math::gamma_p(a, x);
    CHECK(std::abs(p - ref) < 1e-10);
    CHECK(p + regularized_gamma_q(a, x) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("regularized gamma edge cases") {
  CHECK(regularized_gamma_p(3.0, 0.0) == 0.0);
  CHECK(regularized_gamma_q(3.0, 0.0) == 1.0);
  CHECK_THROWS_AS(regularized_gamma_p(0.0, 1.0), InvalidArgument);
  CHECK(regularized_gamma_p(1.0, -1.0) == 0.0);
}

TEST_CASE("chi-square cdf and pdf") {
  CHECK(chi2_cdf(10.0, 10.0) == doctest::Approx(0.5595067149347879).epsilon(1e-13));
  CHECK(chi2_pdf(10.0, 10.0) == doctest::Approx(0.08773368488392541).epsilon(1e-13));
  CHECK(chi2_pdf(0.0, 2.0) == 0.5);
  CHECK(chi2_pdf(0.0, 4.0) == 0.0);
  CHECK(chi2_cdf(-1.0, 4.0) == 0.0);
  // kappa = 2 is an exponential law with mean 2
  for (double x : {0.1, 1.0, 5.0}) CHECK(chi2_cdf(x, 2.0) == doctest::Approx(1.0 - std::exp(-x / 2.0)).epsilon(1e-14));
}

TEST_CASE("chi-square cdf approaches Wilson-Hilferty for large kappa") {
  for (double k : {1000.0, 5000.0, 20000.0})
    for (double z : {-2.5, -1.0, 0.0, 1.5, 3.0}) {
      const double x = k + z * std::sqrt(2.0 * k);
      CHECK(std::abs(chi2_cdf(x, k) - chi2_cdf_wilson_hilferty(x, k)) < 1e-4);
    }
}

TEST_CASE("chi-square cdf is the integral of the pdf") {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const double k = 2.0 * rng.uniform_int(1, 10000);
    const double x = k * (0.5 + rng.uniform());
    const int n = 20000;
    const double h = x / n;
    double s = chi2_pdf(0.0, k) + chi2_pdf(x, k);
    for (int j = 1; j < n; ++j) s += (j % 2 ? 4.0 : 2.0) * chi2_pdf(j * h, k);
    CHECK(std::abs(s * h / 3.0 - chi2_cdf(x, k)) < 1e-6);
  }
}

TEST_CASE("standard normal cdf") {
  CHECK(standard_normal_cdf(0.0) == 0.5);
  CHECK(standard_normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
}

TEST_CASE("Kolmogorov survival function") {
  CHECK(kolmogorov_survival(0.5) == doctest::Approx(0.96394524).epsilon(1e-7));
  CHECK(kolmogorov_survival(1.0) == doctest::Approx(0.26999967).epsilon(1e-7));
  CHECK(kolmogorov_survival(1.36) == doctest::Approx(0.04948588).epsilon(1e-6));
  CHECK(kolmogorov_survival(1.63) == doctest::Approx(0.00984636).epsilon(1e-6));
  CHECK(kolmogorov_survival(0.0) == 1.0);
}
