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

#include "chanest/rng.hpp"
#include "chanest/runners.hpp"

namespace chanest {

struct ValidateOptions {
  bool quick = false;
};

/// Kolmogorov-Smirnov p-value of 2 M xi / L_E against chi2(2M), where xi is
/// the mean of M squared LMMSE errors on one subcarrier (N=16, K=4,
/// tau_max=2, SNR 0 dB), repeated `repetitions` times.
double training_loss_chi_square_pvalue(int m, int repetitions, Rng& rng);

/// Maximum relative error between backpropagated and central-difference
/// gradients of a random MLP on a `samples`-column problem.
double mlp_gradient_error(int dimension, int samples, double step, Rng& rng);

/// Invariant and oracle suite. The quick tier covers the cheap exact checks.
RunResult run_validate(const ValidateOptions& opt, const RunContext& ctx);

}  // namespace chanest
