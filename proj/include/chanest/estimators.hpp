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

#include <string>
#include <variant>
#include <vector>

#include "chanest/channel.hpp"
#include "chanest/mlp.hpp"
#include "chanest/training_set.hpp"
#include "chanest/types.hpp"

namespace chanest {

/// LS pass-through: the estimate is the pilot observation itself.
struct LsIdentity {};

/// Square complex filter W applied as W * h_ls.
struct LinearWeights {
  CMatrix w;

  int dimension() const { return static_cast<int>(w.rows()); }
};

/// Independent linear filters over contiguous, equally sized subcarrier blocks.
struct BlockwiseLinear {
  std::vector<LinearWeights> blocks;

  int block_size() const { return blocks.empty() ? 0 : blocks.front().dimension(); }
  int dimension() const { return block_size() * static_cast<int>(blocks.size()); }
};

using Estimator = std::variant<LsIdentity, LinearWeights, MlpEstimator, BlockwiseLinear>;

/// Short type tag: "ls", "linear", "mlp" or "blockwise".
std::string estimator_type(const Estimator& e);

/// Input dimension, or 0 for LsIdentity which accepts any length.
int estimator_dimension(const Estimator& e);

/// Wiener filter R (R + sigma2 I)^-1 via a Hermitian positive-definite solve.
LinearWeights lmmse_weights(const CMatrix& r_hh, double sigma2);

/// Average per-subcarrier MSE of the Wiener filter: tr(R - R (R + sigma2 I)^-1 R) / K.
double lmmse_mse_theoretical(const CMatrix& r_hh, double sigma2);

/// LMMSE designed for a uniform PDP with the worst-case delay tau_upper.
LinearWeights robust_lmmse_weights(int tau_upper, const OfdmConfig& cfg, double sigma2);

/// Least-squares fit of W to the training pairs (normal equations with a
/// Hermitian Gram solve). Throws RankDeficient for M < D or singular data.
LinearWeights train_linear(const TrainingSet& ts);

/// Sum over samples of |W x_m - y_m|^2.
double linear_training_loss(const LinearWeights& w, const TrainingSet& ts);

CVector apply_linear(const LinearWeights& w, const CVector& x);

CVector apply_estimator(const Estimator& e, const CVector& x);

/// Column-wise application to a D x B batch.
CMatrix apply_estimator_batch(const Estimator& e, const CMatrix& x);

}  // namespace chanest
