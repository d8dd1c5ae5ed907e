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
#include "chanest/training_set.hpp"
#include "chanest/types.hpp"

namespace chanest {

/// Optimizer settings for the 2D-4D-2D network. Defaults: Adam, batch 128,
/// step 1e-3, at most 2000 epochs, stop once the epoch loss has improved by
/// less than 1e-6 over the last 50 epochs.
struct MlpHyper {
  int batch_size = 128;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_epsilon = 1e-8;
  int max_epochs = 2000;
  /// Stop once the epoch loss has not beaten its best by min_improvement for
  /// `patience` consecutive epochs.
  int patience = 50;
  double min_improvement = 1e-6;
};

struct MlpGradient {
  RMatrix hidden_w;
  RVector hidden_b;
  RMatrix output_w;
  RVector output_b;
};

struct MlpTrainingLog {
  double initial_loss = 0.0;
  double final_loss = 0.0;
  int epochs = 0;
};

/// Real-valued network with layer widths 2D, 4D, 2D: identity input,
/// logistic-sigmoid hidden layer, identity output. Complex D-vectors enter as
/// [Re; Im] and leave the same way.
struct MlpEstimator {
  RMatrix hidden_w;  // 4D x 2D
  RVector hidden_b;  // 4D
  RMatrix output_w;  // 2D x 4D
  RVector output_b;  // 2D
  MlpHyper hyper;
  std::uint64_t seed = 0;
  MlpTrainingLog log;

  /// All-zero parameters for complex dimension D.
  static MlpEstimator zeros(int dimension);
  /// Glorot-uniform weights, zero biases.
  static MlpEstimator glorot(int dimension, Rng& rng);

  int dimension() const { return static_cast<int>(hidden_w.cols() / 2); }

  /// Forward pass on real columns (2D x B).
  RMatrix forward(const RMatrix& x) const;
  /// Mean over columns of the squared Euclidean output error.
  double loss(const RMatrix& x, const RMatrix& target) const;
  /// Loss and its exact gradient by backpropagation.
  double loss_and_gradient(const RMatrix& x, const RMatrix& target, MlpGradient& grad) const;

  /// Complex columns in, complex columns out.
  CMatrix apply(const CMatrix& x) const;

  RVector flat_parameters() const;
  void set_flat_parameters(const RVector& flat);
  std::size_t parameter_count() const;
};

RVector flatten(const MlpGradient& g);

/// Stacks real and imaginary parts: D x B complex -> 2D x B real.
RMatrix pack_complex(const CMatrix& x);
CMatrix unpack_complex(const RMatrix& x);

/// Mini-batch Adam on the mean squared error of the packed outputs.
/// Throws NonFinite if the loss diverges.
MlpEstimator train_mlp(const TrainingSet& ts, const MlpHyper& hyper, Rng& rng);

}  // namespace chanest
