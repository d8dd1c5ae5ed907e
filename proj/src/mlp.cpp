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

#include "chanest/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "chanest/errors.hpp"

namespace chanest {

namespace {

RMatrix sigmoid(const RMatrix& z) { return (1.0 + (-z.array()).exp()).inverse().matrix(); }

// Adam state for one parameter block.
struct AdamSlot {
  RMatrix m;
  RMatrix v;

  void init(Eigen::Index rows, Eigen::Index cols) {
    m = RMatrix::Zero(rows, cols);
    v = RMatrix::Zero(rows, cols);
  }

  template <typename Param, typename Grad>
  void step(Param& p, const Grad& g, const MlpHyper& h, double bias1, double bias2) {
    m = h.beta1 * m + (1.0 - h.beta1) * g;
    v = h.beta2 * v + (1.0 - h.beta2) * g.cwiseAbs2();
    p.array() -= h.learning_rate * (m.array() / bias1) / ((v.array() / bias2).sqrt() + h.adam_epsilon);
  }
};

}  // namespace

MlpEstimator MlpEstimator::zeros(int dimension) {
  if (dimension < 1) throw InvalidArgument("MLP dimension must be positive");
  MlpEstimator net;
  net.hidden_w = RMatrix::Zero(4 * dimension, 2 * dimension);
  net.hidden_b = RVector::Zero(4 * dimension);
  net.output_w = RMatrix::Zero(2 * dimension, 4 * dimension);
  net.output_b = RVector::Zero(2 * dimension);
  return net;
}

MlpEstimator MlpEstimator::glorot(int dimension, Rng& rng) {
  MlpEstimator net = zeros(dimension);
  auto fill = [&rng](RMatrix& w) {
    const double limit = std::sqrt(6.0 / static_cast<double>(w.rows() + w.cols()));
    for (Eigen::Index c = 0; c < w.cols(); ++c)
      for (Eigen::Index r = 0; r < w.rows(); ++r) w(r, c) = limit * (2.0 * rng.uniform() - 1.0);
  };
  fill(net.hidden_w);
  fill(net.output_w);
  return net;
}

RMatrix MlpEstimator::forward(const RMatrix& x) const {
  if (x.rows() != hidden_w.cols())
    throw DimensionMismatch("MLP expects " + std::to_string(hidden_w.cols()) + " real inputs, got " +
                            std::to_string(x.rows()));
  RMatrix z = hidden_w * x;
  z.colwise() += hidden_b;
  RMatrix y = output_w * sigmoid(z);
  y.colwise() += output_b;
  return y;
}

double MlpEstimator::loss(const RMatrix& x, const RMatrix& target) const {
  return (forward(x) - target).squaredNorm() / static_cast<double>(x.cols());
}

double MlpEstimator::loss_and_gradient(const RMatrix& x, const RMatrix& target, MlpGradient& grad) const {
  const double inv_b = 1.0 / static_cast<double>(x.cols());
  RMatrix z = hidden_w * x;
  z.colwise() += hidden_b;
  const RMatrix a = sigmoid(z);
  RMatrix err = output_w * a;
  err.colwise() += output_b;
  err -= target;
  const double value = err.squaredNorm() * inv_b;

  const RMatrix d_out = (2.0 * inv_b) * err;
  grad.output_w.noalias() = d_out * a.transpose();
  grad.output_b = d_out.rowwise().sum();
  RMatrix d_hidden = output_w.transpose() * d_out;
  d_hidden.array() *= a.array() * (1.0 - a.array());
  grad.hidden_w.noalias() = d_hidden * x.transpose();
  grad.hidden_b = d_hidden.rowwise().sum();
  return value;
}

CMatrix MlpEstimator::apply(const CMatrix& x) const { return unpack_complex(forward(pack_complex(x))); }

std::size_t MlpEstimator::parameter_count() const {
  return static_cast<std::size_t>(hidden_w.size() + hidden_b.size() + output_w.size() + output_b.size());
}

RVector MlpEstimator::flat_parameters() const {
  RVector flat(static_cast<Eigen::Index>(parameter_count()));
  Eigen::Index at = 0;
  for (const auto* block : {&hidden_w, &output_w}) {
    flat.segment(at, block->size()) = block->reshaped();
    at += block->size();
  }
  for (const auto* block : {&hidden_b, &output_b}) {
    flat.segment(at, block->size()) = *block;
    at += block->size();
  }
  return flat;
}

void MlpEstimator::set_flat_parameters(const RVector& flat) {
  if (static_cast<std::size_t>(flat.size()) != parameter_count())
    throw DimensionMismatch("flat parameter vector has wrong length");
  Eigen::Index at = 0;
  for (auto* block : {&hidden_w, &output_w}) {
    block->reshaped() = flat.segment(at, block->size());
    at += block->size();
  }
  for (auto* block : {&hidden_b, &output_b}) {
    *block = flat.segment(at, block->size());
    at += block->size();
  }
}

RVector flatten(const MlpGradient& g) {
  RVector flat(g.hidden_w.size() + g.output_w.size() + g.hidden_b.size() + g.output_b.size());
  Eigen::Index at = 0;
  flat.segment(at, g.hidden_w.size()) = g.hidden_w.reshaped();
  at += g.hidden_w.size();
  flat.segment(at, g.output_w.size()) = g.output_w.reshaped();
  at += g.output_w.size();
  flat.segment(at, g.hidden_b.size()) = g.hidden_b;
  at += g.hidden_b.size();
  flat.segment(at, g.output_b.size()) = g.output_b;
  return flat;
}

RMatrix pack_complex(const CMatrix& x) {
  RMatrix out(2 * x.rows(), x.cols());
  out.topRows(x.rows()) = x.real();
  out.bottomRows(x.rows()) = x.imag();
  return out;
}

CMatrix unpack_complex(const RMatrix& x) {
  if (x.rows() % 2 != 0) throw DimensionMismatch("packed complex data needs an even row count");
  const Eigen::Index d = x.rows() / 2;
  CMatrix out(d, x.cols());
  out.real() = x.topRows(d);
  out.imag() = x.bottomRows(d);
  return out;
}

MlpEstimator train_mlp(const TrainingSet& ts, const MlpHyper& hyper, Rng& rng) {
  check_training_set(ts);
  if (hyper.batch_size < 1 || hyper.max_epochs < 0 || !(hyper.learning_rate > 0.0))
    throw InvalidArgument("invalid MLP hyperparameters");

  const RMatrix x = pack_complex(ts.inputs);
  const RMatrix t = pack_complex(ts.labels);
  const int m = ts.size();

  MlpEstimator net = MlpEstimator::glorot(ts.dimension(), rng);
  net.hyper = hyper;
  net.log.initial_loss = net.loss(x, t);
  if (!std::isfinite(net.log.initial_loss)) throw NonFinite("initial MLP loss is not finite");

  AdamSlot s_hw, s_hb, s_ow, s_ob;
  s_hw.init(net.hidden_w.rows(), net.hidden_w.cols());
  s_hb.init(net.hidden_b.rows(), 1);
  s_ow.init(net.output_w.rows(), net.output_w.cols());
  s_ob.init(net.output_b.rows(), 1);

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  const int batch = std::min(hyper.batch_size, m);
  RMatrix xb(x.rows(), batch), tb(t.rows(), batch);
  MlpGradient grad;
  double best_loss = std::numeric_limits<double>::infinity();
  int stale_epochs = 0;  // epochs since best_loss last dropped by min_improvement
  double beta1_pow = 1.0, beta2_pow = 1.0;

  int epoch = 0;
  for (; epoch < hyper.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng.engine());
    double epoch_loss = 0.0;
    for (int start = 0; start < m; start += batch) {
      const int n = std::min(batch, m - start);
      if (n != xb.cols()) {
        xb.resize(x.rows(), n);
        tb.resize(t.rows(), n);
      }
      for (int j = 0; j < n; ++j) {
        xb.col(j) = x.col(order[static_cast<std::size_t>(start + j)]);
        tb.col(j) = t.col(order[static_cast<std::size_t>(start + j)]);
      }
      const double batch_loss = net.loss_and_gradient(xb, tb, grad);
      if (!std::isfinite(batch_loss))
        throw NonFinite("MLP training loss diverged at epoch " + std::to_string(epoch));
      epoch_loss += batch_loss * n;

      beta1_pow *= hyper.beta1;
      beta2_pow *= hyper.beta2;
      const double bias1 = 1.0 - beta1_pow, bias2 = 1.0 - beta2_pow;
      s_hw.step(net.hidden_w, grad.hidden_w, hyper, bias1, bias2);
      s_hb.step(net.hidden_b, grad.hidden_b, hyper, bias1, bias2);
      s_ow.step(net.output_w, grad.output_w, hyper, bias1, bias2);
      s_ob.step(net.output_b, grad.output_b, hyper, bias1, bias2);
    }
    epoch_loss /= m;
    if (epoch_loss < best_loss - hyper.min_improvement) {
      best_loss = epoch_loss;
      stale_epochs = 0;
    } else if (++stale_epochs >= hyper.patience) {
      ++epoch;
      break;
    }
  }

  net.log.epochs = epoch;
  net.log.final_loss = net.loss(x, t);
  if (!std::isfinite(net.log.final_loss)) throw NonFinite("final MLP loss is not finite");
  return net;
}

}  // namespace chanest
