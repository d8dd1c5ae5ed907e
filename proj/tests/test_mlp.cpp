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

#include "chanest/channel.hpp"
#include "chanest/errors.hpp"
#include "chanest/experiments.hpp"
#include "chanest/mlp.hpp"
#include "chanest/validate.hpp"

using namespace chanest;

TEST_CASE("backpropagation matches central differences") {
  Rng rng(12);
  CHECK(mlp_gradient_error(3, 3, 1e-5, rng) < 1e-4);
  CHECK(mlp_gradient_error(5, 7, 1e-5, rng) < 1e-4);
}

TEST_CASE("gradient of a hand-sized network") {
  // D = 1: independent finite differences on each parameter block directly
  Rng rng(2);
  MlpEstimator net = MlpEstimator::glorot(1, rng);
  RMatrix x(2, 2), t(2, 2);
  x << 0.3, -1.2, 0.7, 0.4;
  t << 0.1, 0.5, -0.2, 0.9;
  MlpGradient g;
  net.loss_and_gradient(x, t, g);
  const double h = 1e-6;
  for (int i = 0; i < net.output_b.size(); ++i) {
    MlpEstimator p = net, m = net;
    p.output_b(i) += h;
    m.output_b(i) -= h;
    CHECK(g.output_b(i) == doctest::Approx((p.loss(x, t) - m.loss(x, t)) / (2 * h)).epsilon(1e-6));
  }
  for (int i = 0; i < net.hidden_w.rows(); ++i)
    for (int j = 0; j < net.hidden_w.cols(); ++j) {
      MlpEstimator p = net, m = net;
      p.hidden_w(i, j) += h;
      m.hidden_w(i, j) -= h;
      CHECK(g.hidden_w(i, j) == doctest::Approx((p.loss(x, t) - m.loss(x, t)) / (2 * h)).epsilon(1e-5));
    }
}

TEST_CASE("layer shapes and zero-input response") {
  Rng rng(1);
  MlpEstimator net = MlpEstimator::glorot(4, rng);
  CHECK(net.hidden_w.rows() == 16);
  CHECK(net.hidden_w.cols() == 8);
  CHECK(net.output_w.rows() == 8);
  CHECK(net.parameter_count() == static_cast<std::size_t>(16 * 8 + 16 + 8 * 16 + 8));
  CHECK(net.hidden_b.isZero());
  // zero biases: output is W_out * sigmoid(0)
  const RMatrix y = net.forward(RMatrix::Zero(8, 1));
  const RVector expect = net.output_w * RVector::Constant(16, 0.5);
  CHECK((y.col(0) - expect).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("Glorot initialization bounds") {
  Rng rng(8);
  MlpEstimator net = MlpEstimator::glorot(10, rng);
  const double limit = std::sqrt(6.0 / (20 + 40));
  CHECK(net.hidden_w.cwiseAbs().maxCoeff() <= limit);
  CHECK(net.output_w.cwiseAbs().maxCoeff() <= limit);
}

TEST_CASE("complex packing round trip") {
  CMatrix z(3, 2);
  z << cdouble(1, 2), cdouble(3, 4), cdouble(-1, 0), cdouble(0, -5), cdouble(0.5, 0.25), cdouble(7, 8);
  const RMatrix p = pack_complex(z);
  CHECK(p.rows() == 6);
  CHECK(p(0, 0) == 1.0);
  CHECK(p(3, 0) == 2.0);
  CHECK(unpack_complex(p) == z);
}

TEST_CASE("flat parameter round trip") {
  Rng rng(5);
  MlpEstimator net = MlpEstimator::glorot(3, rng);
  RVector flat = net.flat_parameters();
  flat(0) = 42.0;
  net.set_flat_parameters(flat);
  CHECK(net.flat_parameters() == flat);
  CHECK_THROWS_AS(net.set_flat_parameters(RVector::Zero(3)), DimensionMismatch);
}

TEST_CASE("training lowers the loss and is reproducible") {
  Rng data(3);
  const auto scenario = ChannelScenario::stationary({PdpKind::Exponential, 2}, 10.0);
  const TrainingSet ts = generate_training_set(scenario, OfdmConfig::centered(16, 4), 400, data);
  MlpHyper h;
  h.max_epochs = 60;
  Rng a(7), b(7);
  const MlpEstimator n1 = train_mlp(ts, h, a);
  const MlpEstimator n2 = train_mlp(ts, h, b);
  CHECK(n1.log.final_loss < 0.5 * n1.log.initial_loss);
  CHECK(n1.log.epochs == 60);
  CHECK(n1.flat_parameters() == n2.flat_parameters());
}

TEST_CASE("early stopping on a flat loss") {
  Rng data(4);
  const auto scenario = ChannelScenario::stationary({PdpKind::Exponential, 2}, 10.0);
  TrainingSet ts = generate_training_set(scenario, OfdmConfig::centered(16, 2), 64, data);
  MlpHyper h;
  h.learning_rate = 1e-12;
  h.patience = 5;
  Rng rng(1);
  CHECK(train_mlp(ts, h, rng).log.epochs <= 6);
}
