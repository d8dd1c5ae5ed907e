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

#include "chanest/channel.hpp"
#include "chanest/errors.hpp"
#include "chanest/experiments.hpp"
#include "chanest/serialization.hpp"

using namespace chanest;

namespace {

TrainingSet small_set() {
  Rng rng(31);
  return generate_training_set(ChannelScenario::stationary({PdpKind::Exponential, 2}, 0.0),
                               OfdmConfig::centered(16, 4), 32, rng);
}

}  // namespace

TEST_CASE("linear estimator round trip is exact") {
  const Estimator e = train_linear(small_set());
  const Estimator back = parse_estimator(dump_estimator(e, 99));
  REQUIRE(std::holds_alternative<LinearWeights>(back));
  CHECK(std::get<LinearWeights>(back).w == std::get<LinearWeights>(e).w);
  const auto doc = estimator_to_json(e, 99);
  CHECK(doc["type"] == "linear");
  CHECK(doc["dimension"] == 4);
  CHECK(doc["seed"] == 99);
}

TEST_CASE("MLP round trip keeps weights and hyperparameters") {
  MlpHyper h;
  h.max_epochs = 3;
  Rng rng(2);
  const Estimator e = train_mlp(small_set(), h, rng);
  const Estimator back = parse_estimator(dump_estimator(e));
  REQUIRE(std::holds_alternative<MlpEstimator>(back));
  const auto& a = std::get<MlpEstimator>(e);
  const auto& b = std::get<MlpEstimator>(back);
  CHECK(a.flat_parameters() == b.flat_parameters());
  CHECK(b.hyper.max_epochs == 3);
  CHECK(b.log.epochs == a.log.epochs);
}

TEST_CASE("LS and blockwise round trips") {
  CHECK(std::holds_alternative<LsIdentity>(parse_estimator(dump_estimator(LsIdentity{}))));
  const Estimator blk = train_blockwise(small_set(), 2);
  const Estimator back = parse_estimator(dump_estimator(blk));
  REQUIRE(std::holds_alternative<BlockwiseLinear>(back));
  CHECK(std::get<BlockwiseLinear>(back).block_size() == 2);
  CHECK(std::get<BlockwiseLinear>(back).blocks[1].w == std::get<BlockwiseLinear>(blk).blocks[1].w);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_estimator(R"({"type": "cnn"})"), InvalidArgument);
  CHECK_THROWS_AS(parse_estimator(R"({"type": "linear", "dimension": 2, "weights": [[1, 0]]})"), Error);
  CHECK_THROWS(parse_estimator("not json"));
}

TEST_CASE("hyperparameter JSON round trip") {
  MlpHyper h;
  h.batch_size = 64;
  h.learning_rate = 5e-4;
  const MlpHyper back = mlp_hyper_from_json(to_json(h));
  CHECK(back.batch_size == 64);
  CHECK(back.learning_rate == 5e-4);
  CHECK(back.patience == h.patience);
}
