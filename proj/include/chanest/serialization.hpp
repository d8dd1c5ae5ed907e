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
#include <string>

#include <json.hpp>

#include "chanest/estimators.hpp"
#include "chanest/mlp.hpp"

namespace chanest {

/// Estimator as a JSON document with fields type, dimension, weights,
/// hyperparameters and seed. Complex entries are [re, im] pairs, matrices are
/// row-major. Doubles are written with round-trip precision.
nlohmann::json estimator_to_json(const Estimator& e, std::uint64_t seed = 0);
Estimator estimator_from_json(const nlohmann::json& doc);

std::string dump_estimator(const Estimator& e, std::uint64_t seed = 0);
Estimator parse_estimator(const std::string& text);

nlohmann::json to_json(const MlpHyper& h);
MlpHyper mlp_hyper_from_json(const nlohmann::json& doc);

}  // namespace chanest
