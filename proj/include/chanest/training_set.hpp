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

#include "chanest/types.hpp"

namespace chanest {

/// M pairs of (LS observation, true CFR). Samples are stored as columns, so
/// both matrices are D x M.
struct TrainingSet {
  CMatrix inputs;
  CMatrix labels;
  std::string provenance;
  std::uint64_t seed = 0;

  int size() const { return static_cast<int>(inputs.cols()); }
  int dimension() const { return static_cast<int>(inputs.rows()); }

  /// Restriction to the contiguous subcarrier rows [begin, begin + count).
  TrainingSet rows(int begin, int count) const;
};

/// Throws InvalidArgument/DimensionMismatch when the set breaks its invariants.
void check_training_set(const TrainingSet& ts);

}  // namespace chanest
