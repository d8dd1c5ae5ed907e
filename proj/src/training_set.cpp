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

#include "chanest/training_set.hpp"

#include "chanest/errors.hpp"

namespace chanest {

TrainingSet TrainingSet::rows(int begin, int count) const {
  if (begin < 0 || count < 1 || begin + count > dimension())
    throw DimensionMismatch("row range out of bounds for training set of dimension " +
                            std::to_string(dimension()));
  TrainingSet out;
  out.inputs = inputs.middleRows(begin, count);
  out.labels = labels.middleRows(begin, count);
  out.provenance = provenance;
  out.seed = seed;
  return out;
}

void check_training_set(const TrainingSet& ts) {
  if (ts.size() < 1) throw InvalidArgument("training set is empty");
  if (ts.labels.rows() != ts.inputs.rows() || ts.labels.cols() != ts.inputs.cols())
    throw DimensionMismatch("training inputs and labels differ in shape");
}

}  // namespace chanest
