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

#include <stdexcept>
#include <string>

namespace chanest {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Regularized correlation matrix failed the positive-definite factorization.
class IllConditioned : public Error {
 public:
  using Error::Error;
};

/// Gram matrix of the training inputs is singular (too few or degenerate samples).
class RankDeficient : public Error {
 public:
  using Error::Error;
};

/// Training loss became NaN or infinite.
class NonFinite : public Error {
 public:
  using Error::Error;
};

/// Series or continued-fraction iteration exceeded its budget.
class NonConverged : public Error {
 public:
  using Error::Error;
};

class BracketFailure : public Error {
 public:
  using Error::Error;
};

class NonDivisible : public Error {
 public:
  using Error::Error;
};

/// Bad command line or configuration file; the message names the offending key.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace chanest
