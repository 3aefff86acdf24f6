// Copyright 2026 qchan developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qchan {

enum class Errc {
  InvalidArgument,
  NonHermitian,
  NotPsd,
  NonUnitAxis,
  UnsupportedDim,
  LambdaOutOfRange,
  OutOfRange,
  InvalidChannel,
  AllZeroWeights,
  ZeroSuccessProbability,
  DegenerateRotation,
  BudgetExhausted,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qchan
