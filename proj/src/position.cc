// Copyright 2026 The tyannot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tyannot/position.h"

#include <stdexcept>
#include <utility>

namespace tyannot {
namespace {

void CheckStep(int step) {
  if (step != 1 && step != 2) {
    throw std::invalid_argument("position step must be 1 or 2, got " +
                                std::to_string(step));
  }
}

}  // namespace

Position::Position(std::initializer_list<int> steps) {
  steps_.reserve(steps.size());
  for (int step : steps) {
    CheckStep(step);
    steps_.push_back(static_cast<std::uint8_t>(step));
  }
}

Position::Position(std::vector<std::uint8_t> steps) : steps_(std::move(steps)) {
  for (std::uint8_t step : steps_) CheckStep(step);
}

Position Position::Child(int step) const {
  CheckStep(step);
  Position out = *this;
  out.steps_.push_back(static_cast<std::uint8_t>(step));
  return out;
}

Position Position::Tail() const {
  if (steps_.empty()) throw std::out_of_range("Tail() of the root position");
  return Position(std::vector<std::uint8_t>(steps_.begin() + 1, steps_.end()));
}

std::string Position::ToString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(steps_[i]);
  }
  out += "]";
  return out;
}

}  // namespace tyannot
