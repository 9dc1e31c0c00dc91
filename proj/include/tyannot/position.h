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

#ifndef TYANNOT_POSITION_H_
#define TYANNOT_POSITION_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tyannot {

// A path from the root of a term. Steps are 1 or 2, stored root first: on an
// application 1 and 2 descend into the function and the argument; on an
// abstraction [1] is the binder and 2 descends into the body.
//
// Ordering is lexicographic with a prefix before its extensions, which is
// also the pre-order in which positions are visited.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<int> steps);
  explicit Position(std::vector<std::uint8_t> steps);

  static Position Root() { return Position(); }

  bool is_root() const { return steps_.empty(); }
  std::size_t length() const { return steps_.size(); }
  std::span<const std::uint8_t> steps() const { return steps_; }
  int front() const { return steps_.front(); }

  // The position with `step` appended.
  Position Child(int step) const;
  // The position with the first step removed.
  Position Tail() const;

  std::string ToString() const;

  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<std::uint8_t> steps_;
};

}  // namespace tyannot

#endif  // TYANNOT_POSITION_H_
