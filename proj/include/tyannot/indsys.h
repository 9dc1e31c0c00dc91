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

// Annotation removal phrased as an independence system: a set of annotated
// positions may be removed when the remaining ones still cover every tyvar.

#ifndef TYANNOT_INDSYS_H_
#define TYANNOT_INDSYS_H_

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "tyannot/annotate.h"
#include "tyannot/position.h"
#include "tyannot/term.h"
#include "tyannot/type.h"

namespace tyannot {

// `independent` must be pure and hold on the empty set.
struct IndependenceSystem {
  std::vector<Position> ground;
  std::function<bool(const std::set<Position>&)> independent;
};

struct CoverageInstance {
  // Annotated positions of s0, lexicographic.
  std::vector<Position> elements;
  std::map<Position, TyVarSet> covers;
  TyVarSet universe;
};

// Throws std::invalid_argument on a shape mismatch or when `v` is not fully
// typed, std::logic_error when the full element set does not cover the
// universe.
CoverageInstance FromAnnotationProblem(const Term& v, const Term& s0);

// Whether the elements outside `removed` still cover the universe.
bool IndependentInCoverage(const CoverageInstance& inst,
                           const std::set<Position>& removed);

// `ground` defaults to the elements in lexicographic order.
IndependenceSystem CoverageSystem(const CoverageInstance& inst);
IndependenceSystem CoverageSystem(const CoverageInstance& inst,
                                  std::vector<Position> ground);

// Scans the ground set in order, keeping each element whose addition leaves
// the accumulated set independent.
std::set<Position> BestInGreedy(const IndependenceSystem& is);

// Replays Decrease, runs BestInGreedy over the removed positions followed by
// the kept ones, and compares the resulting removed and kept sets.
bool GreedyMatchesDecrease(const PickStrategy& pick, const Term& v,
                           const Term& s0);

}  // namespace tyannot

#endif  // TYANNOT_INDSYS_H_
