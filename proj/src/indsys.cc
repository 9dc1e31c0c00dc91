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

#include "tyannot/indsys.h"

#include <stdexcept>
#include <utility>

namespace tyannot {

CoverageInstance FromAnnotationProblem(const Term& v, const Term& s0) {
  auto vd = Decorations(v);
  auto sd = Decorations(s0);
  if (vd.size() != sd.size()) {
    throw std::invalid_argument("coverage instance: terms differ in shape");
  }
  CoverageInstance inst;
  for (std::size_t i = 0; i < vd.size(); ++i) {
    if (!(vd[i].first == sd[i].first)) {
      throw std::invalid_argument("coverage instance: terms differ in shape");
    }
    if (!vd[i].second) {
      throw std::invalid_argument("coverage instance: v is not fully typed");
    }
    CollectTypeVars(*vd[i].second, inst.universe);
    if (sd[i].second) {
      inst.elements.push_back(vd[i].first);
      inst.covers.emplace(vd[i].first, TypeVars(*vd[i].second));
    }
  }
  if (!IndependentInCoverage(inst, {})) {
    throw std::logic_error("coverage instance: universe is not coverable");
  }
  return inst;
}

bool IndependentInCoverage(const CoverageInstance& inst,
                           const std::set<Position>& removed) {
  TyVarSet covered;
  for (const Position& p : inst.elements) {
    if (removed.contains(p)) continue;
    const TyVarSet& vars = inst.covers.at(p);
    covered.insert(vars.begin(), vars.end());
  }
  for (const TyVar& tv : inst.universe) {
    if (!covered.contains(tv)) return false;
  }
  return true;
}

IndependenceSystem CoverageSystem(const CoverageInstance& inst) {
  return CoverageSystem(inst, inst.elements);
}

IndependenceSystem CoverageSystem(const CoverageInstance& inst,
                                  std::vector<Position> ground) {
  return IndependenceSystem{
      std::move(ground), [inst](const std::set<Position>& removed) {
        return IndependentInCoverage(inst, removed);
      }};
}

std::set<Position> BestInGreedy(const IndependenceSystem& is) {
  std::set<Position> acc;
  for (const Position& e : is.ground) {
    acc.insert(e);
    if (!is.independent(acc)) acc.erase(e);
  }
  return acc;
}

bool GreedyMatchesDecrease(const PickStrategy& pick, const Term& v,
                           const Term& s0) {
  AnnotationReport report = Decrease(pick, v, s0);
  CoverageInstance inst = FromAnnotationProblem(v, s0);
  std::vector<Position> order = report.removed;
  std::set<Position> removed(report.removed.begin(), report.removed.end());
  for (const Position& p : inst.elements) {
    if (!removed.contains(p)) order.push_back(p);
  }
  std::set<Position> greedy = BestInGreedy(CoverageSystem(inst, order));
  if (greedy != removed) return false;
  std::set<Position> kept;
  for (const Position& p : inst.elements) {
    if (!greedy.contains(p)) kept.insert(p);
  }
  return kept == std::set<Position>(report.kept.begin(), report.kept.end());
}

}  // namespace tyannot
