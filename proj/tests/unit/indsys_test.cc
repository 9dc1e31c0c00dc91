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

#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "checks.h"
#include "corpus.h"
#include "tyannot/annotate.h"
#include "tyannot/typing.h"

namespace tyannot {
namespace {

using ::tyannot::testing::CorpusSignature;
using ::tyannot::testing::PairSignature;
using ::tyannot::testing::Tm;
using ::tyannot::testing::TypedCorpus;

const Signature& Sig() { return CorpusSignature(); }

const TyVar kA{"a"};
const TyVar kB{"b"};
const Position kP1{1};
const Position kP2{2};
const Position kP3{2, 2};

// S = {p1, p2, p3} covering {a}, {a, b}, {b}.
CoverageInstance ThreeElements() {
  CoverageInstance inst;
  inst.elements = {kP1, kP2, kP3};
  inst.covers = {{kP1, {kA}}, {kP2, {kA, kB}}, {kP3, {kB}}};
  inst.universe = {kA, kB};
  return inst;
}

// Independence read off the definition: the kept elements cover everything.
bool CoversAll(const CoverageInstance& inst, const std::set<Position>& kept) {
  for (const TyVar& tv : inst.universe) {
    bool hit = false;
    for (const Position& p : kept) hit = hit || inst.covers.at(p).contains(tv);
    if (!hit) return false;
  }
  return true;
}

std::set<Position> Subset(const std::vector<Position>& elements,
                          std::uint32_t mask) {
  std::set<Position> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (mask & (1u << i)) out.insert(elements[i]);
  }
  return out;
}

struct Problem {
  Term v;
  Term s0;
};

Problem FromCTerm(const Term& t, const Signature& sig) {
  return {Mgen(EraseAll(t), sig).value().completion,
          UniqueCompletionOfCTerm(t, sig).value()};
}

TEST(IndependentInCoverageTest, AllEightSubsetsAgreeWithBruteForce) {
  CoverageInstance inst = ThreeElements();
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::set<Position> removed = Subset(inst.elements, mask);
    std::set<Position> kept = Subset(inst.elements, 7u & ~mask);
    EXPECT_EQ(IndependentInCoverage(inst, removed), CoversAll(inst, kept))
        << mask;
  }
  EXPECT_TRUE(IndependentInCoverage(inst, {}));
  EXPECT_TRUE(IndependentInCoverage(inst, {kP1, kP3}));
  EXPECT_FALSE(IndependentInCoverage(inst, {kP1, kP2}));
  EXPECT_FALSE(IndependentInCoverage(inst, {kP1, kP2, kP3}));
}

TEST(BestInGreedyTest, ScanOrderOfTheThreeElementInstance) {
  EXPECT_EQ(BestInGreedy(CoverageSystem(ThreeElements())),
            (std::set<Position>{kP1, kP3}));
  EXPECT_EQ(BestInGreedy(CoverageSystem(ThreeElements(), {kP2, kP1, kP3})),
            (std::set<Position>{kP2}));
}

TEST(BestInGreedyTest, DegenerateSystems) {
  IndependenceSystem empty{{}, [](const std::set<Position>&) { return true; }};
  EXPECT_TRUE(BestInGreedy(empty).empty());
  IndependenceSystem only_empty{
      {kP1, kP2}, [](const std::set<Position>& s) { return s.empty(); }};
  EXPECT_TRUE(BestInGreedy(only_empty).empty());
}

TEST(BestInGreedyTest, ResultIsMaximal) {
  CoverageInstance inst = ThreeElements();
  for (const auto& order :
       std::vector<std::vector<Position>>{{kP1, kP2, kP3},
                                          {kP3, kP2, kP1},
                                          {kP2, kP3, kP1}}) {
    IndependenceSystem is = CoverageSystem(inst, order);
    std::set<Position> best = BestInGreedy(is);
    ASSERT_TRUE(is.independent(best));
    for (const Position& p : order) {
      if (best.contains(p)) continue;
      std::set<Position> more = best;
      more.insert(p);
      EXPECT_FALSE(is.independent(more));
    }
  }
}

TEST(FromAnnotationProblemTest, GroundInstance) {
  Problem pr = FromCTerm(Tm("fn (x : nat) . (suc :: nat -> nat) (x :: nat)"),
                         Sig());
  CoverageInstance inst = FromAnnotationProblem(pr.v, pr.s0);
  EXPECT_TRUE(inst.universe.empty());
  EXPECT_EQ(inst.elements, AnnotatedPositions(pr.s0));
  std::set<Position> all(inst.elements.begin(), inst.elements.end());
  EXPECT_TRUE(IndependentInCoverage(inst, all));
}

TEST(FromAnnotationProblemTest, SinglePolymorphicConstant) {
  Problem pr = FromCTerm(Tm("(c :: 'a)"), Sig());
  CoverageInstance inst = FromAnnotationProblem(pr.v, pr.s0);
  ASSERT_EQ(inst.elements, std::vector<Position>{Position{}});
  EXPECT_EQ(inst.covers.at(Position{}), TermTypeVars(pr.v));
  EXPECT_EQ(inst.covers.at(Position{}).size(), 1u);
}

TEST(FromAnnotationProblemTest, PairInstanceMatchesHandComputedCovers) {
  Problem pr = FromCTerm(
      Tm("(pair :: 'a -> 'a -> ('a, 'a) prod) (c :: 'a) (d :: 'a)",
         PairSignature()),
      PairSignature());
  CoverageInstance inst = FromAnnotationProblem(pr.v, pr.s0);
  // v = ((pair c_x) d_y) with pair : x -> y -> (x, y) prod.
  TyVar x = TpOfAt(pr.v, Position{1, 2}).var();
  TyVar y = TpOfAt(pr.v, Position{2}).var();
  ASSERT_NE(x, y);
  EXPECT_EQ(inst.universe, (TyVarSet{x, y}));
  EXPECT_EQ(inst.covers.at(Position{}), (TyVarSet{x, y}));
  EXPECT_EQ(inst.covers.at(Position{1}), (TyVarSet{x, y}));
  EXPECT_EQ(inst.covers.at(Position{1, 1}), (TyVarSet{x, y}));
  EXPECT_EQ(inst.covers.at(Position{1, 2}), TyVarSet{x});
  EXPECT_EQ(inst.covers.at(Position{2}), TyVarSet{y});
}

TEST(FromAnnotationProblemTest, ShapeMismatchThrows) {
  Problem pr = FromCTerm(Tm("(c :: 'a)"), Sig());
  EXPECT_THROW(FromAnnotationProblem(pr.v, Tm("suc zero")),
               std::invalid_argument);
}

TEST(GreedyMatchesDecreaseTest, Examples) {
  Problem ground = FromCTerm(
      Tm("fn (x : nat) . (suc :: nat -> nat) (x :: nat)"), Sig());
  Problem single = FromCTerm(Tm("(c :: 'a)"), Sig());
  for (const PickStrategy& pick : BuiltinStrategies()) {
    EXPECT_TRUE(GreedyMatchesDecrease(pick, ground.v, ground.s0));
    EXPECT_TRUE(GreedyMatchesDecrease(pick, single.v, single.s0));
    EXPECT_EQ(Decrease(pick, single.v, single.s0).kept,
              std::vector<Position>{Position{}});
  }
}

TEST(IndsysPropertyTest, CorpusEquivalenceAndDownwardClosure) {
  for (const Term& t : TypedCorpus(200, 501)) {
    for (const PickStrategy& pick : BuiltinStrategies()) {
      std::string failure = testing::CheckGreedyEquivalence(t, pick, Sig());
      ASSERT_TRUE(failure.empty()) << failure;
    }
    std::string failure = testing::CheckDownwardClosure(t, Sig());
    ASSERT_TRUE(failure.empty()) << failure;
  }
}

TEST(IndsysPropertyTest, KeptSetIsAMinimalCover) {
  for (const Term& t : TypedCorpus(200, 502)) {
    Problem pr = FromCTerm(t, Sig());
    CoverageInstance inst = FromAnnotationProblem(pr.v, pr.s0);
    for (const PickStrategy& pick : BuiltinStrategies()) {
      AnnotationReport r = Decrease(pick, pr.v, pr.s0);
      std::set<Position> kept(r.kept.begin(), r.kept.end());
      ASSERT_TRUE(CoversAll(inst, kept));
      for (const Position& p : r.kept) {
        std::set<Position> fewer = kept;
        fewer.erase(p);
        // Elements that cover nothing are never kept.
        ASSERT_FALSE(CoversAll(inst, fewer)) << p.ToString();
      }
    }
  }
}

}  // namespace
}  // namespace tyannot
