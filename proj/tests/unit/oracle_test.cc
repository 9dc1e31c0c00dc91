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

#include "tyannot/oracle.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "checks.h"
#include "corpus.h"
#include "tyannot/annotate.h"
#include "tyannot/surface.h"
#include "tyannot/typing.h"

namespace tyannot {
namespace {

using ::tyannot::testing::CorpusSignature;
using ::tyannot::testing::Gen;
using ::tyannot::testing::PairSignature;
using ::tyannot::testing::Tm;
using ::tyannot::testing::Ty;
using ::tyannot::testing::TypedCorpus;

const Signature& Sig() { return CorpusSignature(); }

Signature Tiny() {
  Signature sig;
  sig.AddTyCon("nat", 0);
  sig.AddTyCon("list", 1);
  sig.AddConst("zero", Type::App("nat"));
  sig.AddConst("nil", Ty("'a list"));
  sig.AddConst("k", Ty("'a -> 'b -> 'a"));
  return sig;
}

// N(1) = leaves; N(d) = leaves + N(d-1)^2 + sum over constructors of
// N(d-1)^arity.
std::size_t ClosedFormCount(const Signature& sig, std::size_t pool,
                            std::size_t depth) {
  std::size_t leaves = pool;
  for (const auto& [name, arity] : sig.tycons()) leaves += arity == 0;
  std::size_t n = leaves;
  for (std::size_t d = 2; d <= depth; ++d) {
    std::size_t next = leaves + n * n;
    for (const auto& [name, arity] : sig.tycons()) {
      if (arity == 0) continue;
      std::size_t power = 1;
      for (std::size_t i = 0; i < arity; ++i) power *= n;
      next += power;
    }
    n = next;
  }
  return n;
}

std::vector<TyVar> Pool(std::size_t n) {
  std::vector<TyVar> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(TyVar{std::string(1, static_cast<char>('a' + i))});
  }
  return out;
}

struct ByPrint {
  bool operator()(const Term& a, const Term& b) const {
    return PrintTerm(a) < PrintTerm(b);
  }
};
using TermSet = std::set<Term, ByPrint>;

// Fills every bottom slot with every universe type and keeps the well-typed
// results.
TermSet BruteForceCompletions(const Term& s, const TypeUniverse& univ,
                                     const Signature& sig) {
  std::vector<Type> types = EnumerateTypes(univ);
  std::vector<Position> holes;
  for (const auto& [p, deco] : Decorations(s)) {
    if (!deco) holes.push_back(p);
  }
  TermSet out;
  std::vector<std::size_t> choice(holes.size(), 0);
  while (true) {
    Term u = s;
    for (std::size_t i = 0; i < holes.size(); ++i) {
      u = SetDecoAt(u, holes[i], types[choice[i]]);
    }
    if (WellTyped(u, sig)) out.insert(u);
    std::size_t i = 0;
    while (i < holes.size() && ++choice[i] == types.size()) choice[i++] = 0;
    if (i == holes.size()) break;
  }
  return out;
}


TEST(EnumerateTypesTest, LeavesOnly) {
  Signature sig;
  sig.AddTyCon("nat", 0);
  TypeUniverse univ = MakeUniverse(sig, 1, {TyVar{"a"}});
  EXPECT_EQ(EnumerateTypes(univ),
            (std::vector<Type>{Type::Var("a"), Type::App("nat")}));
}

TEST(EnumerateTypesTest, DepthTwoGround) {
  Signature sig;
  sig.AddTyCon("nat", 0);
  TypeUniverse univ = MakeUniverse(sig, 2, {});
  EXPECT_EQ(EnumerateTypes(univ),
            (std::vector<Type>{Type::App("nat"), Ty("nat -> nat", Sig())}));
}

TEST(EnumerateTypesTest, CountMatchesClosedForm) {
  for (std::size_t pool = 0; pool <= 2; ++pool) {
    for (std::size_t depth = 1; depth <= 3; ++depth) {
      TypeUniverse univ = MakeUniverse(Sig(), depth, Pool(pool));
      std::vector<Type> types = EnumerateTypes(univ);
      EXPECT_EQ(types.size(), ClosedFormCount(Sig(), pool, depth))
          << pool << " " << depth;
      std::set<Type> distinct(types.begin(), types.end());
      EXPECT_EQ(distinct.size(), types.size());
      for (const Type& type : types) {
        ASSERT_LE(type.depth(), depth);
        ASSERT_TRUE(univ.Contains(type));
      }
    }
  }
}

TEST(EnumerateTypesTest, ContainsRejectsOutsiders) {
  TypeUniverse univ = MakeUniverse(Sig(), 2, Pool(1));
  EXPECT_TRUE(univ.Contains(Ty("'a list", Sig())));
  EXPECT_FALSE(univ.Contains(Ty("'b", Sig())));
  EXPECT_FALSE(univ.Contains(Ty("nat list list", Sig())));
  EXPECT_FALSE(univ.Contains(Type::App("tree")));
}

TEST(EnumerateCompletionsTest, CompleteWellTypedTermIsItsOwnCompletion) {
  Term u = UniqueCompletionOfCTerm(Tm("fn (x : nat) . (x :: nat)"), Sig())
               .value();
  EXPECT_EQ(EnumerateCompletions(u, SufficientUniverse(u, Sig()), Sig()),
            std::vector<Term>{u});
}

TEST(EnumerateCompletionsTest, IncompatibleBindingHasNoCompletion) {
  Term u = Term::Abs("x", Ty("'a"), Term::Var("x", Ty("'b")), Ty("'a -> 'b"));
  EXPECT_TRUE(
      EnumerateCompletions(u, MakeUniverse(Sig(), 2, Pool(2)), Sig()).empty());
  Term partial = Term::Abs("x", Ty("'a"), Term::Var("x", Ty("'b")));
  EXPECT_TRUE(
      EnumerateCompletions(partial, MakeUniverse(Sig(), 2, Pool(2)), Sig())
          .empty());
}

TEST(EnumerateCompletionsTest, OpenAndUnknownAndAmbiguousTerms) {
  TypeUniverse univ = MakeUniverse(Sig(), 2, Pool(1));
  EXPECT_TRUE(EnumerateCompletions(Tm("y"), univ, Sig()).empty());
  EXPECT_TRUE(EnumerateCompletions(Term::Const("nope"), univ, Sig()).empty());
  Term shadowed = Term::Abs("x", std::nullopt,
                            Term::Abs("x", std::nullopt, Term::Var("x")));
  EXPECT_THROW(EnumerateCompletions(shadowed, univ, Sig()),
               std::invalid_argument);
}

TEST(EnumerateCompletionsTest, AgreesWithBruteForceFilling) {
  Signature sig = Tiny();
  TypeUniverse univ = MakeUniverse(sig, 2, Pool(1));
  for (const char* text :
       {"zero", "nil", "k zero", "fn x . x", "k (nil :: nat list)",
        "fn (x : 'a) . k x", "(k :: nat -> nat -> nat) zero",
        "fn x . (x :: nat list)", "k nil nil"}) {
    Term s = Tm(text, sig);
    std::vector<Term> found = EnumerateCompletions(s, univ, sig);
    TermSet distinct(found.begin(), found.end());
    EXPECT_EQ(distinct.size(), found.size()) << text;
    TermSet expected;
    if (Decorations(s).size() - AnnotatedPositions(s).size() <= 4) {
      expected = BruteForceCompletions(s, univ, sig);
      EXPECT_EQ(distinct, expected) << text;
    }
    EXPECT_EQ(EnumerateCompletions(s, univ, sig), found) << text;
    for (const Term& u : found) {
      EXPECT_TRUE(Subsumes(s, u));
      EXPECT_TRUE(WellTyped(u, sig));
    }
  }
}

TEST(EnumerateCompletionsTest, LimitTruncates) {
  Signature sig = Tiny();
  TypeUniverse univ = MakeUniverse(sig, 3, Pool(1));
  std::vector<Term> all = EnumerateCompletions(Tm("fn x . x", sig), univ, sig);
  ASSERT_GT(all.size(), 2u);
  std::vector<Term> two =
      EnumerateCompletions(Tm("fn x . x", sig), univ, sig, {}, 2);
  EXPECT_EQ(two, std::vector<Term>(all.begin(), all.begin() + 2));
}

TEST(SufficientUniverseTest, ContainsEveryDecoration) {
  for (const Term& t : TypedCorpus(100, 601)) {
    Term u = UniqueCompletionOfCTerm(t, Sig()).value();
    TypeUniverse univ = SufficientUniverse(u, Sig());
    for (const auto& [p, deco] : Decorations(u)) {
      ASSERT_TRUE(univ.Contains(*deco)) << PrintType(*deco);
    }
    ASSERT_GE(univ.pool.size(), TermTypeVars(u).size() + 2);
  }
}

TEST(AnnotationSubsetsTest, OrderedByCardinalityThenLexicographically) {
  Term u = UniqueCompletionOfCTerm(Tm("fn (x : nat) . (x :: nat)"), Sig())
               .value();
  std::vector<Term> subsets = AnnotationSubsets(u);
  ASSERT_EQ(subsets.size(), 8u);
  EXPECT_EQ(subsets.front(), EraseAll(u));
  EXPECT_EQ(subsets.back(), u);
  // Singletons in position order: [], [1], [2].
  EXPECT_EQ(AnnotatedPositions(subsets[1]), std::vector<Position>{Position{}});
  EXPECT_EQ(AnnotatedPositions(subsets[2]), std::vector<Position>{Position{1}});
  EXPECT_EQ(AnnotatedPositions(subsets[3]), std::vector<Position>{Position{2}});
  EXPECT_EQ(AnnotatedPositions(subsets[4]),
            (std::vector<Position>{Position{}, Position{1}}));
  for (std::size_t i = 0; i + 1 < subsets.size(); ++i) {
    EXPECT_LE(AnnotatedPositions(subsets[i]).size(),
              AnnotatedPositions(subsets[i + 1]).size());
  }
}

TEST(CorrectPrintingsTest, PairTerm) {
  Term t = Tm("(pair :: 'a -> 'a -> ('a, 'a) prod) (c :: 'a) (d :: 'a)",
              PairSignature());
  Term s0 = UniqueCompletionOfCTerm(t, PairSignature()).value();
  TypeUniverse univ = SufficientUniverse(s0, PairSignature());
  auto correct = EnumerateCorrectPrintings(t, univ, PairSignature());
  ASSERT_TRUE(correct);
  EXPECT_NE(std::find(correct->begin(), correct->end(), s0), correct->end());
  EXPECT_EQ(std::find(correct->begin(), correct->end(), EraseAll(s0)),
            correct->end());
  auto minimal = MinimalCorrectPrintings(t, univ, PairSignature());
  ASSERT_TRUE(minimal);
  EXPECT_EQ(minimal->size(), 4u);
  for (const PickStrategy& pick : BuiltinStrategies()) {
    Term out = Smobla(pick, t, PairSignature()).value().output;
    EXPECT_NE(std::find(minimal->begin(), minimal->end(), out),
              minimal->end())
        << pick.name;
  }
}

TEST(CorrectPrintingsTest, GroundTermWithUniqueErasure) {
  Term t = Tm("fn (x : nat) . (suc :: nat -> nat) (x :: nat)");
  Term s0 = UniqueCompletionOfCTerm(t, Sig()).value();
  auto minimal =
      MinimalCorrectPrintings(t, SufficientUniverse(s0, Sig()), Sig());
  ASSERT_TRUE(minimal);
  EXPECT_EQ(*minimal, std::vector<Term>{EraseAll(s0)});
}

TEST(CorrectPrintingsTest, MinimalMembersHaveNoCorrectPredecessor) {
  for (const Term& t : TypedCorpus(40, 602)) {
    Term s0 = UniqueCompletionOfCTerm(t, Sig()).value();
    TypeUniverse univ = SufficientUniverse(s0, Sig());
    auto correct = EnumerateCorrectPrintings(t, univ, Sig());
    auto minimal = MinimalCorrectPrintings(t, univ, Sig());
    ASSERT_TRUE(correct && minimal);
    for (const Term& m : *minimal) {
      ASSERT_NE(std::find(correct->begin(), correct->end(), m),
                correct->end());
      for (const Position& p : AnnotatedPositions(m)) {
        Term below = EraseAt(m, p);
        ASSERT_EQ(std::find(correct->begin(), correct->end(), below),
                  correct->end());
      }
    }
    // Oracle membership matches the decision procedure.
    for (const Term& s : AnnotationSubsets(s0)) {
      bool member =
          std::find(correct->begin(), correct->end(), s) != correct->end();
      ASSERT_EQ(member, IsCorrectPrinting(t, s, Sig()).value())
          << PrintTerm(s);
    }
  }
}

TEST(CorrectPrintingsTest, Errors) {
  Term t = Tm("(pair :: 'a -> 'a -> ('a, 'a) prod) (c :: 'a) (d :: 'a)",
              PairSignature());
  Term s0 = UniqueCompletionOfCTerm(t, PairSignature()).value();
  TypeUniverse univ = SufficientUniverse(s0, PairSignature());
  auto small = EnumerateCorrectPrintings(t, univ, PairSignature(), {}, 3);
  ASSERT_FALSE(small);
  EXPECT_EQ(small.error().kind, OracleErrorKind::kInstanceTooLarge);
  // A universe without the needed constructor cannot see t's completion.
  TypeUniverse blind = MakeUniverse(Signature{}, 3, univ.pool);
  auto none = EnumerateCorrectPrintings(t, blind, PairSignature());
  ASSERT_FALSE(none);
  EXPECT_EQ(none.error().kind, OracleErrorKind::kNoReference);
}

TEST(UniqueCompletionOracleTest, Examples) {
  Term t = Tm("(pair :: 'a -> 'a -> ('a, 'a) prod) (c :: 'a) (d :: 'a)",
              PairSignature());
  Term s0 = UniqueCompletionOfCTerm(t, PairSignature()).value();
  TypeUniverse univ = SufficientUniverse(s0, PairSignature());
  EXPECT_TRUE(HasUniqueCompletion(s0, s0, univ, PairSignature()));
  EXPECT_FALSE(HasUniqueCompletion(EraseAll(s0), s0, univ, PairSignature()));
  EXPECT_FALSE(HasUniqueCompletion(s0, EraseAll(s0), univ, PairSignature()));
}

TEST(OraclePropertyTest, CTermsHaveExactlyOneCompletion) {
  for (const Term& t : TypedCorpus(150, 603)) {
    std::string failure = testing::CheckUniqueCompletion(t, Sig());
    ASSERT_TRUE(failure.empty()) << failure;
  }
}

TEST(OraclePropertyTest, EnumerationIsDeterministic) {
  Gen gen(604);
  for (int i = 0; i < 30; ++i) {
    Term u = gen.RandomTypedTerm(Sig(), 5);
    Term s = u;
    for (const Position& p : Positions(u)) {
      if (gen.Coin(0.3)) s = EraseAt(s, p);
    }
    TypeUniverse univ = SufficientUniverse(u, Sig());
    std::vector<Term> first = EnumerateCompletions(s, univ, Sig(), {}, 50);
    EXPECT_EQ(first, EnumerateCompletions(s, univ, Sig(), {}, 50));
    if (first.size() < 50) {
      EXPECT_NE(std::find(first.begin(), first.end(), u), first.end())
          << PrintTerm(s);
    }
  }
}

}  // namespace
}  // namespace tyannot
