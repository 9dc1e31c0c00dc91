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

// Reference enumerators over finite type universes. Nothing here uses
// unification: completions are found by a search that fills absent
// decorations with universe types and checks the typing rules directly.

#ifndef TYANNOT_ORACLE_H_
#define TYANNOT_ORACLE_H_

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "tyannot/result.h"
#include "tyannot/signature.h"
#include "tyannot/term.h"
#include "tyannot/type.h"
#include "tyannot/typing.h"

namespace tyannot {

struct TypeUniverse {
  // Maximum tree depth; a leaf has depth 1.
  std::size_t depth_bound = 1;
  std::vector<TyVar> pool;
  // Sorted by name.
  std::vector<TyCon> tycons;

  bool Contains(const Type& type) const;
};

TypeUniverse MakeUniverse(const Signature& sig, std::size_t depth_bound,
                          std::vector<TyVar> pool);

// A universe for questions about `u` (normally mgen of some term): deep
// enough for every decoration of `u`, with the tyvars of `u` plus two unused
// ones.
TypeUniverse SufficientUniverse(const Term& u, const Signature& sig);

// All types of depth at most the bound, shallower first; within one depth:
// tyvars, nullary constructors, arrows, then applied constructors.
std::vector<Type> EnumerateTypes(const TypeUniverse& univ);

// Well-typed F-terms above `s` whose filled decorations come from `univ`, in
// a deterministic order, at most `limit` of them. Throws
// std::invalid_argument if `s` is ambiguous.
std::vector<Term> EnumerateCompletions(
    const Term& s, const TypeUniverse& univ, const Signature& sig,
    const TypingOptions& options = {},
    std::size_t limit = std::numeric_limits<std::size_t>::max());

enum class OracleErrorKind {
  kInstanceTooLarge,
  // t itself does not have exactly one completion in the universe.
  kNoReference,
};

struct OracleError {
  OracleErrorKind kind;
  std::string detail;
};

inline constexpr std::size_t kMaxOraclePositions = 12;

// Every annotation subset of `u`, by increasing number of kept annotations
// and then lexicographically on the kept positions.
std::vector<Term> AnnotationSubsets(const Term& u);

// The annotation subsets s of the completion of `t` for which that
// completion is the only one of s within `univ`.
Result<std::vector<Term>, OracleError> EnumerateCorrectPrintings(
    const Term& t, const TypeUniverse& univ, const Signature& sig,
    const TypingOptions& options = {},
    std::size_t max_positions = kMaxOraclePositions);

// The minimal elements of EnumerateCorrectPrintings under subsumption.
Result<std::vector<Term>, OracleError> MinimalCorrectPrintings(
    const Term& t, const TypeUniverse& univ, const Signature& sig,
    const TypingOptions& options = {},
    std::size_t max_positions = kMaxOraclePositions);

// Whether `reference` is the only well-typed completion of `s` in `univ`.
bool HasUniqueCompletion(const Term& s, const Term& reference,
                         const TypeUniverse& univ, const Signature& sig,
                         const TypingOptions& options = {});

// Whether mgen(t) is the unique well-typed completion of `s`, decided by
// enumeration over SufficientUniverse(mgen(t)).
Result<bool, TypeError> IsStronglyCorrectPrinting(
    const Term& t, const Term& s, const Signature& sig,
    const TypingOptions& options = {});

}  // namespace tyannot

#endif  // TYANNOT_ORACLE_H_
