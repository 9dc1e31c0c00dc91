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

#ifndef TYANNOT_TYPING_H_
#define TYANNOT_TYPING_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tyannot/position.h"
#include "tyannot/result.h"
#include "tyannot/signature.h"
#include "tyannot/term.h"
#include "tyannot/type.h"

namespace tyannot {

// How free term variables are treated.
enum class FreeVarMode {
  // Free variables are rejected.
  kStrict,
  // An annotated free variable behaves like a constant of exactly its
  // annotated type; all its occurrences must agree on that type.
  kLift,
};

struct TypingOptions {
  FreeVarMode free_vars = FreeVarMode::kStrict;
  // kLift only: known types of free variables. An occurrence without an
  // annotation takes its type from here; one with an annotation must agree.
  std::map<std::string, Type> context;
};

// `options` in kLift mode with the context extended by the annotated free
// variables of `t`. Conflicting annotations are left for inference to report.
TypingOptions WithFreeVarsOf(const Term& t, TypingOptions options);

enum class TypeErrorKind {
  kUnificationClash,
  kOccursCheck,
  kUnknownConstant,
  kNotInstanceOfDeclared,
  kAmbiguousTerm,
  kIncompatibleBinding,
  kOpenTerm,
  kNotCTerm,
};

std::string_view TypeErrorKindName(TypeErrorKind kind);

struct TypeError {
  TypeErrorKind kind;
  std::optional<Position> position;
  std::string detail;

  std::string ToString() const;
};

// The well-typedness judgement on fully typed terms. Throws
// std::invalid_argument if some decoration of `u` is absent.
bool WellTyped(const Term& u, const Signature& sig,
               const TypingOptions& options = {});

// The type at the root (resp. at `p`) of a fully typed term. Throws
// std::invalid_argument when that decoration is absent and std::out_of_range
// when `p` is not a position of `u`.
const Type& TpOf(const Term& u);
const Type& TpOfAt(const Term& u, const Position& p);

struct InferenceResult {
  // A most general well-typed completion.
  Term completion;
  // Tyvars introduced by inference, in order of first occurrence. They are
  // named _0, _1, ... skipping any name already used by the input.
  std::vector<TyVar> fresh;
};

// Most general well-typed completion of `t`. Tyvars written in annotations
// of `t` are kept verbatim; every other tyvar of the result is fresh.
// Deterministic.
Result<InferenceResult, TypeError> Mgen(const Term& t, const Signature& sig,
                                        const TypingOptions& options = {});

// The single well-typed completion of an unambiguous C-term.
Result<Term, TypeError> UniqueCompletionOfCTerm(
    const Term& t, const Signature& sig, const TypingOptions& options = {});

// `instance` = `pattern`[rho] for some rho.
bool IsInstanceOf(const Term& instance, const Term& pattern);

}  // namespace tyannot

#endif  // TYANNOT_TYPING_H_
