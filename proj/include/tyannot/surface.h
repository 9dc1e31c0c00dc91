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

// Concrete syntax for signatures, types and terms.
//
// Signature files are line based:
//
//   # comment
//   tycon list 1
//   const nil : 'a list
//
// Types: tyvars are written 'a; `->` is right associative and binds loosest;
// constructors are applied postfix (`nat`, `'a list`, `('a, 'b) prod`).
//
// Terms: `fn x . t` and `fn (x : T) . t` abstract, juxtaposition applies (left
// associative), `(t :: T)` annotates the node t. Identifiers declared as
// constants in the signature denote constants; all others are variables.

#ifndef TYANNOT_SURFACE_H_
#define TYANNOT_SURFACE_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "tyannot/result.h"
#include "tyannot/signature.h"
#include "tyannot/term.h"
#include "tyannot/type.h"

namespace tyannot {

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

enum class ParseErrorKind {
  kSyntax,
  kDuplicateDeclaration,
  kUnknownTyCon,
  kArityMismatch,
  kShadowedBinder,
  kNestedAnnotation,
};

std::string_view ParseErrorKindName(ParseErrorKind kind);

struct ParseError {
  ParseErrorKind kind = ParseErrorKind::kSyntax;
  SourceSpan span;
  std::string expected;
  std::string found;

  // "offset B-E: <kind>: expected X, found 'Y'".
  std::string ToString() const;
};

Result<Signature, ParseError> ParseSignature(std::string_view text);
Result<Type, ParseError> ParseType(std::string_view text, const Signature& sig);
Result<Term, ParseError> ParseTerm(std::string_view text, const Signature& sig);

// Minimal parentheses, single spaces.
std::string PrintType(const Type& type);
// PrintType, or "_" when absent.
std::string PrintMaybeType(const MaybeType& type);

// Single-line rendering with minimal parentheses. An annotated node prints
// as `(A :: T)` where A is the node in atom form, a binder as `(x : T)`.
// Throws std::invalid_argument when `t` is ambiguous.
std::string PrintTerm(const Term& t);

// Inverse of ParseSignature up to comments and declaration order.
std::string PrintSignature(const Signature& sig);

}  // namespace tyannot

#endif  // TYANNOT_SURFACE_H_
