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

#ifndef TYANNOT_ANNOTATE_H_
#define TYANNOT_ANNOTATE_H_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tyannot/position.h"
#include "tyannot/result.h"
#include "tyannot/signature.h"
#include "tyannot/term.h"
#include "tyannot/typing.h"

namespace tyannot {

// Raised when a strategy picks a position that fails the coverage test.
class IncompatibleStrategyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// True iff `s` is annotated at `p` and each tyvar of the type of `v` at `p`
// also occurs in the type of `v` at some other annotated position of `s`.
// Throws std::invalid_argument if `v` is not fully typed or the two terms
// have different positions.
bool CoverageTest(const Term& v, const Term& s, const Position& p);

// The positions passing CoverageTest, in lexicographic order.
std::vector<Position> PassingPositions(const Term& v, const Term& s);

struct PickStrategy {
  std::string name;
  // Called only when some position passes; must return a passing one.
  std::function<Position(const Term& v, const Term& s)> choose;
};

// lexFirst, lexLast and sizeCost, in that order.
const std::vector<PickStrategy>& BuiltinStrategies();
const PickStrategy* FindStrategy(const std::string& name);

struct AnnotationReport {
  Term output;
  // In removal order.
  std::vector<Position> removed;
  // In lexicographic order.
  std::vector<Position> kept;
  // The most general completion of the erased input.
  Term v;
};

// Repeatedly erases the annotation picked by `pick` while some position
// passes the coverage test. Throws std::invalid_argument on a shape mismatch
// or an ambiguous `s`, IncompatibleStrategyError if `pick` misbehaves.
AnnotationReport Decrease(const PickStrategy& pick, const Term& v,
                          const Term& s);

// Decrease(pick, mgen(erase(t)), mgen(t)) for a typable unambiguous C-term.
Result<AnnotationReport, TypeError> Smobla(const PickStrategy& pick,
                                           const Term& t, const Signature& sig,
                                           const TypingOptions& options = {});

enum class PrintingVerdict {
  kCorrect,
  // s has no well-typed completion.
  kUntypable,
  // s is not below mgen(t).
  kNotSubsumed,
  // mgen(s) is strictly more general than mgen(t).
  kMoreGeneral,
  // Some tyvar of mgen(s) is not pinned by an annotation of s.
  kLooseTyVar,
};

struct PrintingDiagnosis {
  PrintingVerdict verdict = PrintingVerdict::kCorrect;
  std::string message;
};

// Decides whether mgen(t) is the unique most general well-typed completion
// of `s`, reporting the first failing condition. Errors when t is not a
// typable unambiguous C-term or s is ambiguous.
Result<PrintingDiagnosis, TypeError> DiagnosePrinting(
    const Term& t, const Term& s, const Signature& sig,
    const TypingOptions& options = {});

Result<bool, TypeError> IsCorrectPrinting(const Term& t, const Term& s,
                                          const Signature& sig,
                                          const TypingOptions& options = {});

}  // namespace tyannot

#endif  // TYANNOT_ANNOTATE_H_
