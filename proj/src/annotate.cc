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

#include "tyannot/annotate.h"

#include <algorithm>
#include <map>
#include <utility>

#include "tyannot/surface.h"

namespace tyannot {
namespace {

struct Aligned {
  std::vector<Position> positions;
  std::vector<TyVarSet> vars;  // tyvars of v at each position
  std::vector<bool> annotated;  // in s
};

Aligned Align(const Term& v, const Term& s) {
  auto vd = Decorations(v);
  auto sd = Decorations(s);
  if (vd.size() != sd.size()) {
    throw std::invalid_argument("coverage test: terms differ in shape");
  }
  Aligned out;
  for (std::size_t i = 0; i < vd.size(); ++i) {
    if (!(vd[i].first == sd[i].first)) {
      throw std::invalid_argument("coverage test: terms differ in shape");
    }
    if (!vd[i].second) {
      throw std::invalid_argument("coverage test: v is not fully typed");
    }
    out.positions.push_back(vd[i].first);
    out.vars.push_back(TypeVars(*vd[i].second));
    out.annotated.push_back(sd[i].second.has_value());
  }
  return out;
}

std::vector<bool> Passing(const Aligned& a) {
  std::map<TyVar, int> witnesses;
  for (std::size_t i = 0; i < a.positions.size(); ++i) {
    if (!a.annotated[i]) continue;
    for (const TyVar& tv : a.vars[i]) ++witnesses[tv];
  }
  std::vector<bool> out(a.positions.size(), false);
  for (std::size_t i = 0; i < a.positions.size(); ++i) {
    if (!a.annotated[i]) continue;
    out[i] = std::all_of(a.vars[i].begin(), a.vars[i].end(),
                         [&](const TyVar& tv) { return witnesses[tv] >= 2; });
  }
  return out;
}

Position ChooseLexFirst(const Term& v, const Term& s) {
  return PassingPositions(v, s).front();
}

Position ChooseLexLast(const Term& v, const Term& s) {
  return PassingPositions(v, s).back();
}

Position ChooseSizeCost(const Term& v, const Term& s) {
  std::vector<Position> passing = PassingPositions(v, s);
  const Position* best = nullptr;
  std::size_t best_size = 0;
  for (const Position& p : passing) {
    std::size_t size = MtpOf(s, p)->size();
    if (best == nullptr || size > best_size) {
      best = &p;
      best_size = size;
    }
  }
  return *best;
}

Result<Term, TypeError> ReferenceCompletion(const Term& t,
                                            const Signature& sig,
                                            const TypingOptions& options) {
  if (!IsUnambiguous(t)) {
    return TypeError{TypeErrorKind::kAmbiguousTerm, std::nullopt,
                     "the original term is ambiguous"};
  }
  return UniqueCompletionOfCTerm(t, sig, options);
}

TypingOptions OptionsFor(const Term& t, const TypingOptions& options) {
  if (options.free_vars == FreeVarMode::kStrict) return options;
  return WithFreeVarsOf(t, options);
}

}  // namespace

bool CoverageTest(const Term& v, const Term& s, const Position& p) {
  Aligned a = Align(v, s);
  auto it = std::lower_bound(a.positions.begin(), a.positions.end(), p);
  if (it == a.positions.end() || !(*it == p)) return false;
  return Passing(a)[it - a.positions.begin()];
}

std::vector<Position> PassingPositions(const Term& v, const Term& s) {
  Aligned a = Align(v, s);
  std::vector<bool> passing = Passing(a);
  std::vector<Position> out;
  for (std::size_t i = 0; i < passing.size(); ++i) {
    if (passing[i]) out.push_back(a.positions[i]);
  }
  return out;
}

const std::vector<PickStrategy>& BuiltinStrategies() {
  static const std::vector<PickStrategy> kStrategies = {
      {"lexFirst", ChooseLexFirst},
      {"lexLast", ChooseLexLast},
      {"sizeCost", ChooseSizeCost},
  };
  return kStrategies;
}

const PickStrategy* FindStrategy(const std::string& name) {
  for (const PickStrategy& strategy : BuiltinStrategies()) {
    if (strategy.name == name) return &strategy;
  }
  return nullptr;
}

AnnotationReport Decrease(const PickStrategy& pick, const Term& v,
                          const Term& s) {
  if (!IsFTerm(v)) throw std::invalid_argument("decrease: v is not an F-term");
  if (!IsUnambiguous(s)) throw std::invalid_argument("decrease: ambiguous s");
  AnnotationReport report{s, {}, {}, v};
  while (true) {
    std::vector<Position> passing = PassingPositions(v, report.output);
    if (passing.empty()) break;
    Position p = pick.choose(v, report.output);
    if (!std::binary_search(passing.begin(), passing.end(), p)) {
      throw IncompatibleStrategyError("strategy '" + pick.name +
                                      "' picked failing position " +
                                      p.ToString());
    }
    report.output = EraseAt(report.output, p);
    report.removed.push_back(p);
  }
  report.kept = AnnotatedPositions(report.output);
  return report;
}

Result<AnnotationReport, TypeError> Smobla(const PickStrategy& pick,
                                           const Term& t, const Signature& sig,
                                           const TypingOptions& options) {
  TypingOptions opts = OptionsFor(t, options);
  auto s0 = ReferenceCompletion(t, sig, opts);
  if (!s0) return s0.error();
  auto v = Mgen(EraseAll(t), sig, opts);
  if (!v) return v.error();
  return Decrease(pick, v->completion, *s0);
}

Result<PrintingDiagnosis, TypeError> DiagnosePrinting(
    const Term& t, const Term& s, const Signature& sig,
    const TypingOptions& options) {
  TypingOptions opts = OptionsFor(t, options);
  auto reference = ReferenceCompletion(t, sig, opts);
  if (!reference) return reference.error();
  if (!IsUnambiguous(s)) {
    return TypeError{TypeErrorKind::kAmbiguousTerm, std::nullopt,
                     "the printed term is ambiguous"};
  }
  auto inferred = Mgen(s, sig, opts);
  if (!inferred) {
    return PrintingDiagnosis{PrintingVerdict::kUntypable,
                             "the printing does not typecheck: " +
                                 inferred.error().ToString()};
  }
  if (!Subsumes(s, *reference)) {
    return PrintingDiagnosis{
        PrintingVerdict::kNotSubsumed,
        "the printing is not an annotation subset of the original"};
  }
  const Term& completion = inferred->completion;
  if (!EqualUpToRenaming(completion, *reference)) {
    return PrintingDiagnosis{PrintingVerdict::kMoreGeneral,
                             "reparsing yields a more general typing: " +
                                 PrintTerm(completion)};
  }
  TyVarSet pinned = TermTypeVars(s);
  for (const TyVar& tv : TermTypeVars(completion)) {
    if (!pinned.contains(tv)) {
      return PrintingDiagnosis{PrintingVerdict::kLooseTyVar,
                               "type variable '" + tv.name +
                                   " is not fixed by any annotation"};
    }
  }
  return PrintingDiagnosis{PrintingVerdict::kCorrect, "correct printing"};
}

Result<bool, TypeError> IsCorrectPrinting(const Term& t, const Term& s,
                                          const Signature& sig,
                                          const TypingOptions& options) {
  auto diagnosis = DiagnosePrinting(t, s, sig, options);
  if (!diagnosis) return diagnosis.error();
  return diagnosis->verdict == PrintingVerdict::kCorrect;
}

}  // namespace tyannot
