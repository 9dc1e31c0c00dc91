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

#ifndef TYANNOT_SUBST_H_
#define TYANNOT_SUBST_H_

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>

#include "tyannot/type.h"

namespace tyannot {

// A type substitution with finite support. Only non-identity entries are
// stored, so two substitutions are equal as functions iff their maps are.
class Subst {
 public:
  Subst() = default;
  Subst(std::initializer_list<std::pair<const TyVar, Type>> entries);

  static Subst Identity() { return Subst(); }
  // The substitution sending `from` to `to` and every other tyvar to itself.
  static Subst Single(const TyVar& from, Type to);
  // Normalizes away identity entries.
  static Subst FromMap(std::map<TyVar, Type> entries);

  // rho(tv); Var(tv) outside the support.
  Type operator()(const TyVar& tv) const;
  // The substitution updated at `tv`.
  Subst With(const TyVar& tv, Type to) const;

  const std::map<TyVar, Type>& support() const { return map_; }
  bool empty() const { return map_.empty(); }

  friend bool operator==(const Subst&, const Subst&) = default;

 private:
  void Set(const TyVar& tv, Type to);

  std::map<TyVar, Type> map_;
};

Type SubstType(const Type& type, const Subst& rho);
MaybeType SubstType(const MaybeType& type, const Subst& rho);

// (rho . rho_prime)(a) = rho_prime(a)[rho]: apply rho_prime first.
Subst Compose(const Subst& rho, const Subst& rho_prime);

// Returns rho with `instance` = `pattern`[rho], restricted to TV(pattern), or
// nullopt when `instance` is not an instance of `pattern`. Tyvars of
// `instance` are treated as constants.
std::optional<Subst> MatchType(const Type& instance, const Type& pattern);

// Extends `rho` so that `instance` = `pattern`[rho]. Returns false (leaving
// `rho` in an unspecified state) on failure.
bool MatchTypeInto(const Type& instance, const Type& pattern,
                   std::map<TyVar, Type>& rho);

}  // namespace tyannot

#endif  // TYANNOT_SUBST_H_
