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

#include "tyannot/subst.h"

#include <vector>

namespace tyannot {

Subst::Subst(std::initializer_list<std::pair<const TyVar, Type>> entries) {
  for (const auto& [tv, to] : entries) Set(tv, to);
}

Subst Subst::Single(const TyVar& from, Type to) {
  Subst out;
  out.Set(from, std::move(to));
  return out;
}

Subst Subst::FromMap(std::map<TyVar, Type> entries) {
  Subst out;
  for (auto& [tv, to] : entries) out.Set(tv, std::move(to));
  return out;
}

void Subst::Set(const TyVar& tv, Type to) {
  if (to.is_var() && to.name() == tv.name) {
    map_.erase(tv);
  } else {
    map_.insert_or_assign(tv, std::move(to));
  }
}

Type Subst::operator()(const TyVar& tv) const {
  auto it = map_.find(tv);
  if (it == map_.end()) return Type::Var(tv);
  return it->second;
}

Subst Subst::With(const TyVar& tv, Type to) const {
  Subst out = *this;
  out.Set(tv, std::move(to));
  return out;
}

Type SubstType(const Type& type, const Subst& rho) {
  if (rho.empty()) return type;
  switch (type.kind()) {
    case Type::Kind::kVar:
      return rho(type.var());
    case Type::Kind::kArrow:
      return Type::Arrow(SubstType(type.dom(), rho),
                         SubstType(type.cod(), rho));
    case Type::Kind::kApp: {
      std::vector<Type> args;
      args.reserve(type.args().size());
      for (const Type& arg : type.args()) args.push_back(SubstType(arg, rho));
      return Type::App(type.name(), std::move(args));
    }
  }
  return type;
}

MaybeType SubstType(const MaybeType& type, const Subst& rho) {
  if (!type) return std::nullopt;
  return SubstType(*type, rho);
}

Subst Compose(const Subst& rho, const Subst& rho_prime) {
  // Support of the composite lies within supp(rho) u supp(rho_prime).
  std::map<TyVar, Type> out;
  for (const auto& [tv, to] : rho_prime.support()) {
    out.emplace(tv, SubstType(to, rho));
  }
  for (const auto& [tv, to] : rho.support()) {
    if (!rho_prime.support().contains(tv)) out.emplace(tv, to);
  }
  return Subst::FromMap(std::move(out));
}

bool MatchTypeInto(const Type& instance, const Type& pattern,
                   std::map<TyVar, Type>& rho) {
  if (pattern.is_var()) {
    auto [it, inserted] = rho.try_emplace(pattern.var(), instance);
    return inserted || it->second == instance;
  }
  if (instance.kind() != pattern.kind() || instance.name() != pattern.name() ||
      instance.args().size() != pattern.args().size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.args().size(); ++i) {
    if (!MatchTypeInto(instance.args()[i], pattern.args()[i], rho)) {
      return false;
    }
  }
  return true;
}

std::optional<Subst> MatchType(const Type& instance, const Type& pattern) {
  std::map<TyVar, Type> rho;
  if (!MatchTypeInto(instance, pattern, rho)) return std::nullopt;
  return Subst::FromMap(std::move(rho));
}

}  // namespace tyannot
