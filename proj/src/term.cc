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

#include "tyannot/term.h"

#include <map>
#include <stdexcept>

namespace tyannot {

Term Term::Var(std::string name, MaybeType deco) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kVar, std::move(name), std::move(deco), std::nullopt, {}}));
}

Term Term::Const(std::string name, MaybeType deco) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kConst, std::move(name), std::move(deco), std::nullopt, {}}));
}

Term Term::App(Term fun, Term arg, MaybeType deco) {
  std::vector<Term> kids;
  kids.reserve(2);
  kids.push_back(std::move(fun));
  kids.push_back(std::move(arg));
  return Term(std::make_shared<const Node>(
      Node{Kind::kApp, {}, std::move(deco), std::nullopt, std::move(kids)}));
}

Term Term::Abs(std::string binder, MaybeType binder_deco, Term body,
               MaybeType deco) {
  std::vector<Term> kids;
  kids.push_back(std::move(body));
  return Term(std::make_shared<const Node>(
      Node{Kind::kAbs, std::move(binder), std::move(deco),
           std::move(binder_deco), std::move(kids)}));
}

Term Term::WithDeco(MaybeType deco) const {
  Node copy = *node_;
  copy.deco = std::move(deco);
  return Term(std::make_shared<const Node>(std::move(copy)));
}

Term Term::WithBinderDeco(MaybeType deco) const {
  if (!is_abs()) throw std::invalid_argument("binder decoration on non-abs");
  Node copy = *node_;
  copy.binder_deco = std::move(deco);
  return Term(std::make_shared<const Node>(std::move(copy)));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.deco == y.deco &&
         x.binder_deco == y.binder_deco && x.kids == y.kids;
}

namespace {

void CollectDecorations(const Term& t, std::vector<std::uint8_t>& path,
                        std::vector<std::pair<Position, MaybeType>>& out) {
  out.emplace_back(Position(path), t.deco());
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return;
    case Term::Kind::kApp:
      path.push_back(1);
      CollectDecorations(t.fun(), path, out);
      path.back() = 2;
      CollectDecorations(t.arg(), path, out);
      path.pop_back();
      return;
    case Term::Kind::kAbs:
      path.push_back(1);
      out.emplace_back(Position(path), t.binder_deco());
      path.back() = 2;
      CollectDecorations(t.body(), path, out);
      path.pop_back();
      return;
  }
}

[[noreturn]] void ThrowOutOfRange(const Position& p) {
  throw std::out_of_range("position " + p.ToString() + " is not in the term");
}

const MaybeType& MtpOfImpl(const Term& t, std::span<const std::uint8_t> p,
                           const Position& full) {
  if (p.empty()) return t.deco();
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      break;
    case Term::Kind::kApp:
      return MtpOfImpl(p[0] == 1 ? t.fun() : t.arg(), p.subspan(1), full);
    case Term::Kind::kAbs:
      if (p[0] == 1) {
        if (p.size() == 1) return t.binder_deco();
        break;
      }
      return MtpOfImpl(t.body(), p.subspan(1), full);
  }
  ThrowOutOfRange(full);
}

Term SetDecoImpl(const Term& t, std::span<const std::uint8_t> p,
                 const Position& full, MaybeType deco) {
  if (p.empty()) return t.WithDeco(std::move(deco));
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      break;
    case Term::Kind::kApp:
      if (p[0] == 1) {
        return Term::App(SetDecoImpl(t.fun(), p.subspan(1), full,
                                     std::move(deco)),
                         t.arg(), t.deco());
      }
      return Term::App(t.fun(),
                       SetDecoImpl(t.arg(), p.subspan(1), full,
                                   std::move(deco)),
                       t.deco());
    case Term::Kind::kAbs:
      if (p[0] == 1) {
        if (p.size() == 1) return t.WithBinderDeco(std::move(deco));
        break;
      }
      return Term::Abs(
          t.name(), t.binder_deco(),
          SetDecoImpl(t.body(), p.subspan(1), full, std::move(deco)),
          t.deco());
  }
  ThrowOutOfRange(full);
}

bool DecoBelow(const MaybeType& lo, const MaybeType& hi) {
  return !lo || lo == hi;
}

bool AllDecos(const Term& t, bool (*pred)(const Term& node, bool binder,
                                          const MaybeType& deco)) {
  if (!pred(t, false, t.deco())) return false;
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return true;
    case Term::Kind::kApp:
      return AllDecos(t.fun(), pred) && AllDecos(t.arg(), pred);
    case Term::Kind::kAbs:
      return pred(t, true, t.binder_deco()) && AllDecos(t.body(), pred);
  }
  return true;
}

void CollectBinders(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return;
    case Term::Kind::kApp:
      CollectBinders(t.fun(), out);
      CollectBinders(t.arg(), out);
      return;
    case Term::Kind::kAbs:
      out.push_back(t.name());
      CollectBinders(t.body(), out);
      return;
  }
}

void CollectTermTypeVars(const Term& t, TyVarSet& out) {
  if (t.deco()) CollectTypeVars(*t.deco(), out);
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return;
    case Term::Kind::kApp:
      CollectTermTypeVars(t.fun(), out);
      CollectTermTypeVars(t.arg(), out);
      return;
    case Term::Kind::kAbs:
      if (t.binder_deco()) CollectTypeVars(*t.binder_deco(), out);
      CollectTermTypeVars(t.body(), out);
      return;
  }
}

void CollectInOrder(const Term& t, std::vector<TyVar>& out) {
  if (t.deco()) CollectTypeVarsInOrder(*t.deco(), out);
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return;
    case Term::Kind::kApp:
      CollectInOrder(t.fun(), out);
      CollectInOrder(t.arg(), out);
      return;
    case Term::Kind::kAbs:
      if (t.binder_deco()) CollectTypeVarsInOrder(*t.binder_deco(), out);
      CollectInOrder(t.body(), out);
      return;
  }
}

bool MatchTermInto(const Term& instance, const Term& pattern,
                   std::map<TyVar, Type>& rho) {
  if (instance.kind() != pattern.kind() || instance.name() != pattern.name()) {
    return false;
  }
  auto match_deco = [&rho](const MaybeType& i, const MaybeType& p) {
    if (!i || !p) return !i && !p;
    return MatchTypeInto(*i, *p, rho);
  };
  if (!match_deco(instance.deco(), pattern.deco())) return false;
  switch (instance.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return true;
    case Term::Kind::kApp:
      return MatchTermInto(instance.fun(), pattern.fun(), rho) &&
             MatchTermInto(instance.arg(), pattern.arg(), rho);
    case Term::Kind::kAbs:
      return match_deco(instance.binder_deco(), pattern.binder_deco()) &&
             MatchTermInto(instance.body(), pattern.body(), rho);
  }
  return false;
}

}  // namespace

std::vector<std::pair<Position, MaybeType>> Decorations(const Term& t) {
  std::vector<std::pair<Position, MaybeType>> out;
  std::vector<std::uint8_t> path;
  CollectDecorations(t, path, out);
  return out;
}

std::vector<Position> Positions(const Term& t) {
  std::vector<Position> out;
  for (auto& [p, deco] : Decorations(t)) out.push_back(std::move(p));
  return out;
}

std::vector<Position> AnnotatedPositions(const Term& t) {
  std::vector<Position> out;
  for (auto& [p, deco] : Decorations(t)) {
    if (deco) out.push_back(std::move(p));
  }
  return out;
}

std::size_t TermSize(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return 1;
    case Term::Kind::kApp:
      return 1 + TermSize(t.fun()) + TermSize(t.arg());
    case Term::Kind::kAbs:
      return 2 + TermSize(t.body());
  }
  return 0;
}

bool HasPosition(const Term& t, const Position& p) {
  try {
    MtpOf(t, p);
    return true;
  } catch (const std::out_of_range&) {
    return false;
  }
}

const MaybeType& MtpOf(const Term& t, const Position& p) {
  return MtpOfImpl(t, p.steps(), p);
}

Term SetDecoAt(const Term& t, const Position& p, MaybeType deco) {
  return SetDecoImpl(t, p.steps(), p, std::move(deco));
}

Term EraseAt(const Term& t, const Position& p) {
  return SetDecoAt(t, p, std::nullopt);
}

Term EraseAll(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return Term::Var(t.name());
    case Term::Kind::kConst:
      return Term::Const(t.name());
    case Term::Kind::kApp:
      return Term::App(EraseAll(t.fun()), EraseAll(t.arg()));
    case Term::Kind::kAbs:
      return Term::Abs(t.name(), std::nullopt, EraseAll(t.body()));
  }
  return t;
}

bool Subsumes(const Term& s, const Term& t) {
  if (s.kind() != t.kind() || s.name() != t.name() ||
      !DecoBelow(s.deco(), t.deco())) {
    return false;
  }
  switch (s.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return true;
    case Term::Kind::kApp:
      return Subsumes(s.fun(), t.fun()) && Subsumes(s.arg(), t.arg());
    case Term::Kind::kAbs:
      return DecoBelow(s.binder_deco(), t.binder_deco()) &&
             Subsumes(s.body(), t.body());
  }
  return false;
}

bool IsUnambiguous(const Term& t) {
  std::vector<std::string> binders;
  CollectBinders(t, binders);
  std::set<std::string> seen;
  for (const std::string& b : binders) {
    if (!seen.insert(b).second) return false;
  }
  return true;
}

bool IsFTerm(const Term& t) {
  return AllDecos(t, [](const Term&, bool, const MaybeType& deco) {
    return deco.has_value();
  });
}

bool IsCTerm(const Term& t) {
  return AllDecos(t, [](const Term& node, bool binder, const MaybeType& deco) {
    if (binder || node.is_var() || node.is_const()) return deco.has_value();
    return !deco.has_value();
  });
}

TyVarSet TermTypeVars(const Term& t) {
  TyVarSet out;
  CollectTermTypeVars(t, out);
  return out;
}

std::vector<TyVar> TypeVarsInOrder(const Term& t) {
  std::vector<TyVar> out;
  CollectInOrder(t, out);
  return out;
}

std::set<TypedVar> FreeTypedVars(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return {TypedVar{t.name(), t.deco()}};
    case Term::Kind::kConst:
      return {};
    case Term::Kind::kApp: {
      std::set<TypedVar> out = FreeTypedVars(t.fun());
      out.merge(FreeTypedVars(t.arg()));
      return out;
    }
    case Term::Kind::kAbs: {
      std::set<TypedVar> out = FreeTypedVars(t.body());
      std::erase_if(out,
                    [&t](const TypedVar& tv) { return tv.first == t.name(); });
      return out;
    }
  }
  return {};
}

Term SubstTerm(const Term& t, const Subst& rho) {
  if (rho.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::kVar:
      return Term::Var(t.name(), SubstType(t.deco(), rho));
    case Term::Kind::kConst:
      return Term::Const(t.name(), SubstType(t.deco(), rho));
    case Term::Kind::kApp:
      return Term::App(SubstTerm(t.fun(), rho), SubstTerm(t.arg(), rho),
                       SubstType(t.deco(), rho));
    case Term::Kind::kAbs:
      return Term::Abs(t.name(), SubstType(t.binder_deco(), rho),
                       SubstTerm(t.body(), rho), SubstType(t.deco(), rho));
  }
  return t;
}

std::optional<Subst> MatchTerm(const Term& instance, const Term& pattern) {
  std::map<TyVar, Type> rho;
  if (!MatchTermInto(instance, pattern, rho)) return std::nullopt;
  return Subst::FromMap(std::move(rho));
}

Term CanonicalRename(const Term& t) {
  std::map<TyVar, Type> renaming;
  std::size_t next = 0;
  for (const TyVar& tv : TypeVarsInOrder(t)) {
    renaming.emplace(tv, Type::Var("a" + std::to_string(next++)));
  }
  return SubstTerm(t, Subst::FromMap(std::move(renaming)));
}

bool EqualUpToRenaming(const Term& u, const Term& v) {
  return CanonicalRename(u) == CanonicalRename(v);
}

}  // namespace tyannot
