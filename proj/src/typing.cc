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

#include "tyannot/typing.h"

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "tyannot/surface.h"

namespace tyannot {

std::string_view TypeErrorKindName(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::kUnificationClash:
      return "UnificationClash";
    case TypeErrorKind::kOccursCheck:
      return "OccursCheck";
    case TypeErrorKind::kUnknownConstant:
      return "UnknownConstant";
    case TypeErrorKind::kNotInstanceOfDeclared:
      return "NotInstanceOfDeclared";
    case TypeErrorKind::kAmbiguousTerm:
      return "AmbiguousTerm";
    case TypeErrorKind::kIncompatibleBinding:
      return "IncompatibleBinding";
    case TypeErrorKind::kOpenTerm:
      return "OpenTerm";
    case TypeErrorKind::kNotCTerm:
      return "NotCTerm";
  }
  return "?";
}

std::string TypeError::ToString() const {
  std::string out(TypeErrorKindName(kind));
  if (position) out += " at " + position->ToString();
  if (!detail.empty()) out += ": " + detail;
  return out;
}

// ---------------------------------------------------------------------------
// Well-typedness.

namespace {

bool FreeVarsAdmissible(const Term& u, const TypingOptions& options) {
  std::set<TypedVar> free = FreeTypedVars(u);
  if (free.empty()) return true;
  if (options.free_vars == FreeVarMode::kStrict) return false;
  // Lifted: one type per name.
  std::map<std::string, Type> seen = options.context;
  for (const auto& [name, deco] : free) {
    auto [it, inserted] = seen.try_emplace(name, *deco);
    if (!inserted && !(it->second == *deco)) return false;
  }
  return true;
}

bool WellTypedRules(const Term& u, const Signature& sig) {
  const Type& type = *u.deco();
  switch (u.kind()) {
    case Term::Kind::kVar:
      return true;
    case Term::Kind::kConst: {
      const Type* declared = sig.ConstType(u.name());
      return declared != nullptr && MatchType(type, *declared).has_value();
    }
    case Term::Kind::kApp:
      return WellTypedRules(u.fun(), sig) && WellTypedRules(u.arg(), sig) &&
             TpOf(u.fun()) == Type::Arrow(TpOf(u.arg()), type);
    case Term::Kind::kAbs: {
      if (!WellTypedRules(u.body(), sig)) return false;
      const Type& binder = *u.binder_deco();
      if (!(type == Type::Arrow(binder, TpOf(u.body())))) return false;
      for (const auto& [name, deco] : FreeTypedVars(u.body())) {
        if (name == u.name() && !(*deco == binder)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool WellTyped(const Term& u, const Signature& sig,
               const TypingOptions& options) {
  if (!IsFTerm(u)) {
    throw std::invalid_argument("WellTyped: term has an absent decoration");
  }
  return FreeVarsAdmissible(u, options) && WellTypedRules(u, sig);
}

const Type& TpOf(const Term& u) {
  if (!u.deco()) throw std::invalid_argument("TpOf: absent decoration");
  return *u.deco();
}

const Type& TpOfAt(const Term& u, const Position& p) {
  const MaybeType& deco = MtpOf(u, p);
  if (!deco) {
    throw std::invalid_argument("TpOfAt: absent decoration at " +
                                p.ToString());
  }
  return *deco;
}

TypingOptions WithFreeVarsOf(const Term& t, TypingOptions options) {
  options.free_vars = FreeVarMode::kLift;
  for (const auto& [name, deco] : FreeTypedVars(t)) {
    if (deco) options.context.try_emplace(name, *deco);
  }
  return options;
}

bool IsInstanceOf(const Term& instance, const Term& pattern) {
  return MatchTerm(instance, pattern).has_value();
}

// ---------------------------------------------------------------------------
// Inference.
//
// Every absent decoration becomes a flexible variable (named ?N, which no
// parsed tyvar can be); tyvars written in annotations are rigid since a
// completion must keep them literally. Constants are instantiated with fresh
// flexible variables, and the typing rules become equations solved by
// first-order unification with occurs check.

namespace {

bool IsFlex(const Type& type) {
  return type.is_var() && !type.name().empty() && type.name()[0] == '?';
}

enum class UnifyOutcome { kOk, kClash, kOccurs };

class Unifier {
 public:
  Type Fresh() { return Type::Var("?" + std::to_string(next_++)); }

  // Follows bindings at the root only.
  Type Shallow(Type type) const {
    while (IsFlex(type)) {
      auto it = bindings_.find(type.name());
      if (it == bindings_.end()) break;
      type = it->second;
    }
    return type;
  }

  Type Resolve(const Type& type) const {
    Type head = Shallow(type);
    if (head.is_var()) return head;
    std::vector<Type> args;
    args.reserve(head.args().size());
    for (const Type& arg : head.args()) args.push_back(Resolve(arg));
    if (head.is_arrow()) return Type::Arrow(args[0], args[1]);
    return Type::App(head.name(), std::move(args));
  }

  UnifyOutcome Unify(const Type& a, const Type& b) {
    Type x = Shallow(a);
    Type y = Shallow(b);
    if (IsFlex(x) && IsFlex(y) && x.name() == y.name()) {
      return UnifyOutcome::kOk;
    }
    if (IsFlex(x)) return Bind(x.name(), y);
    if (IsFlex(y)) return Bind(y.name(), x);
    if (x.kind() != y.kind() || x.name() != y.name() ||
        x.args().size() != y.args().size()) {
      return UnifyOutcome::kClash;
    }
    for (std::size_t i = 0; i < x.args().size(); ++i) {
      UnifyOutcome sub = Unify(x.args()[i], y.args()[i]);
      if (sub != UnifyOutcome::kOk) return sub;
    }
    return UnifyOutcome::kOk;
  }

 private:
  bool Occurs(const std::string& flex, const Type& type) const {
    Type head = Shallow(type);
    if (IsFlex(head)) return head.name() == flex;
    for (const Type& arg : head.args()) {
      if (Occurs(flex, arg)) return true;
    }
    return false;
  }

  UnifyOutcome Bind(const std::string& flex, const Type& to) {
    if (Occurs(flex, to)) return UnifyOutcome::kOccurs;
    bindings_.emplace(flex, to);
    return UnifyOutcome::kOk;
  }

  std::size_t next_ = 0;
  std::unordered_map<std::string, Type> bindings_;
};

Type Instantiate(const Type& declared, std::map<TyVar, Type>& fresh,
                 Unifier& unifier) {
  if (declared.is_var()) {
    auto it = fresh.find(declared.var());
    if (it == fresh.end()) {
      it = fresh.emplace(declared.var(), unifier.Fresh()).first;
    }
    return it->second;
  }
  std::vector<Type> args;
  for (const Type& arg : declared.args()) {
    args.push_back(Instantiate(arg, fresh, unifier));
  }
  if (declared.is_arrow()) return Type::Arrow(args[0], args[1]);
  return Type::App(declared.name(), std::move(args));
}

class Inferencer {
 public:
  Inferencer(const Signature& sig, const TypingOptions& options)
      : sig_(sig), options_(options) {}

  // Generates and solves the constraints of `t`, recording one slot per
  // position in pre-order. Returns the slot of the root.
  Result<Type, TypeError> Visit(const Term& t,
                                std::vector<std::uint8_t>& path) {
    Type slot = t.deco() ? *t.deco() : unifier_.Fresh();
    slots_.push_back(slot);
    switch (t.kind()) {
      case Term::Kind::kVar:
        if (auto err = VisitVar(t, slot, path)) return *err;
        break;
      case Term::Kind::kConst:
        if (auto err = VisitConst(t, slot, path)) return *err;
        break;
      case Term::Kind::kApp: {
        path.push_back(1);
        auto fun = Visit(t.fun(), path);
        if (!fun) return fun.error();
        path.back() = 2;
        auto arg = Visit(t.arg(), path);
        if (!arg) return arg.error();
        path.pop_back();
        if (auto err = Equate(*fun, Type::Arrow(*arg, slot),
                              TypeErrorKind::kUnificationClash, path)) {
          return *err;
        }
        break;
      }
      case Term::Kind::kAbs: {
        Type binder = t.binder_deco() ? *t.binder_deco() : unifier_.Fresh();
        slots_.push_back(binder);
        binders_.insert_or_assign(t.name(), binder);
        path.push_back(2);
        auto body = Visit(t.body(), path);
        if (!body) return body.error();
        path.pop_back();
        binders_.erase(t.name());
        if (auto err = Equate(slot, Type::Arrow(binder, *body),
                              TypeErrorKind::kUnificationClash, path)) {
          return *err;
        }
        break;
      }
    }
    return slot;
  }

  const std::vector<Type>& slots() const { return slots_; }
  const Unifier& unifier() const { return unifier_; }

 private:
  std::optional<TypeError> VisitVar(const Term& t, const Type& slot,
                                    const std::vector<std::uint8_t>& path) {
    if (auto it = binders_.find(t.name()); it != binders_.end()) {
      return Equate(slot, it->second, TypeErrorKind::kIncompatibleBinding,
                    path);
    }
    if (options_.free_vars == FreeVarMode::kStrict) {
      return TypeError{TypeErrorKind::kOpenTerm, Position(path),
                       "free variable '" + t.name() + "'"};
    }
    auto known = options_.context.find(t.name());
    if (known == options_.context.end() && !t.deco()) {
      return TypeError{TypeErrorKind::kOpenTerm, Position(path),
                       "free variable '" + t.name() + "' has no type"};
    }
    const Type& fixed =
        known != options_.context.end() ? known->second : *t.deco();
    auto it = lifted_.try_emplace(t.name(), fixed).first;
    if (!(it->second == fixed) || (t.deco() && !(*t.deco() == fixed))) {
      return TypeError{TypeErrorKind::kIncompatibleBinding, Position(path),
                       "free variable '" + t.name() + "' used at both " +
                           PrintType(it->second) + " and " +
                           PrintType(t.deco() ? *t.deco() : fixed)};
    }
    return Equate(slot, fixed, TypeErrorKind::kIncompatibleBinding, path);
  }

  std::optional<TypeError> VisitConst(const Term& t, const Type& slot,
                                      const std::vector<std::uint8_t>& path) {
    const Type* declared = sig_.ConstType(t.name());
    if (declared == nullptr) {
      return TypeError{TypeErrorKind::kUnknownConstant, Position(path),
                       "constant '" + t.name() + "' is not declared"};
    }
    std::map<TyVar, Type> fresh;
    Type instance = Instantiate(*declared, fresh, unifier_);
    return Equate(slot, instance,
                  t.deco() ? TypeErrorKind::kNotInstanceOfDeclared
                           : TypeErrorKind::kUnificationClash,
                  path);
  }

  std::optional<TypeError> Equate(const Type& a, const Type& b,
                                  TypeErrorKind clash_kind,
                                  const std::vector<std::uint8_t>& path) {
    UnifyOutcome outcome = unifier_.Unify(a, b);
    if (outcome == UnifyOutcome::kOk) return std::nullopt;
    std::string detail = "cannot equate " +
                         PrintType(unifier_.Resolve(a)) + " with " +
                         PrintType(unifier_.Resolve(b));
    if (outcome == UnifyOutcome::kOccurs) {
      return TypeError{TypeErrorKind::kOccursCheck, Position(path),
                       detail + " (infinite type)"};
    }
    return TypeError{clash_kind, Position(path), detail};
  }

  const Signature& sig_;
  const TypingOptions& options_;
  Unifier unifier_;
  std::vector<Type> slots_;
  std::map<std::string, Type> binders_;
  std::map<std::string, Type> lifted_;
};

Term Rebuild(const Term& t, const std::vector<Type>& slots, std::size_t& next) {
  Type deco = slots[next++];
  switch (t.kind()) {
    case Term::Kind::kVar:
      return Term::Var(t.name(), deco);
    case Term::Kind::kConst:
      return Term::Const(t.name(), deco);
    case Term::Kind::kApp: {
      Term fun = Rebuild(t.fun(), slots, next);
      Term arg = Rebuild(t.arg(), slots, next);
      return Term::App(std::move(fun), std::move(arg), deco);
    }
    case Term::Kind::kAbs: {
      Type binder = slots[next++];
      Term body = Rebuild(t.body(), slots, next);
      return Term::Abs(t.name(), binder, std::move(body), deco);
    }
  }
  return t;
}

void CheckNoReservedNames(const Term& t) {
  for (const TyVar& tv : TermTypeVars(t)) {
    if (!tv.name.empty() && tv.name[0] == '?') {
      throw std::invalid_argument("tyvar name '" + tv.name +
                                  "' is reserved for inference");
    }
  }
}

}  // namespace

Result<InferenceResult, TypeError> Mgen(const Term& t, const Signature& sig,
                                        const TypingOptions& options) {
  if (!IsUnambiguous(t)) {
    return TypeError{TypeErrorKind::kAmbiguousTerm, std::nullopt,
                     "a binder name occurs at two positions"};
  }
  CheckNoReservedNames(t);

  Inferencer inferencer(sig, options);
  std::vector<std::uint8_t> path;
  if (auto root = inferencer.Visit(t, path); !root) return root.error();

  // Slots were pushed in the order Rebuild consumes them: node, binder,
  // children left to right.
  std::vector<Type> resolved;
  resolved.reserve(inferencer.slots().size());
  std::vector<TyVar> flex_in_order;
  for (const Type& slot : inferencer.slots()) {
    resolved.push_back(inferencer.unifier().Resolve(slot));
    CollectTypeVarsInOrder(resolved.back(), flex_in_order);
  }

  TyVarSet taken = TermTypeVars(t);
  std::map<TyVar, Type> renaming;
  InferenceResult result{t, {}};
  std::size_t counter = 0;
  for (const TyVar& tv : flex_in_order) {
    if (tv.name[0] != '?') continue;
    TyVar fresh;
    do {
      fresh = TyVar{"_" + std::to_string(counter++)};
    } while (taken.contains(fresh));
    renaming.emplace(tv, Type::Var(fresh));
    result.fresh.push_back(fresh);
  }
  Subst rename = Subst::FromMap(std::move(renaming));
  for (Type& type : resolved) type = SubstType(type, rename);

  std::size_t next = 0;
  result.completion = Rebuild(t, resolved, next);
  return result;
}

Result<Term, TypeError> UniqueCompletionOfCTerm(const Term& t,
                                                const Signature& sig,
                                                const TypingOptions& options) {
  if (!IsCTerm(t)) {
    return TypeError{TypeErrorKind::kNotCTerm, std::nullopt,
                     "expected a Church-typed term"};
  }
  auto inferred = Mgen(t, sig, options);
  if (!inferred) return inferred.error();
  if (!inferred->fresh.empty()) {
    throw std::logic_error("completion of a C-term introduced fresh tyvars");
  }
  return inferred->completion;
}

}  // namespace tyannot
