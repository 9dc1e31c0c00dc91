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

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace tyannot {

bool TypeUniverse::Contains(const Type& type) const {
  if (type.depth() > depth_bound) return false;
  switch (type.kind()) {
    case Type::Kind::kVar:
      return std::find(pool.begin(), pool.end(), type.var()) != pool.end();
    case Type::Kind::kArrow:
      return Contains(type.dom()) && Contains(type.cod());
    case Type::Kind::kApp: {
      TyCon con{type.name(), type.args().size()};
      if (std::find(tycons.begin(), tycons.end(), con) == tycons.end()) {
        return false;
      }
      for (const Type& arg : type.args()) {
        if (!Contains(arg)) return false;
      }
      return true;
    }
  }
  return false;
}

TypeUniverse MakeUniverse(const Signature& sig, std::size_t depth_bound,
                          std::vector<TyVar> pool) {
  TypeUniverse univ;
  univ.depth_bound = depth_bound;
  univ.pool = std::move(pool);
  for (const auto& [name, arity] : sig.tycons()) {
    univ.tycons.push_back(TyCon{name, arity});
  }
  return univ;
}

TypeUniverse SufficientUniverse(const Term& u, const Signature& sig) {
  std::size_t depth = 1;
  for (const auto& [p, deco] : Decorations(u)) {
    if (deco) depth = std::max(depth, deco->depth());
  }
  std::vector<TyVar> pool = TypeVarsInOrder(u);
  TyVarSet used(pool.begin(), pool.end());
  for (int i = 0, added = 0; added < 2; ++i) {
    TyVar tv{"u" + std::to_string(i)};
    if (used.contains(tv)) continue;
    pool.push_back(tv);
    ++added;
  }
  return MakeUniverse(sig, depth, std::move(pool));
}

namespace {

// Appends to `out` every tuple of `arity` types drawn from `pool` with at
// least one component from index `fresh_from` on.
void Tuples(const std::vector<Type>& pool, std::size_t fresh_from,
            std::size_t arity, std::vector<Type>& prefix, bool has_fresh,
            std::vector<std::vector<Type>>& out) {
  if (prefix.size() == arity) {
    if (has_fresh) out.push_back(prefix);
    return;
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    prefix.push_back(pool[i]);
    Tuples(pool, fresh_from, arity, prefix, has_fresh || i >= fresh_from, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Type> EnumerateTypes(const TypeUniverse& univ) {
  if (univ.depth_bound == 0) {
    throw std::invalid_argument("EnumerateTypes: depth bound must be positive");
  }
  std::vector<Type> all;
  for (const TyVar& tv : univ.pool) all.push_back(Type::Var(tv));
  for (const TyCon& con : univ.tycons) {
    if (con.arity == 0) all.push_back(Type::App(con.name));
  }
  std::size_t previous_level = 0;
  for (std::size_t depth = 2; depth <= univ.depth_bound; ++depth) {
    std::vector<Type> below = all;
    std::vector<Type> prefix;
    std::vector<std::vector<Type>> pairs;
    Tuples(below, previous_level, 2, prefix, false, pairs);
    for (auto& pair : pairs) all.push_back(Type::Arrow(pair[0], pair[1]));
    for (const TyCon& con : univ.tycons) {
      if (con.arity == 0) continue;
      std::vector<std::vector<Type>> tuples;
      Tuples(below, previous_level, con.arity, prefix, false, tuples);
      for (auto& args : tuples) all.push_back(Type::App(con.name, args));
    }
    previous_level = below.size();
  }
  return all;
}

namespace {

// Completion search. Every decoration slot is a cell; absent decorations
// start as holes that must be filled from the universe (restricted), while
// the tyvars of a constant's declared type become unrestricted holes shared
// within that occurrence. The typing rules are equations between cells. A
// hole on one side of an equation whose other side has a head is given that
// head; remaining holes are filled by trying universe heads in order.
class CompletionSearch {
 public:
  CompletionSearch(const TypeUniverse& univ, const Signature& sig,
                   const TypingOptions& options, std::size_t limit)
      : univ_(univ), sig_(sig), options_(options), limit_(limit) {
    for (const TyVar& tv : univ.pool) pool_.push_back(Intern(tv.name));
    for (const TyCon& con : univ.tycons) {
      tycons_.emplace(Intern(con.name), con.arity);
    }
  }

  std::vector<Term> Run(const Term& s) {
    term_ = s;
    if (!Build(s)) return {};
    if (Propagate()) Search();
    return std::move(solutions_);
  }

 private:
  enum class Head : std::uint8_t { kHole, kVar, kArrow, kCon };

  struct Cell {
    Head head = Head::kHole;
    int name = -1;
    std::vector<int> kids;
    std::size_t budget = 0;
    bool restricted = false;
  };

  struct Mark {
    std::size_t trail;
    std::size_t arena;
  };

  int Intern(const std::string& name) {
    auto [it, inserted] = ids_.try_emplace(name, names_.size());
    if (inserted) names_.push_back(name);
    return it->second;
  }

  int NewCell(Cell cell) {
    cells_.push_back(std::move(cell));
    return static_cast<int>(cells_.size()) - 1;
  }

  int Hole(bool restricted, std::size_t budget) {
    Cell cell;
    cell.restricted = restricted;
    cell.budget = budget;
    return NewCell(std::move(cell));
  }

  int Arrow(int dom, int cod) {
    Cell cell;
    cell.head = Head::kArrow;
    cell.kids = {dom, cod};
    return NewCell(std::move(cell));
  }

  // `helpers` maps tyvars to shared unrestricted holes; null means tyvars are
  // literal.
  int FromType(const Type& type, std::map<std::string, int>* helpers) {
    Cell cell;
    switch (type.kind()) {
      case Type::Kind::kVar:
        if (helpers != nullptr) {
          auto it = helpers->find(type.name());
          if (it == helpers->end()) {
            it = helpers->emplace(type.name(), Hole(false, 0)).first;
          }
          return it->second;
        }
        cell.head = Head::kVar;
        cell.name = Intern(type.name());
        return NewCell(std::move(cell));
      case Type::Kind::kArrow:
        cell.head = Head::kArrow;
        break;
      case Type::Kind::kApp:
        cell.head = Head::kCon;
        cell.name = Intern(type.name());
        break;
    }
    for (const Type& arg : type.args()) {
      cell.kids.push_back(FromType(arg, helpers));
    }
    return NewCell(std::move(cell));
  }

  int Slot(const MaybeType& deco) {
    int cell = deco ? FromType(*deco, nullptr) : Hole(true, univ_.depth_bound);
    slots_.push_back(cell);
    return cell;
  }

  bool Build(const Term& s) {
    if (!IsUnambiguous(s)) {
      throw std::invalid_argument("EnumerateCompletions: ambiguous term");
    }
    std::map<std::string, int> binders;
    std::map<std::string, int> free_vars;
    for (const auto& [name, type] : options_.context) {
      free_vars.emplace(name, FromType(type, nullptr));
    }
    return BuildNode(s, binders, free_vars).has_value();
  }

  std::optional<int> BuildNode(const Term& t,
                               std::map<std::string, int>& binders,
                               std::map<std::string, int>& free_vars) {
    int node = Slot(t.deco());
    switch (t.kind()) {
      case Term::Kind::kVar: {
        if (auto it = binders.find(t.name()); it != binders.end()) {
          eqs_.emplace_back(node, it->second);
        } else if (options_.free_vars == FreeVarMode::kStrict) {
          return std::nullopt;
        } else if (auto [it, fresh] = free_vars.try_emplace(t.name(), node);
                   !fresh) {
          eqs_.emplace_back(node, it->second);
        }
        break;
      }
      case Term::Kind::kConst: {
        const Type* declared = sig_.ConstType(t.name());
        if (declared == nullptr) return std::nullopt;
        std::map<std::string, int> helpers;
        eqs_.emplace_back(node, FromType(*declared, &helpers));
        break;
      }
      case Term::Kind::kApp: {
        auto fun = BuildNode(t.fun(), binders, free_vars);
        if (!fun) return std::nullopt;
        auto arg = BuildNode(t.arg(), binders, free_vars);
        if (!arg) return std::nullopt;
        eqs_.emplace_back(*fun, Arrow(*arg, node));
        break;
      }
      case Term::Kind::kAbs: {
        int binder = Slot(t.binder_deco());
        binders[t.name()] = binder;
        auto body = BuildNode(t.body(), binders, free_vars);
        if (!body) return std::nullopt;
        binders.erase(t.name());
        eqs_.emplace_back(node, Arrow(binder, *body));
        break;
      }
    }
    return node;
  }

  Mark Save() const { return Mark{trail_.size(), cells_.size()}; }

  void Restore(const Mark& mark) {
    while (trail_.size() > mark.trail) {
      cells_[trail_.back().first] = std::move(trail_.back().second);
      trail_.pop_back();
    }
    cells_.resize(mark.arena);
  }

  bool Admissible(const Cell& hole, Head head, int name,
                  std::size_t arity) const {
    if (!hole.restricted) return true;
    if (arity > 0 && hole.budget <= 1) return false;
    if (head == Head::kVar) {
      return std::find(pool_.begin(), pool_.end(), name) != pool_.end();
    }
    if (head == Head::kCon) {
      auto it = tycons_.find(name);
      return it != tycons_.end() && it->second == arity;
    }
    return true;
  }

  // Gives hole `h` the given head with fresh hole children.
  bool Refine(int h, Head head, int name, std::size_t arity) {
    if (!Admissible(cells_[h], head, name, arity)) return false;
    trail_.emplace_back(h, cells_[h]);
    bool restricted = cells_[h].restricted;
    std::size_t budget = restricted ? cells_[h].budget - 1 : 0;
    std::vector<int> kids;
    for (std::size_t i = 0; i < arity; ++i) {
      kids.push_back(Hole(restricted, budget));
    }
    Cell& cell = cells_[h];
    cell.head = head;
    cell.name = name;
    cell.kids = std::move(kids);
    return true;
  }

  bool Equate(int a, int b, bool& changed) {
    if (a == b) return true;
    Head ha = cells_[a].head;
    Head hb = cells_[b].head;
    if (ha == Head::kHole && hb == Head::kHole) return true;
    if (ha == Head::kHole || hb == Head::kHole) {
      int hole = ha == Head::kHole ? a : b;
      int other = ha == Head::kHole ? b : a;
      if (!Refine(hole, cells_[other].head, cells_[other].name,
                  cells_[other].kids.size())) {
        return false;
      }
      changed = true;
    }
    const Cell& x = cells_[a];
    const Cell& y = cells_[b];
    if (x.head != y.head || x.name != y.name ||
        x.kids.size() != y.kids.size()) {
      return false;
    }
    std::vector<std::pair<int, int>> kid_pairs;
    for (std::size_t i = 0; i < x.kids.size(); ++i) {
      kid_pairs.emplace_back(x.kids[i], y.kids[i]);
    }
    for (const auto& [ka, kb] : kid_pairs) {
      if (!Equate(ka, kb, changed)) return false;
    }
    return true;
  }

  bool Propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [a, b] : eqs_) {
        if (!Equate(a, b, changed)) return false;
      }
    }
    return true;
  }

  int FirstOpenHole(int cell) const {
    const Cell& c = cells_[cell];
    if (c.head == Head::kHole) return c.restricted ? cell : -1;
    for (int kid : c.kids) {
      int found = FirstOpenHole(kid);
      if (found >= 0) return found;
    }
    return -1;
  }

  void Search() {
    if (solutions_.size() >= limit_) return;
    int hole = -1;
    for (int slot : slots_) {
      hole = FirstOpenHole(slot);
      if (hole >= 0) break;
    }
    if (hole < 0) {
      Record();
      return;
    }
    auto attempt = [&](Head head, int name, std::size_t arity) {
      if (solutions_.size() >= limit_) return;
      Mark mark = Save();
      if (Refine(hole, head, name, arity) && Propagate()) Search();
      Restore(mark);
    };
    for (int var : pool_) attempt(Head::kVar, var, 0);
    for (const auto& [name, arity] : tycons_) {
      if (arity == 0) attempt(Head::kCon, name, 0);
    }
    attempt(Head::kArrow, -1, 2);
    for (const auto& [name, arity] : tycons_) {
      if (arity > 0) attempt(Head::kCon, name, arity);
    }
  }

  Type Extract(int cell) const {
    const Cell& c = cells_[cell];
    std::vector<Type> args;
    for (int kid : c.kids) args.push_back(Extract(kid));
    switch (c.head) {
      case Head::kVar:
        return Type::Var(names_[c.name]);
      case Head::kArrow:
        return Type::Arrow(args[0], args[1]);
      case Head::kCon:
        return Type::App(names_[c.name], std::move(args));
      case Head::kHole:
        break;
    }
    throw std::logic_error("completion search: unfilled slot");
  }

  Term Rebuild(const Term& t, std::size_t& next) const {
    Type deco = Extract(slots_[next++]);
    switch (t.kind()) {
      case Term::Kind::kVar:
        return Term::Var(t.name(), deco);
      case Term::Kind::kConst:
        return Term::Const(t.name(), deco);
      case Term::Kind::kApp: {
        Term fun = Rebuild(t.fun(), next);
        Term arg = Rebuild(t.arg(), next);
        return Term::App(std::move(fun), std::move(arg), deco);
      }
      case Term::Kind::kAbs: {
        Type binder = Extract(slots_[next++]);
        Term body = Rebuild(t.body(), next);
        return Term::Abs(t.name(), binder, std::move(body), deco);
      }
    }
    return t;
  }

  void Record() {
    std::size_t next = 0;
    Term u = Rebuild(term_, next);
    if (!WellTyped(u, sig_, options_)) {
      throw std::logic_error("completion search produced an ill-typed term");
    }
    solutions_.push_back(std::move(u));
  }

  const TypeUniverse& univ_;
  const Signature& sig_;
  const TypingOptions& options_;
  std::size_t limit_;

  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
  std::vector<int> pool_;
  std::map<int, std::size_t> tycons_;

  std::vector<Cell> cells_;
  std::vector<std::pair<int, Cell>> trail_;
  std::vector<int> slots_;
  std::vector<std::pair<int, int>> eqs_;
  Term term_ = Term::Var("");
  std::vector<Term> solutions_;
};

TypingOptions OracleOptions(const Term& t, const TypingOptions& options) {
  if (options.free_vars == FreeVarMode::kStrict) return options;
  return WithFreeVarsOf(t, options);
}

std::vector<std::pair<std::uint32_t, Term>> MaskedSubsets(const Term& u) {
  std::vector<Position> annotated = AnnotatedPositions(u);
  std::size_t k = annotated.size();
  std::vector<std::pair<std::uint32_t, Term>> out;
  for (std::size_t r = 0; r <= k; ++r) {
    // Index combinations of size r in lexicographic order.
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (std::size_t i : idx) mask |= 1u << i;
      Term s = u;
      for (std::size_t i = 0; i < k; ++i) {
        if (!(mask & (1u << i))) s = EraseAt(s, annotated[i]);
      }
      out.emplace_back(mask, std::move(s));
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == k - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

Result<std::vector<std::pair<std::uint32_t, Term>>, OracleError> CorrectMasks(
    const Term& t, const TypeUniverse& univ, const Signature& sig,
    const TypingOptions& options, std::size_t max_positions) {
  TypingOptions opts = OracleOptions(t, options);
  std::vector<Term> refs = EnumerateCompletions(t, univ, sig, opts, 2);
  if (refs.size() != 1) {
    return OracleError{OracleErrorKind::kNoReference,
                       "the original term has " + std::to_string(refs.size()) +
                           (refs.size() > 1 ? " or more" : "") +
                           " completions in the universe"};
  }
  std::size_t k = AnnotatedPositions(refs[0]).size();
  if (k > max_positions || k > 31) {
    return OracleError{OracleErrorKind::kInstanceTooLarge,
                       std::to_string(k) + " annotated positions exceed the " +
                           "bound of " + std::to_string(max_positions)};
  }
  std::vector<std::pair<std::uint32_t, Term>> out;
  for (auto& [mask, s] : MaskedSubsets(refs[0])) {
    if (HasUniqueCompletion(s, refs[0], univ, sig, opts)) {
      out.emplace_back(mask, std::move(s));
    }
  }
  return out;
}

}  // namespace

std::vector<Term> EnumerateCompletions(const Term& s, const TypeUniverse& univ,
                                       const Signature& sig,
                                       const TypingOptions& options,
                                       std::size_t limit) {
  if (limit == 0) return {};
  return CompletionSearch(univ, sig, options, limit).Run(s);
}

std::vector<Term> AnnotationSubsets(const Term& u) {
  std::vector<Term> out;
  for (auto& [mask, s] : MaskedSubsets(u)) out.push_back(std::move(s));
  return out;
}

bool HasUniqueCompletion(const Term& s, const Term& reference,
                         const TypeUniverse& univ, const Signature& sig,
                         const TypingOptions& options) {
  std::vector<Term> found = EnumerateCompletions(s, univ, sig, options, 2);
  return found.size() == 1 && found[0] == reference;
}

Result<std::vector<Term>, OracleError> EnumerateCorrectPrintings(
    const Term& t, const TypeUniverse& univ, const Signature& sig,
    const TypingOptions& options, std::size_t max_positions) {
  auto masks = CorrectMasks(t, univ, sig, options, max_positions);
  if (!masks) return masks.error();
  std::vector<Term> out;
  for (const auto& [mask, s] : *masks) out.push_back(s);
  return out;
}

Result<std::vector<Term>, OracleError> MinimalCorrectPrintings(
    const Term& t, const TypeUniverse& univ, const Signature& sig,
    const TypingOptions& options, std::size_t max_positions) {
  auto masks = CorrectMasks(t, univ, sig, options, max_positions);
  if (!masks) return masks.error();
  std::set<std::uint32_t> correct;
  for (const auto& [mask, s] : *masks) correct.insert(mask);
  std::vector<Term> out;
  for (const auto& [mask, s] : *masks) {
    bool minimal = true;
    // Proper submasks of mask.
    for (std::uint32_t sub = (mask - 1) & mask; minimal && sub != mask;
         sub = (sub - 1) & mask) {
      if (correct.contains(sub)) minimal = false;
      if (sub == 0) break;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

Result<bool, TypeError> IsStronglyCorrectPrinting(
    const Term& t, const Term& s, const Signature& sig,
    const TypingOptions& options) {
  TypingOptions opts = OracleOptions(t, options);
  if (!IsUnambiguous(t)) {
    return TypeError{TypeErrorKind::kAmbiguousTerm, std::nullopt,
                     "the original term is ambiguous"};
  }
  auto reference = UniqueCompletionOfCTerm(t, sig, opts);
  if (!reference) return reference.error();
  if (!IsUnambiguous(s)) {
    return TypeError{TypeErrorKind::kAmbiguousTerm, std::nullopt,
                     "the printed term is ambiguous"};
  }
  TypeUniverse univ = SufficientUniverse(*reference, sig);
  return HasUniqueCompletion(s, *reference, univ, sig, opts);
}

}  // namespace tyannot
