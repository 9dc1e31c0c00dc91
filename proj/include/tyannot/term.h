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

#ifndef TYANNOT_TERM_H_
#define TYANNOT_TERM_H_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tyannot/position.h"
#include "tyannot/subst.h"
#include "tyannot/type.h"

namespace tyannot {

// A partially typed lambda term. Every node carries a decoration, and an
// abstraction additionally decorates its binder. A decoration is either a
// type (an annotation) or absent.
//
// Terms are immutable and share structure; equality is structural and
// includes every decoration. Bound names are compared literally.
class Term {
 public:
  enum class Kind { kVar, kConst, kApp, kAbs };

  static Term Var(std::string name, MaybeType deco = std::nullopt);
  static Term Const(std::string name, MaybeType deco = std::nullopt);
  static Term App(Term fun, Term arg, MaybeType deco = std::nullopt);
  static Term Abs(std::string binder, MaybeType binder_deco, Term body,
                  MaybeType deco = std::nullopt);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::kVar; }
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_app() const { return kind() == Kind::kApp; }
  bool is_abs() const { return kind() == Kind::kAbs; }

  // Variable or constant name, or the binder name of an abstraction.
  const std::string& name() const { return node_->name; }
  const MaybeType& deco() const { return node_->deco; }
  const MaybeType& binder_deco() const { return node_->binder_deco; }

  const Term& fun() const { return node_->kids[0]; }
  const Term& arg() const { return node_->kids[1]; }
  const Term& body() const { return node_->kids[0]; }

  Term WithDeco(MaybeType deco) const;
  Term WithBinderDeco(MaybeType deco) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    MaybeType deco;
    MaybeType binder_deco;
    std::vector<Term> kids;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// A variable occurrence together with its decoration.
using TypedVar = std::pair<std::string, MaybeType>;

// Every position of `t`, in lexicographic (= pre-) order.
std::vector<Position> Positions(const Term& t);

// Every position paired with its decoration, in lexicographic order.
std::vector<std::pair<Position, MaybeType>> Decorations(const Term& t);

// Positions carrying an annotation, in lexicographic order.
std::vector<Position> AnnotatedPositions(const Term& t);

bool HasPosition(const Term& t, const Position& p);

// The decoration at `p`; [1] on an abstraction is its binder.
// Throws std::out_of_range when p is not a position of t.
const MaybeType& MtpOf(const Term& t, const Position& p);

// t with the decoration at `p` removed. Throws std::out_of_range.
Term EraseAt(const Term& t, const Position& p);
// t with the decoration at `p` replaced. Throws std::out_of_range.
Term SetDecoAt(const Term& t, const Position& p, MaybeType deco);

Term EraseAll(const Term& t);

// s is below t in annotation subsumption: same shape and names, and each
// decoration of s is absent or equal to the corresponding one of t.
// Differently shaped terms are unrelated.
bool Subsumes(const Term& s, const Term& t);

// No binder name occurs at two distinct positions.
bool IsUnambiguous(const Term& t);

// Every decoration is a type.
bool IsFTerm(const Term& t);

// Application and abstraction nodes undecorated; variables, constants and
// binders annotated.
bool IsCTerm(const Term& t);

TyVarSet TermTypeVars(const Term& t);

// Free variable occurrences paired with their decorations.
std::set<TypedVar> FreeTypedVars(const Term& t);

Term SubstTerm(const Term& t, const Subst& rho);

// Returns rho with `instance` = `pattern`[rho] (restricted to TV(pattern)),
// or nullopt. Shapes and absent decorations must agree exactly.
std::optional<Subst> MatchTerm(const Term& instance, const Term& pattern);

// Bijectively renames the tyvars of `t` to a0, a1, ... in order of first
// occurrence. The traversal visits a node's decoration, then a binder's
// decoration, then the children left to right.
Term CanonicalRename(const Term& t);

// Both terms are the same up to a bijective renaming of tyvars.
bool EqualUpToRenaming(const Term& u, const Term& v);

// Tyvars of `t` in canonical traversal order.
std::vector<TyVar> TypeVarsInOrder(const Term& t);

// Number of positions of `t`.
std::size_t TermSize(const Term& t);

}  // namespace tyannot

#endif  // TYANNOT_TERM_H_
