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

#ifndef TYANNOT_TYPE_H_
#define TYANNOT_TYPE_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace tyannot {

struct TyVar {
  std::string name;

  friend auto operator<=>(const TyVar&, const TyVar&) = default;
  friend bool operator==(const TyVar&, const TyVar&) = default;
};

struct TyCon {
  std::string name;
  std::size_t arity = 0;

  friend auto operator<=>(const TyCon&, const TyCon&) = default;
  friend bool operator==(const TyCon&, const TyCon&) = default;
};

using TyVarSet = std::set<TyVar>;

// An immutable type: a tyvar, a function arrow, or a constructor applied to
// as many arguments as its arity. Copies share structure.
class Type {
 public:
  enum class Kind { kVar, kArrow, kApp };

  static Type Var(std::string name);
  static Type Var(const TyVar& tv) { return Var(tv.name); }
  static Type Arrow(Type dom, Type cod);
  static Type App(std::string con, std::vector<Type> args = {});

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::kVar; }
  bool is_arrow() const { return kind() == Kind::kArrow; }
  bool is_app() const { return kind() == Kind::kApp; }

  // Tyvar name for kVar, constructor name for kApp, empty for kArrow.
  const std::string& name() const { return node_->name; }
  TyVar var() const { return TyVar{node_->name}; }

  // Arrow: {dom, cod}. App: the constructor arguments.
  std::span<const Type> args() const { return node_->args; }
  const Type& dom() const { return node_->args[0]; }
  const Type& cod() const { return node_->args[1]; }

  // Node count of the type tree.
  std::size_t size() const;
  // Tree depth; a leaf has depth 1.
  std::size_t depth() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Type> args;
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// A type or the absence marker (std::nullopt).
using MaybeType = std::optional<Type>;

TyVarSet TypeVars(const Type& type);
TyVarSet TypeVars(const MaybeType& type);
void CollectTypeVars(const Type& type, TyVarSet& out);

// Tyvars in order of first occurrence, depth-first left to right.
void CollectTypeVarsInOrder(const Type& type, std::vector<TyVar>& out);

}  // namespace tyannot

#endif  // TYANNOT_TYPE_H_
