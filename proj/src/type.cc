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

#include "tyannot/type.h"

#include <algorithm>
#include <utility>

namespace tyannot {

Type Type::Var(std::string name) {
  return Type(std::make_shared<const Node>(
      Node{Kind::kVar, std::move(name), {}}));
}

Type Type::Arrow(Type dom, Type cod) {
  std::vector<Type> args;
  args.reserve(2);
  args.push_back(std::move(dom));
  args.push_back(std::move(cod));
  return Type(
      std::make_shared<const Node>(Node{Kind::kArrow, {}, std::move(args)}));
}

Type Type::App(std::string con, std::vector<Type> args) {
  return Type(std::make_shared<const Node>(
      Node{Kind::kApp, std::move(con), std::move(args)}));
}

std::size_t Type::size() const {
  std::size_t n = 1;
  for (const Type& arg : args()) n += arg.size();
  return n;
}

std::size_t Type::depth() const {
  std::size_t d = 0;
  for (const Type& arg : args()) d = std::max(d, arg.depth());
  return d + 1;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  auto xs = a.args();
  auto ys = b.args();
  return std::equal(xs.begin(), xs.end(), ys.begin(), ys.end());
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  auto xs = a.args();
  auto ys = b.args();
  return std::lexicographical_compare_three_way(xs.begin(), xs.end(),
                                                ys.begin(), ys.end());
}

void CollectTypeVars(const Type& type, TyVarSet& out) {
  if (type.is_var()) {
    out.insert(type.var());
    return;
  }
  for (const Type& arg : type.args()) CollectTypeVars(arg, out);
}

TyVarSet TypeVars(const Type& type) {
  TyVarSet out;
  CollectTypeVars(type, out);
  return out;
}

TyVarSet TypeVars(const MaybeType& type) {
  if (!type) return {};
  return TypeVars(*type);
}

void CollectTypeVarsInOrder(const Type& type, std::vector<TyVar>& out) {
  if (type.is_var()) {
    if (std::find(out.begin(), out.end(), type.var()) == out.end()) {
      out.push_back(type.var());
    }
    return;
  }
  for (const Type& arg : type.args()) CollectTypeVarsInOrder(arg, out);
}

}  // namespace tyannot
