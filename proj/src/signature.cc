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

#include "tyannot/signature.h"

#include <stdexcept>
#include <utility>

namespace tyannot {

Signature& Signature::AddTyCon(const std::string& name, std::size_t arity) {
  auto [it, inserted] = tycons_.try_emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw std::invalid_argument("type constructor '" + name +
                                "' redeclared with a different arity");
  }
  return *this;
}

Signature& Signature::AddConst(const std::string& name, Type type) {
  if (consts_.contains(name)) {
    throw std::invalid_argument("constant '" + name + "' declared twice");
  }
  if (auto problem = CheckType(type)) {
    throw std::invalid_argument("type of constant '" + name + "': " + *problem);
  }
  consts_.emplace(name, std::move(type));
  return *this;
}

std::optional<std::size_t> Signature::Arity(const std::string& tycon) const {
  auto it = tycons_.find(tycon);
  if (it == tycons_.end()) return std::nullopt;
  return it->second;
}

const Type* Signature::ConstType(const std::string& name) const {
  auto it = consts_.find(name);
  return it == consts_.end() ? nullptr : &it->second;
}

std::optional<std::string> Signature::CheckType(const Type& type) const {
  if (type.is_app()) {
    auto arity = Arity(type.name());
    if (!arity) return "unknown type constructor '" + type.name() + "'";
    if (*arity != type.args().size()) {
      return "type constructor '" + type.name() + "' expects " +
             std::to_string(*arity) + " argument(s), got " +
             std::to_string(type.args().size());
    }
  }
  for (const Type& arg : type.args()) {
    if (auto problem = CheckType(arg)) return problem;
  }
  return std::nullopt;
}

}  // namespace tyannot
