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

#ifndef TYANNOT_SIGNATURE_H_
#define TYANNOT_SIGNATURE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "tyannot/type.h"

namespace tyannot {

// Type constructors with arities and constants with their declared types.
class Signature {
 public:
  // Throws std::invalid_argument when `name` is already declared with a
  // different arity.
  Signature& AddTyCon(const std::string& name, std::size_t arity);
  // Throws std::invalid_argument on a duplicate constant or when `type` uses
  // an undeclared constructor or one at the wrong arity.
  Signature& AddConst(const std::string& name, Type type);

  std::optional<std::size_t> Arity(const std::string& tycon) const;
  const Type* ConstType(const std::string& name) const;
  bool HasConst(const std::string& name) const {
    return consts_.contains(name);
  }

  const std::map<std::string, std::size_t>& tycons() const { return tycons_; }
  const std::map<std::string, Type>& consts() const { return consts_; }

  // Empty when every constructor in `type` is declared with matching arity,
  // else a description of the first violation.
  std::optional<std::string> CheckType(const Type& type) const;

 private:
  std::map<std::string, std::size_t> tycons_;
  std::map<std::string, Type> consts_;
};

}  // namespace tyannot

#endif  // TYANNOT_SIGNATURE_H_
