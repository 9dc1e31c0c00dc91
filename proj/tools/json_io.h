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

#ifndef TYANNOT_TOOLS_JSON_IO_H_
#define TYANNOT_TOOLS_JSON_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "tyannot/position.h"
#include "tyannot/result.h"
#include "tyannot/term.h"
#include "tyannot/type.h"

namespace tyannot {

// Every node object carries a "kind" field; absent decorations are null.
nlohmann::json TypeToJson(const Type& type);
nlohmann::json MaybeTypeToJson(const MaybeType& type);
nlohmann::json TermToJson(const Term& t);
nlohmann::json PositionToJson(const Position& p);
nlohmann::json PositionsToJson(const std::vector<Position>& ps);

Result<Type, std::string> TypeFromJson(const nlohmann::json& j);
Result<MaybeType, std::string> MaybeTypeFromJson(const nlohmann::json& j);
Result<Term, std::string> TermFromJson(const nlohmann::json& j);
Result<Position, std::string> PositionFromJson(const nlohmann::json& j);

}  // namespace tyannot

#endif  // TYANNOT_TOOLS_JSON_IO_H_
