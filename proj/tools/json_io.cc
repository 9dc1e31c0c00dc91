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

#include "json_io.h"

#include <optional>
#include <utility>

namespace tyannot {

using nlohmann::json;

json TypeToJson(const Type& type) {
  switch (type.kind()) {
    case Type::Kind::kVar:
      return {{"kind", "tyvar"}, {"name", type.name()}};
    case Type::Kind::kArrow:
      return {{"kind", "arrow"},
              {"dom", TypeToJson(type.dom())},
              {"cod", TypeToJson(type.cod())}};
    case Type::Kind::kApp: {
      json args = json::array();
      for (const Type& arg : type.args()) args.push_back(TypeToJson(arg));
      return {{"kind", "tycon"}, {"name", type.name()}, {"args", args}};
    }
  }
  return nullptr;
}

json MaybeTypeToJson(const MaybeType& type) {
  return type ? TypeToJson(*type) : json(nullptr);
}

json TermToJson(const Term& t) {
  json out;
  switch (t.kind()) {
    case Term::Kind::kVar:
      out = {{"kind", "var"}, {"name", t.name()}};
      break;
    case Term::Kind::kConst:
      out = {{"kind", "const"}, {"name", t.name()}};
      break;
    case Term::Kind::kApp:
      out = {{"kind", "app"},
             {"fun", TermToJson(t.fun())},
             {"arg", TermToJson(t.arg())}};
      break;
    case Term::Kind::kAbs:
      out = {{"kind", "abs"},
             {"binder", t.name()},
             {"binderType", MaybeTypeToJson(t.binder_deco())},
             {"body", TermToJson(t.body())}};
      break;
  }
  out["type"] = MaybeTypeToJson(t.deco());
  return out;
}

json PositionToJson(const Position& p) {
  json out = json::array();
  for (std::uint8_t step : p.steps()) out.push_back(static_cast<int>(step));
  return out;
}

json PositionsToJson(const std::vector<Position>& ps) {
  json out = json::array();
  for (const Position& p : ps) out.push_back(PositionToJson(p));
  return out;
}

namespace {

std::optional<std::string> StringField(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
    return std::nullopt;
  }
  return j.at(key).get<std::string>();
}

std::string Missing(const char* key) {
  return std::string("missing string field '") + key + "'";
}

}  // namespace

Result<Type, std::string> TypeFromJson(const json& j) {
  auto kind = StringField(j, "kind");
  if (!kind) return Missing("kind");
  if (*kind == "tyvar") {
    auto name = StringField(j, "name");
    if (!name) return Missing("name");
    return Type::Var(*name);
  }
  if (*kind == "arrow") {
    if (!j.contains("dom") || !j.contains("cod")) {
      return std::string("arrow needs 'dom' and 'cod'");
    }
    auto dom = TypeFromJson(j.at("dom"));
    if (!dom) return dom.error();
    auto cod = TypeFromJson(j.at("cod"));
    if (!cod) return cod.error();
    return Type::Arrow(*dom, *cod);
  }
  if (*kind == "tycon") {
    auto name = StringField(j, "name");
    if (!name) return Missing("name");
    if (!j.contains("args") || !j.at("args").is_array()) {
      return std::string("tycon needs an 'args' array");
    }
    std::vector<Type> args;
    for (const json& arg : j.at("args")) {
      auto type = TypeFromJson(arg);
      if (!type) return type.error();
      args.push_back(*type);
    }
    return Type::App(*name, std::move(args));
  }
  return "unknown type kind '" + *kind + "'";
}

Result<MaybeType, std::string> MaybeTypeFromJson(const json& j) {
  if (j.is_null()) return MaybeType();
  auto type = TypeFromJson(j);
  if (!type) return type.error();
  return MaybeType(*type);
}

Result<Term, std::string> TermFromJson(const json& j) {
  auto kind = StringField(j, "kind");
  if (!kind) return Missing("kind");
  if (!j.contains("type")) return std::string("missing field 'type'");
  auto deco = MaybeTypeFromJson(j.at("type"));
  if (!deco) return deco.error();
  if (*kind == "var" || *kind == "const") {
    auto name = StringField(j, "name");
    if (!name) return Missing("name");
    return *kind == "var" ? Term::Var(*name, *deco) : Term::Const(*name, *deco);
  }
  if (*kind == "app") {
    if (!j.contains("fun") || !j.contains("arg")) {
      return std::string("app needs 'fun' and 'arg'");
    }
    auto fun = TermFromJson(j.at("fun"));
    if (!fun) return fun.error();
    auto arg = TermFromJson(j.at("arg"));
    if (!arg) return arg.error();
    return Term::App(*fun, *arg, *deco);
  }
  if (*kind == "abs") {
    auto binder = StringField(j, "binder");
    if (!binder) return Missing("binder");
    if (!j.contains("binderType") || !j.contains("body")) {
      return std::string("abs needs 'binderType' and 'body'");
    }
    auto binder_deco = MaybeTypeFromJson(j.at("binderType"));
    if (!binder_deco) return binder_deco.error();
    auto body = TermFromJson(j.at("body"));
    if (!body) return body.error();
    return Term::Abs(*binder, *binder_deco, *body, *deco);
  }
  return "unknown term kind '" + *kind + "'";
}

Result<Position, std::string> PositionFromJson(const json& j) {
  if (!j.is_array()) return std::string("position must be an array");
  std::vector<std::uint8_t> steps;
  for (const json& step : j) {
    if (!step.is_number_integer() || (step != 1 && step != 2)) {
      return std::string("position steps must be 1 or 2");
    }
    steps.push_back(static_cast<std::uint8_t>(step.get<int>()));
  }
  return Position(std::move(steps));
}

}  // namespace tyannot
