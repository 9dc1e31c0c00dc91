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

#include "tyannot/surface.h"

#include <cctype>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tyannot {

std::string_view ParseErrorKindName(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kSyntax:
      return "syntax error";
    case ParseErrorKind::kDuplicateDeclaration:
      return "duplicate declaration";
    case ParseErrorKind::kUnknownTyCon:
      return "unknown type constructor";
    case ParseErrorKind::kArityMismatch:
      return "arity mismatch";
    case ParseErrorKind::kShadowedBinder:
      return "shadowed binder";
    case ParseErrorKind::kNestedAnnotation:
      return "nested annotation";
  }
  return "?";
}

std::string ParseError::ToString() const {
  return "offset " + std::to_string(span.begin) + "-" +
         std::to_string(span.end) + ": " +
         std::string(ParseErrorKindName(kind)) + ": expected " + expected +
         ", found '" + found + "'";
}

namespace {

enum class Tok {
  kIdent,
  kTyVar,
  kInt,
  kArrow,
  kDoubleColon,
  kColon,
  kDot,
  kComma,
  kLParen,
  kRParen,
  kFn,
  kEnd,
  kBad,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t begin;
  std::size_t end;
};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Tokenizes `text`, reporting offsets relative to `base`.
std::vector<Token> Lex(std::string_view text, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back(Token{kind, text.substr(i, len), base + i, base + i + len});
    i += len;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (IsIdentStart(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && IsIdentChar(text[j])) ++j;
      push(text.substr(i, j - i) == "fn" ? Tok::kFn : Tok::kIdent, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      push(Tok::kInt, j - i);
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      if (j < text.size() && IsIdentStart(text[j])) {
        while (j < text.size() && IsIdentChar(text[j])) ++j;
        push(Tok::kTyVar, j - i);
      } else {
        push(Tok::kBad, 1);
      }
      continue;
    }
    if (text.substr(i, 2) == "->") {
      push(Tok::kArrow, 2);
    } else if (text.substr(i, 2) == "::") {
      push(Tok::kDoubleColon, 2);
    } else if (c == ':') {
      push(Tok::kColon, 1);
    } else if (c == '.') {
      push(Tok::kDot, 1);
    } else if (c == ',') {
      push(Tok::kComma, 1);
    } else if (c == '(') {
      push(Tok::kLParen, 1);
    } else if (c == ')') {
      push(Tok::kRParen, 1);
    } else {
      push(Tok::kBad, 1);
    }
  }
  out.push_back(Token{Tok::kEnd, {}, base + text.size(), base + text.size()});
  return out;
}

// Thrown internally and converted to a Result at the API boundary.
struct ParseFailure {
  ParseError error;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& sig)
      : tokens_(std::move(tokens)), sig_(sig) {}

  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& Next() {
    const Token& tok = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return tok;
  }

  [[noreturn]] void Fail(ParseErrorKind kind, const Token& tok,
                         std::string expected) const {
    std::string found =
        tok.kind == Tok::kEnd ? "end of input" : std::string(tok.text);
    throw ParseFailure{
        ParseError{kind, SourceSpan{tok.begin, tok.end}, std::move(expected),
                   std::move(found)}};
  }

  const Token& Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) Fail(ParseErrorKind::kSyntax, Peek(), what);
    return Next();
  }

  void ExpectEnd() {
    if (Peek().kind != Tok::kEnd) {
      Fail(ParseErrorKind::kSyntax, Peek(), "end of input");
    }
  }

  // type := postfix ('->' type)?
  Type ParseType() {
    Type dom = ParsePostfix();
    if (Peek().kind == Tok::kArrow) {
      Next();
      return Type::Arrow(std::move(dom), ParseType());
    }
    return dom;
  }

  // term := 'fn' binder '.' term | atom+
  Term ParseTerm() {
    if (Peek().kind == Tok::kFn) return ParseAbs();
    Term acc = ParseAtom();
    while (StartsAtom(Peek().kind)) {
      acc = Term::App(std::move(acc), ParseAtom());
    }
    return acc;
  }

 private:
  static bool StartsAtom(Tok kind) {
    return kind == Tok::kIdent || kind == Tok::kLParen;
  }

  Type ApplyTyCon(std::vector<Type> args, const Token& con) {
    auto arity = sig_.Arity(std::string(con.text));
    if (!arity) {
      Fail(ParseErrorKind::kUnknownTyCon, con, "a declared type constructor");
    }
    if (*arity != args.size()) {
      Fail(ParseErrorKind::kArityMismatch, con,
           "a type constructor of arity " + std::to_string(args.size()));
    }
    return Type::App(std::string(con.text), std::move(args));
  }

  // postfix := tyatom ident*
  Type ParsePostfix() {
    Type acc = ParseTyAtom();
    while (Peek().kind == Tok::kIdent) {
      std::vector<Type> args;
      args.push_back(std::move(acc));
      acc = ApplyTyCon(std::move(args), Next());
    }
    return acc;
  }

  Type ParseTyAtom() {
    const Token& tok = Peek();
    switch (tok.kind) {
      case Tok::kTyVar:
        Next();
        return Type::Var(std::string(tok.text.substr(1)));
      case Tok::kIdent:
        Next();
        return ApplyTyCon({}, tok);
      case Tok::kLParen: {
        Next();
        std::vector<Type> parts;
        parts.push_back(ParseType());
        while (Peek().kind == Tok::kComma) {
          Next();
          parts.push_back(ParseType());
        }
        Expect(Tok::kRParen, "')'");
        if (parts.size() == 1) return std::move(parts[0]);
        if (Peek().kind != Tok::kIdent) {
          Fail(ParseErrorKind::kSyntax, Peek(),
               "a type constructor after a type tuple");
        }
        return ApplyTyCon(std::move(parts), Next());
      }
      default:
        Fail(ParseErrorKind::kSyntax, tok, "a type");
    }
  }

  std::string ParseBinderName() {
    const Token& tok = Peek();
    if (tok.kind != Tok::kIdent) Fail(ParseErrorKind::kSyntax, tok, "a binder");
    std::string name(tok.text);
    if (sig_.HasConst(name)) {
      Fail(ParseErrorKind::kSyntax, tok, "a variable name, not a constant");
    }
    if (!binders_.insert(name).second) {
      Fail(ParseErrorKind::kShadowedBinder, tok,
           "a binder name not used elsewhere in the term");
    }
    Next();
    return name;
  }

  Term ParseAbs() {
    Expect(Tok::kFn, "'fn'");
    std::string name;
    MaybeType binder_deco;
    if (Peek().kind == Tok::kLParen) {
      Next();
      name = ParseBinderName();
      Expect(Tok::kColon, "':'");
      binder_deco = ParseType();
      Expect(Tok::kRParen, "')'");
    } else {
      name = ParseBinderName();
    }
    Expect(Tok::kDot, "'.'");
    Term body = ParseTerm();
    return Term::Abs(std::move(name), std::move(binder_deco), std::move(body));
  }

  Term ParseAtom() {
    const Token& tok = Peek();
    if (tok.kind == Tok::kIdent) {
      Next();
      std::string name(tok.text);
      if (sig_.HasConst(name)) return Term::Const(std::move(name));
      return Term::Var(std::move(name));
    }
    if (tok.kind != Tok::kLParen) Fail(ParseErrorKind::kSyntax, tok, "a term");
    Next();
    Term inner = ParseTerm();
    if (Peek().kind == Tok::kDoubleColon) {
      const Token& colons = Next();
      if (inner.deco()) {
        Fail(ParseErrorKind::kNestedAnnotation, colons,
             "')' since the node is already annotated");
      }
      Type type = ParseType();
      Expect(Tok::kRParen, "')'");
      return inner.WithDeco(std::move(type));
    }
    Expect(Tok::kRParen, "')' or '::'");
    return inner;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  std::set<std::string> binders_;
};

template <typename T, typename F>
Result<T, ParseError> Guard(F&& body) {
  try {
    return body();
  } catch (const ParseFailure& failure) {
    return failure.error;
  }
}

struct Line {
  std::string_view text;
  std::size_t offset;
};

std::vector<Line> SignatureLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    lines.push_back(Line{line, start});
    start = end + 1;
  }
  return lines;
}

std::string TypeAtom(const Type& type) {
  std::string s = PrintType(type);
  return type.is_arrow() ? "(" + s + ")" : s;
}

enum class Ctx { kTop, kFun, kArg };

std::string PrintIn(const Term& t, Ctx ctx);

std::string PrintBare(const Term& t, Ctx ctx) {
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return t.name();
    case Term::Kind::kApp: {
      std::string s = PrintIn(t.fun(), Ctx::kFun) + " " +
                      PrintIn(t.arg(), Ctx::kArg);
      return ctx == Ctx::kArg ? "(" + s + ")" : s;
    }
    case Term::Kind::kAbs: {
      std::string binder =
          t.binder_deco()
              ? "(" + t.name() + " : " + PrintType(*t.binder_deco()) + ")"
              : t.name();
      std::string s = "fn " + binder + " . " + PrintIn(t.body(), Ctx::kTop);
      return ctx == Ctx::kTop ? s : "(" + s + ")";
    }
  }
  return {};
}

std::string PrintIn(const Term& t, Ctx ctx) {
  if (!t.deco()) return PrintBare(t, ctx);
  return "(" + PrintBare(t, Ctx::kArg) + " :: " + PrintType(*t.deco()) + ")";
}

}  // namespace

Result<Signature, ParseError> ParseSignature(std::string_view text) {
  return Guard<Signature>([&] {
    Signature sig;
    std::vector<Line> lines = SignatureLines(text);
    // Constructors first so constant types may mention any of them.
    std::vector<std::pair<Token, std::vector<Token>>> consts;
    for (const Line& line : lines) {
      std::vector<Token> tokens = Lex(line.text, line.offset);
      Parser head(tokens, sig);
      const Token& keyword = head.Peek();
      if (keyword.kind == Tok::kEnd) continue;
      if (keyword.kind == Tok::kIdent && keyword.text == "tycon") {
        head.Next();
        const Token name = head.Expect(Tok::kIdent, "a constructor name");
        const Token arity = head.Expect(Tok::kInt, "an arity");
        head.ExpectEnd();
        if (sig.Arity(std::string(name.text))) {
          head.Fail(ParseErrorKind::kDuplicateDeclaration, name,
                    "a fresh constructor name");
        }
        sig.AddTyCon(std::string(name.text),
                     std::stoul(std::string(arity.text)));
      } else if (keyword.kind == Tok::kIdent && keyword.text == "const") {
        consts.emplace_back(keyword, std::move(tokens));
      } else {
        head.Fail(ParseErrorKind::kSyntax, keyword, "'tycon' or 'const'");
      }
    }
    for (auto& [keyword, tokens] : consts) {
      Parser p(std::move(tokens), sig);
      p.Next();
      const Token name = p.Expect(Tok::kIdent, "a constant name");
      p.Expect(Tok::kColon, "':'");
      Type type = p.ParseType();
      p.ExpectEnd();
      if (sig.HasConst(std::string(name.text))) {
        p.Fail(ParseErrorKind::kDuplicateDeclaration, name,
               "a fresh constant name");
      }
      sig.AddConst(std::string(name.text), std::move(type));
    }
    return sig;
  });
}

Result<Type, ParseError> ParseType(std::string_view text,
                                   const Signature& sig) {
  return Guard<Type>([&] {
    Parser p(Lex(text, 0), sig);
    Type type = p.ParseType();
    p.ExpectEnd();
    return type;
  });
}

Result<Term, ParseError> ParseTerm(std::string_view text,
                                   const Signature& sig) {
  return Guard<Term>([&] {
    Parser p(Lex(text, 0), sig);
    Term term = p.ParseTerm();
    p.ExpectEnd();
    return term;
  });
}

std::string PrintType(const Type& type) {
  switch (type.kind()) {
    case Type::Kind::kVar:
      return "'" + type.name();
    case Type::Kind::kArrow:
      return TypeAtom(type.dom()) + " -> " + PrintType(type.cod());
    case Type::Kind::kApp: {
      auto args = type.args();
      if (args.empty()) return type.name();
      if (args.size() == 1) return TypeAtom(args[0]) + " " + type.name();
      std::string s = "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) s += ", ";
        s += PrintType(args[i]);
      }
      return s + ") " + type.name();
    }
  }
  return {};
}

std::string PrintMaybeType(const MaybeType& type) {
  return type ? PrintType(*type) : "_";
}

std::string PrintTerm(const Term& t) {
  if (!IsUnambiguous(t)) {
    throw std::invalid_argument("PrintTerm: ambiguous term");
  }
  return PrintIn(t, Ctx::kTop);
}

std::string PrintSignature(const Signature& sig) {
  std::string out;
  for (const auto& [name, arity] : sig.tycons()) {
    out += "tycon " + name + " " + std::to_string(arity) + "\n";
  }
  for (const auto& [name, type] : sig.consts()) {
    out += "const " + name + " : " + PrintType(type) + "\n";
  }
  return out;
}

}  // namespace tyannot
