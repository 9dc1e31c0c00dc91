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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "checks.h"
#include "corpus.h"
#include "tyannot/typing.h"

namespace tyannot {
namespace {

using ::tyannot::testing::CorpusSignature;
using ::tyannot::testing::Gen;
using ::tyannot::testing::Tm;
using ::tyannot::testing::Ty;

const Signature& Sig() { return CorpusSignature(); }

std::string Slurp(const std::string& name) {
  std::ifstream in(std::string(TYANNOT_GOLDEN_DIR) + "/" + name,
                   std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ParseError TermError(std::string_view text) {
  auto t = ParseTerm(text, Sig());
  if (t) throw std::logic_error("expected a parse error");
  return t.error();
}

ParseError TypeError(std::string_view text) {
  auto t = ParseType(text, Sig());
  if (t) throw std::logic_error("expected a parse error");
  return t.error();
}

std::string_view Lexeme(std::string_view text, const ParseError& e) {
  return text.substr(e.span.begin, e.span.end - e.span.begin);
}

TEST(ParseSignatureTest, MinimalFile) {
  auto sig = ParseSignature("tycon nat 0\nconst zero : nat");
  ASSERT_TRUE(sig);
  EXPECT_EQ(sig->Arity("nat"), 0u);
  ASSERT_NE(sig->ConstType("zero"), nullptr);
  EXPECT_EQ(*sig->ConstType("zero"), Type::App("nat"));
}

TEST(ParseSignatureTest, PolymorphicConstant) {
  auto sig = ParseSignature("tycon list 1\nconst nil : 'a list\n");
  ASSERT_TRUE(sig);
  EXPECT_EQ(*sig->ConstType("nil"),
            Type::App("list", {Type::Var("a")}));
}

TEST(ParseSignatureTest, CommentsBlankLinesAndOrder) {
  auto sig = ParseSignature(
      "# header\n\nconst nil : 'a list  # trailing\n\ntycon list 1\n");
  ASSERT_TRUE(sig);
  EXPECT_TRUE(sig->HasConst("nil"));
}

TEST(ParseSignatureTest, Errors) {
  std::string unknown = "const f : 'a foo";
  auto a = ParseSignature(unknown);
  ASSERT_FALSE(a);
  EXPECT_EQ(a.error().kind, ParseErrorKind::kUnknownTyCon);
  EXPECT_EQ(Lexeme(unknown, a.error()), "foo");

  std::string duplicate = "tycon nat 0\nconst z : nat\nconst z : nat\n";
  auto b = ParseSignature(duplicate);
  ASSERT_FALSE(b);
  EXPECT_EQ(b.error().kind, ParseErrorKind::kDuplicateDeclaration);
  EXPECT_EQ(b.error().span.begin, duplicate.rfind('z'));

  auto c = ParseSignature("tycon nat 0\ntycon nat 1\n");
  ASSERT_FALSE(c);
  EXPECT_EQ(c.error().kind, ParseErrorKind::kDuplicateDeclaration);

  auto d = ParseSignature("tycon list 1\nconst x : list\n");
  ASSERT_FALSE(d);
  EXPECT_EQ(d.error().kind, ParseErrorKind::kArityMismatch);

  EXPECT_FALSE(ParseSignature("constant z : nat\n"));
  EXPECT_FALSE(ParseSignature("tycon nat\n"));
}

TEST(ParseSignatureTest, PrintedSignatureParsesBack) {
  auto again = ParseSignature(PrintSignature(Sig()));
  ASSERT_TRUE(again);
  EXPECT_EQ(again->tycons(), Sig().tycons());
  EXPECT_EQ(again->consts(), Sig().consts());
}

TEST(ParseTypeTest, ArrowIsRightAssociative) {
  auto t = ParseType("'a -> 'b -> 'a", Sig());
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, Type::Arrow(Type::Var("a"),
                            Type::Arrow(Type::Var("b"), Type::Var("a"))));
}

TEST(ParseTypeTest, PostfixApplicationBindsTighterThanArrow) {
  Type prod = Type::App("prod", {Type::Var("a"), Type::Var("b")});
  EXPECT_EQ(Ty("('a, 'b) prod list"), Type::App("list", {prod}));
  EXPECT_EQ(Ty("nat list -> nat"),
            Type::Arrow(Type::App("list", {Type::App("nat")}),
                        Type::App("nat")));
  EXPECT_EQ(Ty("(nat -> nat) list list"),
            Type::App("list", {Type::App("list", {Ty("nat -> nat")})}));
}

TEST(ParseTypeTest, Errors) {
  EXPECT_EQ(TypeError("nat nat").kind, ParseErrorKind::kArityMismatch);
  EXPECT_EQ(TypeError("'a foo").kind, ParseErrorKind::kUnknownTyCon);
  EXPECT_EQ(TypeError("(nat, nat) list").kind, ParseErrorKind::kArityMismatch);
  EXPECT_EQ(TypeError("prod").kind, ParseErrorKind::kArityMismatch);
  EXPECT_EQ(TypeError("nat ->").kind, ParseErrorKind::kSyntax);
  EXPECT_EQ(TypeError("('a, 'b)").kind, ParseErrorKind::kSyntax);
  std::string text = "nat -> -> nat";
  EXPECT_EQ(Lexeme(text, TypeError(text)), "->");
}

TEST(ParseTermTest, Examples) {
  EXPECT_EQ(Tm("fn x . x"), Term::Abs("x", std::nullopt, Term::Var("x")));
  Term worked = Term::Abs(
      "x", Type::App("nat"),
      Term::App(Term::Var("f"), Term::Var("x"), Type::App("bool")));
  EXPECT_EQ(Tm("fn (x : nat) . ((f x) :: bool)"), worked);
}

TEST(ParseTermTest, IdentifiersResolveToConstantsWhenDeclared) {
  Term t = Tm("suc y");
  EXPECT_TRUE(t.fun().is_const());
  EXPECT_TRUE(t.arg().is_var());
}

TEST(ParseTermTest, ApplicationIsLeftAssociative) {
  EXPECT_EQ(Tm("pair zero zero"),
            Term::App(Term::App(Term::Const("pair"), Term::Const("zero")),
                      Term::Const("zero")));
  EXPECT_EQ(Tm("suc (suc zero)"),
            Term::App(Term::Const("suc"),
                      Term::App(Term::Const("suc"), Term::Const("zero"))));
}

TEST(ParseTermTest, AbstractionExtendsRight) {
  Term t = Tm("fn x . suc x");
  ASSERT_TRUE(t.is_abs());
  EXPECT_TRUE(t.body().is_app());
}

TEST(ParseTermTest, AnnotationSetsTheNodeDecoration) {
  Term t = Tm("((suc zero) :: nat)");
  ASSERT_TRUE(t.is_app());
  EXPECT_EQ(t.deco(), Type::App("nat"));
  EXPECT_EQ(Tm("(suc zero :: nat)"), t);
}

TEST(ParseTermTest, Errors) {
  std::string shadow = "fn x . fn x . x";
  ParseError e = TermError(shadow);
  EXPECT_EQ(e.kind, ParseErrorKind::kShadowedBinder);
  EXPECT_EQ(e.span.begin, 10u);
  EXPECT_EQ(TermError("(fn x . x) (fn x . x)").kind,
            ParseErrorKind::kShadowedBinder);
  EXPECT_EQ(TermError("((zero :: nat) :: nat)").kind,
            ParseErrorKind::kNestedAnnotation);
  EXPECT_EQ(TermError("fn zero . zero").kind, ParseErrorKind::kSyntax);
  EXPECT_EQ(TermError("fn x x").kind, ParseErrorKind::kSyntax);
  EXPECT_EQ(TermError("(zero").kind, ParseErrorKind::kSyntax);
  EXPECT_EQ(TermError("").kind, ParseErrorKind::kSyntax);
  EXPECT_EQ(TermError("(zero :: nat nat)").kind,
            ParseErrorKind::kArityMismatch);
  std::string bad = "suc $";
  ParseError lex = TermError(bad);
  EXPECT_EQ(Lexeme(bad, lex), "$");
  EXPECT_NE(lex.ToString().find("offset 4-5"), std::string::npos);
}

TEST(PrintTypeTest, Examples) {
  EXPECT_EQ(PrintType(Ty("'a -> 'b -> 'a")), "'a -> 'b -> 'a");
  EXPECT_EQ(PrintType(Ty("('a -> 'a) list")), "('a -> 'a) list");
  EXPECT_EQ(PrintType(Ty("('a -> 'b) -> 'a")), "('a -> 'b) -> 'a");
  EXPECT_EQ(PrintType(Ty("(('a, nat) prod) list")), "('a, nat) prod list");
  EXPECT_EQ(PrintType(Ty("('a -> 'a, nat list) prod")),
            "('a -> 'a, nat list) prod");
  EXPECT_EQ(PrintMaybeType(std::nullopt), "_");
}

TEST(PrintTermTest, Examples) {
  EXPECT_EQ(PrintTerm(Term::Abs("x", std::nullopt, Term::Var("x"))),
            "fn x . x");
  Term worked = Term::Abs(
      "x", Type::App("nat"),
      Term::App(Term::Var("f"), Term::Var("x"), Type::App("bool")));
  EXPECT_EQ(PrintTerm(worked), "fn (x : nat) . ((f x) :: bool)");
  EXPECT_EQ(PrintTerm(Tm("suc (suc zero)")), "suc (suc zero)");
  EXPECT_EQ(PrintTerm(Tm("(fn x . x) zero")), "(fn x . x) zero");
  EXPECT_EQ(PrintTerm(Tm("suc (fn x . x)")), "suc (fn x . x)");
  EXPECT_EQ(PrintTerm(Tm("((fn x . x) :: nat -> nat)")),
            "((fn x . x) :: nat -> nat)");
  EXPECT_EQ(PrintTerm(Tm("(zero :: nat)")), "(zero :: nat)");
}

TEST(PrintTermTest, RejectsAmbiguousTerms) {
  Term shadowed = Term::Abs("x", std::nullopt,
                            Term::Abs("x", std::nullopt, Term::Var("x")));
  EXPECT_THROW(PrintTerm(shadowed), std::invalid_argument);
}

TEST(GoldenTest, WorkedExamplePrintsBackByteExactly) {
  auto sig = ParseSignature(Slurp("worked_example.sig"));
  ASSERT_TRUE(sig);
  std::string text = Slurp("worked_example.term");
  auto t = ParseTerm(text, *sig);
  ASSERT_TRUE(t);
  EXPECT_EQ(PrintTerm(*t) + "\n", text);
  EXPECT_EQ(Positions(*t).size(), 5u);
  auto u = Mgen(*t, *sig);
  ASSERT_TRUE(u);
  EXPECT_EQ(PrintTerm(u->completion) + "\n",
            Slurp("worked_example.infer.golden"));
}

TEST(SurfacePropertyTest, TermRoundTrip) {
  Gen gen(301);
  int checked = 0;
  while (checked < 1000) {
    Term t = gen.RandomTerm(Sig(), 6);
    if (!IsUnambiguous(t)) continue;
    std::string failure = testing::CheckTermRoundTrip(t, Sig());
    ASSERT_TRUE(failure.empty()) << failure;
    ++checked;
  }
}

TEST(SurfacePropertyTest, TypeRoundTrip) {
  Gen gen(302);
  for (int i = 0; i < 1000; ++i) {
    std::string failure =
        testing::CheckTypeRoundTrip(gen.RandomType(Sig(), 5, 4), Sig());
    ASSERT_TRUE(failure.empty()) << failure;
  }
}

TEST(SurfacePropertyTest, PrintedTermsUseSingleSpaces) {
  Gen gen(303);
  for (int i = 0; i < 300; ++i) {
    Term t = gen.RandomTerm(Sig(), 5);
    if (!IsUnambiguous(t)) continue;
    std::string printed = PrintTerm(t);
    ASSERT_EQ(printed.find("  "), std::string::npos) << printed;
    ASSERT_NE(printed.front(), ' ');
    ASSERT_NE(printed.back(), ' ');
  }
}

}  // namespace
}  // namespace tyannot
