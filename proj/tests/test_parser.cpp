#include <gtest/gtest.h>

#include "support/scoped.hpp"
#include "tltt/diagnostic.hpp"
#include "tltt/lexer.hpp"
#include "tltt/parser.hpp"
#include "tltt/printer.hpp"

using namespace tltt;

namespace {

DiagCode parse_error(std::string_view text) {
  try {
    parse_module(text, "t.2lt");
  } catch (const CheckError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return DiagCode::InferenceFailure;
}

}  // namespace

TEST(ParseModule, IdentityDefinition) {
  Module m = parse_module("def id : (A : U 0) -> A -> A := \\A. \\x. x", "t.2lt");
  ASSERT_EQ(m.decls.size(), 1u);
  const auto& d = m.decls[0];
  EXPECT_EQ(d.tag, Declaration::Tag::Definition);
  EXPECT_EQ(d.name, "id");
  EXPECT_TRUE(alpha_equal(d.body, tm::lam("A", tm::lam("x", tm::var(0)))));
  EXPECT_TRUE(alpha_equal(
      d.type, tm::pi("A", tm::univ(Sort::fibrant(0)), tm::arrow(tm::var(0), tm::var(0)))));
}

TEST(ParseModule, UnboundIdentifierNamesIt) {
  try {
    parse_module("def bad := y", "t.2lt");
    FAIL();
  } catch (const CheckError& e) {
    EXPECT_EQ(e.code(), DiagCode::UnboundVariable);
    EXPECT_NE(e.diagnostic().message.find("y"), std::string::npos);
    EXPECT_EQ(e.diagnostic().span.line, 1);
    EXPECT_EQ(e.diagnostic().span.col, 12);
  }
}

TEST(ParseModule, AxiomAfterDefinition) {
  Module m = parse_module(
      "def Equiv : U 0 -> U 0 -> U 0 := \\A B. A -> B\n"
      "axiom ua : (A : U 0) -> (B : U 0) -> Equiv A B -> A = B\n",
      "t.2lt");
  ASSERT_EQ(m.decls.size(), 2u);
  EXPECT_EQ(m.decls[1].tag, Declaration::Tag::Axiom);
  EXPECT_EQ(m.decls[1].name, "ua");
  EXPECT_EQ(m.decls[1].body, nullptr);
}

TEST(ParseModule, ForwardReferenceIsUnbound) {
  EXPECT_EQ(parse_error("def a : U 0 := b\ndef b : U 0 := Nat"), DiagCode::UnboundVariable);
}

TEST(ParseModule, SyntaxErrors) {
  EXPECT_EQ(parse_error("def a : U 0 := (Nat"), DiagCode::SyntaxError);
  EXPECT_EQ(parse_error("def : U 0 := Nat"), DiagCode::SyntaxError);
  EXPECT_EQ(parse_error("#frobnicate Nat"), DiagCode::SyntaxError);
  EXPECT_EQ(parse_error("#fail[NoSuchCode] def a : U 0 := Nat"), DiagCode::SyntaxError);
}

TEST(ParseModule, GlobalsFromEarlierFiles) {
  Module m = parse_module("def b : U 0 := a", "t.2lt", {"a"});
  EXPECT_EQ(m.decls[0].body->kind, Kind::Const);
  EXPECT_EQ(m.decls[0].body->name, "a");
}

TEST(ParseModule, Pragmas) {
  Module m = parse_module(
      "#check 0 : Nat\n"
      "#infer Nat\n"
      "#normalize succ 0\n"
      "#conv 1 ~ succ 0 : Nat\n"
      "#fail[FibrancyViolation] def x : U 0 := NatS\n"
      "#fail def y := zz\n",
      "t.2lt");
  ASSERT_EQ(m.decls.size(), 6u);
  for (const auto& d : m.decls) EXPECT_EQ(d.tag, Declaration::Tag::Pragma);
  EXPECT_EQ(m.decls[0].pragma.kind, PragmaKind::Check);
  EXPECT_EQ(m.decls[1].pragma.kind, PragmaKind::Infer);
  EXPECT_EQ(m.decls[2].pragma.kind, PragmaKind::Normalize);
  EXPECT_EQ(m.decls[3].pragma.kind, PragmaKind::Conv);
  EXPECT_EQ(m.decls[3].pragma.terms.size(), 3u);
  const auto& f = m.decls[4].pragma;
  EXPECT_EQ(f.kind, PragmaKind::Fail);
  EXPECT_EQ(f.expected_code, std::optional<std::string>("FibrancyViolation"));
  ASSERT_TRUE(f.wrapped);
  EXPECT_EQ(f.wrapped->name, "x");
  // A #fail around unparsable text records the parse error instead.
  const auto& g = m.decls[5].pragma;
  EXPECT_FALSE(g.expected_code);
  ASSERT_TRUE(g.parse_failure);
  EXPECT_EQ(g.parse_failure->code, DiagCode::UnboundVariable);
}

TEST(ParseTerm, Examples) {
  EXPECT_TRUE(alpha_equal(parse_term("(x : Nat) -> Nat"), tm::pi("x", tm::nat(), tm::nat())));
  EXPECT_TRUE(alpha_equal(parse_term("(x : NatS) * Us 0"),
                          tm::sigma("x", tm::nat_s(), tm::univ(Sort::strict(0)))));
  EXPECT_EQ(parse_term("refls")->kind, Kind::ReflS);
}

TEST(ParseTerm, Numerals) {
  EXPECT_TRUE(alpha_equal(parse_term("3"), tm::numeral(3)));
  EXPECT_TRUE(alpha_equal(parse_term("2s"), tm::numeral(2, true)));
}

TEST(ParseTerm, Associativity) {
  auto a = parse_term("f x y", {"f", "x", "y"});
  EXPECT_TRUE(alpha_equal(a, tm::app(tm::app(tm::var(2), tm::var(1)), tm::var(0))));
  auto b = parse_term("Nat -> Nat -> Nat");
  EXPECT_TRUE(alpha_equal(b, tm::arrow(tm::nat(), tm::arrow(tm::nat(), tm::nat()))));
  auto c = parse_term("Nat * Unit * Nat");
  EXPECT_EQ(c->kind, Kind::Sigma);
  EXPECT_EQ(c->kids[1]->kind, Kind::Sigma);
  auto d = parse_term("Nat + Unit +s Nat");
  EXPECT_EQ(d->kind, Kind::Sum);
  EXPECT_EQ(d->kids[1]->kind, Kind::SumS);
}

TEST(ParseTerm, EqualityAndEliminators) {
  auto e = parse_term("a = b", {"a", "b"});
  EXPECT_EQ(e->kind, Kind::Id);
  EXPECT_EQ(e->kids[0], nullptr);
  auto s = parse_term("IdS NatS a b", {"a", "b"});
  EXPECT_EQ(s->kind, Kind::IdS);
  EXPECT_EQ(s->kids[0]->kind, Kind::NatS);
  auto j = parse_term("Js (\\x y p. x =s y) (\\x. refls) a b p", {"a", "b", "p"});
  EXPECT_EQ(j->kind, Kind::IdElimS);
  EXPECT_EQ(j->kids.size(), 5u);
  auto k = parse_term("Ks p q", {"p", "q"});
  EXPECT_EQ(k->kind, Kind::UipS);
}

TEST(ParseTerm, CommentsAndAnnotations) {
  auto t = parse_term("{- block {- nested -} -} (star : Unit) -- trailing");
  EXPECT_EQ(t->kind, Kind::Ann);
  auto l = parse_term("\\(x y : Nat). x");
  EXPECT_TRUE(alpha_equal(l, tm::lam("x", tm::lam("y", tm::var(1), tm::nat()), tm::nat())));
}

TEST(ParseTerm, Spans) {
  auto t = parse_term("succ\n  (succ 0)");
  EXPECT_EQ(t->span.line, 1);
  EXPECT_EQ(t->span.col, 1);
  EXPECT_EQ(t->kids[0]->span.line, 2);
  // The parenthesised argument starts at its first token.
  EXPECT_EQ(t->kids[0]->span.col, 4);
}

TEST(ParseModule, Deterministic) {
  std::string src =
      "def f : Nat -> Nat := \\n. natElim (\\_. Nat) 0 (\\_ r. succ r) n\n"
      "#check f 2 : Nat\n";
  Module a = parse_module(src, "t.2lt"), b = parse_module(src, "t.2lt");
  ASSERT_EQ(a.decls.size(), b.decls.size());
  EXPECT_TRUE(alpha_equal(a.decls[0].body, b.decls[0].body));
  EXPECT_EQ(pretty_print(a.decls[0].body), pretty_print(b.decls[0].body));
}

TEST(Lexer, TokensAndPositions) {
  auto toks = lex("def x := \\y. y =s 0s", std::make_shared<const std::string>("t"));
  ASSERT_GE(toks.size(), 9u);
  EXPECT_EQ(toks[0].kind, Tok::Ident);
  EXPECT_EQ(toks[2].kind, Tok::Define);
  EXPECT_EQ(toks[3].kind, Tok::Lambda);
  EXPECT_EQ(toks[7].kind, Tok::EqS);
  EXPECT_EQ(toks[8].kind, Tok::NumS);
  EXPECT_EQ(toks[8].col, 19);
  EXPECT_EQ(toks.back().kind, Tok::End);
}

TEST(Lexer, UnterminatedComment) {
  EXPECT_THROW(lex("{- open", nullptr), CheckError);
}

TEST(PrettyPrint, Examples) {
  EXPECT_EQ(pretty_print(tm::pi("x", tm::nat(), tm::nat())), "Nat -> Nat");
  EXPECT_EQ(pretty_print(tm::lam("x", tm::var(0))), "\\x. x");
  EXPECT_EQ(pretty_print(tm::numeral(2, true)), "2s");
  EXPECT_EQ(pretty_print(tm::sigma("X", tm::unit(), tm::arrow(tm::unit(), tm::univ(Sort::fibrant(0))))),
            "Unit * (Unit -> U 0)");
}

TEST(PrettyPrint, FreshensShadowedNames) {
  // \x. \x. outer-x : both binders hinted "x".
  auto t = tm::lam("x", tm::lam("x", tm::var(1)));
  std::string s = pretty_print(t);
  EXPECT_EQ(s, "\\x. \\_. x");
  auto u = tm::lam("x", tm::lam("x", tm::app(tm::var(1), tm::var(0))));
  EXPECT_EQ(pretty_print(u), "\\x. \\x1. x x1");
}

TEST(PrettyPrint, AnnotatedDomainKeepsParentheses) {
  auto t = tm::arrow(tm::make(Kind::Ann, {tm::var(0), tm::univ(Sort::fibrant(0))}), tm::nat());
  std::string s = pretty_print(t, {"A"});
  EXPECT_TRUE(alpha_equal(parse_term(s, {"A"}), t)) << s;
}

TEST(PrettyPrint, RoundTripGeneratedTerms) {
  std::vector<std::string> globals = {"foo", "bar", "x"};
  NameSet gset(globals.begin(), globals.end());
  std::vector<std::string> scope = {"a", "b", "c"};
  testsupport::ScopedGen gen(2024, globals);
  for (int i = 0; i < 1500; ++i) {
    auto t = gen.term(scope.size(), 6);
    std::string s = pretty_print(t, scope);
    TermPtr back;
    try {
      back = parse_term(s, scope, gset);
    } catch (const CheckError& e) {
      FAIL() << "reparse failed: " << s << "\n" << e.what();
    }
    ASSERT_TRUE(alpha_equal(back, t)) << s << "\nreprinted: " << pretty_print(back, scope);
  }
}
