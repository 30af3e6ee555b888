#include <gtest/gtest.h>

#include "support/load.hpp"
#include "tltt/parser.hpp"
#include "tltt/printer.hpp"
#include "tltt/typechecker.hpp"

using namespace tltt;
using testsupport::load;
using testsupport::load_into;

namespace {

TermPtr parse(const TypingContext& ctx, const std::string& s) {
  return testsupport::term(ctx, s);
}

DiagCode infer_error(const TypingContext& ctx, const std::string& s) {
  try {
    infer(ctx, parse(ctx, s));
  } catch (const CheckError& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << s;
  return DiagCode::ExpectedFailureMissing;
}

DiagCode check_error(const TypingContext& ctx, const std::string& s, const std::string& ty) {
  try {
    Normalizer nf(ctx.signature());
    check(ctx, parse(ctx, s), nf.eval(ctx.env(), parse(ctx, ty)));
  } catch (const CheckError& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << s << " : " << ty;
  return DiagCode::ExpectedFailureMissing;
}

bool checks(const TypingContext& ctx, const std::string& s, const std::string& ty) {
  try {
    Normalizer nf(ctx.signature());
    check(ctx, parse(ctx, s), nf.eval(ctx.env(), parse(ctx, ty)));
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

std::string inferred(const TypingContext& ctx, const std::string& s) {
  Inferred r = infer(ctx, parse(ctx, s));
  Normalizer nf(ctx.signature());
  return pretty_print(nf.quote(ctx.depth(), r.type), ctx.names());
}

DiagCode decl_error(const TypingContext& ctx, const std::string& src) {
  try {
    load_into(ctx, src);
  } catch (const CheckError& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << src;
  return DiagCode::ExpectedFailureMissing;
}

}  // namespace

// ---- infer ------------------------------------------------------------

TEST(Infer, FibrantIdOverStrictNatIsRejected) {
  TypingContext ctx;
  EXPECT_EQ(infer_error(ctx, "IdS NatS 0s 0s = IdS NatS 0s 0s"), DiagCode::NonFibrantEqualityFormation);
  EXPECT_EQ(infer_error(ctx, "Id NatS 0s 0s"), DiagCode::NonFibrantEqualityFormation);
}

TEST(Infer, StrictIdIsStrict) {
  TypingContext ctx;
  EXPECT_EQ(inferred(ctx, "IdS NatS 0s 0s"), "Us 0");
  EXPECT_EQ(inferred(ctx, "0 =s 0"), "Us 0");
}

TEST(Infer, PiPreservesFibrancy) {
  TypingContext ctx;
  EXPECT_EQ(inferred(ctx, "Nat -> Nat"), "U 0");
  EXPECT_EQ(inferred(ctx, "Nat -> NatS"), "Us 0");
  EXPECT_EQ(inferred(ctx, "(A : U 0) -> A"), "U 1");
  EXPECT_EQ(inferred(ctx, "(A : Us 0) * A"), "Us 1");
}

TEST(Infer, SumsAndStrictSums) {
  TypingContext ctx;
  EXPECT_EQ(inferred(ctx, "Nat +s Nat"), "Us 0");
  EXPECT_EQ(inferred(ctx, "Nat + Unit"), "U 0");
  EXPECT_EQ(infer_error(ctx, "Nat + NatS"), DiagCode::FibrancyViolation);
}

TEST(Infer, UniversesAndLiterals) {
  TypingContext ctx;
  EXPECT_EQ(inferred(ctx, "U 0"), "U 1");
  EXPECT_EQ(inferred(ctx, "Us 2"), "Us 3");
  EXPECT_EQ(inferred(ctx, "3"), "Nat");
  EXPECT_EQ(inferred(ctx, "3s"), "NatS");
  EXPECT_EQ(inferred(ctx, "star"), "Unit");
}

TEST(Infer, UnannotatedLambdaNeedsAnnotation) {
  TypingContext ctx;
  EXPECT_EQ(infer_error(ctx, "\\x. x"), DiagCode::InferenceFailure);
  EXPECT_EQ(inferred(ctx, "\\(x : Nat). x"), "Nat -> Nat");
  EXPECT_EQ(infer_error(ctx, "(0, 0)"), DiagCode::InferenceFailure);
}

TEST(Infer, StrictEqualityAndK) {
  auto ctx = load("axiom p : 1s =s 1s\n");
  EXPECT_EQ(inferred(ctx, "Ks p refls"), "IdS (IdS NatS 1s 1s) p refls");
  EXPECT_EQ(infer_error(ctx, "Ks (refl : 0 = 0) refl"), DiagCode::ConversionFailure);
}

// ---- check ------------------------------------------------------------

TEST(Check, Examples) {
  TypingContext ctx;
  EXPECT_TRUE(checks(ctx, "\\x. x", "Nat -> Nat"));
  EXPECT_TRUE(checks(ctx, "Nat", "Us 0"));
  EXPECT_EQ(check_error(ctx, "NatS", "U 0"), DiagCode::FibrancyViolation);
}

TEST(Check, Cumulativity) {
  TypingContext ctx;
  EXPECT_TRUE(checks(ctx, "Nat", "U 3"));
  EXPECT_TRUE(checks(ctx, "U 0", "Us 1"));
  EXPECT_EQ(check_error(ctx, "U 1", "U 1"), DiagCode::UniverseError);
  EXPECT_EQ(check_error(ctx, "Us 0", "U 5"), DiagCode::FibrancyViolation);
}

TEST(Check, MismatchReportsBothSides) {
  TypingContext ctx;
  try {
    Normalizer nf(ctx.signature());
    check(ctx, parse(ctx, "0s"), nf.eval(Env(), parse(ctx, "Nat")));
    FAIL();
  } catch (const CheckError& e) {
    EXPECT_EQ(e.code(), DiagCode::ConversionFailure);
    EXPECT_EQ(e.diagnostic().expected, std::optional<std::string>("Nat"));
    EXPECT_EQ(e.diagnostic().actual, std::optional<std::string>("NatS"));
  }
}

// ---- motives ----------------------------------------------------------

TEST(Motive, JIntoStrictEqualityIsRejected) {
  auto ctx = load("axiom A : U 0\naxiom a : A\naxiom b : A\naxiom p : a = b\n");
  EXPECT_EQ(infer_error(ctx, "J (\\x y q. x =s y) (\\x. refls) a b p"), DiagCode::NonFibrantMotive);
}

TEST(Motive, StrictJIntoFibrantEquality) {
  auto ctx = load("axiom A : U 0\naxiom a : A\naxiom b : A\naxiom p : a =s b\n");
  EXPECT_EQ(inferred(ctx, "Js (\\x y q. x = y) (\\x. refl) a b p"), "Id A a b");
}

TEST(Motive, NatElimIntoUniverse) {
  TypingContext ctx;
  EXPECT_EQ(inferred(ctx, "natElim (\\_. U 0) Nat (\\_ X. X) 3"), "U 0");
  EXPECT_EQ(infer_error(ctx, "natElim (\\_. Us 0) NatS (\\_ X. X) 3"), DiagCode::NonFibrantMotive);
  EXPECT_EQ(inferred(ctx, "natElimS (\\_. Us 0) NatS (\\_ X. X) 3s"), "Us 0");
}

TEST(Motive, DirectCheck) {
  TypingContext ctx;
  auto nat = tm::nat();
  EXPECT_NO_THROW(check_motive_fibrancy(ctx, Kind::NatElim,
                                        tm::lam("_", tm::univ(Sort::fibrant(0))), {nat}));
  EXPECT_THROW(check_motive_fibrancy(ctx, Kind::NatElim, tm::lam("_", tm::nat_s()), {nat}),
               CheckError);
  EXPECT_NO_THROW(check_motive_fibrancy(ctx, Kind::NatElimS, tm::lam("_", tm::nat_s()),
                                        {tm::nat_s()}));
  CheckMode strong;
  strong.strong = true;
  TypingContext sctx(nullptr, strong);
  EXPECT_NO_THROW(check_motive_fibrancy(sctx, Kind::NatElim, tm::lam("_", tm::nat_s()), {nat}));
  auto jmotive = tm::lam("x", tm::lam("y", tm::lam("p", tm::id_s(nat, tm::var(2), tm::var(1)))));
  std::vector<TermPtr> tele = {nat, nat, tm::id(nat, tm::var(1), tm::var(0))};
  EXPECT_THROW(check_motive_fibrancy(sctx, Kind::IdElim, jmotive, tele), CheckError);
}

TEST(Motive, EliminatorsPerFragment) {
  auto ctx = load("axiom e : Empty\naxiom s : Unit + Nat\n");
  EXPECT_EQ(infer_error(ctx, "emptyElim (\\_. NatS) e"), DiagCode::NonFibrantMotive);
  EXPECT_EQ(inferred(ctx, "emptyElim (\\_. Nat) e"), "Nat");
  EXPECT_EQ(infer_error(ctx, "sumElim (\\_. NatS) (\\_. 0s) (\\_. 1s) s"), DiagCode::NonFibrantMotive);
  EXPECT_EQ(inferred(ctx, "sumElim (\\_. Nat) (\\_. 0) (\\n. n) s"), "Nat");
}

// ---- classify ----------------------------------------------------------

TEST(Classify, Examples) {
  TypingContext ctx;
  EXPECT_EQ(classify(ctx, parse(ctx, "(n : Nat) * n = 0")), Sort::fibrant(0));
  EXPECT_EQ(classify(ctx, parse(ctx, "(n : Nat) -> n =s 0")), Sort::strict(0));
  EXPECT_EQ(classify(ctx, parse(ctx, "U 0")), Sort::fibrant(1));
  EXPECT_THROW(classify(ctx, parse(ctx, "0")), CheckError);
}

TEST(Classify, NeutralTypesFollowTheirUniverse) {
  auto ctx = load("axiom X : U 0\naxiom Y : Us 0\naxiom F : Nat -> U 1\n");
  EXPECT_EQ(classify(ctx, parse(ctx, "X")), Sort::fibrant(0));
  EXPECT_EQ(classify(ctx, parse(ctx, "Y")), Sort::strict(0));
  EXPECT_EQ(classify(ctx, parse(ctx, "F 2")), Sort::fibrant(1));
  EXPECT_EQ(classify(ctx, parse(ctx, "X -> Y")), Sort::strict(0));
}

// ---- declarations -----------------------------------------------------

TEST(Declaration, CoerceExtendsSignature) {
  auto ctx = load(
      "def coerce : (A : U 0) -> (a b : A) -> a =s b -> a = b :=\n"
      "  \\A a b p. Js (\\x y _. x = y) (\\x. refl) a b p\n");
  const GlobalEntry* e = ctx.signature().find("coerce");
  ASSERT_NE(e, nullptr);
  EXPECT_FALSE(e->is_axiom);
  EXPECT_NE(e->body, nullptr);
}

TEST(Declaration, AxiomStaysNeutral) {
  auto ctx = load(
      "axiom funextS : (A : Us 2) -> (B : A -> Us 2) -> (f g : (x : A) -> B x) ->\n"
      "                ((x : A) -> f x =s g x) -> f =s g\n");
  const GlobalEntry* e = ctx.signature().find("funextS");
  ASSERT_NE(e, nullptr);
  EXPECT_TRUE(e->is_axiom);
  EXPECT_EQ(e->body, nullptr);
  Normalizer nf(ctx.signature());
  auto v = nf.eval(Env(), tm::constant("funextS"));
  EXPECT_EQ(v->kind, VKind::Neutral);
}

TEST(Declaration, DuplicateName) {
  auto ctx = load("def coerce : Nat := 0\n");
  EXPECT_EQ(decl_error(ctx, "def coerce : Nat := 1\n"), DiagCode::DuplicateName);
  EXPECT_EQ(decl_error(ctx, "axiom coerce : Nat\n"), DiagCode::DuplicateName);
}

TEST(Declaration, DeclaredTypeMustBeAType) {
  TypingContext ctx;
  EXPECT_EQ(decl_error(ctx, "def x : 0 := 0\n"), DiagCode::ConversionFailure);
}

TEST(Declaration, InferredTypeWithoutAnnotation) {
  auto ctx = load("def two := succ (succ 0)\n");
  Normalizer nf(ctx.signature());
  EXPECT_EQ(nf.quote(0, ctx.signature().find("two")->type)->kind, Kind::Nat);
}

TEST(Declaration, PragmaOutputs) {
  TypingContext ctx;
  Module m = parse_module(
      "#infer Nat -> NatS\n#normalize natElimS (\\_. NatS) 1s (\\_ r. succs r) 2s\n"
      "#fail[FibrancyViolation] def x : U 0 := NatS\n",
      "t.2lt");
  DeclResult r;
  ctx = check_declaration(ctx, m.decls[0], &r);
  EXPECT_EQ(r.output, std::optional<std::string>("Us 0"));
  ctx = check_declaration(ctx, m.decls[1], &r);
  EXPECT_EQ(r.output, std::optional<std::string>("3s"));
  ctx = check_declaration(ctx, m.decls[2], &r);
  EXPECT_FALSE(ctx.signature().contains("x"));
}

TEST(Declaration, FailPragmaMismatches) {
  TypingContext ctx;
  EXPECT_EQ(decl_error(ctx, "#fail def y : U 0 := Nat\n"), DiagCode::ExpectedFailureMissing);
  EXPECT_EQ(decl_error(ctx, "#fail[NonFibrantMotive] def x : U 0 := NatS\n"),
            DiagCode::ExpectedFailureMissing);
  EXPECT_EQ(decl_error(ctx, "#conv 0 ~ 1 : Nat\n"), DiagCode::ConversionFailure);
  EXPECT_NO_THROW(load_into(ctx, "#fail #conv 0 ~ 1 : Nat\n"));
}

TEST(Declaration, FailedItemIsNotAdded) {
  auto ctx = load("#fail[FibrancyViolation] def x : U 0 := NatS\ndef x : Us 0 := NatS\n");
  EXPECT_TRUE(ctx.signature().contains("x"));
}

// ---- strong mode -------------------------------------------------------

TEST(Strong, FormersCoincide) {
  CheckMode strong;
  strong.strong = true;
  TypingContext ctx(nullptr, strong);
  EXPECT_TRUE(checks(ctx, "NatS", "U 0"));
  EXPECT_TRUE(checks(ctx, "Nat +s Unit", "U 0"));
  EXPECT_TRUE(checks(ctx, "0s", "Nat"));
  EXPECT_TRUE(checks(ctx, "EmptyS", "U 0"));
  EXPECT_EQ(inferred(ctx, "0s = 0"), "U 0");
  EXPECT_TRUE(checks(ctx, "natElim (\\_. Us 0) NatS (\\_ X. X) 3", "Us 0"));
  // J keeps its restriction.
  auto p = load("axiom p : 0 = 0\n", strong);
  EXPECT_EQ(infer_error(p, "J (\\x y q. x =s y) (\\x. refls) 0 0 p"), DiagCode::NonFibrantMotive);
  EXPECT_EQ(check_error(ctx, "0 =s 0", "U 0"), DiagCode::FibrancyViolation);
}

TEST(Strong, DefaultModeKeepsThemApart) {
  TypingContext ctx;
  EXPECT_EQ(check_error(ctx, "0s", "Nat"), DiagCode::ConversionFailure);
}
