#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tltt {

// Universe classifiers. Fibrant(i) is U i, Strict(i) is Us i.
enum class Fragment : std::uint8_t { Fibrant, Strict };

struct Sort {
  Fragment fragment = Fragment::Fibrant;
  unsigned level = 0;

  static Sort fibrant(unsigned i) { return {Fragment::Fibrant, i}; }
  static Sort strict(unsigned i) { return {Fragment::Strict, i}; }

  bool is_fibrant() const { return fragment == Fragment::Fibrant; }
  friend bool operator==(const Sort&, const Sort&) = default;
};

/// Subsumption between universes: cumulative inside each hierarchy, and
/// U i sits below Us j whenever i <= j. Nothing lifts a pretype to a type.
bool sort_sub(Sort a, Sort b);

/// Least sort containing both; fibrant only if both are.
Sort sort_join(Sort a, Sort b);

/// Sort of the universe that classifies `s` itself.
Sort sort_succ(Sort s);

std::string to_string(Sort s);

struct SourceSpan {
  std::shared_ptr<const std::string> file;
  int line = 0, col = 0;
  int end_line = 0, end_col = 0;

  std::string file_name() const { return file ? *file : std::string{}; }
  bool valid() const { return line > 0; }
};

enum class Kind : std::uint8_t {
  Var, Const, Univ,
  Pi, Lam, App,
  Sigma, Pair, Fst, Snd,
  Unit, Star,
  Nat, NatS, Zero, ZeroS, Succ, SuccS, NatElim, NatElimS,
  Empty, EmptyS, EmptyElim, EmptyElimS,
  Sum, SumS, Inl, Inr, InlS, InrS, SumElim, SumElimS,
  Id, IdS, Refl, ReflS, IdElim, IdElimS, UipS,
  Ann,
};

const char* kind_name(Kind k);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable term node. Children layout per kind:
///   Pi [dom, cod*]   Lam [annotation?, body*]   Sigma [fst, snd*]
///   App [fn, arg]    Pair [a, b]   Fst/Snd/Succ/Inl/Inr [x]
///   NatElim [motive, base, step, target]   EmptyElim [motive, target]
///   Sum [left, right]   SumElim [motive, left, right, target]
///   Id [type?, lhs, rhs]   IdElim [motive, refl-case, lhs, rhs, proof]
///   UipS [p, q]   Ann [term, type]
/// (* = under one binder, ? = may be null before elaboration)
struct Term {
  Kind kind = Kind::Star;
  std::size_t index = 0;  // Var
  Sort sort{};            // Univ
  std::string name;       // Const name, or binder hint for Pi/Lam/Sigma
  std::vector<TermPtr> kids;
  SourceSpan span;
};

/// Number of binders the i-th child of a node of kind `k` sits under.
inline std::size_t binders_of(Kind k, std::size_t i) {
  switch (k) {
    case Kind::Pi:
    case Kind::Lam:
    case Kind::Sigma:
      return i == 1 ? 1 : 0;
    default:
      return 0;
  }
}

namespace tm {
TermPtr make(Kind k, std::vector<TermPtr> kids = {}, SourceSpan span = {});
TermPtr var(std::size_t index, std::string hint = {});
TermPtr constant(std::string name);
TermPtr univ(Sort s);
TermPtr pi(std::string name, TermPtr dom, TermPtr cod);
TermPtr arrow(TermPtr dom, TermPtr cod);  // shifts cod under the binder
TermPtr lam(std::string name, TermPtr body, TermPtr annotation = nullptr);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr apps(TermPtr fn, std::vector<TermPtr> args);
TermPtr sigma(std::string name, TermPtr fst, TermPtr snd);
TermPtr pair(TermPtr a, TermPtr b);
TermPtr fst(TermPtr p);
TermPtr snd(TermPtr p);
TermPtr unit();
TermPtr star();
TermPtr nat();
TermPtr nat_s();
TermPtr zero();
TermPtr zero_s();
TermPtr succ(TermPtr n);
TermPtr succ_s(TermPtr n);
TermPtr numeral(unsigned n, bool strict = false);
TermPtr id(TermPtr type, TermPtr lhs, TermPtr rhs);
TermPtr id_s(TermPtr type, TermPtr lhs, TermPtr rhs);
}  // namespace tm

/// Displace free indices >= cutoff by `amount`.
TermPtr shift(const TermPtr& t, long amount, std::size_t cutoff = 0);

/// Replace Var(index) by `replacement`, removing that binder: indices above
/// `index` drop by one. The replacement lives at the depth of `index`.
TermPtr subst(const TermPtr& t, std::size_t index, const TermPtr& replacement);

/// Structural equality ignoring binder hints and spans (alpha-equality).
bool alpha_equal(const TermPtr& a, const TermPtr& b);

/// True when Var(index) occurs free.
bool occurs(const TermPtr& t, std::size_t index);

/// Node count, used by tests and budgets.
std::size_t term_size(const TermPtr& t);

/// True when any node of the given kind occurs in t.
bool contains_kind(const TermPtr& t, Kind k);

enum class PragmaKind : std::uint8_t { Check, Infer, Normalize, Conv, Fail };

struct Declaration;

struct Diagnostic;

struct Pragma {
  PragmaKind kind = PragmaKind::Check;
  std::vector<TermPtr> terms;  // Check [t, A]; Infer/Normalize [t]; Conv [a, b, A]
  std::shared_ptr<const Declaration> wrapped;      // Fail
  std::optional<std::string> expected_code;        // Fail[CODE]
  std::shared_ptr<const Diagnostic> parse_failure;  // Fail around unparsable text
};

struct Declaration {
  enum class Tag : std::uint8_t { Definition, Axiom, Pragma };
  Tag tag = Tag::Definition;
  std::string name;
  TermPtr type;  // may be null for `def x := t`
  TermPtr body;
  Pragma pragma;
  SourceSpan span;
};

struct Module {
  std::string path;
  std::vector<Declaration> decls;
};

}  // namespace tltt
