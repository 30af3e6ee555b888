#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tltt/syntax.hpp"

namespace tltt {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

/// Persistent environment; the head of the list is de Bruijn index 0.
class Env {
 public:
  Env() = default;

  Env extend(ValuePtr v) const {
    Env e;
    e.node_ = std::make_shared<const Node>(Node{std::move(v), node_, size() + 1});
    return e;
  }
  const ValuePtr& lookup(std::size_t index) const;
  std::size_t size() const { return node_ ? node_->size : 0; }

 private:
  struct Node {
    ValuePtr value;
    std::shared_ptr<const Node> next;
    std::size_t size;
  };
  std::shared_ptr<const Node> node_;
};

struct Closure {
  Env env;
  TermPtr body;
  std::string name;
};

enum class VKind : std::uint8_t {
  Univ, Pi, Lam, Sigma, Pair,
  Unit, Star,
  Nat, NatS, Zero, ZeroS, Succ, SuccS,
  Empty, EmptyS,
  Sum, SumS, Inl, Inr, InlS, InrS,
  Id, IdS, Refl, ReflS,
  Neutral,
};

/// One stuck elimination. `args` holds the non-target arguments in source
/// order, e.g. NatElim [motive, base, step], IdElim [motive, refl, lhs, rhs].
struct Elim {
  Kind kind;  // App, Fst, Snd or one of the eliminator kinds
  std::vector<ValuePtr> args;
};

struct Head {
  enum class Tag : std::uint8_t { Var, Const, Uip };
  Tag tag = Tag::Var;
  std::size_t level = 0;   // Var
  std::string name;        // Const
  ValuePtr p, q;           // Uip
};

/// Weak-head normal value. `items` per kind:
///   Pi/Sigma [domain] + closure; Lam closure; Pair [a, b]; Succ [n];
///   Sum [l, r]; Inl/Inr [x]; Id/IdS [type, lhs, rhs].
struct Value {
  VKind kind = VKind::Star;
  Sort sort{};  // Univ
  std::vector<ValuePtr> items;
  Closure closure;
  Head head;               // Neutral
  std::vector<Elim> spine;  // Neutral, innermost elimination first
};

namespace val {
ValuePtr make(VKind k, std::vector<ValuePtr> items = {});
ValuePtr univ(Sort s);
ValuePtr var(std::size_t level);
ValuePtr constant(std::string name);
ValuePtr uip(ValuePtr p, ValuePtr q);
ValuePtr binder(VKind k, ValuePtr domain, Closure c);
ValuePtr lam(Closure c);
ValuePtr neutral_with(const Value& n, Elim e);
}  // namespace val

}  // namespace tltt
