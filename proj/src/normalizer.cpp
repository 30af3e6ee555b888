#include "tltt/normalizer.hpp"

#include <stdexcept>

#include "tltt/diagnostic.hpp"

namespace tltt {

const GlobalEntry* Signature::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

void Signature::add(GlobalEntry e) {
  std::string name = e.name;
  auto [it, inserted] = entries_.emplace(name, std::move(e));
  if (!inserted) throw std::logic_error("duplicate global " + name);
  order_.push_back(std::move(name));
}

namespace {

VKind leaf_kind(Kind k) {
  switch (k) {
    case Kind::Unit: return VKind::Unit;
    case Kind::Star: return VKind::Star;
    case Kind::Nat: return VKind::Nat;
    case Kind::NatS: return VKind::NatS;
    case Kind::Zero: return VKind::Zero;
    case Kind::ZeroS: return VKind::ZeroS;
    case Kind::Succ: return VKind::Succ;
    case Kind::SuccS: return VKind::SuccS;
    case Kind::Empty: return VKind::Empty;
    case Kind::EmptyS: return VKind::EmptyS;
    case Kind::Sum: return VKind::Sum;
    case Kind::SumS: return VKind::SumS;
    case Kind::Inl: return VKind::Inl;
    case Kind::Inr: return VKind::Inr;
    case Kind::InlS: return VKind::InlS;
    case Kind::InrS: return VKind::InrS;
    case Kind::Id: return VKind::Id;
    case Kind::IdS: return VKind::IdS;
    case Kind::Refl: return VKind::Refl;
    case Kind::ReflS: return VKind::ReflS;
    case Kind::Pair: return VKind::Pair;
    default: throw std::logic_error("no value kind for term kind");
  }
}

Kind term_kind(VKind k) {
  switch (k) {
    case VKind::Unit: return Kind::Unit;
    case VKind::Star: return Kind::Star;
    case VKind::Nat: return Kind::Nat;
    case VKind::NatS: return Kind::NatS;
    case VKind::Zero: return Kind::Zero;
    case VKind::ZeroS: return Kind::ZeroS;
    case VKind::Succ: return Kind::Succ;
    case VKind::SuccS: return Kind::SuccS;
    case VKind::Empty: return Kind::Empty;
    case VKind::EmptyS: return Kind::EmptyS;
    case VKind::Sum: return Kind::Sum;
    case VKind::SumS: return Kind::SumS;
    case VKind::Inl: return Kind::Inl;
    case VKind::Inr: return Kind::Inr;
    case VKind::InlS: return Kind::InlS;
    case VKind::InrS: return Kind::InrS;
    case VKind::Id: return Kind::Id;
    case VKind::IdS: return Kind::IdS;
    case VKind::Refl: return Kind::Refl;
    case VKind::ReflS: return Kind::ReflS;
    case VKind::Pair: return Kind::Pair;
    default: throw std::logic_error("no term kind for value kind");
  }
}

bool is_zero(const ValuePtr& v) {
  return v->kind == VKind::Zero || v->kind == VKind::ZeroS;
}
bool is_succ(const ValuePtr& v) {
  return v->kind == VKind::Succ || v->kind == VKind::SuccS;
}

}  // namespace

ValuePtr Normalizer::eval(const Env& env, const TermPtr& t) {
  switch (t->kind) {
    case Kind::Var:
      return env.lookup(t->index);
    case Kind::Const: {
      const GlobalEntry* e = sig_.find(t->name);
      if (!e || !e->body) return val::constant(t->name);
      ++unfolds_;
      if (opts_.unfold_budget && unfolds_ > *opts_.unfold_budget)
        fail(DiagCode::InferenceFailure, t->span,
             "unfold budget of " + std::to_string(*opts_.unfold_budget) +
                 " exceeded while unfolding " + t->name);
      return e->body;
    }
    case Kind::Univ:
      return val::univ(t->sort);
    case Kind::Pi:
      return val::binder(VKind::Pi, eval(env, t->kids[0]),
                         Closure{env, t->kids[1], t->name});
    case Kind::Sigma:
      return val::binder(VKind::Sigma, eval(env, t->kids[0]),
                         Closure{env, t->kids[1], t->name});
    case Kind::Lam:
      return val::lam(Closure{env, t->kids[1], t->name});
    case Kind::App:
      return apply(eval(env, t->kids[0]), eval(env, t->kids[1]));
    case Kind::Fst:
      return fst(eval(env, t->kids[0]));
    case Kind::Snd:
      return snd(eval(env, t->kids[0]));
    case Kind::Ann:
      return eval(env, t->kids[0]);
    case Kind::NatElim:
    case Kind::NatElimS:
      return nat_elim(t->kind,
                      {eval(env, t->kids[0]), eval(env, t->kids[1]),
                       eval(env, t->kids[2])},
                      eval(env, t->kids[3]));
    case Kind::EmptyElim:
    case Kind::EmptyElimS: {
      ValuePtr target = eval(env, t->kids[1]);
      if (target->kind != VKind::Neutral)
        throw std::logic_error("empty eliminator applied to a canonical value");
      return val::neutral_with(*target, Elim{t->kind, {eval(env, t->kids[0])}});
    }
    case Kind::SumElim:
    case Kind::SumElimS:
      return sum_elim(t->kind,
                      {eval(env, t->kids[0]), eval(env, t->kids[1]),
                       eval(env, t->kids[2])},
                      eval(env, t->kids[3]));
    case Kind::IdElim:
    case Kind::IdElimS:
      return id_elim(t->kind,
                     {eval(env, t->kids[0]), eval(env, t->kids[1]),
                      eval(env, t->kids[2]), eval(env, t->kids[3])},
                     eval(env, t->kids[4]));
    case Kind::UipS:
      return val::uip(eval(env, t->kids[0]), eval(env, t->kids[1]));
    default: {
      std::vector<ValuePtr> items;
      items.reserve(t->kids.size());
      for (const auto& k : t->kids) items.push_back(k ? eval(env, k) : nullptr);
      return val::make(leaf_kind(t->kind), std::move(items));
    }
  }
}

ValuePtr Normalizer::inst(const Closure& c, const ValuePtr& arg) {
  return eval(c.env.extend(arg), c.body);
}

ValuePtr Normalizer::apply(const ValuePtr& fn, const ValuePtr& arg) {
  if (fn->kind == VKind::Lam) return inst(fn->closure, arg);
  if (fn->kind == VKind::Neutral)
    return val::neutral_with(*fn, Elim{Kind::App, {arg}});
  throw std::logic_error("application of a non-function value");
}

ValuePtr Normalizer::fst(const ValuePtr& p) {
  if (p->kind == VKind::Pair) return p->items[0];
  if (p->kind == VKind::Neutral) return val::neutral_with(*p, Elim{Kind::Fst, {}});
  throw std::logic_error("first projection of a non-pair value");
}

ValuePtr Normalizer::snd(const ValuePtr& p) {
  if (p->kind == VKind::Pair) return p->items[1];
  if (p->kind == VKind::Neutral) return val::neutral_with(*p, Elim{Kind::Snd, {}});
  throw std::logic_error("second projection of a non-pair value");
}

ValuePtr Normalizer::nat_elim(Kind k, std::vector<ValuePtr> args,
                              const ValuePtr& n) {
  if (is_zero(n)) return args[1];
  if (is_succ(n)) {
    ValuePtr m = n->items[0];
    ValuePtr rec = nat_elim(k, args, m);
    return apply(apply(args[2], m), rec);
  }
  if (n->kind == VKind::Neutral)
    return val::neutral_with(*n, Elim{k, std::move(args)});
  throw std::logic_error("natural-number eliminator on a non-numeral");
}

ValuePtr Normalizer::sum_elim(Kind k, std::vector<ValuePtr> args,
                              const ValuePtr& s) {
  switch (s->kind) {
    case VKind::Inl:
    case VKind::InlS:
      return apply(args[1], s->items[0]);
    case VKind::Inr:
    case VKind::InrS:
      return apply(args[2], s->items[0]);
    case VKind::Neutral:
      return val::neutral_with(*s, Elim{k, std::move(args)});
    default:
      throw std::logic_error("sum eliminator on a non-injection");
  }
}

ValuePtr Normalizer::id_elim(Kind k, std::vector<ValuePtr> args,
                             const ValuePtr& p) {
  if (p->kind == VKind::Refl || p->kind == VKind::ReflS)
    return apply(args[1], args[2]);
  if (p->kind == VKind::Neutral)
    return val::neutral_with(*p, Elim{k, std::move(args)});
  throw std::logic_error("path eliminator on a non-path");
}

TermPtr Normalizer::quote(std::size_t depth, const ValuePtr& v) {
  switch (v->kind) {
    case VKind::Univ:
      return tm::univ(v->sort);
    case VKind::Pi:
    case VKind::Sigma: {
      TermPtr dom = quote(depth, v->items[0]);
      TermPtr cod = quote(depth + 1, inst(v->closure, val::var(depth)));
      return v->kind == VKind::Pi ? tm::pi(v->closure.name, dom, cod)
                                  : tm::sigma(v->closure.name, dom, cod);
    }
    case VKind::Lam:
      return tm::lam(v->closure.name,
                     quote(depth + 1, inst(v->closure, val::var(depth))));
    case VKind::Neutral:
      return quote_neutral(depth, *v);
    default: {
      std::vector<TermPtr> kids;
      kids.reserve(v->items.size());
      for (const auto& i : v->items) kids.push_back(i ? quote(depth, i) : nullptr);
      return tm::make(term_kind(v->kind), std::move(kids));
    }
  }
}

TermPtr Normalizer::quote_neutral(std::size_t depth, const Value& n) {
  TermPtr acc;
  switch (n.head.tag) {
    case Head::Tag::Var:
      if (n.head.level >= depth)
        throw std::logic_error("variable level escapes its scope");
      acc = tm::var(depth - 1 - n.head.level);
      break;
    case Head::Tag::Const:
      acc = tm::constant(n.head.name);
      break;
    case Head::Tag::Uip:
      acc = tm::make(Kind::UipS, {quote(depth, n.head.p), quote(depth, n.head.q)});
      break;
  }
  for (const Elim& e : n.spine) {
    switch (e.kind) {
      case Kind::App:
        acc = tm::app(acc, quote(depth, e.args[0]));
        break;
      case Kind::Fst:
        acc = tm::fst(acc);
        break;
      case Kind::Snd:
        acc = tm::snd(acc);
        break;
      default: {
        std::vector<TermPtr> kids;
        kids.reserve(e.args.size() + 1);
        for (const auto& a : e.args) kids.push_back(quote(depth, a));
        kids.push_back(acc);
        acc = tm::make(e.kind, std::move(kids));
        break;
      }
    }
  }
  return acc;
}

bool Normalizer::conv(std::size_t depth, const ValuePtr& a, const ValuePtr& b,
                      const ValuePtr& type) {
  switch (type->kind) {
    case VKind::Pi: {
      ValuePtr x = val::var(depth);
      return conv(depth + 1, apply(a, x), apply(b, x), inst(type->closure, x));
    }
    case VKind::Sigma: {
      ValuePtr a1 = fst(a);
      if (!conv(depth, a1, fst(b), type->items[0])) return false;
      return conv(depth, snd(a), snd(b), inst(type->closure, a1));
    }
    case VKind::Unit:
      return true;
    case VKind::IdS:
      if (opts_.strict_proof_irrelevance) return true;
      return conv_untyped(depth, a, b);
    case VKind::Nat:
    case VKind::NatS:
      if (is_succ(a) && is_succ(b))
        return conv(depth, a->items[0], b->items[0], type);
      return conv_untyped(depth, a, b);
    case VKind::Sum:
    case VKind::SumS:
      if (a->kind == b->kind &&
          (a->kind == VKind::Inl || a->kind == VKind::InlS))
        return conv(depth, a->items[0], b->items[0], type->items[0]);
      if (a->kind == b->kind &&
          (a->kind == VKind::Inr || a->kind == VKind::InrS))
        return conv(depth, a->items[0], b->items[0], type->items[1]);
      return conv_untyped(depth, a, b);
    default:
      return conv_untyped(depth, a, b);
  }
}

bool Normalizer::conv_heads(std::size_t depth, const Head& a, const Head& b) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case Head::Tag::Var: return a.level == b.level;
    case Head::Tag::Const: return a.name == b.name;
    case Head::Tag::Uip:
      return conv_untyped(depth, a.p, b.p) && conv_untyped(depth, a.q, b.q);
  }
  return false;
}

bool Normalizer::conv_untyped(std::size_t depth, const ValuePtr& a,
                              const ValuePtr& b) {
  if (a == b) return true;
  auto either = [&](VKind k) { return a->kind == k || b->kind == k; };
  auto other_ok = [&](VKind k) {
    const ValuePtr& o = a->kind == k ? b : a;
    return o->kind == k || o->kind == VKind::Neutral;
  };

  // Eta, driven by whichever side is canonical.
  if (either(VKind::Lam)) {
    if (!other_ok(VKind::Lam)) return false;
    ValuePtr x = val::var(depth);
    return conv_untyped(depth + 1, apply(a, x), apply(b, x));
  }
  if (either(VKind::Pair)) {
    if (!other_ok(VKind::Pair)) return false;
    return conv_untyped(depth, fst(a), fst(b)) &&
           conv_untyped(depth, snd(a), snd(b));
  }
  if (either(VKind::Star)) return other_ok(VKind::Star);
  if (opts_.strict_proof_irrelevance && either(VKind::ReflS))
    return other_ok(VKind::ReflS);

  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case VKind::Univ:
      return a->sort == b->sort;
    case VKind::Pi:
    case VKind::Sigma: {
      if (!conv_untyped(depth, a->items[0], b->items[0])) return false;
      ValuePtr x = val::var(depth);
      return conv_untyped(depth + 1, inst(a->closure, x), inst(b->closure, x));
    }
    case VKind::Neutral: {
      if (!conv_heads(depth, a->head, b->head)) return false;
      if (a->spine.size() != b->spine.size()) return false;
      for (std::size_t i = 0; i < a->spine.size(); ++i) {
        const Elim& ea = a->spine[i];
        const Elim& eb = b->spine[i];
        if (ea.kind != eb.kind || ea.args.size() != eb.args.size()) return false;
        for (std::size_t j = 0; j < ea.args.size(); ++j)
          if (!conv_untyped(depth, ea.args[j], eb.args[j])) return false;
      }
      return true;
    }
    default: {
      if (a->items.size() != b->items.size()) return false;
      for (std::size_t i = 0; i < a->items.size(); ++i) {
        const ValuePtr& x = a->items[i];
        const ValuePtr& y = b->items[i];
        if (!x || !y) {
          if (x != y) return false;
          continue;
        }
        if (!conv_untyped(depth, x, y)) return false;
      }
      return true;
    }
  }
}

}  // namespace tltt
