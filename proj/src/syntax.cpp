#include "tltt/syntax.hpp"

#include <algorithm>

namespace tltt {

bool sort_sub(Sort a, Sort b) {
  if (a.level > b.level) return false;
  return a.fragment == b.fragment || (a.is_fibrant() && !b.is_fibrant());
}

Sort sort_join(Sort a, Sort b) {
  Fragment f = (a.is_fibrant() && b.is_fibrant()) ? Fragment::Fibrant
                                                  : Fragment::Strict;
  return {f, std::max(a.level, b.level)};
}

Sort sort_succ(Sort s) { return {s.fragment, s.level + 1}; }

std::string to_string(Sort s) {
  return (s.is_fibrant() ? "U " : "Us ") + std::to_string(s.level);
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Var: return "Var";
    case Kind::Const: return "Const";
    case Kind::Univ: return "Univ";
    case Kind::Pi: return "Pi";
    case Kind::Lam: return "Lam";
    case Kind::App: return "App";
    case Kind::Sigma: return "Sigma";
    case Kind::Pair: return "Pair";
    case Kind::Fst: return "Fst";
    case Kind::Snd: return "Snd";
    case Kind::Unit: return "Unit";
    case Kind::Star: return "Star";
    case Kind::Nat: return "Nat";
    case Kind::NatS: return "NatS";
    case Kind::Zero: return "Zero";
    case Kind::ZeroS: return "ZeroS";
    case Kind::Succ: return "Succ";
    case Kind::SuccS: return "SuccS";
    case Kind::NatElim: return "NatElim";
    case Kind::NatElimS: return "NatElimS";
    case Kind::Empty: return "Empty";
    case Kind::EmptyS: return "EmptyS";
    case Kind::EmptyElim: return "EmptyElim";
    case Kind::EmptyElimS: return "EmptyElimS";
    case Kind::Sum: return "Sum";
    case Kind::SumS: return "SumS";
    case Kind::Inl: return "Inl";
    case Kind::Inr: return "Inr";
    case Kind::InlS: return "InlS";
    case Kind::InrS: return "InrS";
    case Kind::SumElim: return "SumElim";
    case Kind::SumElimS: return "SumElimS";
    case Kind::Id: return "Id";
    case Kind::IdS: return "IdS";
    case Kind::Refl: return "Refl";
    case Kind::ReflS: return "ReflS";
    case Kind::IdElim: return "IdElim";
    case Kind::IdElimS: return "IdElimS";
    case Kind::UipS: return "UipS";
    case Kind::Ann: return "Ann";
  }
  return "?";
}

namespace tm {

TermPtr make(Kind k, std::vector<TermPtr> kids, SourceSpan span) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->kids = std::move(kids);
  t->span = std::move(span);
  return t;
}

TermPtr var(std::size_t index, std::string hint) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Var;
  t->index = index;
  t->name = std::move(hint);
  return t;
}

TermPtr constant(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Const;
  t->name = std::move(name);
  return t;
}

TermPtr univ(Sort s) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Univ;
  t->sort = s;
  return t;
}

namespace {
TermPtr binder(Kind k, std::string name, TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->name = std::move(name);
  t->kids = {std::move(a), std::move(b)};
  return t;
}
}  // namespace

TermPtr pi(std::string name, TermPtr dom, TermPtr cod) {
  return binder(Kind::Pi, std::move(name), std::move(dom), std::move(cod));
}
TermPtr arrow(TermPtr dom, TermPtr cod) {
  return pi("_", std::move(dom), shift(cod, 1));
}
TermPtr lam(std::string name, TermPtr body, TermPtr annotation) {
  return binder(Kind::Lam, std::move(name), std::move(annotation),
                std::move(body));
}
TermPtr app(TermPtr fn, TermPtr arg) {
  return make(Kind::App, {std::move(fn), std::move(arg)});
}
TermPtr apps(TermPtr fn, std::vector<TermPtr> args) {
  for (auto& a : args) fn = app(std::move(fn), std::move(a));
  return fn;
}
TermPtr sigma(std::string name, TermPtr fst, TermPtr snd) {
  return binder(Kind::Sigma, std::move(name), std::move(fst), std::move(snd));
}
TermPtr pair(TermPtr a, TermPtr b) {
  return make(Kind::Pair, {std::move(a), std::move(b)});
}
TermPtr fst(TermPtr p) { return make(Kind::Fst, {std::move(p)}); }
TermPtr snd(TermPtr p) { return make(Kind::Snd, {std::move(p)}); }
TermPtr unit() { return make(Kind::Unit); }
TermPtr star() { return make(Kind::Star); }
TermPtr nat() { return make(Kind::Nat); }
TermPtr nat_s() { return make(Kind::NatS); }
TermPtr zero() { return make(Kind::Zero); }
TermPtr zero_s() { return make(Kind::ZeroS); }
TermPtr succ(TermPtr n) { return make(Kind::Succ, {std::move(n)}); }
TermPtr succ_s(TermPtr n) { return make(Kind::SuccS, {std::move(n)}); }
TermPtr numeral(unsigned n, bool strict) {
  TermPtr t = strict ? zero_s() : zero();
  for (unsigned i = 0; i < n; ++i) t = strict ? succ_s(t) : succ(t);
  return t;
}
TermPtr id(TermPtr type, TermPtr lhs, TermPtr rhs) {
  return make(Kind::Id, {std::move(type), std::move(lhs), std::move(rhs)});
}
TermPtr id_s(TermPtr type, TermPtr lhs, TermPtr rhs) {
  return make(Kind::IdS, {std::move(type), std::move(lhs), std::move(rhs)});
}

}  // namespace tm

namespace {

// Generic rebuild: applies `leaf` to every Var with the current binder depth.
template <class F>
TermPtr map_vars(const TermPtr& t, std::size_t depth, const F& leaf) {
  if (!t) return t;
  if (t->kind == Kind::Var) return leaf(t, depth);
  if (t->kids.empty()) return t;
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  bool changed = false;
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    kids.push_back(map_vars(t->kids[i], depth + binders_of(t->kind, i), leaf));
    changed = changed || kids.back() != t->kids[i];
  }
  if (!changed) return t;
  auto copy = std::make_shared<Term>(*t);
  copy->kids = std::move(kids);
  return copy;
}

TermPtr with_index(const TermPtr& v, std::size_t index) {
  auto copy = std::make_shared<Term>(*v);
  copy->index = index;
  return copy;
}

}  // namespace

TermPtr shift(const TermPtr& t, long amount, std::size_t cutoff) {
  if (amount == 0) return t;
  return map_vars(t, 0, [&](const TermPtr& v, std::size_t depth) {
    if (v->index < cutoff + depth) return v;
    return with_index(v, static_cast<std::size_t>(
                             static_cast<long>(v->index) + amount));
  });
}

TermPtr subst(const TermPtr& t, std::size_t index,
              const TermPtr& replacement) {
  return map_vars(t, 0, [&](const TermPtr& v, std::size_t depth) -> TermPtr {
    std::size_t target = index + depth;
    if (v->index == target) return shift(replacement, static_cast<long>(depth));
    if (v->index > target) return with_index(v, v->index - 1);
    return v;
  });
}

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->kids.size() != b->kids.size()) return false;
  switch (a->kind) {
    case Kind::Var:
      return a->index == b->index;
    case Kind::Const:
      return a->name == b->name;
    case Kind::Univ:
      return a->sort == b->sort;
    default:
      break;
  }
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!alpha_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

bool occurs(const TermPtr& t, std::size_t index) {
  if (!t) return false;
  if (t->kind == Kind::Var) return t->index == index;
  for (std::size_t i = 0; i < t->kids.size(); ++i)
    if (occurs(t->kids[i], index + binders_of(t->kind, i))) return true;
  return false;
}

std::size_t term_size(const TermPtr& t) {
  if (!t) return 0;
  std::size_t n = 1;
  for (const auto& k : t->kids) n += term_size(k);
  return n;
}

bool contains_kind(const TermPtr& t, Kind k) {
  if (!t) return false;
  if (t->kind == k) return true;
  return std::any_of(t->kids.begin(), t->kids.end(),
                     [k](const TermPtr& c) { return contains_kind(c, k); });
}

}  // namespace tltt
