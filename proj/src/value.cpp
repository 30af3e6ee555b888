#include "tltt/value.hpp"

#include <stdexcept>

namespace tltt {

const ValuePtr& Env::lookup(std::size_t index) const {
  const Node* n = node_.get();
  for (std::size_t i = 0; i < index && n; ++i) n = n->next.get();
  if (!n) throw std::out_of_range("environment lookup past its depth");
  return n->value;
}

namespace val {

ValuePtr make(VKind k, std::vector<ValuePtr> items) {
  auto v = std::make_shared<Value>();
  v->kind = k;
  v->items = std::move(items);
  return v;
}

ValuePtr univ(Sort s) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::Univ;
  v->sort = s;
  return v;
}

ValuePtr var(std::size_t level) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::Neutral;
  v->head.tag = Head::Tag::Var;
  v->head.level = level;
  return v;
}

ValuePtr constant(std::string name) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::Neutral;
  v->head.tag = Head::Tag::Const;
  v->head.name = std::move(name);
  return v;
}

ValuePtr uip(ValuePtr p, ValuePtr q) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::Neutral;
  v->head.tag = Head::Tag::Uip;
  v->head.p = std::move(p);
  v->head.q = std::move(q);
  return v;
}

ValuePtr binder(VKind k, ValuePtr domain, Closure c) {
  auto v = std::make_shared<Value>();
  v->kind = k;
  v->items = {std::move(domain)};
  v->closure = std::move(c);
  return v;
}

ValuePtr lam(Closure c) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::Lam;
  v->closure = std::move(c);
  return v;
}

ValuePtr neutral_with(const Value& n, Elim e) {
  auto v = std::make_shared<Value>(n);
  v->spine.push_back(std::move(e));
  return v;
}

}  // namespace val

}  // namespace tltt
