#include "tltt/typechecker.hpp"

#include "tltt/printer.hpp"

namespace tltt {

TypingContext::TypingContext(std::shared_ptr<Signature> sig, CheckMode mode)
    : sig_(sig ? std::move(sig) : std::make_shared<Signature>()), mode_(mode) {}

TypingContext TypingContext::extend(std::string name, ValuePtr type) const {
  TypingContext c = *this;
  c.env_ = env_.extend(val::var(depth()));
  c.bindings_.push_back(Binding{std::move(name), std::move(type)});
  return c;
}

const Binding& TypingContext::binding(std::size_t index) const {
  return bindings_.at(bindings_.size() - 1 - index);
}

std::vector<std::string> TypingContext::names() const {
  std::vector<std::string> out;
  out.reserve(bindings_.size());
  for (const auto& b : bindings_) out.push_back(b.name);
  return out;
}

EvalOptions TypingContext::eval_options() const {
  EvalOptions o;
  o.strict_proof_irrelevance = mode_.strict_proof_irrelevance;
  o.unfold_budget = mode_.unfold_budget;
  return o;
}

namespace {

const char* elim_word(Kind k) {
  switch (k) {
    case Kind::NatElim: return "natElim";
    case Kind::SumElim: return "sumElim";
    case Kind::EmptyElim: return "emptyElim";
    case Kind::IdElim: return "J";
    default: return "eliminator";
  }
}

enum class Sub { Ok, Fibrancy, Universe, Mismatch };

class Elab {
 public:
  explicit Elab(const TypingContext& root)
      : mode_(root.mode()), nf_(root.signature(), root.eval_options()) {}

  Normalizer& nf() { return nf_; }
  void at(const SourceSpan& s) {
    if (s.valid()) span_ = s;
  }

  ValuePtr eval(const TypingContext& ctx, const TermPtr& t) {
    return nf_.eval(ctx.env(), t);
  }
  TermPtr quote(const TypingContext& ctx, const ValuePtr& v) {
    return nf_.quote(ctx.depth(), v);
  }
  std::string show(const TypingContext& ctx, const ValuePtr& v) {
    return pretty_print(quote(ctx, v), ctx.names());
  }
  std::string show(const TypingContext& ctx, const TermPtr& t) {
    return pretty_print(t, ctx.names());
  }

  [[noreturn]] void error(DiagCode c, std::string msg,
                          std::optional<std::string> expected = std::nullopt,
                          std::optional<std::string> actual = std::nullopt) {
    fail(c, span_, std::move(msg), std::move(expected), std::move(actual));
  }

  Inferred infer(const TypingContext& ctx, const TermPtr& t);
  TermPtr check(const TypingContext& ctx, const TermPtr& t,
                const ValuePtr& expected);
  std::pair<TermPtr, Sort> infer_type(const TypingContext& ctx,
                                      const TermPtr& t);
  std::pair<TermPtr, Sort> family(const TypingContext& ctx, const TermPtr& m,
                                  const std::vector<TermPtr>& doms,
                                  std::size_t i);
  void require_motive(Kind eliminator, Sort codomain);
  void subtype(const TypingContext& ctx, const ValuePtr& actual,
               const ValuePtr& expected);

 private:
  // Strong mode reads the strict copies of Nat, Empty and + as the fibrant ones.
  Kind eff(Kind k) const {
    if (!mode_.strong) return k;
    switch (k) {
      case Kind::NatS: return Kind::Nat;
      case Kind::ZeroS: return Kind::Zero;
      case Kind::SuccS: return Kind::Succ;
      case Kind::NatElimS: return Kind::NatElim;
      case Kind::EmptyS: return Kind::Empty;
      case Kind::EmptyElimS: return Kind::EmptyElim;
      case Kind::SumS: return Kind::Sum;
      case Kind::InlS: return Kind::Inl;
      case Kind::InrS: return Kind::Inr;
      case Kind::SumElimS: return Kind::SumElim;
      default: return k;
    }
  }

  Inferred infer_or_other(const TypingContext& ctx, const TermPtr& first,
                          const TermPtr& second) {
    try {
      return infer(ctx, first);
    } catch (const CheckError& e) {
      if (e.code() != DiagCode::InferenceFailure) throw;
    }
    return infer(ctx, second);
  }

  Sub sub(std::size_t depth, const ValuePtr& a, const ValuePtr& b);

  CheckMode mode_;
  Normalizer nf_;
  SourceSpan span_;
};

// Restores the reporting span when leaving a node.
class SpanScope {
 public:
  SpanScope(Elab& e, SourceSpan& slot, const TermPtr& t) : slot_(slot), saved_(slot) {
    e.at(t->span);
  }
  ~SpanScope() { slot_ = saved_; }

 private:
  SourceSpan& slot_;
  SourceSpan saved_;
};

}  // namespace

#define TLTT_SPAN(t) SpanScope span_guard_(*this, span_, t)

std::pair<TermPtr, Sort> Elab::infer_type(const TypingContext& ctx,
                                          const TermPtr& t) {
  Inferred r = infer(ctx, t);
  if (r.type->kind != VKind::Univ) {
    TLTT_SPAN(t);
    error(DiagCode::ConversionFailure,
          "expected a type, but `" + show(ctx, t) + "` is a term", "U i",
          show(ctx, r.type));
  }
  return {r.term, r.type->sort};
}

Sub Elab::sub(std::size_t depth, const ValuePtr& a, const ValuePtr& b) {
  if (a->kind == VKind::Univ && b->kind == VKind::Univ) {
    if (sort_sub(a->sort, b->sort)) return Sub::Ok;
    if (!a->sort.is_fibrant() && b->sort.is_fibrant()) return Sub::Fibrancy;
    return Sub::Universe;
  }
  if (a->kind == b->kind && (a->kind == VKind::Pi || a->kind == VKind::Sigma)) {
    if (a->kind == VKind::Pi) {
      if (!nf_.conv_untyped(depth, a->items[0], b->items[0])) return Sub::Mismatch;
    } else {
      Sub s = sub(depth, a->items[0], b->items[0]);
      if (s != Sub::Ok) return s;
    }
    ValuePtr x = val::var(depth);
    return sub(depth + 1, nf_.inst(a->closure, x), nf_.inst(b->closure, x));
  }
  return nf_.conv_untyped(depth, a, b) ? Sub::Ok : Sub::Mismatch;
}

void Elab::subtype(const TypingContext& ctx, const ValuePtr& actual,
                   const ValuePtr& expected) {
  switch (sub(ctx.depth(), actual, expected)) {
    case Sub::Ok:
      return;
    case Sub::Fibrancy:
      error(DiagCode::FibrancyViolation,
            "a pretype (Us i) was given where a fibrant type (U i) is required",
            show(ctx, expected), show(ctx, actual));
    case Sub::Universe:
      error(DiagCode::UniverseError, "universe level too large",
            show(ctx, expected), show(ctx, actual));
    case Sub::Mismatch:
      error(DiagCode::ConversionFailure, "type mismatch", show(ctx, expected),
            show(ctx, actual));
  }
}

void Elab::require_motive(Kind eliminator, Sort codomain) {
  bool fibrant_elim = eliminator == Kind::NatElim || eliminator == Kind::SumElim ||
                      eliminator == Kind::EmptyElim || eliminator == Kind::IdElim;
  if (!fibrant_elim || codomain.is_fibrant()) return;
  if (mode_.strong && eliminator != Kind::IdElim) return;
  error(DiagCode::NonFibrantMotive,
        std::string("the motive of ") + elim_word(eliminator) +
            " must be fibrant, but it lands in " + to_string(codomain),
        "U " + std::to_string(codomain.level), to_string(codomain));
}

std::pair<TermPtr, Sort> Elab::family(const TypingContext& ctx,
                                      const TermPtr& m,
                                      const std::vector<TermPtr>& doms,
                                      std::size_t i) {
  if (i == doms.size()) return infer_type(ctx, m);
  TLTT_SPAN(m);
  TermPtr body, annot;
  std::string name = "x";
  if (m->kind == Kind::Lam) {
    name = m->name;
    body = m->kids[1];
    if (m->kids[0]) {
      auto [a, s] = infer_type(ctx, m->kids[0]);
      (void)s;
      if (!nf_.conv_untyped(ctx.depth(), eval(ctx, a), eval(ctx, doms[i])))
        error(DiagCode::ConversionFailure, "motive binder has the wrong type",
              show(ctx, doms[i]), show(ctx, a));
      annot = a;
    }
  } else {
    body = tm::app(shift(m, 1), tm::var(0));
  }
  TypingContext inner = ctx.extend(name, eval(ctx, doms[i]));
  auto [b, s] = family(inner, body, doms, i + 1);
  return {tm::lam(name, b, annot), s};
}

Inferred Elab::infer(const TypingContext& ctx, const TermPtr& t) {
  TLTT_SPAN(t);
  const Kind k = eff(t->kind);
  const auto& kids = t->kids;
  switch (k) {
    case Kind::Var: {
      if (t->index >= ctx.depth())
        error(DiagCode::UnboundVariable,
              "variable index " + std::to_string(t->index) + " is out of scope");
      return {t, ctx.binding(t->index).type};
    }
    case Kind::Const: {
      const GlobalEntry* e = ctx.signature().find(t->name);
      if (!e) error(DiagCode::UnboundVariable, "unknown name `" + t->name + "`");
      return {t, e->type};
    }
    case Kind::Univ:
      return {t, val::univ(sort_succ(t->sort))};
    case Kind::Pi:
    case Kind::Sigma: {
      auto [a, sa] = infer_type(ctx, kids[0]);
      auto [b, sb] = infer_type(ctx.extend(t->name, eval(ctx, a)), kids[1]);
      TermPtr out = k == Kind::Pi ? tm::pi(t->name, a, b) : tm::sigma(t->name, a, b);
      return {out, val::univ(sort_join(sa, sb))};
    }
    case Kind::Lam: {
      if (!kids[0])
        error(DiagCode::InferenceFailure,
              "cannot infer the type of an unannotated lambda; annotate the "
              "binder or the term");
      auto [a, sa] = infer_type(ctx, kids[0]);
      (void)sa;
      ValuePtr av = eval(ctx, a);
      TypingContext inner = ctx.extend(t->name, av);
      Inferred body = infer(inner, kids[1]);
      ValuePtr ty = val::binder(
          VKind::Pi, av,
          Closure{ctx.env(), nf_.quote(inner.depth(), body.type), t->name});
      return {tm::lam(t->name, body.term, a), ty};
    }
    case Kind::App: {
      Inferred f = infer(ctx, kids[0]);
      if (f.type->kind != VKind::Pi)
        error(DiagCode::ConversionFailure,
              "`" + show(ctx, kids[0]) + "` is applied but is not a function",
              "a function type", show(ctx, f.type));
      TermPtr a = check(ctx, kids[1], f.type->items[0]);
      return {tm::app(f.term, a), nf_.inst(f.type->closure, eval(ctx, a))};
    }
    case Kind::Fst:
    case Kind::Snd: {
      Inferred p = infer(ctx, kids[0]);
      if (p.type->kind != VKind::Sigma)
        error(DiagCode::ConversionFailure,
              "projection from `" + show(ctx, kids[0]) + "`, which is not a pair",
              "a dependent pair type", show(ctx, p.type));
      if (k == Kind::Fst) return {tm::fst(p.term), p.type->items[0]};
      ValuePtr first = nf_.fst(eval(ctx, p.term));
      return {tm::snd(p.term), nf_.inst(p.type->closure, first)};
    }
    case Kind::Unit:
    case Kind::Nat:
    case Kind::Empty:
      return {tm::make(k), val::univ(Sort::fibrant(0))};
    case Kind::NatS:
    case Kind::EmptyS:
      return {tm::make(k), val::univ(Sort::strict(0))};
    case Kind::Star:
      return {t, val::make(VKind::Unit)};
    case Kind::Zero:
      return {tm::make(k), val::make(VKind::Nat)};
    case Kind::ZeroS:
      return {tm::make(k), val::make(VKind::NatS)};
    case Kind::Succ:
    case Kind::SuccS: {
      bool strict = k == Kind::SuccS;
      ValuePtr nat = val::make(strict ? VKind::NatS : VKind::Nat);
      return {tm::make(k, {check(ctx, kids[0], nat)}), nat};
    }
    case Kind::Sum:
    case Kind::SumS: {
      auto [a, sa] = infer_type(ctx, kids[0]);
      auto [b, sb] = infer_type(ctx, kids[1]);
      Sort s = sort_join(sa, sb);
      if (k == Kind::SumS) {
        s = Sort::strict(s.level);
      } else if (!mode_.strong && !s.is_fibrant()) {
        error(DiagCode::FibrancyViolation,
              "`+` needs fibrant summands; use `+s` for pretypes",
              "U " + std::to_string(s.level), to_string(s));
      }
      return {tm::make(k, {a, b}), val::univ(s)};
    }
    case Kind::Id:
    case Kind::IdS: {
      TermPtr carrier;
      Sort s;
      ValuePtr av;
      if (kids[0]) {
        std::tie(carrier, s) = infer_type(ctx, kids[0]);
        av = eval(ctx, carrier);
      } else {
        av = infer_or_other(ctx, kids[1], kids[2]).type;
        carrier = quote(ctx, av);
        s = infer_type(ctx, carrier).second;
      }
      if (k == Kind::Id && !s.is_fibrant())
        error(DiagCode::NonFibrantEqualityFormation,
              "`=` can only be formed over fibrant types, but `" +
                  show(ctx, carrier) + "` is a pretype; use `=s`",
              "U " + std::to_string(s.level), to_string(s));
      TermPtr lhs = check(ctx, kids[1], av);
      TermPtr rhs = check(ctx, kids[2], av);
      Sort out = k == Kind::Id ? Sort::fibrant(s.level) : Sort::strict(s.level);
      return {tm::make(k, {carrier, lhs, rhs}), val::univ(out)};
    }
    case Kind::NatElim:
    case Kind::NatElimS: {
      bool strict = k == Kind::NatElimS;
      TermPtr nat_t = strict ? tm::nat_s() : tm::nat();
      auto [motive, sp] = family(ctx, kids[0], {nat_t}, 0);
      require_motive(k, sp);
      ValuePtr pv = eval(ctx, motive);
      ValuePtr zero = val::make(strict ? VKind::ZeroS : VKind::Zero);
      TermPtr base = check(ctx, kids[1], nf_.apply(pv, zero));
      TermPtr succ_var = tm::make(strict ? Kind::SuccS : Kind::Succ, {tm::var(1)});
      TermPtr step_t = tm::pi(
          "n", nat_t,
          tm::pi("r", tm::app(shift(motive, 1), tm::var(0)),
                 tm::app(shift(motive, 2), succ_var)));
      TermPtr step = check(ctx, kids[2], eval(ctx, step_t));
      TermPtr n = check(ctx, kids[3], eval(ctx, nat_t));
      return {tm::make(k, {motive, base, step, n}),
              nf_.apply(pv, eval(ctx, n))};
    }
    case Kind::EmptyElim:
    case Kind::EmptyElimS: {
      TermPtr empty_t = tm::make(k == Kind::EmptyElim ? Kind::Empty : Kind::EmptyS);
      auto [motive, sp] = family(ctx, kids[0], {empty_t}, 0);
      require_motive(k, sp);
      TermPtr e = check(ctx, kids[1], eval(ctx, empty_t));
      return {tm::make(k, {motive, e}),
              nf_.apply(eval(ctx, motive), eval(ctx, e))};
    }
    case Kind::SumElim:
    case Kind::SumElimS: {
      bool strict = k == Kind::SumElimS;
      Inferred target = infer(ctx, kids[3]);
      VKind want = strict ? VKind::SumS : VKind::Sum;
      if (target.type->kind != want)
        error(DiagCode::ConversionFailure,
              std::string("the target of ") + (strict ? "sumElimS" : "sumElim") +
                  " must have a " + (strict ? "`+s`" : "`+`") + " type",
              strict ? "A +s B" : "A + B", show(ctx, target.type));
      TermPtr a = quote(ctx, target.type->items[0]);
      TermPtr b = quote(ctx, target.type->items[1]);
      TermPtr sum_t = tm::make(strict ? Kind::SumS : Kind::Sum, {a, b});
      auto [motive, sp] = family(ctx, kids[0], {sum_t}, 0);
      require_motive(k, sp);
      Kind inl = strict ? Kind::InlS : Kind::Inl;
      Kind inr = strict ? Kind::InrS : Kind::Inr;
      TermPtr left_t = tm::pi(
          "a", a, tm::app(shift(motive, 1), tm::make(inl, {tm::var(0)})));
      TermPtr right_t = tm::pi(
          "b", b, tm::app(shift(motive, 1), tm::make(inr, {tm::var(0)})));
      TermPtr left = check(ctx, kids[1], eval(ctx, left_t));
      TermPtr right = check(ctx, kids[2], eval(ctx, right_t));
      return {tm::make(k, {motive, left, right, target.term}),
              nf_.apply(eval(ctx, motive), eval(ctx, target.term))};
    }
    case Kind::IdElim:
    case Kind::IdElimS: {
      bool strict = k == Kind::IdElimS;
      VKind want = strict ? VKind::IdS : VKind::Id;
      ValuePtr av;
      try {
        Inferred p = infer(ctx, kids[4]);
        if (p.type->kind != want)
          error(DiagCode::ConversionFailure,
                std::string("the proof given to ") + (strict ? "Js" : "J") +
                    " is not an equality of the right kind",
                strict ? "a =s b" : "a = b", show(ctx, p.type));
        av = p.type->items[0];
      } catch (const CheckError& e) {
        if (e.code() != DiagCode::InferenceFailure) throw;
        av = infer_or_other(ctx, kids[2], kids[3]).type;
      }
      TermPtr a_t = quote(ctx, av);
      TermPtr lhs = check(ctx, kids[2], av);
      TermPtr rhs = check(ctx, kids[3], av);
      ValuePtr lv = eval(ctx, lhs), rv = eval(ctx, rhs);
      TermPtr proof = check(ctx, kids[4], val::make(want, {av, lv, rv}));
      Kind id = strict ? Kind::IdS : Kind::Id;
      std::vector<TermPtr> doms = {
          a_t, shift(a_t, 1),
          tm::make(id, {shift(a_t, 2), tm::var(1), tm::var(0)})};
      auto [motive, sp] = family(ctx, kids[0], doms, 0);
      require_motive(k, sp);
      TermPtr refl_t = tm::pi(
          "x", a_t,
          tm::apps(shift(motive, 1),
                   {tm::var(0), tm::var(0),
                    tm::make(strict ? Kind::ReflS : Kind::Refl)}));
      TermPtr d = check(ctx, kids[1], eval(ctx, refl_t));
      ValuePtr pv = eval(ctx, motive);
      ValuePtr ty =
          nf_.apply(nf_.apply(nf_.apply(pv, lv), rv), eval(ctx, proof));
      return {tm::make(k, {motive, d, lhs, rhs, proof}), ty};
    }
    case Kind::UipS: {
      ValuePtr ty = infer_or_other(ctx, kids[0], kids[1]).type;
      if (ty->kind != VKind::IdS)
        error(DiagCode::ConversionFailure, "Ks compares two strict equalities",
              "a =s b", show(ctx, ty));
      TermPtr p = check(ctx, kids[0], ty);
      TermPtr q = check(ctx, kids[1], ty);
      return {tm::make(k, {p, q}),
              val::make(VKind::IdS, {ty, eval(ctx, p), eval(ctx, q)})};
    }
    case Kind::Ann: {
      auto [a, s] = infer_type(ctx, kids[1]);
      (void)s;
      ValuePtr av = eval(ctx, a);
      return {check(ctx, kids[0], av), av};
    }
    case Kind::Pair:
      error(DiagCode::InferenceFailure,
            "cannot infer the type of a pair; add a type annotation");
    case Kind::Inl:
    case Kind::Inr:
    case Kind::InlS:
    case Kind::InrS:
      error(DiagCode::InferenceFailure,
            "cannot infer the type of an injection; add a type annotation");
    case Kind::Refl:
    case Kind::ReflS:
      error(DiagCode::InferenceFailure,
            "cannot infer the type of a reflexivity proof; add a type "
            "annotation");
  }
  error(DiagCode::InferenceFailure, "cannot infer a type for this term");
}

TermPtr Elab::check(const TypingContext& ctx, const TermPtr& t,
                    const ValuePtr& expected) {
  TLTT_SPAN(t);
  const Kind k = eff(t->kind);
  const auto& kids = t->kids;
  switch (k) {
    case Kind::Lam: {
      if (expected->kind != VKind::Pi)
        error(DiagCode::ConversionFailure, "a lambda was given for a non-function type",
              show(ctx, expected), "a function");
      TermPtr annot;
      if (kids[0]) {
        auto [a, s] = infer_type(ctx, kids[0]);
        (void)s;
        if (!nf_.conv_untyped(ctx.depth(), eval(ctx, a), expected->items[0]))
          error(DiagCode::ConversionFailure, "lambda binder has the wrong type",
                show(ctx, expected->items[0]), show(ctx, a));
        annot = a;
      }
      TypingContext inner = ctx.extend(t->name, expected->items[0]);
      ValuePtr cod = nf_.inst(expected->closure, val::var(ctx.depth()));
      return tm::lam(t->name, check(inner, kids[1], cod), annot);
    }
    case Kind::Pair: {
      if (expected->kind != VKind::Sigma)
        error(DiagCode::ConversionFailure, "a pair was given for a non-pair type",
              show(ctx, expected), "a pair");
      TermPtr a = check(ctx, kids[0], expected->items[0]);
      TermPtr b = check(ctx, kids[1], nf_.inst(expected->closure, eval(ctx, a)));
      return tm::pair(a, b);
    }
    case Kind::Inl:
    case Kind::Inr:
    case Kind::InlS:
    case Kind::InrS: {
      bool strict = k == Kind::InlS || k == Kind::InrS;
      if (expected->kind != (strict ? VKind::SumS : VKind::Sum))
        error(DiagCode::ConversionFailure,
              "an injection was given for a type that is not a matching sum",
              show(ctx, expected), strict ? "A +s B" : "A + B");
      bool left = k == Kind::Inl || k == Kind::InlS;
      return tm::make(k, {check(ctx, kids[0], expected->items[left ? 0 : 1])});
    }
    case Kind::Refl:
    case Kind::ReflS: {
      VKind want = k == Kind::Refl ? VKind::Id : VKind::IdS;
      if (expected->kind != want)
        error(DiagCode::ConversionFailure,
              "a reflexivity proof was given for a type that is not a matching "
              "equality",
              show(ctx, expected), k == Kind::Refl ? "a = a" : "a =s a");
      const auto& it = expected->items;
      if (!nf_.conv(ctx.depth(), it[1], it[2], it[0]))
        error(DiagCode::ConversionFailure,
              "the two sides of the equality are not definitionally equal",
              show(ctx, it[1]), show(ctx, it[2]));
      return tm::make(k);
    }
    default:
      break;
  }
  Inferred r = infer(ctx, t);
  subtype(ctx, r.type, expected);
  return r.term;
}

#undef TLTT_SPAN

Inferred infer(const TypingContext& ctx, const TermPtr& t) {
  Elab e(ctx);
  return e.infer(ctx, t);
}

TermPtr check(const TypingContext& ctx, const TermPtr& t, const ValuePtr& type) {
  Elab e(ctx);
  return e.check(ctx, t, type);
}

Sort classify(const TypingContext& ctx, const TermPtr& t) {
  Elab e(ctx);
  return e.infer_type(ctx, t).second;
}

void check_motive_fibrancy(const TypingContext& ctx, Kind eliminator,
                           const TermPtr& motive,
                           const std::vector<TermPtr>& telescope) {
  Elab e(ctx);
  e.at(motive->span);
  Sort s = e.family(ctx, motive, telescope, 0).second;
  e.require_motive(eliminator, s);
}

TermPtr normalize(const TypingContext& ctx, const TermPtr& t) {
  Normalizer nf(ctx.signature(), ctx.eval_options());
  return nf.quote(ctx.depth(), nf.eval(ctx.env(), t));
}

bool convertible(const TypingContext& ctx, const TermPtr& a, const TermPtr& b,
                 const TermPtr& type) {
  Normalizer nf(ctx.signature(), ctx.eval_options());
  return nf.conv(ctx.depth(), nf.eval(ctx.env(), a), nf.eval(ctx.env(), b),
                 nf.eval(ctx.env(), type));
}

namespace {

std::optional<GlobalEntry> elaborate(const TypingContext& ctx,
                                     const Declaration& d, DeclResult* out);

void run_fail(const TypingContext& ctx, const Declaration& d) {
  const Pragma& p = d.pragma;
  std::optional<Diagnostic> got;
  if (p.parse_failure) {
    got = *p.parse_failure;
  } else {
    try {
      elaborate(ctx, *p.wrapped, nullptr);
    } catch (const CheckError& e) {
      got = e.diagnostic();
    }
  }
  std::string want = p.expected_code ? *p.expected_code : "an error";
  if (!got)
    fail(DiagCode::ExpectedFailureMissing, d.span,
         "expected " + want + ", but the item was accepted");
  if (p.expected_code && code_name(got->code) != *p.expected_code)
    fail(DiagCode::ExpectedFailureMissing, d.span,
         "expected " + want + ", but got " + code_name(got->code) + ": " +
             got->message,
         want, std::string(code_name(got->code)));
}

std::optional<GlobalEntry> elaborate(const TypingContext& ctx,
                                     const Declaration& d, DeclResult* out) {
  Elab e(ctx);
  e.at(d.span);
  Signature& sig = ctx.signature();
  switch (d.tag) {
    case Declaration::Tag::Definition:
    case Declaration::Tag::Axiom: {
      if (sig.contains(d.name))
        e.error(DiagCode::DuplicateName, "`" + d.name + "` is already defined");
      GlobalEntry g;
      g.name = d.name;
      g.span = d.span;
      g.is_axiom = d.tag == Declaration::Tag::Axiom;
      if (d.type) {
        g.type_term = e.infer_type(ctx, d.type).first;
        g.type = e.eval(ctx, g.type_term);
        if (!g.is_axiom) g.body_term = e.check(ctx, d.body, g.type);
      } else {
        Inferred r = e.infer(ctx, d.body);
        g.body_term = r.term;
        g.type = r.type;
        g.type_term = e.quote(ctx, r.type);
      }
      if (g.body_term) g.body = e.eval(ctx, g.body_term);
      return g;
    }
    case Declaration::Tag::Pragma:
      break;
  }
  const Pragma& p = d.pragma;
  const auto& ts = p.terms;
  switch (p.kind) {
    case PragmaKind::Check: {
      auto [a, s] = e.infer_type(ctx, ts[1]);
      (void)s;
      e.check(ctx, ts[0], e.eval(ctx, a));
      break;
    }
    case PragmaKind::Infer: {
      Inferred r = e.infer(ctx, ts[0]);
      if (out) out->output = e.show(ctx, r.type);
      break;
    }
    case PragmaKind::Normalize: {
      Inferred r = e.infer(ctx, ts[0]);
      if (out) out->output = pretty_print(e.quote(ctx, e.eval(ctx, r.term)));
      break;
    }
    case PragmaKind::Conv: {
      auto [a, s] = e.infer_type(ctx, ts[2]);
      (void)s;
      ValuePtr av = e.eval(ctx, a);
      TermPtr x = e.check(ctx, ts[0], av);
      TermPtr y = e.check(ctx, ts[1], av);
      if (!e.nf().conv(0, e.eval(ctx, x), e.eval(ctx, y), av))
        e.error(DiagCode::ConversionFailure, "the terms are not convertible",
                e.show(ctx, e.eval(ctx, x)), e.show(ctx, e.eval(ctx, y)));
      break;
    }
    case PragmaKind::Fail:
      run_fail(ctx, d);
      break;
  }
  return std::nullopt;
}

}  // namespace

TypingContext check_declaration(const TypingContext& ctx, const Declaration& d,
                                DeclResult* result) {
  std::optional<GlobalEntry> g = elaborate(ctx, d, result);
  if (g) ctx.signature().add(std::move(*g));
  return ctx;
}

}  // namespace tltt
