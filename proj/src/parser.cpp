#include "tltt/parser.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "tltt/diagnostic.hpp"
#include "tltt/lexer.hpp"

namespace tltt {

namespace {

struct Keyword {
  std::string_view word;
  Kind kind;
  int arity;
};

// Prefix formers and eliminators with a fixed number of explicit arguments.
constexpr std::array kPrefix = {
    Keyword{"succ", Kind::Succ, 1},         Keyword{"succs", Kind::SuccS, 1},
    Keyword{"natElim", Kind::NatElim, 4},   Keyword{"natElimS", Kind::NatElimS, 4},
    Keyword{"emptyElim", Kind::EmptyElim, 2},
    Keyword{"emptyElimS", Kind::EmptyElimS, 2},
    Keyword{"inl", Kind::Inl, 1},           Keyword{"inr", Kind::Inr, 1},
    Keyword{"inls", Kind::InlS, 1},         Keyword{"inrs", Kind::InrS, 1},
    Keyword{"sumElim", Kind::SumElim, 4},   Keyword{"sumElimS", Kind::SumElimS, 4},
    Keyword{"J", Kind::IdElim, 5},          Keyword{"Js", Kind::IdElimS, 5},
    Keyword{"Ks", Kind::UipS, 2},           Keyword{"fst", Kind::Fst, 1},
    Keyword{"snd", Kind::Snd, 1},           Keyword{"Id", Kind::Id, 3},
    Keyword{"IdS", Kind::IdS, 3},
};

struct Constant {
  std::string_view word;
  Kind kind;
};

constexpr std::array kConstants = {
    Constant{"Nat", Kind::Nat},     Constant{"NatS", Kind::NatS},
    Constant{"Unit", Kind::Unit},   Constant{"Empty", Kind::Empty},
    Constant{"EmptyS", Kind::EmptyS}, Constant{"star", Kind::Star},
    Constant{"refl", Kind::Refl},   Constant{"refls", Kind::ReflS},
};

const Keyword* find_prefix(std::string_view w) {
  for (const auto& k : kPrefix)
    if (k.word == w) return &k;
  return nullptr;
}

const Constant* find_constant(std::string_view w) {
  for (const auto& c : kConstants)
    if (c.word == w) return &c;
  return nullptr;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::shared_ptr<const std::string> file,
         const NameSet& globals)
      : toks_(std::move(toks)), file_(std::move(file)), globals_(globals) {}

  void set_scope(std::vector<std::string> scope) { scope_ = std::move(scope); }

  TermPtr whole_term() {
    TermPtr t = term();
    expect(Tok::End);
    return t;
  }

  Module module(const std::string& path) {
    Module m;
    m.path = path;
    while (cur().kind != Tok::End) m.decls.push_back(declaration(true));
    return m;
  }

 private:
  // ---- token helpers -------------------------------------------------------
  const Token& cur() const { return toks_[pos_]; }
  const Token& at(std::size_t p) const {
    return toks_[std::min(p, toks_.size() - 1)];
  }
  bool is(Tok k) const { return cur().kind == k; }
  bool is_word(std::string_view w) const {
    return cur().kind == Tok::Ident && cur().text == w;
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  SourceSpan span_of(const Token& t) const {
    return {file_, t.line, t.col, t.end_line, t.end_col};
  }
  SourceSpan span_from(std::size_t start) const {
    const Token& a = toks_[start];
    const Token& b = toks_[pos_ > start ? pos_ - 1 : start];
    return {file_, a.line, a.col, b.end_line, b.end_col};
  }

  [[noreturn]] void error_here(const std::string& expected) {
    std::string got = cur().kind == Tok::Ident || cur().kind == Tok::Pragma
                          ? "'" + cur().text + "'"
                          : tok_name(cur().kind);
    fail(DiagCode::SyntaxError, span_of(cur()),
         "expected " + expected + ", found " + got);
  }

  const Token& expect(Tok k) {
    if (!is(k)) error_here(tok_name(k));
    return take();
  }

  TermPtr node(Kind k, std::vector<TermPtr> kids, std::size_t start) {
    return tm::make(k, std::move(kids), span_from(start));
  }

  TermPtr with_span(TermPtr t, std::size_t start) {
    auto copy = std::make_shared<Term>(*t);
    copy->span = span_from(start);
    return copy;
  }

  std::string binder_name() {
    if (!is(Tok::Ident)) error_here("a binder name");
    if (is_reserved(cur().text)) error_here("a binder name (not a keyword)");
    return take().text;
  }

  // ---- declarations --------------------------------------------------------
  Declaration declaration(bool top_level) {
    std::size_t start = pos_;
    Declaration d;
    if (is_word("def")) {
      take();
      d.tag = Declaration::Tag::Definition;
      d.name = binder_name();
      if (is(Tok::Colon)) {
        take();
        d.type = term();
      }
      expect(Tok::Define);
      d.body = term();
    } else if (is_word("axiom")) {
      take();
      d.tag = Declaration::Tag::Axiom;
      d.name = binder_name();
      expect(Tok::Colon);
      d.type = term();
    } else if (is(Tok::Pragma)) {
      d.tag = Declaration::Tag::Pragma;
      pragma(d.pragma);
    } else {
      error_here("'def', 'axiom' or a pragma");
    }
    d.span = span_from(start);
    if (top_level && d.tag != Declaration::Tag::Pragma)
      module_names_.insert(d.name);
    return d;
  }

  void pragma(Pragma& p) {
    std::string text = take().text;
    if (text == "check") {
      p.kind = PragmaKind::Check;
      TermPtr t = term();
      expect(Tok::Colon);
      p.terms = {t, term()};
    } else if (text == "infer") {
      p.kind = PragmaKind::Infer;
      p.terms = {term()};
    } else if (text == "normalize") {
      p.kind = PragmaKind::Normalize;
      p.terms = {term()};
    } else if (text == "conv") {
      p.kind = PragmaKind::Conv;
      TermPtr a = term();
      expect(Tok::Tilde);
      TermPtr b = term();
      expect(Tok::Colon);
      p.terms = {a, b, term()};
    } else if (text.rfind("fail", 0) == 0) {
      p.kind = PragmaKind::Fail;
      if (text.size() > 4) {
        if (text[4] != '[' || text.back() != ']')
          fail(DiagCode::SyntaxError, span_of(at(pos_ - 1)),
               "malformed pragma '#" + text + "'");
        std::string code = text.substr(5, text.size() - 6);
        if (!code_from_name(code))
          fail(DiagCode::SyntaxError, span_of(at(pos_ - 1)),
               "unknown diagnostic code '" + code + "'");
        p.expected_code = code;
      }
      std::size_t resume = pos_;
      std::size_t scope_size = scope_.size();
      try {
        p.wrapped = std::make_shared<Declaration>(declaration(false));
      } catch (const CheckError& e) {
        p.parse_failure = std::make_shared<Diagnostic>(e.diagnostic());
        scope_.resize(scope_size);
        pos_ = std::max(pos_, resume + 1);
        resync();
      }
    } else {
      fail(DiagCode::SyntaxError, span_of(at(pos_ - 1)),
           "unknown pragma '#" + text + "'");
    }
  }

  // Skip to the next top-level item: `def`, `axiom` or a pragma in column 1.
  void resync() {
    while (!is(Tok::End)) {
      bool top = cur().col == 1 &&
                 (is(Tok::Pragma) || is_word("def") || is_word("axiom"));
      if (top) return;
      take();
    }
  }

  // ---- terms ---------------------------------------------------------------
  TermPtr term() {
    if (is(Tok::Lambda)) return lambda();
    return arrow();
  }

  TermPtr lambda() {
    std::size_t start = pos_;
    take();
    std::size_t scope_size = scope_.size();
    std::vector<std::pair<std::string, TermPtr>> binders;
    while (!is(Tok::Dot)) {
      if (is(Tok::LParen)) {
        auto group = binder_group();
        for (auto& b : group) binders.push_back(std::move(b));
      } else {
        std::string n = binder_name();
        scope_.push_back(n);
        binders.emplace_back(n, nullptr);
      }
    }
    if (binders.empty()) error_here("a binder");
    take();
    TermPtr body = term();
    scope_.resize(scope_size);
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = tm::lam(it->first, body, it->second);
      body = with_span(body, start);
    }
    return body;
  }

  bool group_ahead(std::size_t p) const {
    if (at(p).kind != Tok::LParen) return false;
    std::size_t q = p + 1;
    if (at(q).kind != Tok::Ident) return false;
    while (at(q).kind == Tok::Ident) ++q;
    return at(q).kind == Tok::Colon;
  }

  // `(x y : A)`; pushes the names and returns each binder's type at the
  // depth where that binder is introduced.
  std::vector<std::pair<std::string, TermPtr>> binder_group() {
    expect(Tok::LParen);
    std::vector<std::string> names;
    while (is(Tok::Ident)) names.push_back(binder_name());
    expect(Tok::Colon);
    TermPtr type = term();
    expect(Tok::RParen);
    std::vector<std::pair<std::string, TermPtr>> out;
    for (std::size_t j = 0; j < names.size(); ++j) {
      out.emplace_back(names[j], shift(type, static_cast<long>(j)));
      scope_.push_back(names[j]);
    }
    return out;
  }

  // Telescope followed by `sep`; restores state and returns false otherwise.
  bool telescope(Tok sep, std::vector<std::pair<std::string, TermPtr>>& out) {
    if (!group_ahead(pos_)) return false;
    std::size_t save = pos_;
    std::size_t scope_size = scope_.size();
    try {
      while (group_ahead(pos_)) {
        auto g = binder_group();
        for (auto& b : g) out.push_back(std::move(b));
      }
    } catch (const CheckError&) {
      pos_ = save;
      scope_.resize(scope_size);
      out.clear();
      return false;
    }
    if (is(sep)) return true;
    pos_ = save;
    scope_.resize(scope_size);
    out.clear();
    return false;
  }

  TermPtr close_binders(Kind k,
                        std::vector<std::pair<std::string, TermPtr>>& binders,
                        TermPtr body, std::size_t start) {
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = k == Kind::Pi ? tm::pi(it->first, it->second, body)
                           : tm::sigma(it->first, it->second, body);
      body = with_span(body, start);
    }
    scope_.resize(scope_.size() - binders.size());
    return body;
  }

  TermPtr arrow() {
    std::size_t start = pos_;
    std::vector<std::pair<std::string, TermPtr>> binders;
    if (telescope(Tok::Arrow, binders)) {
      take();
      TermPtr body = term();
      return close_binders(Kind::Pi, binders, body, start);
    }
    TermPtr lhs = product();
    if (!is(Tok::Arrow)) return lhs;
    take();
    scope_.push_back("_");
    TermPtr rhs = term();
    scope_.pop_back();
    return with_span(tm::pi("_", lhs, rhs), start);
  }

  TermPtr product() {
    std::size_t start = pos_;
    std::vector<std::pair<std::string, TermPtr>> binders;
    if (telescope(Tok::Times, binders)) {
      take();
      TermPtr body = product();
      return close_binders(Kind::Sigma, binders, body, start);
    }
    TermPtr lhs = sum();
    if (!is(Tok::Times)) return lhs;
    take();
    scope_.push_back("_");
    TermPtr rhs = product();
    scope_.pop_back();
    return with_span(tm::sigma("_", lhs, rhs), start);
  }

  TermPtr sum() {
    std::size_t start = pos_;
    TermPtr lhs = equality();
    if (!is(Tok::Plus) && !is(Tok::PlusS)) return lhs;
    Kind k = take().kind == Tok::Plus ? Kind::Sum : Kind::SumS;
    TermPtr rhs = sum();
    return node(k, {lhs, rhs}, start);
  }

  TermPtr equality() {
    std::size_t start = pos_;
    TermPtr lhs = application();
    if (!is(Tok::Eq) && !is(Tok::EqS)) return lhs;
    Kind k = take().kind == Tok::Eq ? Kind::Id : Kind::IdS;
    TermPtr rhs = application();
    return node(k, {nullptr, lhs, rhs}, start);
  }

  bool atom_ahead() const {
    switch (cur().kind) {
      case Tok::Ident:
        return cur().text != "def" && cur().text != "axiom";
      case Tok::Num:
      case Tok::NumS:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  TermPtr application() {
    std::size_t start = pos_;
    TermPtr head;
    if (is(Tok::Ident) && find_prefix(cur().text)) {
      const Keyword* kw = find_prefix(take().text);
      std::vector<TermPtr> args;
      for (int i = 0; i < kw->arity; ++i) {
        if (!atom_ahead())
          error_here("argument " + std::to_string(i + 1) + " of '" +
                     std::string(kw->word) + "' (takes " +
                     std::to_string(kw->arity) + ")");
        args.push_back(atom());
      }
      head = node(kw->kind, std::move(args), start);
    } else {
      head = atom();
    }
    while (atom_ahead()) {
      TermPtr arg = atom();
      head = node(Kind::App, {head, arg}, start);
    }
    return head;
  }

  TermPtr resolve(const Token& tok) {
    for (std::size_t i = scope_.size(); i-- > 0;) {
      if (scope_[i] == tok.text && scope_[i] != "_") {
        auto v = tm::var(scope_.size() - 1 - i, tok.text);
        auto copy = std::make_shared<Term>(*v);
        copy->span = span_of(tok);
        return copy;
      }
    }
    if (globals_.count(tok.text) || module_names_.count(tok.text)) {
      auto c = std::make_shared<Term>(*tm::constant(tok.text));
      c->span = span_of(tok);
      return c;
    }
    fail(DiagCode::UnboundVariable, span_of(tok),
         "unbound identifier '" + tok.text + "'");
  }

  TermPtr atom() {
    std::size_t start = pos_;
    switch (cur().kind) {
      case Tok::Num:
        return with_span(tm::numeral(take().number, false), start);
      case Tok::NumS:
        return with_span(tm::numeral(take().number, true), start);
      case Tok::LParen:
        return parenthesized();
      case Tok::Ident:
        break;
      default:
        error_here("a term");
    }
    const std::string& w = cur().text;
    if (w == "U" || w == "Us") {
      bool strict = w == "Us";
      take();
      if (!is(Tok::Num)) error_here("a universe level");
      unsigned level = static_cast<unsigned>(take().number);
      return with_span(
          tm::univ(strict ? Sort::strict(level) : Sort::fibrant(level)), start);
    }
    if (const Constant* c = find_constant(w)) {
      take();
      return node(c->kind, {}, start);
    }
    if (find_prefix(w))
      error_here("an argument ('" + w + "' needs parentheses here)");
    if (is_reserved(w)) error_here("a term");
    return resolve(take());
  }

  TermPtr parenthesized() {
    std::size_t start = pos_;
    take();
    TermPtr t = term();
    if (is(Tok::Colon)) {
      take();
      TermPtr type = term();
      expect(Tok::RParen);
      return node(Kind::Ann, {t, type}, start);
    }
    if (is(Tok::Comma)) {
      std::vector<TermPtr> items{t};
      while (is(Tok::Comma)) {
        take();
        items.push_back(term());
      }
      expect(Tok::RParen);
      TermPtr acc = items.back();
      for (std::size_t i = items.size() - 1; i-- > 0;)
        acc = node(Kind::Pair, {items[i], acc}, start);
      return acc;
    }
    expect(Tok::RParen);
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::shared_ptr<const std::string> file_;
  const NameSet& globals_;
  NameSet module_names_;
  std::vector<std::string> scope_;
};

}  // namespace

bool is_reserved(std::string_view w) {
  static constexpr std::array kWords = {
      std::string_view{"def"}, std::string_view{"axiom"},
      std::string_view{"U"}, std::string_view{"Us"}};
  if (std::find(kWords.begin(), kWords.end(), w) != kWords.end()) return true;
  return find_prefix(w) != nullptr || find_constant(w) != nullptr;
}

Module parse_module(std::string_view text, const std::string& path,
                    const NameSet& globals) {
  auto file = std::make_shared<const std::string>(path);
  Parser p(lex(text, file), file, globals);
  return p.module(path);
}

TermPtr parse_term(std::string_view text, const std::vector<std::string>& scope,
                   const NameSet& globals) {
  auto file = std::make_shared<const std::string>("<term>");
  Parser p(lex(text, file), file, globals);
  p.set_scope(scope);
  return p.whole_term();
}

}  // namespace tltt
