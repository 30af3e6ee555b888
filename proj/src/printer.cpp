#include "tltt/printer.hpp"

#include <unordered_set>

#include "tltt/parser.hpp"

namespace tltt {

namespace {

// Binding strength, loosest first; a node is parenthesized when printed in
// a slot that demands a tighter level.
enum Level : int { kTop = 0, kArrow, kProd, kSum, kEq, kApp, kAtom };

const char* prefix_word(Kind k) {
  switch (k) {
    case Kind::Succ: return "succ";
    case Kind::SuccS: return "succs";
    case Kind::NatElim: return "natElim";
    case Kind::NatElimS: return "natElimS";
    case Kind::EmptyElim: return "emptyElim";
    case Kind::EmptyElimS: return "emptyElimS";
    case Kind::Inl: return "inl";
    case Kind::Inr: return "inr";
    case Kind::InlS: return "inls";
    case Kind::InrS: return "inrs";
    case Kind::SumElim: return "sumElim";
    case Kind::SumElimS: return "sumElimS";
    case Kind::IdElim: return "J";
    case Kind::IdElimS: return "Js";
    case Kind::UipS: return "Ks";
    case Kind::Fst: return "fst";
    case Kind::Snd: return "snd";
    case Kind::Id: return "Id";
    case Kind::IdS: return "IdS";
    default: return nullptr;
  }
}

void collect_constants(const TermPtr& t, std::unordered_set<std::string>& out) {
  if (!t) return;
  if (t->kind == Kind::Const) out.insert(t->name);
  for (const auto& k : t->kids) collect_constants(k, out);
}

// True when the printed form of t starts with an annotation `(u : A)`,
// which would read back as a binder group in front of `->` or `*`.
bool starts_with_annotation(const TermPtr& t) {
  switch (t->kind) {
    case Kind::Ann:
      return true;
    case Kind::Pi:
    case Kind::Sigma:
      return !occurs(t->kids[1], 0) && starts_with_annotation(t->kids[0]);
    case Kind::App:
    case Kind::Sum:
    case Kind::SumS:
      return starts_with_annotation(t->kids[0]);
    case Kind::Id:
    case Kind::IdS:
      return !t->kids[0] && starts_with_annotation(t->kids[1]);
    default:
      return false;
  }
}

class Printer {
 public:
  Printer(const TermPtr& root, std::vector<std::string> names)
      : scope_(std::move(names)) {
    collect_constants(root, globals_);
  }

  std::string print(const TermPtr& t, int prec) {
    std::string out;
    int level = emit(t, out);
    if (level < prec) return "(" + out + ")";
    return out;
  }

 private:
  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() || hint == "_" ? "x" : hint;
    auto taken = [&](const std::string& n) {
      if (is_reserved(n) || globals_.count(n)) return true;
      for (const auto& s : scope_)
        if (s == n) return true;
      return false;
    };
    if (!taken(base)) return base;
    for (unsigned i = 1;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!taken(cand)) return cand;
    }
  }

  std::string bind(const TermPtr& body_owner, const std::string& hint) {
    return occurs(body_owner, 0) ? fresh(hint) : std::string("_");
  }

  std::string under(const std::string& name, const TermPtr& body, int prec) {
    scope_.push_back(name);
    std::string s = print(body, prec);
    scope_.pop_back();
    return s;
  }

  std::string domain(const TermPtr& t, int prec) {
    if (starts_with_annotation(t)) return "(" + print(t, kTop) + ")";
    return print(t, prec);
  }

  static bool numeral_chain(const TermPtr& t, Kind succ, Kind zero,
                            unsigned& n) {
    n = 0;
    const Term* p = t.get();
    while (p->kind == succ) {
      ++n;
      p = p->kids[0].get();
    }
    return p->kind == zero;
  }

  int emit(const TermPtr& t, std::string& out) {
    switch (t->kind) {
      case Kind::Var: {
        if (t->index < scope_.size()) {
          out = scope_[scope_.size() - 1 - t->index];
        } else {
          out = "#" + std::to_string(t->index);
        }
        return kAtom;
      }
      case Kind::Const:
        out = t->name;
        return kAtom;
      case Kind::Univ:
        out = (t->sort.is_fibrant() ? "U " : "Us ") +
              std::to_string(t->sort.level);
        return kApp;
      case Kind::Unit: out = "Unit"; return kAtom;
      case Kind::Star: out = "star"; return kAtom;
      case Kind::Nat: out = "Nat"; return kAtom;
      case Kind::NatS: out = "NatS"; return kAtom;
      case Kind::Empty: out = "Empty"; return kAtom;
      case Kind::EmptyS: out = "EmptyS"; return kAtom;
      case Kind::Refl: out = "refl"; return kAtom;
      case Kind::ReflS: out = "refls"; return kAtom;
      case Kind::Zero: out = "0"; return kAtom;
      case Kind::ZeroS: out = "0s"; return kAtom;
      case Kind::Lam: {
        std::string name = bind(t->kids[1], t->name);
        if (t->kids[0]) {
          out = "\\(" + name + " : " + print(t->kids[0], kTop) + "). ";
          out += under(name, t->kids[1], kTop);
        } else {
          out = "\\" + name + ". " + under(name, t->kids[1], kTop);
        }
        return kTop;
      }
      case Kind::Pi: {
        if (occurs(t->kids[1], 0)) {
          std::string name = fresh(t->name);
          out = "(" + name + " : " + print(t->kids[0], kTop) + ") -> " +
                under(name, t->kids[1], kTop);
        } else {
          out = domain(t->kids[0], kProd) + " -> " + under("_", t->kids[1], kTop);
        }
        return kArrow;
      }
      case Kind::Sigma: {
        if (occurs(t->kids[1], 0)) {
          std::string name = fresh(t->name);
          out = "(" + name + " : " + print(t->kids[0], kTop) + ") * " +
                under(name, t->kids[1], kProd);
        } else {
          out = domain(t->kids[0], kSum) + " * " + under("_", t->kids[1], kProd);
        }
        return kProd;
      }
      case Kind::Sum:
      case Kind::SumS:
        out = print(t->kids[0], kEq) +
              (t->kind == Kind::Sum ? " + " : " +s ") + print(t->kids[1], kSum);
        return kSum;
      case Kind::Id:
      case Kind::IdS:
        if (!t->kids[0]) {
          out = print(t->kids[1], kApp) +
                (t->kind == Kind::Id ? " = " : " =s ") + print(t->kids[2], kApp);
          return kEq;
        }
        break;
      case Kind::Succ:
      case Kind::SuccS: {
        unsigned n = 0;
        bool strict = t->kind == Kind::SuccS;
        if (numeral_chain(t, t->kind, strict ? Kind::ZeroS : Kind::Zero, n)) {
          out = std::to_string(n) + (strict ? "s" : "");
          return kAtom;
        }
        break;
      }
      case Kind::App:
        out = print(t->kids[0], kApp) + " " + print(t->kids[1], kAtom);
        return kApp;
      case Kind::Pair: {
        out = "(" + print(t->kids[0], kTop);
        TermPtr rest = t->kids[1];
        while (rest->kind == Kind::Pair) {
          out += ", " + print(rest->kids[0], kTop);
          rest = rest->kids[1];
        }
        out += ", " + print(rest, kTop) + ")";
        return kAtom;
      }
      case Kind::Ann:
        out = "(" + print(t->kids[0], kTop) + " : " + print(t->kids[1], kTop) +
              ")";
        return kAtom;
      default:
        break;
    }
    const char* word = prefix_word(t->kind);
    out = word ? word : kind_name(t->kind);
    for (const auto& k : t->kids) out += " " + print(k, kAtom);
    return kApp;
  }

  std::vector<std::string> scope_;
  std::unordered_set<std::string> globals_;
};

}  // namespace

std::string pretty_print(const TermPtr& t,
                         const std::vector<std::string>& names) {
  if (!t) return "<null>";
  Printer p(t, names);
  return p.print(t, kTop);
}

}  // namespace tltt
