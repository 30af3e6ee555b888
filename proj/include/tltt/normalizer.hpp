#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tltt/syntax.hpp"
#include "tltt/value.hpp"

namespace tltt {

/// A checked global: definitions carry a body, axioms do not.
struct GlobalEntry {
  std::string name;
  TermPtr type_term;
  ValuePtr type;
  TermPtr body_term;  // null for axioms
  ValuePtr body;      // evaluated once when the entry is added
  bool is_axiom = false;
  SourceSpan span;
};

class Signature {
 public:
  const GlobalEntry* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  void add(GlobalEntry e);
  const std::vector<std::string>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

 private:
  std::unordered_map<std::string, GlobalEntry> entries_;
  std::vector<std::string> order_;
};

struct EvalOptions {
  /// Identify all inhabitants of strict equality types in conversion.
  bool strict_proof_irrelevance = false;
  /// Maximum number of definition unfoldings; unlimited when empty.
  std::optional<std::size_t> unfold_budget;
};

/// Evaluation, read-back and conversion over a frozen signature.
class Normalizer {
 public:
  explicit Normalizer(const Signature& sig, EvalOptions opts = {})
      : sig_(sig), opts_(opts) {}

  ValuePtr eval(const Env& env, const TermPtr& t);
  ValuePtr apply(const ValuePtr& fn, const ValuePtr& arg);
  ValuePtr inst(const Closure& c, const ValuePtr& arg);
  ValuePtr fst(const ValuePtr& p);
  ValuePtr snd(const ValuePtr& p);

  /// Reads a value back as a beta/iota-normal term at binding depth `depth`.
  TermPtr quote(std::size_t depth, const ValuePtr& v);

  /// Definitional equality of two inhabitants of `type`, with eta for
  /// Pi, Sigma and Unit. Both values live at binding depth `depth`.
  bool conv(std::size_t depth, const ValuePtr& a, const ValuePtr& b,
            const ValuePtr& type);

  /// Type-free comparison, used for types themselves and inside spines.
  bool conv_untyped(std::size_t depth, const ValuePtr& a, const ValuePtr& b);

  std::size_t unfold_count() const { return unfolds_; }
  const EvalOptions& options() const { return opts_; }

 private:
  ValuePtr nat_elim(Kind k, std::vector<ValuePtr> args, const ValuePtr& n);
  ValuePtr sum_elim(Kind k, std::vector<ValuePtr> args, const ValuePtr& s);
  ValuePtr id_elim(Kind k, std::vector<ValuePtr> args, const ValuePtr& p);
  TermPtr quote_neutral(std::size_t depth, const Value& n);
  bool conv_heads(std::size_t depth, const Head& a, const Head& b);

  const Signature& sig_;
  EvalOptions opts_;
  std::size_t unfolds_ = 0;
};

}  // namespace tltt
