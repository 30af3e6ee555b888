#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tltt/diagnostic.hpp"
#include "tltt/normalizer.hpp"
#include "tltt/syntax.hpp"
#include "tltt/value.hpp"

namespace tltt {

struct CheckMode {
  /// Identify the strict and fibrant copies of Nat, Empty and +.
  bool strong = false;
  bool strict_proof_irrelevance = false;
  std::optional<std::size_t> unfold_budget;
};

struct Binding {
  std::string name;
  ValuePtr type;
};

/// Local telescope plus the shared, growing signature of checked globals.
class TypingContext {
 public:
  explicit TypingContext(std::shared_ptr<Signature> sig = nullptr,
                         CheckMode mode = {});

  TypingContext extend(std::string name, ValuePtr type) const;

  std::size_t depth() const { return bindings_.size(); }
  const Env& env() const { return env_; }
  /// Binding for de Bruijn index `index`.
  const Binding& binding(std::size_t index) const;
  /// Display names, outermost first.
  std::vector<std::string> names() const;

  Signature& signature() const { return *sig_; }
  const std::shared_ptr<Signature>& signature_ptr() const { return sig_; }
  const CheckMode& mode() const { return mode_; }
  EvalOptions eval_options() const;

 private:
  std::shared_ptr<Signature> sig_;
  CheckMode mode_;
  std::vector<Binding> bindings_;
  Env env_;
};

struct Inferred {
  TermPtr term;  // elaborated: implicit equality carriers filled, Ann removed
  ValuePtr type;
};

Inferred infer(const TypingContext& ctx, const TermPtr& t);
TermPtr check(const TypingContext& ctx, const TermPtr& t, const ValuePtr& type);

/// Least sort of a type expression; fails if `t` is not a type.
Sort classify(const TypingContext& ctx, const TermPtr& t);

/// Rejects fibrant eliminators whose motive lands in a pretype universe.
/// `telescope` lists the motive's domains, each valid in the context
/// extended by the previous ones.
void check_motive_fibrancy(const TypingContext& ctx, Kind eliminator,
                           const TermPtr& motive,
                           const std::vector<TermPtr>& telescope);

/// Beta/iota normal form of a well-typed term.
TermPtr normalize(const TypingContext& ctx, const TermPtr& t);

/// Definitional equality of two well-typed terms of type `type`.
bool convertible(const TypingContext& ctx, const TermPtr& a, const TermPtr& b,
                 const TermPtr& type);

struct DeclResult {
  /// Text produced by #infer / #normalize / #fail.
  std::optional<std::string> output;
};

/// Checks one top-level item and, for definitions and axioms, adds it to
/// the signature. Pragmas leave the signature unchanged.
TypingContext check_declaration(const TypingContext& ctx, const Declaration& d,
                                DeclResult* result = nullptr);

}  // namespace tltt
