#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tltt/syntax.hpp"

namespace tltt {

using NameSet = std::unordered_set<std::string>;

/// Parses a `.2lt` source file. Identifiers resolve to binders first, then
/// to names declared earlier in this file or listed in `globals`.
/// Throws CheckError (SyntaxError / UnboundVariable) on the first error
/// outside a `#fail` pragma; errors inside `#fail` are recorded on the pragma.
Module parse_module(std::string_view text, const std::string& path,
                    const NameSet& globals = {});

/// Parses one term. `scope` lists the names of free variables, outermost
/// first, so the last entry is Var 0.
TermPtr parse_term(std::string_view text,
                   const std::vector<std::string>& scope = {},
                   const NameSet& globals = {});

/// Words that cannot be used as binder or definition names.
bool is_reserved(std::string_view word);

}  // namespace tltt
