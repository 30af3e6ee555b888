#pragma once

#include <string>
#include <vector>

#include "tltt/syntax.hpp"

namespace tltt {

/// Renders a term in concrete syntax. `names` gives display names for the
/// free variables, outermost first. Bound names are taken from binder hints
/// and freshened so the output reparses to an alpha-equal term.
std::string pretty_print(const TermPtr& t,
                         const std::vector<std::string>& names = {});

}  // namespace tltt
