#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tltt/syntax.hpp"

namespace tltt {

enum class Tok : std::uint8_t {
  Ident, Num, NumS,
  LParen, RParen, Comma, Colon, Define, Arrow, Times,
  Plus, PlusS, Eq, EqS, Lambda, Dot, Tilde,
  Pragma,  // text holds the directive name, e.g. "fail[NonFibrantMotive]"
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  unsigned long number = 0;
  int line = 1, col = 1, end_line = 1, end_col = 1;
};

const char* tok_name(Tok t);

/// Splits source text into tokens. Comments are `--` to end of line and
/// nestable `{- ... -}` blocks. Throws CheckError(SyntaxError).
std::vector<Token> lex(std::string_view text,
                       std::shared_ptr<const std::string> file);

}  // namespace tltt
