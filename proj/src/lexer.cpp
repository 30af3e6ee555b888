#include "tltt/lexer.hpp"

#include <cctype>

#include "tltt/diagnostic.hpp"

namespace tltt {

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Num: return "numeral";
    case Tok::NumS: return "strict numeral";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Define: return "':='";
    case Tok::Arrow: return "'->'";
    case Tok::Times: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::PlusS: return "'+s'";
    case Tok::Eq: return "'='";
    case Tok::EqS: return "'=s'";
    case Tok::Lambda: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::Tilde: return "'~'";
    case Tok::Pragma: return "pragma";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  Lexer(std::string_view text, std::shared_ptr<const std::string> file)
      : src_(text), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= src_.size()) {
        t.kind = Tok::End;
        t.end_line = line_;
        t.end_col = col_;
        out.push_back(t);
        return out;
      }
      scan(t);
      t.end_line = line_;
      t.end_col = col_;
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) {
    SourceSpan s{file_, line_, col_, line_, col_ + 1};
    fail(DiagCode::SyntaxError, s, msg);
  }

  void skip_space() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '-' && peek(1) == '-') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '{' && peek(1) == '-') {
        int depth = 0;
        do {
          if (pos_ >= src_.size()) error("unterminated block comment");
          if (peek() == '{' && peek(1) == '-') {
            ++depth;
            advance();
            advance();
          } else if (peek() == '-' && peek(1) == '}') {
            --depth;
            advance();
            advance();
          } else {
            advance();
          }
        } while (depth > 0);
      } else {
        return;
      }
    }
  }

  // `+s`, `=s`, `3s`: an `s` suffix only when not followed by identifier text.
  bool strict_suffix() const { return peek() == 's' && !ident_char(peek(1)); }

  void scan(Token& t) {
    char c = peek();
    if (ident_start(c)) {
      t.kind = Tok::Ident;
      while (ident_char(peek())) {
        t.text += peek();
        advance();
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.text += peek();
        advance();
      }
      if (t.text.size() > 6) error("numeral too large");
      t.number = std::stoul(t.text);
      t.kind = Tok::Num;
      if (strict_suffix()) {
        advance();
        t.kind = Tok::NumS;
      } else if (ident_char(peek())) {
        error("malformed numeral");
      }
      return;
    }
    advance();
    switch (c) {
      case '(': t.kind = Tok::LParen; return;
      case ')': t.kind = Tok::RParen; return;
      case ',': t.kind = Tok::Comma; return;
      case '.': t.kind = Tok::Dot; return;
      case '~': t.kind = Tok::Tilde; return;
      case '*': t.kind = Tok::Times; return;
      case '\\': t.kind = Tok::Lambda; return;
      case ':':
        if (peek() == '=') {
          advance();
          t.kind = Tok::Define;
        } else {
          t.kind = Tok::Colon;
        }
        return;
      case '-':
        if (peek() == '>') {
          advance();
          t.kind = Tok::Arrow;
          return;
        }
        error("unexpected '-'");
      case '+':
        t.kind = Tok::Plus;
        if (strict_suffix()) {
          advance();
          t.kind = Tok::PlusS;
        }
        return;
      case '=':
        t.kind = Tok::Eq;
        if (strict_suffix()) {
          advance();
          t.kind = Tok::EqS;
        }
        return;
      case '#': {
        t.kind = Tok::Pragma;
        while (ident_char(peek())) {
          t.text += peek();
          advance();
        }
        if (t.text.empty()) error("expected pragma name after '#'");
        if (peek() == '[') {
          while (pos_ < src_.size() && peek() != ']' && peek() != '\n') {
            t.text += peek();
            advance();
          }
          if (peek() != ']') error("unterminated pragma argument");
          t.text += ']';
          advance();
        }
        return;
      }
      default:
        break;
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::shared_ptr<const std::string> file_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace

std::vector<Token> lex(std::string_view text,
                       std::shared_ptr<const std::string> file) {
  return Lexer(text, std::move(file)).run();
}

}  // namespace tltt
