#ifndef GROUPDEF_SRC_LEXER_HPP
#define GROUPDEF_SRC_LEXER_HPP

// Internal tokenizer shared by the word, formula and boolean-combination
// parsers.  Pre-tokenizes the whole input so parsers can backtrack by saving
// and restoring an index.

#include <cctype>
#include <string>
#include <vector>

#include "groupdef/error.hpp"

namespace groupdef::detail {

struct Token {
  enum Kind { End, Ident, Number, Sym } kind = End;
  std::string text;      // identifier name or symbol spelling
  long long value = 0;   // for Number
  std::size_t pos = 0;   // byte offset in the source text
};

class Lexer {
public:
  explicit Lexer(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (std::isspace(c)) { ++i; continue; }
      Token t;
      t.pos = i;
      if (std::isalpha(c) || text[i] == '_') {
        std::size_t j = i;
        while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
        t.kind = Token::Ident;
        t.text = text.substr(i, j - i);
        i = j;
      } else if (std::isdigit(c)) {
        long long v = 0;
        std::size_t j = i;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
          if (v > 1000000000000000000LL / 10)
            throw ParseError("number too large", i);
          v = v * 10 + (text[j] - '0');
          ++j;
        }
        t.kind = Token::Number;
        t.value = v;
        t.text = text.substr(i, j - i);
        i = j;
      } else {
        t.kind = Token::Sym;
        if (text[i] == '-' && i + 1 < n && text[i + 1] == '>') {
          t.text = "->";
          i += 2;
        } else if (text[i] == '!' && i + 1 < n && text[i + 1] == '=') {
          t.text = "!=";
          i += 2;
        } else if (std::string("^*()[],:=&|!-+").find(text[i]) != std::string::npos) {
          t.text = std::string(1, text[i]);
          ++i;
        } else {
          throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
        }
      }
      tokens_.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::End;
    end.pos = n;
    tokens_.push_back(std::move(end));
  }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = idx_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
  }
  Token next() {
    Token t = peek();
    if (idx_ + 1 < tokens_.size()) ++idx_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::End; }
  bool is_sym(const char* s) const { return peek().kind == Token::Sym && peek().text == s; }
  bool eat_sym(const char* s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  void expect_sym(const char* s) {
    if (!eat_sym(s))
      throw ParseError(std::string("expected '") + s + "'", peek().pos);
  }

  std::size_t save() const { return idx_; }
  void restore(std::size_t s) { idx_ = s; }

private:
  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
};

} // namespace groupdef::detail

#endif
