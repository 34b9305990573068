#ifndef GROUPDEF_SRC_WORD_PARSER_HPP
#define GROUPDEF_SRC_WORD_PARSER_HPP

// Internal hook so the formula parser can parse embedded word expressions on
// its own token stream.

#include "groupdef/words.hpp"
#include "lexer.hpp"

namespace groupdef::detail {

// True when the next token can begin a word atom.
bool starts_word(const Lexer& lx);

// Parses a full word expression (products, powers, conjugation, commutator
// brackets) starting at the lexer's current position.
Word parse_word_expr(Lexer& lx);

} // namespace groupdef::detail

#endif
