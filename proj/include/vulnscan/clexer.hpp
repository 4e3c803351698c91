#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace vulnscan::lex {

// A lossless C/C++ surface lexer: every byte of the input belongs to exactly
// one lexeme, in order. Comments, string literals and character literals are
// single lexemes, so downstream passes can treat their interiors as opaque.
// Backslash-newline continues line comments, strings and char literals.
enum class Kind {
  Ident,
  Number,
  String,
  CharLit,
  LineComment,   // "//" up to but not including the newline
  BlockComment,  // "/*" through "*/", or to end of input if unterminated
  Punct,         // single character
  Space,         // run of spaces/tabs/other non-newline whitespace
  Newline,       // "\n", "\r" or "\r\n"
  Other,         // any byte that fits nothing above
};

struct Lexeme {
  Kind kind;
  std::size_t begin;  // byte offset, [begin, end)
  std::size_t end;
};

std::vector<Lexeme> lex(std::string_view text);

inline std::string_view slice(std::string_view text, const Lexeme& l) {
  return text.substr(l.begin, l.end - l.begin);
}

inline bool is_significant(Kind k) {
  return k != Kind::Space && k != Kind::Newline && k != Kind::LineComment &&
         k != Kind::BlockComment;
}

}  // namespace vulnscan::lex
