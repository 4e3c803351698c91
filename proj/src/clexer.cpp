#include "vulnscan/clexer.hpp"

#include <cctype>

namespace vulnscan::lex {
namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) != 0 || c == '_'; }
bool ident_cont(unsigned char c) { return std::isalnum(c) != 0 || c == '_'; }
bool hspace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\v' || c == '\f';
}

// Consumes past a backslash-newline pair if one starts at i. Returns the
// new position, or i if there is none.
std::size_t skip_splice(std::string_view s, std::size_t i) {
  if (i + 1 < s.size() && s[i] == '\\' &&
      (s[i + 1] == '\n' || s[i + 1] == '\r')) {
    std::size_t j = i + 2;
    if (s[i + 1] == '\r' && j < s.size() && s[j] == '\n') ++j;
    return j;
  }
  return i;
}

std::size_t quoted_end(std::string_view s, std::size_t i, char quote) {
  ++i;  // opening quote
  while (i < s.size()) {
    char c = s[i];
    if (c == '\\') {
      std::size_t j = skip_splice(s, i);
      if (j != i) {
        i = j;
        continue;
      }
      i += 2;  // escape sequence, skip the escaped char
      continue;
    }
    if (c == quote) return i + 1;
    if (c == '\n' || c == '\r') return i;  // unterminated: stop at the newline
    ++i;
  }
  return i;
}

}  // namespace

std::vector<Lexeme> lex(std::string_view s) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    const std::size_t start = i;
    const unsigned char c = static_cast<unsigned char>(s[i]);

    if (c == '\n') {
      out.push_back({Kind::Newline, start, i + 1});
      ++i;
      continue;
    }
    if (c == '\r') {
      std::size_t end = (i + 1 < n && s[i + 1] == '\n') ? i + 2 : i + 1;
      out.push_back({Kind::Newline, start, end});
      i = end;
      continue;
    }
    if (hspace(c)) {
      while (i < n && hspace(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Kind::Space, start, i});
      continue;
    }
    if (c == '/' && i + 1 < n && s[i + 1] == '/') {
      i += 2;
      while (i < n) {
        std::size_t j = skip_splice(s, i);
        if (j != i) {
          i = j;  // comment continues on the next physical line
          continue;
        }
        if (s[i] == '\n' || s[i] == '\r') break;
        ++i;
      }
      out.push_back({Kind::LineComment, start, i});
      continue;
    }
    if (c == '/' && i + 1 < n && s[i + 1] == '*') {
      i += 2;
      while (i < n && !(s[i] == '*' && i + 1 < n && s[i + 1] == '/')) ++i;
      i = (i < n) ? i + 2 : n;
      out.push_back({Kind::BlockComment, start, i});
      continue;
    }
    if (c == '"' || c == '\'') {
      i = quoted_end(s, i, static_cast<char>(c));
      out.push_back({c == '"' ? Kind::String : Kind::CharLit, start, i});
      continue;
    }
    if (ident_start(c)) {
      ++i;
      while (i < n && ident_cont(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Kind::Ident, start, i});
      continue;
    }
    if (std::isdigit(c) != 0 ||
        (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(s[i + 1])) != 0)) {
      ++i;
      while (i < n) {
        unsigned char d = static_cast<unsigned char>(s[i]);
        if (ident_cont(d) || d == '.') {
          ++i;
          continue;
        }
        // exponent sign
        if ((d == '+' || d == '-') && i > start) {
          unsigned char prev = static_cast<unsigned char>(s[i - 1]);
          if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
            ++i;
            continue;
          }
        }
        break;
      }
      out.push_back({Kind::Number, start, i});
      continue;
    }
    if (std::isprint(c) != 0) {
      out.push_back({Kind::Punct, start, i + 1});
      ++i;
      continue;
    }
    out.push_back({Kind::Other, start, i + 1});
    ++i;
  }
  return out;
}

}  // namespace vulnscan::lex
