#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "nil2/coords.hpp"

// Words over named generators:
//   WORD := term ('*' term)*
//   term := atom ('^' signed-integer)?
//   atom := generator | '[' WORD ',' WORD ']' | '(' WORD ')' | '1'
// '#' starts a comment running to end of line.

namespace nil2 {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return msg_; }

 private:
  std::string msg_;
  std::size_t line_, column_;
};

struct Word {
  enum class Kind { Identity, Generator, Product, Power, Commutator };
  Kind kind = Kind::Identity;
  std::size_t gen = 0;
  Integer exponent;
  std::vector<Word> parts;

  static Word identity() { return {}; }
  static Word generator(std::size_t i);
  static Word product(std::vector<Word> factors);
  static Word power(Word base, Integer exponent);
  static Word commutator(Word a, Word b);
};

/// Character cursor with line/column tracking, shared by the word and the
/// group-file parsers.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space();
  bool at_end();
  /// Next non-space character, or '\0' at end.
  char peek();
  bool consume(char c);
  void expect(char c);
  bool consume_keyword(std::string_view kw);
  bool peek_identifier();
  /// [A-Za-z_][A-Za-z0-9_]*, plus '.' when allow_dots.
  std::string identifier(bool allow_dots = false);
  Integer integer();

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  void advance();
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
};

Word parse_word(Scanner& s, const std::vector<std::string>& names);
/// Whole-string parse.
Word parse_word(std::string_view text, const std::vector<std::string>& names);
/// Words separated by `sep` (e.g. "x^2; y^2"). Empty input gives no words.
std::vector<Word> parse_word_list(std::string_view text,
                                  const std::vector<std::string>& names,
                                  char sep = ';');

std::string format_word(const Word& w, const std::vector<std::string>& names);
FreeCoords evaluate(const Word& w, std::size_t rank);
/// Normal-form word x_1^{e_1}...x_k^{e_k} prod [x_i,x_j]^{f_ij}.
Word coords_word(const FreeCoords& c);
inline std::string format_coords(const FreeCoords& c,
                                 const std::vector<std::string>& names) {
  return format_word(coords_word(c), names);
}

}  // namespace nil2
