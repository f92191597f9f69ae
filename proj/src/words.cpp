#include "nil2/words.hpp"

#include <cctype>

namespace nil2 {

ParseError::ParseError(const std::string& msg, std::size_t line,
                       std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + msg),
      msg_(msg),
      line_(line),
      column_(column) {}

Word Word::generator(std::size_t i) {
  Word w;
  w.kind = Kind::Generator;
  w.gen = i;
  return w;
}

Word Word::product(std::vector<Word> factors) {
  if (factors.empty()) return identity();
  if (factors.size() == 1) return std::move(factors[0]);
  Word w;
  w.kind = Kind::Product;
  w.parts = std::move(factors);
  return w;
}

Word Word::power(Word base, Integer exponent) {
  Word w;
  w.kind = Kind::Power;
  w.exponent = std::move(exponent);
  w.parts.push_back(std::move(base));
  return w;
}

Word Word::commutator(Word a, Word b) {
  Word w;
  w.kind = Kind::Commutator;
  w.parts.push_back(std::move(a));
  w.parts.push_back(std::move(b));
  return w;
}

namespace {
bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
}  // namespace

void Scanner::advance() {
  if (text_[pos_] == '\n') {
    ++line_;
    col_ = 1;
  } else {
    ++col_;
  }
  ++pos_;
}

void Scanner::skip_space() {
  while (pos_ < text_.size()) {
    const char c = text_[pos_];
    if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else {
      break;
    }
  }
}

bool Scanner::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char Scanner::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Scanner::consume(char c) {
  if (peek() != c || c == '\0') return false;
  advance();
  return true;
}

void Scanner::expect(char c) {
  if (!consume(c)) fail(std::string("expected '") + c + "'");
}

bool Scanner::consume_keyword(std::string_view kw) {
  skip_space();
  if (text_.substr(pos_, kw.size()) != kw) return false;
  const std::size_t end = pos_ + kw.size();
  if (ident_char(kw.back()) && end < text_.size() && ident_char(text_[end]))
    return false;
  for (std::size_t i = 0; i < kw.size(); ++i) advance();
  return true;
}

bool Scanner::peek_identifier() { return ident_start(peek()); }

std::string Scanner::identifier(bool allow_dots) {
  if (!peek_identifier()) fail("expected identifier");
  std::string out;
  while (pos_ < text_.size() &&
         (ident_char(text_[pos_]) || (allow_dots && text_[pos_] == '.'))) {
    out += text_[pos_];
    advance();
  }
  return out;
}

Integer Scanner::integer() {
  std::string digits;
  char c = peek();
  if (c == '-' || c == '+') {
    if (c == '-') digits += '-';
    advance();
  }
  if (pos_ >= text_.size() ||
      !std::isdigit(static_cast<unsigned char>(text_[pos_])))
    fail("expected integer");
  while (pos_ < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    digits += text_[pos_];
    advance();
  }
  return Integer(digits);
}

void Scanner::fail(const std::string& msg) const {
  throw ParseError(msg, line_, col_);
}

namespace {

Word parse_term(Scanner& s, const std::vector<std::string>& names) {
  Word atom;
  const char c = s.peek();
  if (s.consume('[')) {
    Word a = parse_word(s, names);
    s.expect(',');
    Word b = parse_word(s, names);
    s.expect(']');
    atom = Word::commutator(std::move(a), std::move(b));
  } else if (s.consume('(')) {
    atom = parse_word(s, names);
    s.expect(')');
  } else if (c == '1') {
    const std::size_t line = s.line(), col = s.column();
    if (s.integer() != 1) throw ParseError("expected '1'", line, col);
    atom = Word::identity();
  } else if (s.peek_identifier()) {
    const std::size_t line = s.line(), col = s.column();
    const std::string name = s.identifier();
    std::size_t i = 0;
    while (i < names.size() && names[i] != name) ++i;
    if (i == names.size())
      throw ParseError("unknown generator '" + name + "'", line, col);
    atom = Word::generator(i);
  } else {
    s.fail(c == '\0' ? std::string("unexpected end of word")
                     : std::string("unexpected character '") + c + "'");
  }
  if (s.consume('^')) atom = Word::power(std::move(atom), s.integer());
  return atom;
}

}  // namespace

Word parse_word(Scanner& s, const std::vector<std::string>& names) {
  std::vector<Word> factors;
  factors.push_back(parse_term(s, names));
  while (s.consume('*')) factors.push_back(parse_term(s, names));
  return Word::product(std::move(factors));
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Scanner s(text);
  Word w = parse_word(s, names);
  if (!s.at_end()) s.fail("trailing input after word");
  return w;
}

std::vector<Word> parse_word_list(std::string_view text,
                                  const std::vector<std::string>& names,
                                  char sep) {
  Scanner s(text);
  std::vector<Word> out;
  if (s.at_end()) return out;
  for (;;) {
    out.push_back(parse_word(s, names));
    if (s.at_end()) break;
    s.expect(sep);
  }
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  switch (w.kind) {
    case Word::Kind::Identity:
      return "1";
    case Word::Kind::Generator:
      return w.gen < names.size() ? names[w.gen] : "x" + std::to_string(w.gen + 1);
    case Word::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < w.parts.size(); ++i) {
        if (i) out += '*';
        out += format_word(w.parts[i], names);
      }
      return out;
    }
    case Word::Kind::Power: {
      const Word& b = w.parts[0];
      std::string base = format_word(b, names);
      if (b.kind == Word::Kind::Product || b.kind == Word::Kind::Power)
        base = "(" + base + ")";
      return base + "^" + w.exponent.get_str();
    }
    case Word::Kind::Commutator:
      return "[" + format_word(w.parts[0], names) + "," +
             format_word(w.parts[1], names) + "]";
  }
  return "1";
}

FreeCoords evaluate(const Word& w, std::size_t rank) {
  switch (w.kind) {
    case Word::Kind::Identity:
      return FreeCoords::identity(rank);
    case Word::Kind::Generator:
      if (w.gen >= rank) throw RankError("word references generator out of range");
      return FreeCoords::generator(rank, w.gen);
    case Word::Kind::Product: {
      FreeCoords c = FreeCoords::identity(rank);
      for (const auto& p : w.parts) c = multiply(c, evaluate(p, rank));
      return c;
    }
    case Word::Kind::Power:
      return power(evaluate(w.parts[0], rank), w.exponent);
    case Word::Kind::Commutator:
      return free_commutator(evaluate(w.parts[0], rank),
                             evaluate(w.parts[1], rank));
  }
  return FreeCoords::identity(rank);
}

Word coords_word(const FreeCoords& c) {
  std::vector<Word> factors;
  auto term = [](Word base, const Integer& t) {
    return t == 1 ? base : Word::power(std::move(base), t);
  };
  const std::size_t k = c.rank();
  for (std::size_t i = 0; i < k; ++i)
    if (c.e[i] != 0) factors.push_back(term(Word::generator(i), c.e[i]));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Integer& t = c.f[pair_index(i, j, k)];
      if (t != 0)
        factors.push_back(term(
            Word::commutator(Word::generator(i), Word::generator(j)), t));
    }
  return Word::product(std::move(factors));
}

}  // namespace nil2
