#include "lexer.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <cctype>

namespace cctr::detail {
namespace {

constexpr std::string_view kKeywords[] = {
    "abstract",  "assert",     "boolean",   "break",     "byte",      "case",
    "catch",     "char",       "class",     "const",     "continue",  "default",
    "do",        "double",     "else",      "enum",      "extends",   "final",
    "finally",   "float",      "for",       "goto",      "if",        "implements",
    "import",    "instanceof", "int",       "interface", "long",      "native",
    "new",       "package",    "private",   "protected", "public",    "return",
    "short",     "static",     "strictfp",  "super",     "switch",    "synchronized",
    "this",      "throw",      "throws",    "transient", "try",       "void",
    "volatile",  "while",
};

// Longest first within each leading character. `>` is handled separately.
constexpr std::string_view kPuncts[] = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", "+=",
    "-=",  "*=",  "/=", "%=", "&=", "|=", "^=", "<<", "(",  ")",  "{",  "}",
    "[",   "]",   ";",  ",",  ".",  "@",  "=",  "<",  "!",  "~",  "?",  ":",
    "+",   "-",   "*",  "/",  "%",  "&",  "|",  "^",
};

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
bool is_ident_part(unsigned char c) { return is_ident_start(c) || std::isdigit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    LexResult out;
    while (true) {
      skip_trivia(out);
      if (at_end()) break;
      Token tok;
      tok.begin = pos_;
      tok.offset = i_;
      const std::size_t start = i_;
      const unsigned char c = peek();
      if (is_ident_start(c)) {
        while (!at_end() && is_ident_part(peek())) advance();
        tok.text = src_.substr(start, i_ - start);
        tok.kind = is_keyword(tok.text) ? TokenKind::Keyword : TokenKind::Identifier;
      } else if (std::isdigit(c) || (c == '.' && std::isdigit(peek(1)))) {
        lex_number();
        tok.kind = TokenKind::Literal;
      } else if (c == '"') {
        if (src_.substr(i_, 3) == "\"\"\"") {
          lex_text_block(out);
        } else {
          lex_quoted('"', out);
        }
        tok.kind = TokenKind::Literal;
      } else if (c == '\'') {
        lex_quoted('\'', out);
        tok.kind = TokenKind::Literal;
      } else if (c == '>') {
        advance();
        tok.kind = TokenKind::Punct;
      } else {
        tok.kind = TokenKind::Punct;
        bool matched = false;
        for (auto p : kPuncts) {
          if (src_.substr(i_, p.size()) == p) {
            for (std::size_t k = 0; k < p.size(); ++k) advance();
            matched = true;
            break;
          }
        }
        if (!matched) {
          // Stray characters (`#`, `` ` ``, `\`, ...) are reported and skipped.
          out.errors.push_back({pos_.line, pos_.column,
                                "unexpected character '" + std::string(1, static_cast<char>(c)) + "'"});
          advance();
          continue;
        }
      }
      if (tok.text.empty()) tok.text = src_.substr(start, i_ - start);
      tok.end = pos_;
      out.tokens.push_back(tok);
    }
    Token end;
    end.kind = TokenKind::End;
    end.begin = end.end = pos_;
    end.offset = i_;
    out.tokens.push_back(end);
    return out;
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  unsigned char peek(std::size_t ahead = 0) const {
    return i_ + ahead < src_.size() ? static_cast<unsigned char>(src_[i_ + ahead]) : 0;
  }

  void advance() {
    const unsigned char c = peek();
    ++i_;
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++pos_.column;
    }
  }

  static bool is_keyword(std::string_view s) {
    return std::find(std::begin(kKeywords), std::end(kKeywords), s) != std::end(kKeywords);
  }

  void skip_trivia(LexResult& out) {
    while (!at_end()) {
      const unsigned char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const Position start = pos_;
        advance();
        advance();
        while (!at_end() && !(peek() == '*' && peek(1) == '/')) advance();
        if (at_end()) {
          out.errors.push_back({start.line, start.column, "unterminated comment"});
          return;
        }
        advance();
        advance();
      } else if (c == 0xEF && peek(1) == 0xBB && peek(2) == 0xBF) {
        i_ += 3;  // byte order mark
      } else {
        return;
      }
    }
  }

  void lex_number() {
    // Permissive: digits, letters (hex digits, suffixes, exponent markers),
    // underscores, dots and signed exponents.
    while (!at_end()) {
      const unsigned char c = peek();
      if (std::isalnum(c) || c == '_') {
        const bool exponent = (c == 'e' || c == 'E' || c == 'p' || c == 'P');
        advance();
        if (exponent && (peek() == '+' || peek() == '-')) advance();
      } else if (c == '.' && std::isdigit(peek(1))) {
        advance();
      } else if (c == '.' && !std::isalpha(peek(1)) && peek(1) != '.') {
        advance();  // `1.` and `1.f`-free forms like `1.;`
      } else {
        break;
      }
    }
  }

  void lex_quoted(char quote, LexResult& out) {
    const Position start = pos_;
    advance();
    while (!at_end() && peek() != static_cast<unsigned char>(quote) && peek() != '\n') {
      if (peek() == '\\') advance();
      advance();
    }
    if (at_end() || peek() == '\n') {
      out.errors.push_back({start.line, start.column,
                            quote == '"' ? "unterminated string literal" : "unterminated character literal"});
      return;
    }
    advance();
  }

  void lex_text_block(LexResult& out) {
    const Position start = pos_;
    for (int k = 0; k < 3; ++k) advance();
    while (!at_end() && src_.substr(i_, 3) != "\"\"\"") {
      if (peek() == '\\') advance();
      advance();
    }
    if (at_end()) {
      out.errors.push_back({start.line, start.column, "unterminated text block"});
      return;
    }
    for (int k = 0; k < 3; ++k) advance();
  }

  std::string_view src_;
  std::size_t i_ = 0;
  Position pos_{1, 1};
};

}  // namespace

LexResult lex(std::string_view source) { return Lexer(source).run(); }

}  // namespace cctr::detail
