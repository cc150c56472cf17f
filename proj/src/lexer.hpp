#pragma once

#include <string_view>
#include <vector>

#include "cctr/syntax.hpp"

namespace cctr::detail {

enum class TokenKind { Identifier, Keyword, Literal, Punct, End };

/// `>` is always emitted as a single-character token so that nested type
/// arguments (`List<List<T>>`) close naturally; the expression parser glues
/// adjacent `>` tokens back into shift and comparison operators.
struct Token {
  TokenKind kind = TokenKind::End;
  std::string_view text;
  Position begin;
  Position end;  // position just past the last character
  std::size_t offset = 0;

  bool is(std::string_view s) const {
    return (kind == TokenKind::Punct || kind == TokenKind::Keyword) && text == s;
  }
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an End token
  std::vector<ParseError> errors;
};

LexResult lex(std::string_view source);

}  // namespace cctr::detail
