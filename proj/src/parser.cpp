// Recursive-descent parser for Java-style test sources.
//
// The grammar coverage targets what generated and hand-written JUnit suites
// contain: type declarations (class, interface, enum, record, annotation
// types), members, the full statement set and the expression grammar with
// lambdas, method references, switch expressions and patterns. Only the node
// kinds in NodeKind are materialised; everything else becomes `Other`.
//
// Error recovery works at the member level of named types: a member that
// fails to parse is skipped by brace matching and dropped. A type whose body
// never closes is dropped entirely.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cctr/syntax.hpp"
#include "lexer.hpp"

namespace cctr {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::ClassDecl: return "class_decl";
    case NodeKind::MethodDecl: return "method_decl";
    case NodeKind::LambdaExpr: return "lambda_expr";
    case NodeKind::AnonymousClassBody: return "anonymous_class_body";
    case NodeKind::IfStmt: return "if_stmt";
    case NodeKind::ElseClause: return "else_clause";
    case NodeKind::TernaryExpr: return "ternary_expr";
    case NodeKind::SwitchStmt: return "switch_stmt";
    case NodeKind::CaseLabel: return "case_label";
    case NodeKind::ForStmt: return "for_stmt";
    case NodeKind::ForeachStmt: return "foreach_stmt";
    case NodeKind::WhileStmt: return "while_stmt";
    case NodeKind::DoStmt: return "do_stmt";
    case NodeKind::CatchClause: return "catch_clause";
    case NodeKind::FinallyClause: return "finally_clause";
    case NodeKind::TryStmt: return "try_stmt";
    case NodeKind::BreakStmt: return "break_stmt";
    case NodeKind::ContinueStmt: return "continue_stmt";
    case NodeKind::LabeledStmt: return "labeled_stmt";
    case NodeKind::ReturnStmt: return "return_stmt";
    case NodeKind::ThrowStmt: return "throw_stmt";
    case NodeKind::BinaryLogicalOp: return "binary_logical_op";
    case NodeKind::UnaryNot: return "unary_not";
    case NodeKind::MethodInvocation: return "method_invocation";
    case NodeKind::Annotation: return "annotation";
    case NodeKind::Block: return "block";
    case NodeKind::Other: return "other";
  }
  return "other";
}

namespace {

using detail::Token;
using detail::TokenKind;

struct ParseFailure {};

bool is_primitive(const Token& t) {
  static constexpr std::string_view kPrims[] = {"boolean", "byte", "char", "short", "int",
                                                "long",    "float", "double"};
  return t.kind == TokenKind::Keyword &&
         std::find(std::begin(kPrims), std::end(kPrims), t.text) != std::end(kPrims);
}

bool is_modifier_keyword(const Token& t) {
  static constexpr std::string_view kMods[] = {
      "public", "private", "protected",    "static",    "final",    "abstract",
      "native", "synchronized", "transient", "volatile", "strictfp", "default"};
  return t.kind == TokenKind::Keyword &&
         std::find(std::begin(kMods), std::end(kMods), t.text) != std::end(kMods);
}

bool is_assignment_op(std::string_view s) {
  static constexpr std::string_view kOps[] = {"=",  "+=", "-=", "*=", "/=",
                                              "%=", "&=", "|=", "^=", "<<="};
  return std::find(std::begin(kOps), std::end(kOps), s) != std::end(kOps);
}

class Parser {
 public:
  Parser(const std::vector<Token>& toks, std::vector<ParseError>& errors,
         std::vector<Position> lex_error_positions)
      : t_(toks), errors_(errors), lex_errors_(std::move(lex_error_positions)) {}

  std::vector<Node> parse_unit() {
    std::vector<Node> types;
    skip_package_and_imports();
    while (!at_end()) {
      if (accept(";")) continue;
      const std::size_t start = pos_;
      try {
        std::vector<Node> annotations;
        parse_modifiers(annotations);
        if (!at_type_decl_keyword()) fail("expected a type declaration");
        types.push_back(parse_type_decl(start, std::move(annotations), /*recover=*/true));
      } catch (const ParseFailure&) {
        recover_top_level(start);
      }
    }
    return types;
  }

 private:
  // ---------------------------------------------------------------------------
  // Token access

  const Token& cur() const { return t_[pos_]; }
  const Token& tok(std::size_t i) const { return t_[std::min(i, t_.size() - 1)]; }
  const Token& peek(std::size_t k = 1) const { return tok(pos_ + k); }
  bool at_end() const { return cur().kind == TokenKind::End; }
  bool at(std::string_view s) const { return cur().is(s); }
  bool at_ident() const { return cur().kind == TokenKind::Identifier; }
  bool at_ident(std::string_view s) const { return at_ident() && cur().text == s; }

  const Token& advance() {
    const Token& t = t_[pos_];
    if (t.kind != TokenKind::End) {
      last_end_ = t.end;
      ++pos_;
    }
    return t;
  }

  bool accept(std::string_view s) {
    if (!at(s)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& message) {
    const Token& t = cur();
    std::string found = t.kind == TokenKind::End ? "end of file" : "'" + std::string(t.text) + "'";
    errors_.push_back({t.begin.line, t.begin.column, message + ", found " + found});
    throw ParseFailure{};
  }

  const Token& expect(std::string_view s) {
    if (!at(s)) fail("expected '" + std::string(s) + "'");
    return advance();
  }

  const Token& expect_ident() {
    if (!at_ident()) fail("expected identifier");
    return advance();
  }

  Node start_node(NodeKind kind, Position begin) const {
    Node n;
    n.kind = kind;
    n.span.begin = begin;
    n.span.end = begin;
    return n;
  }
  Node start_node(NodeKind kind) const { return start_node(kind, cur().begin); }
  Node& finish(Node& n) const {
    n.span.end = std::max(last_end_, n.span.begin);
    return n;
  }
  Node finished(Node n) const {
    finish(n);
    return n;
  }

  // Whether tokens i and i+1 are directly adjacent in the source.
  bool adjacent(std::size_t i) const {
    const Token& a = tok(i);
    const Token& b = tok(i + 1);
    return b.kind != TokenKind::End && a.offset + a.text.size() == b.offset;
  }

  // ---------------------------------------------------------------------------
  // Lookahead helpers; none of these consume tokens or report errors.

  std::optional<std::size_t> skip_balanced(std::size_t i, std::string_view open,
                                           std::string_view close) const {
    if (!tok(i).is(open)) return std::nullopt;
    int depth = 0;
    for (; tok(i).kind != TokenKind::End; ++i) {
      if (tok(i).is(open)) ++depth;
      if (tok(i).is(close) && --depth == 0) return i + 1;
    }
    return std::nullopt;
  }

  std::size_t skip_annotations(std::size_t i) const {
    while (tok(i).is("@") && !tok(i + 1).is("interface")) {
      ++i;
      if (tok(i).kind != TokenKind::Identifier) return i;
      ++i;
      while (tok(i).is(".") && tok(i + 1).kind == TokenKind::Identifier) i += 2;
      if (tok(i).is("(")) {
        auto j = skip_balanced(i, "(", ")");
        if (!j) return i;
        i = *j;
      }
    }
    return i;
  }

  std::optional<std::size_t> skip_type_args(std::size_t i) const {
    if (!tok(i).is("<")) return std::nullopt;
    ++i;
    if (tok(i).is(">")) return i + 1;  // diamond
    while (true) {
      i = skip_annotations(i);
      if (tok(i).is("?")) {
        ++i;
        if (tok(i).is("extends") || tok(i).is("super")) {
          auto j = skip_type(i + 1);
          if (!j) return std::nullopt;
          i = *j;
        }
      } else {
        auto j = skip_type(i);
        if (!j) return std::nullopt;
        i = *j;
      }
      if (tok(i).is(",")) {
        ++i;
        continue;
      }
      if (tok(i).is(">")) return i + 1;
      return std::nullopt;
    }
  }

  std::optional<std::size_t> skip_type(std::size_t i) const {
    i = skip_annotations(i);
    if (is_primitive(tok(i))) {
      ++i;
    } else if (tok(i).kind == TokenKind::Identifier) {
      ++i;
      if (tok(i).is("<")) {
        auto j = skip_type_args(i);
        if (!j) return std::nullopt;
        i = *j;
      }
      while (tok(i).is(".") && (tok(i + 1).kind == TokenKind::Identifier || tok(i + 1).is("@"))) {
        i = skip_annotations(i + 1);
        if (tok(i).kind != TokenKind::Identifier) return std::nullopt;
        ++i;
        if (tok(i).is("<")) {
          auto j = skip_type_args(i);
          if (!j) return std::nullopt;
          i = *j;
        }
      }
    } else {
      return std::nullopt;
    }
    while (true) {
      const std::size_t j = skip_annotations(i);
      if (tok(j).is("[") && tok(j + 1).is("]")) {
        i = j + 2;
      } else {
        break;
      }
    }
    return i;
  }

  std::size_t skip_local_modifiers(std::size_t i) const {
    while (true) {
      const std::size_t j = skip_annotations(i);
      if (tok(j).is("final")) {
        i = j + 1;
      } else {
        return j;
      }
    }
  }

  bool looks_like_local_var_decl() const {
    std::size_t i = skip_local_modifiers(pos_);
    const bool had_modifiers = i != pos_;
    auto j = skip_type(i);
    if (!j) return false;
    if (tok(*j).kind != TokenKind::Identifier) return false;
    const Token& after = tok(*j + 1);
    if (after.is("=") || after.is(";") || after.is(",") || after.is("[") || after.is(":")) return true;
    return had_modifiers;
  }

  bool lambda_ahead() const {
    if (at_ident() && peek().is("->")) return true;
    if (at("(")) {
      auto j = skip_balanced(pos_, "(", ")");
      return j && tok(*j).is("->");
    }
    return false;
  }

  bool cast_ahead() const {
    if (!at("(")) return false;
    const std::size_t start = pos_ + 1;
    if (is_primitive(tok(skip_annotations(start)))) {
      auto j = skip_type(start);
      return j && tok(*j).is(")");
    }
    auto j = skip_type(start);
    while (j && tok(*j).is("&")) j = skip_type(*j + 1);
    if (!j || !tok(*j).is(")")) return false;
    const Token& next = tok(*j + 1);
    switch (next.kind) {
      case TokenKind::Identifier:
      case TokenKind::Literal: return true;
      case TokenKind::Keyword:
        return next.is("this") || next.is("super") || next.is("new") || next.is("switch") ||
               is_primitive(next);
      case TokenKind::Punct: return next.is("(") || next.is("!") || next.is("~");
      case TokenKind::End: return false;
    }
    return false;
  }

  bool at_type_decl_keyword() const {
    if (at("class") || at("interface") || at("enum")) return true;
    if (at("@") && peek().is("interface")) return true;
    return at_ident("record") && peek().kind == TokenKind::Identifier &&
           (peek(2).is("(") || peek(2).is("<"));
  }

  // ---------------------------------------------------------------------------
  // Recovery

  void skip_package_and_imports() {
    const std::size_t j = skip_annotations(pos_);
    if (tok(j).is("package")) pos_ = j;
    while (at("package") || at("import")) {
      while (!at_end() && !at(";")) advance();
      accept(";");
    }
  }

  bool top_level_start(std::size_t i) const {
    const Token& t = tok(i);
    if (t.is("class") || t.is("interface") || t.is("enum") || t.is("@") || t.is("public") ||
        t.is("abstract") || t.is("final")) {
      return true;
    }
    return t.kind == TokenKind::Identifier && t.text == "record" &&
           tok(i + 1).kind == TokenKind::Identifier;
  }

  // Skips a failed top-level declaration: resumes at the next token that can
  // start a type declaration outside any brace nesting.
  void recover_top_level(std::size_t start) {
    pos_ = start;
    advance();
    int depth = 0;
    while (!at_end()) {
      if (depth == 0 && top_level_start(pos_)) return;
      if (at("{")) ++depth;
      if (at("}") && depth > 0) --depth;
      advance();
    }
  }

  // Skips one class member starting at `start`. Stops after a top-level `;`,
  // after the brace closing the member's first block, or before the `}` that
  // closes the enclosing class body.
  void recover_member(std::size_t start) {
    pos_ = start;
    int depth = 0;
    while (!at_end()) {
      if (at("{")) {
        ++depth;
      } else if (at("}")) {
        if (depth == 0) return;
        if (--depth == 0) {
          advance();
          return;
        }
      } else if (at(";") && depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  bool contains_lex_error(const Span& span) const {
    return std::any_of(lex_errors_.begin(), lex_errors_.end(), [&](const Position& p) {
      return span.begin <= p && p < span.end;
    });
  }

  // ---------------------------------------------------------------------------
  // Declarations

  Node parse_annotation() {
    Node n = start_node(NodeKind::Annotation);
    expect("@");
    n.name = std::string(expect_ident().text);
    while (at(".") && peek().kind == TokenKind::Identifier) {
      advance();
      n.name = std::string(advance().text);
    }
    if (at("(")) {
      n.has_arguments = !peek().is(")");
      auto j = skip_balanced(pos_, "(", ")");
      if (!j) fail("unbalanced annotation arguments");
      while (pos_ < *j) advance();
    }
    return finished(std::move(n));
  }

  void parse_modifiers(std::vector<Node>& annotations) {
    while (true) {
      if (at("@") && !peek().is("interface")) {
        annotations.push_back(parse_annotation());
      } else if (is_modifier_keyword(cur()) && !(at("default") && (peek().is(":") || peek().is("->")))) {
        advance();
      } else if (at_ident("sealed") && (peek().kind != TokenKind::Punct)) {
        advance();
      } else if (at_ident("non") && peek().is("-") && tok(pos_ + 2).text == "sealed") {
        advance();
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  void skip_type_params() {
    if (!at("<")) return;
    int depth = 0;
    while (!at_end()) {
      if (at("<")) ++depth;
      if (at(">") && --depth == 0) {
        advance();
        return;
      }
      if (at("{") || at(";") || at("(")) fail("malformed type parameters");
      advance();
    }
    fail("unterminated type parameters");
  }

  void consume_type() {
    auto j = skip_type(pos_);
    if (!j) fail("expected type");
    while (pos_ < *j) advance();
  }

  Node parse_type_decl(std::size_t start, std::vector<Node> annotations, bool recover) {
    Node n = start_node(NodeKind::ClassDecl, tok(start).begin);
    bool is_enum = false;
    bool is_record = false;
    if (accept("@")) {
      expect("interface");
    } else if (at("enum")) {
      advance();
      is_enum = true;
    } else if (at_ident("record")) {
      advance();
      is_record = true;
    } else if (!accept("class") && !accept("interface")) {
      fail("expected class, interface, enum or record");
    }
    n.name = std::string(expect_ident().text);
    skip_type_params();
    if (is_record) {
      auto j = skip_balanced(pos_, "(", ")");
      if (!j) fail("expected record header");
      while (pos_ < *j) advance();
    }
    while (!at("{")) {
      if (at_end() || at(";") || at("}")) fail("expected class body");
      advance();
    }
    n.children = std::move(annotations);
    parse_class_body(n, is_enum, recover);
    return finished(std::move(n));
  }

  void parse_enum_constants(Node& owner) {
    while (!at(";") && !at("}")) {
      Node constant = start_node(NodeKind::Other);
      std::vector<Node> ignored;
      parse_modifiers(ignored);
      constant.name = std::string(expect_ident().text);
      if (at("(")) constant.arity = parse_arguments(constant.children);
      if (at("{")) {
        Node body = start_node(NodeKind::AnonymousClassBody);
        parse_class_body(body, false, false);
        constant.children.push_back(finished(std::move(body)));
      }
      owner.children.push_back(finished(std::move(constant)));
      if (!accept(",")) break;
    }
    accept(";");
  }

  void parse_class_body(Node& owner, bool is_enum, bool recover) {
    expect("{");
    if (is_enum) parse_enum_constants(owner);
    while (!at("}")) {
      if (at_end()) fail("unexpected end of input in class body");
      const std::size_t start = pos_;
      if (!recover) {
        parse_member(owner);
        continue;
      }
      const std::size_t count = owner.children.size();
      try {
        parse_member(owner);
        if (owner.children.size() > count && owner.children.back().kind != NodeKind::ClassDecl &&
            contains_lex_error(owner.children.back().span)) {
          owner.children.pop_back();
        }
      } catch (const ParseFailure&) {
        owner.children.resize(count);
        recover_member(start);
        if (pos_ == start) advance();
      }
    }
    advance();
  }

  void parse_member(Node& owner) {
    if (accept(";")) return;
    const std::size_t start = pos_;
    std::vector<Node> annotations;
    parse_modifiers(annotations);

    if (at("{")) {  // initializer block
      Node init = start_node(NodeKind::Other, tok(start).begin);
      init.children.push_back(parse_block());
      owner.children.push_back(finished(std::move(init)));
      return;
    }
    if (at_type_decl_keyword()) {
      owner.children.push_back(parse_type_decl(start, std::move(annotations), true));
      return;
    }
    skip_type_params();

    Node method = start_node(NodeKind::MethodDecl, tok(start).begin);
    if (at_ident() && peek().is("(")) {
      method.is_constructor = true;
    } else if (at_ident() && owner.kind == NodeKind::ClassDecl && cur().text == owner.name &&
               peek().is("{")) {
      method.is_constructor = true;  // compact record constructor
    } else {
      if (!accept("void")) consume_type();
      if (!at_ident()) fail("expected member name");
      if (!peek().is("(")) {
        owner.children.push_back(parse_field_rest(start));
        return;
      }
    }
    method.name = std::string(expect_ident().text);
    method.children = std::move(annotations);
    if (at("(")) method.arity = parse_parameters();
    while (at("[") && peek().is("]")) {
      advance();
      advance();
    }
    if (accept("throws")) {
      consume_type();
      while (accept(",")) consume_type();
    }
    if (accept("default")) {
      [[maybe_unused]] Node value = at("@") ? parse_annotation() : parse_variable_initializer();
      expect(";");
    } else if (!accept(";")) {
      ++method_depth_;
      method.children.push_back(parse_block());
      --method_depth_;
    }
    owner.children.push_back(finished(std::move(method)));
  }

  Node parse_field_rest(std::size_t start) {
    Node field = start_node(NodeKind::Other, tok(start).begin);
    while (true) {
      field.name = std::string(expect_ident().text);
      while (at("[") && peek().is("]")) {
        advance();
        advance();
      }
      if (accept("=")) field.children.push_back(parse_variable_initializer());
      if (!accept(",")) break;
    }
    expect(";");
    return finished(std::move(field));
  }

  int parse_parameters() {
    expect("(");
    int count = 0;
    while (!at(")")) {
      std::vector<Node> ignored;
      parse_modifiers(ignored);
      consume_type();
      accept("...");
      if (at("this")) {
        advance();  // receiver parameter
      } else {
        if (at_ident() && peek().is(".") && tok(pos_ + 2).is("this")) {
          advance();
          advance();
          advance();
        } else {
          expect_ident();
          ++count;
        }
      }
      while (at("[") && peek().is("]")) {
        advance();
        advance();
      }
      if (!accept(",")) break;
    }
    expect(")");
    return count;
  }

  // ---------------------------------------------------------------------------
  // Statements

  Node parse_block() {
    Node block = start_node(NodeKind::Block);
    expect("{");
    while (!at("}")) {
      if (at_end()) fail("unexpected end of input in block");
      block.children.push_back(parse_block_statement());
    }
    advance();
    return finished(std::move(block));
  }

  bool local_type_decl_ahead() const {
    std::size_t i = pos_;
    while (true) {
      const std::size_t j = skip_annotations(i);
      if (tok(j).is("final") || tok(j).is("abstract") || tok(j).is("static") ||
          tok(j).is("strictfp")) {
        i = j + 1;
      } else {
        i = j;
        break;
      }
    }
    const Token& t = tok(i);
    if (t.is("class") || t.is("interface") || t.is("enum")) return true;
    return t.kind == TokenKind::Identifier && t.text == "record" &&
           tok(i + 1).kind == TokenKind::Identifier && (tok(i + 2).is("(") || tok(i + 2).is("<"));
  }

  Node parse_block_statement() {
    if (local_type_decl_ahead()) {
      const std::size_t start = pos_;
      std::vector<Node> annotations;
      parse_modifiers(annotations);
      return parse_type_decl(start, std::move(annotations), false);
    }
    if (yield_statement_ahead()) return parse_statement();
    if (looks_like_local_var_decl()) return parse_local_var_decl(true);
    return parse_statement();
  }

  Node parse_local_var_decl(bool require_semicolon) {
    Node decl = start_node(NodeKind::Other);
    std::vector<Node> ignored;
    parse_modifiers(ignored);
    consume_type();
    while (true) {
      decl.name = std::string(expect_ident().text);
      while (at("[") && peek().is("]")) {
        advance();
        advance();
      }
      if (accept("=")) decl.children.push_back(parse_variable_initializer());
      if (!accept(",")) break;
    }
    if (require_semicolon) expect(";");
    return finished(std::move(decl));
  }

  Node parse_variable_initializer() {
    if (at("{")) return parse_array_initializer();
    return parse_expression();
  }

  Node parse_array_initializer() {
    Node init = start_node(NodeKind::Other);
    expect("{");
    while (!at("}")) {
      init.children.push_back(parse_variable_initializer());
      if (!accept(",")) break;
    }
    expect("}");
    return finished(std::move(init));
  }

  Node parse_paren_expression() {
    expect("(");
    Node e = parse_expression();
    expect(")");
    return e;
  }

  bool yield_statement_ahead() const {
    if (!at_ident("yield")) return false;
    const Token& next = peek();
    if (next.kind == TokenKind::End) return false;
    if (next.kind != TokenKind::Punct) return true;
    return !(is_assignment_op(next.text) || next.is(".") || next.is("[") || next.is("++") ||
             next.is("--") || next.is("->") || next.is(";") || next.is(">"));
  }

  Node parse_statement() {
    if (at("{")) return parse_block();
    if (at(";")) {
      Node empty = start_node(NodeKind::Other);
      advance();
      return finished(std::move(empty));
    }
    if (at("if")) return parse_if();
    if (at("for")) return parse_for();
    if (at("while")) {
      Node n = start_node(NodeKind::WhileStmt);
      advance();
      n.children.push_back(parse_paren_expression());
      n.children.push_back(parse_statement());
      return finished(std::move(n));
    }
    if (at("do")) {
      Node n = start_node(NodeKind::DoStmt);
      advance();
      n.children.push_back(parse_statement());
      expect("while");
      n.children.push_back(parse_paren_expression());
      expect(";");
      return finished(std::move(n));
    }
    if (at("try")) return parse_try();
    if (at("switch")) {
      Node n = parse_switch();
      accept(";");
      finish(n);
      return n;
    }
    if (at("return") || at("throw")) {
      Node n = start_node(at("return") ? NodeKind::ReturnStmt : NodeKind::ThrowStmt);
      advance();
      if (!at(";")) n.children.push_back(parse_expression());
      expect(";");
      return finished(std::move(n));
    }
    if (at("break") || at("continue")) {
      Node n = start_node(at("break") ? NodeKind::BreakStmt : NodeKind::ContinueStmt);
      advance();
      if (at_ident()) n.name = std::string(advance().text);
      expect(";");
      return finished(std::move(n));
    }
    if (at("synchronized")) {
      Node n = start_node(NodeKind::Other);
      advance();
      n.children.push_back(parse_paren_expression());
      n.children.push_back(parse_block());
      return finished(std::move(n));
    }
    if (at("assert")) {
      Node n = start_node(NodeKind::Other);
      advance();
      n.children.push_back(parse_expression());
      if (accept(":")) n.children.push_back(parse_expression());
      expect(";");
      return finished(std::move(n));
    }
    if (yield_statement_ahead()) {
      Node n = start_node(NodeKind::Other);
      advance();
      n.children.push_back(parse_expression());
      expect(";");
      return finished(std::move(n));
    }
    if (at_ident() && peek().is(":")) {
      Node n = start_node(NodeKind::LabeledStmt);
      n.name = std::string(advance().text);
      advance();
      n.children.push_back(parse_statement());
      return finished(std::move(n));
    }
    Node stmt = start_node(NodeKind::Other);
    stmt.children.push_back(parse_expression());
    expect(";");
    return finished(std::move(stmt));
  }

  Node parse_if() {
    Node n = start_node(NodeKind::IfStmt);
    expect("if");
    n.children.push_back(parse_paren_expression());
    n.children.push_back(parse_statement());
    if (at("else")) {
      Node e = start_node(NodeKind::ElseClause);
      advance();
      e.children.push_back(parse_statement());
      n.children.push_back(finished(std::move(e)));
    }
    return finished(std::move(n));
  }

  Node parse_for() {
    const Position begin = cur().begin;
    expect("for");
    expect("(");
    // Enhanced for: modifiers Type name ':'
    {
      const std::size_t i = skip_local_modifiers(pos_);
      auto j = skip_type(i);
      if (j && tok(*j).kind == TokenKind::Identifier && tok(*j + 1).is(":")) {
        Node n = start_node(NodeKind::ForeachStmt, begin);
        Node var = start_node(NodeKind::Other);
        std::vector<Node> ignored;
        parse_modifiers(ignored);
        consume_type();
        var.name = std::string(expect_ident().text);
        n.children.push_back(finished(std::move(var)));
        expect(":");
        n.children.push_back(parse_expression());
        expect(")");
        n.children.push_back(parse_statement());
        return finished(std::move(n));
      }
    }
    Node n = start_node(NodeKind::ForStmt, begin);
    if (!at(";")) {
      if (looks_like_local_var_decl()) {
        n.children.push_back(parse_local_var_decl(false));
      } else {
        n.children.push_back(parse_expression());
        while (accept(",")) n.children.push_back(parse_expression());
      }
    }
    expect(";");
    if (!at(";")) n.children.push_back(parse_expression());
    expect(";");
    if (!at(")")) {
      n.children.push_back(parse_expression());
      while (accept(",")) n.children.push_back(parse_expression());
    }
    expect(")");
    n.children.push_back(parse_statement());
    return finished(std::move(n));
  }

  Node parse_try() {
    Node n = start_node(NodeKind::TryStmt);
    expect("try");
    const bool has_resources = at("(");
    if (has_resources) {
      Node resources = start_node(NodeKind::Other);
      advance();
      while (!at(")")) {
        const std::size_t i = skip_local_modifiers(pos_);
        auto j = skip_type(i);
        if (j && tok(*j).kind == TokenKind::Identifier && tok(*j + 1).is("=")) {
          resources.children.push_back(parse_local_var_decl(false));
        } else {
          resources.children.push_back(parse_expression());
        }
        if (!accept(";")) break;
      }
      expect(")");
      n.children.push_back(finished(std::move(resources)));
    }
    n.children.push_back(parse_block());
    while (at("catch")) {
      Node c = start_node(NodeKind::CatchClause);
      advance();
      expect("(");
      std::vector<Node> ignored;
      parse_modifiers(ignored);
      consume_type();
      while (accept("|")) consume_type();
      expect_ident();
      expect(")");
      c.children.push_back(parse_block());
      n.children.push_back(finished(std::move(c)));
    }
    if (at("finally")) {
      Node f = start_node(NodeKind::FinallyClause);
      advance();
      f.children.push_back(parse_block());
      n.children.push_back(finished(std::move(f)));
    }
    if (!has_resources && n.children.back().kind == NodeKind::Block) {
      fail("expected catch or finally");
    }
    return finished(std::move(n));
  }

  // Shared by switch statements and switch expressions.
  Node parse_switch() {
    Node n = start_node(NodeKind::SwitchStmt);
    expect("switch");
    n.children.push_back(parse_paren_expression());
    expect("{");
    while (!at("}")) {
      if (at_end()) fail("unexpected end of input in switch");
      if (at("case") || at("default")) {
        n.children.push_back(parse_case_label());
        if (accept("->")) {
          if (at("{")) {
            n.children.push_back(parse_block());
          } else if (at("throw")) {
            n.children.push_back(parse_statement());
          } else {
            Node stmt = start_node(NodeKind::Other);
            stmt.children.push_back(parse_expression());
            expect(";");
            n.children.push_back(finished(std::move(stmt)));
          }
        } else {
          expect(":");
        }
        continue;
      }
      n.children.push_back(parse_block_statement());
    }
    advance();
    return finished(std::move(n));
  }

  Node parse_case_label() {
    Node label = start_node(NodeKind::CaseLabel);
    if (accept("default")) {
      label.is_default = true;
      return finished(std::move(label));
    }
    expect("case");
    while (true) {
      if (accept("default")) {
        label.is_default = true;
      } else if (case_pattern_ahead()) {
        parse_pattern();
      } else {
        label.children.push_back(parse_conditional());
      }
      if (!accept(",")) break;
    }
    if (at_ident("when")) {
      advance();
      label.children.push_back(parse_conditional());
    }
    return finished(std::move(label));
  }

  bool case_pattern_ahead() const {
    const std::size_t i = skip_local_modifiers(pos_);
    auto j = skip_type(i);
    if (!j) return false;
    return tok(*j).kind == TokenKind::Identifier || tok(*j).is("(");
  }

  void parse_pattern() {
    std::vector<Node> ignored;
    parse_modifiers(ignored);
    consume_type();
    if (at("(")) {
      advance();
      while (!at(")")) {
        parse_pattern();
        if (!accept(",")) break;
      }
      expect(")");
    }
    if (at_ident() && !at_ident("when")) advance();
  }

  // ---------------------------------------------------------------------------
  // Expressions

  Node parse_expression() {
    if (lambda_ahead()) return parse_lambda();
    Node lhs = parse_conditional();
    std::size_t width = 0;
    if (cur().kind == TokenKind::Punct && is_assignment_op(cur().text)) {
      width = 1;
    } else if (at(">") && adjacent(pos_) && peek().is(">")) {
      // >>= and >>>=
      if (adjacent(pos_ + 1) && peek(2).is("=")) {
        width = 3;
      } else if (adjacent(pos_ + 1) && peek(2).is(">") && adjacent(pos_ + 2) && peek(3).is("=")) {
        width = 4;
      }
    }
    if (width == 0) return lhs;
    Node n = start_node(NodeKind::Other, lhs.span.begin);
    for (std::size_t k = 0; k < width; ++k) advance();
    n.children.push_back(std::move(lhs));
    n.children.push_back(parse_expression());
    return finished(std::move(n));
  }

  Node parse_lambda() {
    Node n = start_node(NodeKind::LambdaExpr);
    if (at_ident()) {
      advance();
    } else {
      auto j = skip_balanced(pos_, "(", ")");
      while (pos_ < *j) advance();
    }
    expect("->");
    n.children.push_back(at("{") ? parse_block() : parse_expression());
    return finished(std::move(n));
  }

  Node parse_conditional() {
    Node cond = parse_binary(1);
    if (!at("?")) return cond;
    Node n = start_node(NodeKind::TernaryExpr, cond.span.begin);
    advance();
    n.children.push_back(std::move(cond));
    n.children.push_back(parse_expression());
    expect(":");
    n.children.push_back(lambda_ahead() ? parse_lambda() : parse_conditional());
    return finished(std::move(n));
  }

  struct BinaryOp {
    int precedence = 0;
    std::size_t width = 0;
    std::string_view text;
  };

  std::optional<BinaryOp> peek_binary_op() const {
    const Token& t = cur();
    if (t.kind == TokenKind::Keyword && t.text == "instanceof") return BinaryOp{7, 1, "instanceof"};
    if (t.kind != TokenKind::Punct) return std::nullopt;
    if (t.text == ">") {
      if (adjacent(pos_) && peek().is(">")) {
        if (adjacent(pos_ + 1) && peek(2).is(">")) {
          if (adjacent(pos_ + 2) && peek(3).is("=")) return std::nullopt;  // >>>=
          return BinaryOp{8, 3, ">>>"};
        }
        if (adjacent(pos_ + 1) && peek(2).is("=")) return std::nullopt;  // >>=
        return BinaryOp{8, 2, ">>"};
      }
      if (adjacent(pos_) && peek().is("=")) return BinaryOp{7, 2, ">="};
      return BinaryOp{7, 1, ">"};
    }
    static constexpr std::pair<std::string_view, int> kOps[] = {
        {"||", 1}, {"&&", 2}, {"|", 3},  {"^", 4},  {"&", 5},  {"==", 6}, {"!=", 6},
        {"<", 7},  {"<=", 7}, {"<<", 8}, {"+", 9},  {"-", 9},  {"*", 10}, {"/", 10},
        {"%", 10},
    };
    for (const auto& [text, prec] : kOps) {
      if (t.text == text) return BinaryOp{prec, 1, text};
    }
    return std::nullopt;
  }

  Node parse_binary(int min_precedence) {
    Node lhs = parse_unary();
    while (true) {
      auto op = peek_binary_op();
      if (!op || op->precedence < min_precedence) return lhs;
      if (op->text == "instanceof") {
        Node n = start_node(NodeKind::Other, lhs.span.begin);
        advance();
        parse_pattern();
        n.children.push_back(std::move(lhs));
        lhs = finished(std::move(n));
        continue;
      }
      const bool logical = op->text == "&&" || op->text == "||";
      Node n = start_node(logical ? NodeKind::BinaryLogicalOp : NodeKind::Other, lhs.span.begin);
      if (logical) n.op = op->text == "&&" ? LogicalOp::And : LogicalOp::Or;
      for (std::size_t k = 0; k < op->width; ++k) advance();
      n.children.push_back(std::move(lhs));
      n.children.push_back(parse_binary(op->precedence + 1));
      lhs = finished(std::move(n));
    }
  }

  Node parse_unary() {
    if (at("!")) {
      Node n = start_node(NodeKind::UnaryNot);
      advance();
      n.children.push_back(parse_unary());
      return finished(std::move(n));
    }
    if (at("+") || at("-") || at("++") || at("--") || at("~")) {
      Node n = start_node(NodeKind::Other);
      advance();
      n.children.push_back(parse_unary());
      return finished(std::move(n));
    }
    if (cast_ahead()) {
      Node n = start_node(NodeKind::Other);
      advance();
      consume_type();
      while (accept("&")) consume_type();
      expect(")");
      n.children.push_back(lambda_ahead() ? parse_lambda() : parse_unary());
      return finished(std::move(n));
    }
    Node e = parse_primary();
    while (at("++") || at("--")) {
      Node n = start_node(NodeKind::Other, e.span.begin);
      advance();
      n.children.push_back(std::move(e));
      e = finished(std::move(n));
    }
    return e;
  }

  int parse_arguments(std::vector<Node>& out) {
    expect("(");
    int count = 0;
    while (!at(")")) {
      out.push_back(parse_expression());
      ++count;
      if (!accept(",")) break;
    }
    expect(")");
    return count;
  }

  Node invocation(Position begin, std::string name, std::string qualifier,
                  std::optional<Node> receiver) {
    Node n = start_node(NodeKind::MethodInvocation, begin);
    n.name = std::move(name);
    n.qualifier = std::move(qualifier);
    if (receiver) n.children.push_back(std::move(*receiver));
    n.arity = parse_arguments(n.children);
    return finished(std::move(n));
  }

  static std::string receiver_text(const Node& receiver) {
    if (receiver.kind == NodeKind::Other && !receiver.name.empty()) return receiver.name;
    return "<expr>";
  }

  Node name_leaf(const Token& t) {
    Node n = start_node(NodeKind::Other, t.begin);
    n.name = std::string(t.text);
    n.span.end = t.end;
    return n;
  }

  Node parse_primary() {
    Node e = parse_primary_head();
    return parse_selectors(std::move(e));
  }

  Node parse_primary_head() {
    const Token& t = cur();
    const Position begin = t.begin;
    if (t.kind == TokenKind::Literal) {
      advance();
      return name_leaf_unnamed(t);
    }
    if (at("(")) return parse_paren_expression();
    if (at("new")) return parse_creator(begin, std::nullopt);
    if (at("switch")) return parse_switch();
    if (at("this") || at("super")) {
      advance();
      if (at("(")) {  // explicit constructor invocation
        Node n = start_node(NodeKind::Other, begin);
        n.arity = parse_arguments(n.children);
        return finished(std::move(n));
      }
      return name_leaf(t);
    }
    if (is_primitive(t) || at("void")) {
      Node n = start_node(NodeKind::Other);
      advance();
      while (at("[") && peek().is("]")) {
        advance();
        advance();
      }
      if (accept(".")) {
        expect("class");
      } else if (accept("::")) {
        expect("new");
      } else {
        fail("expected '.class' or '::'");
      }
      return finished(std::move(n));
    }
    if (at_ident()) {
      advance();
      if (at("(")) return invocation(begin, std::string(t.text), "", std::nullopt);
      return name_leaf(t);
    }
    fail("expected expression");
  }

  Node name_leaf_unnamed(const Token& t) {
    Node n = start_node(NodeKind::Other, t.begin);
    n.span.end = t.end;
    return n;
  }

  Node parse_selectors(Node e) {
    while (true) {
      const Position begin = e.span.begin;
      if (at(".")) {
        advance();
        if (at("<")) {
          auto j = skip_type_args(pos_);
          if (!j) fail("malformed type arguments");
          while (pos_ < *j) advance();
          const Token& name = expect_ident();
          std::string qualifier = receiver_text(e);
          e = invocation(begin, std::string(name.text), std::move(qualifier), std::move(e));
        } else if (at_ident()) {
          const Token& name = advance();
          if (at("(")) {
            std::string qualifier = receiver_text(e);
            e = invocation(begin, std::string(name.text), std::move(qualifier), std::move(e));
          } else {
            Node n = start_node(NodeKind::Other, begin);
            if (e.kind == NodeKind::Other && !e.name.empty()) {
              n.name = e.name + "." + std::string(name.text);
            }
            n.children.push_back(std::move(e));
            e = finished(std::move(n));
          }
        } else if (at("new")) {
          e = parse_creator(begin, std::move(e));
        } else if (at("this") || at("class") || at("super")) {
          Node n = start_node(NodeKind::Other, begin);
          advance();
          n.children.push_back(std::move(e));
          e = finished(std::move(n));
        } else {
          fail("expected member name after '.'");
        }
      } else if (at("[")) {
        Node n = start_node(NodeKind::Other, begin);
        advance();
        if (at("]")) {  // array type: Foo[].class or Foo[]::new
          advance();
          while (at("[") && peek().is("]")) {
            advance();
            advance();
          }
          n.children.push_back(std::move(e));
          e = finished(std::move(n));
          if (!at(".") && !at("::")) fail("expected '.class' or '::' after array type");
          continue;
        }
        n.children.push_back(std::move(e));
        n.children.push_back(parse_expression());
        expect("]");
        e = finished(std::move(n));
      } else if (at("::")) {
        Node n = start_node(NodeKind::Other, begin);
        advance();
        if (at("<")) {
          auto j = skip_type_args(pos_);
          if (!j) fail("malformed type arguments");
          while (pos_ < *j) advance();
        }
        if (!accept("new")) expect_ident();
        n.children.push_back(std::move(e));
        e = finished(std::move(n));
      } else {
        return e;
      }
    }
  }

  Node parse_creator(Position begin, std::optional<Node> outer) {
    Node n = start_node(NodeKind::Other, begin);
    expect("new");
    if (outer) n.children.push_back(std::move(*outer));
    if (at("<")) {
      auto j = skip_type_args(pos_);
      if (!j) fail("malformed type arguments");
      while (pos_ < *j) advance();
    }
    // Created type without array dimensions.
    pos_ = skip_annotations(pos_);
    if (is_primitive(cur())) {
      advance();
    } else {
      expect_ident();
      while (true) {
        if (at("<")) {
          auto j = skip_type_args(pos_);
          if (!j) fail("malformed type arguments");
          while (pos_ < *j) advance();
        }
        if (at(".") && peek().kind == TokenKind::Identifier) {
          advance();
          advance();
          continue;
        }
        break;
      }
    }
    if (at("[")) {
      while (at("[")) {
        advance();
        if (!at("]")) n.children.push_back(parse_expression());
        expect("]");
      }
      if (at("{")) n.children.push_back(parse_array_initializer());
      return finished(std::move(n));
    }
    n.arity = parse_arguments(n.children);
    if (at("{")) {
      Node body = start_node(NodeKind::AnonymousClassBody);
      parse_class_body(body, false, false);
      n.children.push_back(finished(std::move(body)));
    }
    return finished(std::move(n));
  }

  const std::vector<Token>& t_;
  std::vector<ParseError>& errors_;
  std::vector<Position> lex_errors_;
  std::size_t pos_ = 0;
  Position last_end_{1, 1};
  int method_depth_ = 0;
};

}  // namespace

SyntaxUnit parse_source(std::string_view text, const std::filesystem::path& path) {
  SyntaxUnit unit;
  unit.path = path;
  detail::LexResult lexed = detail::lex(text);
  std::vector<Position> lex_positions;
  for (const auto& e : lexed.errors) lex_positions.push_back({e.line, e.column});
  unit.parse_errors = lexed.errors;
  Parser parser(lexed.tokens, unit.parse_errors, std::move(lex_positions));
  unit.tree = parser.parse_unit();
  std::stable_sort(unit.parse_errors.begin(), unit.parse_errors.end(),
                   [](const ParseError& a, const ParseError& b) {
                     return std::pair(a.line, a.column) < std::pair(b.line, b.column);
                   });
  return unit;
}

namespace {

struct ExtractContext {
  std::string class_name;
  bool in_method = false;
};

class Extractor {
 public:
  std::vector<MethodRecord> methods;
  std::vector<ClassRecord> classes;

  void walk(const Node& n, const ExtractContext& ctx) {
    switch (n.kind) {
      case NodeKind::ClassDecl: {
        ClassRecord rec;
        rec.qualified_name = ctx.class_name.empty() ? n.name : ctx.class_name + "." + n.name;
        rec.span = n.span;
        rec.local = ctx.in_method;
        for (const auto& child : n.children) {
          if (child.kind == NodeKind::Annotation) rec.annotations.push_back(child.name);
        }
        ExtractContext inner{rec.qualified_name, ctx.in_method};
        classes.push_back(std::move(rec));
        for (const auto& child : n.children) walk(child, inner);
        return;
      }
      case NodeKind::AnonymousClassBody: {
        ExtractContext inner{ctx.class_name + "$" + std::to_string(++anonymous_[ctx.class_name]),
                             ctx.in_method};
        for (const auto& child : n.children) walk(child, inner);
        return;
      }
      case NodeKind::MethodDecl: {
        MethodRecord rec;
        rec.declaring_class = ctx.class_name;
        rec.method_name = n.name;
        rec.arity = n.arity;
        rec.is_constructor = n.is_constructor;
        rec.nested_in_method = ctx.in_method;
        rec.span = n.span;
        for (const auto& child : n.children) {
          if (child.kind == NodeKind::Annotation) rec.annotations.push_back(child.name);
          if (child.kind == NodeKind::Block) rec.body = child;
        }
        methods.push_back(std::move(rec));
        ExtractContext inner{ctx.class_name, true};
        for (const auto& child : n.children) walk(child, inner);
        return;
      }
      default:
        for (const auto& child : n.children) walk(child, ctx);
    }
  }

 private:
  std::map<std::string, int> anonymous_;
};

Extractor run_extractor(const SyntaxUnit& unit) {
  Extractor ex;
  for (const auto& type : unit.tree) ex.walk(type, {});
  return ex;
}

}  // namespace

std::vector<MethodRecord> extract_methods(const SyntaxUnit& unit) {
  return run_extractor(unit).methods;
}

std::vector<ClassRecord> extract_classes(const SyntaxUnit& unit) {
  return run_extractor(unit).classes;
}

}  // namespace cctr
