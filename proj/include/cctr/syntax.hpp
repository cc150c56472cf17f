#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cctr {

/// Closed node vocabulary shared by every metric. Constructs the metrics do
/// not read (types, literals, arithmetic, field declarations, ...) are
/// reported as `Other`.
enum class NodeKind {
  ClassDecl,
  MethodDecl,
  LambdaExpr,
  AnonymousClassBody,
  IfStmt,
  ElseClause,
  TernaryExpr,
  SwitchStmt,
  CaseLabel,
  ForStmt,
  ForeachStmt,
  WhileStmt,
  DoStmt,
  CatchClause,
  FinallyClause,
  TryStmt,
  BreakStmt,
  ContinueStmt,
  LabeledStmt,
  ReturnStmt,
  ThrowStmt,
  BinaryLogicalOp,
  UnaryNot,
  MethodInvocation,
  Annotation,
  Block,
  Other,
};

inline constexpr NodeKind kAllNodeKinds[] = {
    NodeKind::ClassDecl,       NodeKind::MethodDecl,     NodeKind::LambdaExpr,
    NodeKind::AnonymousClassBody, NodeKind::IfStmt,      NodeKind::ElseClause,
    NodeKind::TernaryExpr,     NodeKind::SwitchStmt,     NodeKind::CaseLabel,
    NodeKind::ForStmt,         NodeKind::ForeachStmt,    NodeKind::WhileStmt,
    NodeKind::DoStmt,          NodeKind::CatchClause,    NodeKind::FinallyClause,
    NodeKind::TryStmt,         NodeKind::BreakStmt,      NodeKind::ContinueStmt,
    NodeKind::LabeledStmt,     NodeKind::ReturnStmt,     NodeKind::ThrowStmt,
    NodeKind::BinaryLogicalOp, NodeKind::UnaryNot,       NodeKind::MethodInvocation,
    NodeKind::Annotation,      NodeKind::Block,          NodeKind::Other,
};

std::string_view to_string(NodeKind kind);

enum class LogicalOp { And, Or };

/// 1-based line and column (columns count code points).
struct Position {
  int line = 0;
  int column = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

struct Span {
  Position begin;
  Position end;

  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

/// One node of the structural tree.
///
/// Child layout for the kinds the metrics inspect:
///   ClassDecl          annotations, then members
///   MethodDecl         annotations, then the body Block (absent if abstract)
///   IfStmt             condition, then-statement, optional ElseClause
///   ElseClause         the else statement
///   TernaryExpr        condition, true branch, false branch
///   SwitchStmt         selector, then CaseLabel / statement nodes in order
///   TryStmt            resources (Other), Block, CatchClause*, FinallyClause?
///   LabeledStmt        the labelled statement
///   BinaryLogicalOp    left operand, right operand (parentheses dropped)
///   UnaryNot           operand
///   MethodInvocation   receiver expression (when qualified), arguments
struct Node {
  NodeKind kind = NodeKind::Other;
  Span span;
  // Class, method, callee, annotation or label name (simple, unqualified).
  std::string name;
  LogicalOp op = LogicalOp::And;
  // MethodInvocation: receiver text when it is a plain name, `this` or
  // `super`; "<expr>" for any other receiver; empty when unqualified.
  std::string qualifier;
  // Annotation: parenthesised element values present.
  bool has_arguments = false;
  // CaseLabel: `default` (including `case null, default`).
  bool is_default = false;
  // MethodDecl: constructor (including compact record constructors).
  bool is_constructor = false;
  // MethodDecl: parameter count. MethodInvocation: argument count.
  int arity = 0;
  std::vector<Node> children;

  bool qualified() const { return !qualifier.empty(); }
};

struct ParseError {
  int line = 0;
  int column = 0;
  std::string message;
};

/// Parsed form of one source file. `tree` holds the salvaged top-level type
/// declarations in source order.
struct SyntaxUnit {
  std::filesystem::path path;
  std::vector<Node> tree;
  std::vector<ParseError> parse_errors;

  bool ok() const { return parse_errors.empty(); }
  /// Errors were reported but at least one type declaration survived.
  bool partial() const { return !parse_errors.empty() && !tree.empty(); }
  /// Errors were reported and nothing could be salvaged.
  bool failed() const { return !parse_errors.empty() && tree.empty(); }
};

struct MethodRecord {
  std::string declaring_class;  // dotted, e.g. "Outer.Inner"; "Outer$1" for anonymous
  std::string method_name;
  int arity = 0;
  bool is_constructor = false;
  // Declared inside a method body (local or anonymous class). Such methods
  // are already part of the enclosing method's body.
  bool nested_in_method = false;
  std::vector<std::string> annotations;
  std::optional<Node> body;
  Span span;
};

struct ClassRecord {
  std::string qualified_name;
  std::vector<std::string> annotations;
  Span span;
  bool local = false;  // declared inside a method body
};

SyntaxUnit parse_source(std::string_view text, const std::filesystem::path& path = {});

/// One record per MethodDecl node, in source order.
std::vector<MethodRecord> extract_methods(const SyntaxUnit& unit);

/// One record per ClassDecl node, in source order.
std::vector<ClassRecord> extract_classes(const SyntaxUnit& unit);

/// Pre-order walk over `root` and all descendants.
template <typename Fn>
void for_each_node(const Node& root, Fn&& fn) {
  fn(root);
  for (const auto& child : root.children) for_each_node(child, fn);
}

}  // namespace cctr
