#include "cctr/cognitive.hpp"

#include <fmt/format.h>

namespace cctr {

RuleCategory rule_category(NodeKind kind) {
  switch (kind) {
    case NodeKind::IfStmt:
    case NodeKind::TernaryExpr:
    case NodeKind::SwitchStmt:
    case NodeKind::ForStmt:
    case NodeKind::ForeachStmt:
    case NodeKind::WhileStmt:
    case NodeKind::DoStmt:
    case NodeKind::CatchClause:
      return RuleCategory::Structural;
    case NodeKind::ElseClause:
      return RuleCategory::Hybrid;
    case NodeKind::BreakStmt:
    case NodeKind::ContinueStmt:
    case NodeKind::BinaryLogicalOp:
      return RuleCategory::Flat;
    case NodeKind::LambdaExpr:
    case NodeKind::AnonymousClassBody:
    case NodeKind::MethodDecl:
      return RuleCategory::NestingRaiser;
    case NodeKind::ClassDecl:
    case NodeKind::CaseLabel:
    case NodeKind::FinallyClause:
    case NodeKind::TryStmt:
    case NodeKind::LabeledStmt:
    case NodeKind::ReturnStmt:
    case NodeKind::ThrowStmt:
    case NodeKind::UnaryNot:
    case NodeKind::MethodInvocation:
    case NodeKind::Annotation:
    case NodeKind::Block:
    case NodeKind::Other:
      return RuleCategory::Neutral;
  }
  return RuleCategory::Neutral;
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::If: return "if";
    case Rule::ElseIf: return "else-if";
    case Rule::Else: return "else";
    case Rule::Ternary: return "ternary";
    case Rule::Switch: return "switch";
    case Rule::For: return "for";
    case Rule::Foreach: return "foreach";
    case Rule::While: return "while";
    case Rule::DoWhile: return "do-while";
    case Rule::Catch: return "catch";
    case Rule::LabeledJump: return "labeled-jump";
    case Rule::LogicalAnd: return "&&-sequence";
    case Rule::LogicalOr: return "||-sequence";
    case Rule::Recursion: return "recursion";
  }
  return "?";
}

namespace {

Rule structural_rule(NodeKind kind) {
  switch (kind) {
    case NodeKind::IfStmt: return Rule::If;
    case NodeKind::TernaryExpr: return Rule::Ternary;
    case NodeKind::SwitchStmt: return Rule::Switch;
    case NodeKind::ForStmt: return Rule::For;
    case NodeKind::ForeachStmt: return Rule::Foreach;
    case NodeKind::WhileStmt: return Rule::While;
    case NodeKind::DoStmt: return Rule::DoWhile;
    default: return Rule::Catch;
  }
}

// The `if` an else clause wraps when it forms an else-if chain: either the
// else statement itself or the sole statement of an else block.
const Node* else_if_target(const Node& else_clause) {
  if (else_clause.children.size() != 1) return nullptr;
  const Node* stmt = &else_clause.children.front();
  if (stmt->kind == NodeKind::Block && stmt->children.size() == 1) stmt = &stmt->children.front();
  return stmt->kind == NodeKind::IfStmt ? stmt : nullptr;
}

class CognitiveVisitor {
 public:
  explicit CognitiveVisitor(const MethodRecord& method) : method_(method) {}

  CognitiveScore run() {
    if (method_.body) visit(*method_.body, 0, /*top_level_method=*/true);
    return std::move(score_);
  }

 private:
  void add(const Span& span, Rule rule, int increment, int nesting) {
    score_.contributions.push_back({span, rule, increment, nesting});
    score_.total += increment;
  }

  void visit_children(const Node& n, int nesting, bool top) {
    for (const auto& child : n.children) visit(child, nesting, top);
  }

  void visit_if(const Node& n, int nesting, bool else_if, bool top) {
    if (else_if) {
      add(n.span, Rule::ElseIf, 1, nesting);
    } else {
      add(n.span, Rule::If, 1 + nesting, nesting);
    }
    // condition, then-statement, optional else clause
    if (!n.children.empty()) visit(n.children[0], nesting, top);
    if (n.children.size() > 1) visit(n.children[1], nesting + 1, top);
    if (n.children.size() > 2) {
      const Node& else_clause = n.children[2];
      if (const Node* chained = else_if_target(else_clause)) {
        visit_if(*chained, nesting, true, top);
      } else {
        add(else_clause.span, Rule::Else, 1, nesting);
        visit_children(else_clause, nesting + 1, top);
      }
    }
  }

  // Operators of a logical expression in source order; parentheses are
  // already transparent in the tree and negation is looked through.
  static void flatten(const Node& n, std::vector<const Node*>& ops,
                      std::vector<const Node*>& operands) {
    if (n.kind == NodeKind::BinaryLogicalOp && n.children.size() == 2) {
      flatten(n.children[0], ops, operands);
      ops.push_back(&n);
      flatten(n.children[1], ops, operands);
    } else if (n.kind == NodeKind::UnaryNot && n.children.size() == 1) {
      flatten(n.children[0], ops, operands);
    } else {
      operands.push_back(&n);
    }
  }

  void visit_logical(const Node& n, int nesting, bool top) {
    std::vector<const Node*> ops;
    std::vector<const Node*> operands;
    flatten(n, ops, operands);
    const Node* previous = nullptr;
    for (const Node* op : ops) {
      if (previous == nullptr || previous->op != op->op) {
        add(op->span, op->op == LogicalOp::And ? Rule::LogicalAnd : Rule::LogicalOr, 1, nesting);
      }
      previous = op;
    }
    for (const Node* operand : operands) visit(*operand, nesting, top);
  }

  void visit(const Node& n, int nesting, bool top) {
    switch (n.kind) {
      case NodeKind::IfStmt:
        visit_if(n, nesting, false, top);
        return;
      case NodeKind::BinaryLogicalOp:
      case NodeKind::UnaryNot:
        visit_logical(n, nesting, top);
        return;
      case NodeKind::BreakStmt:
      case NodeKind::ContinueStmt:
        if (!n.name.empty()) add(n.span, Rule::LabeledJump, 1, nesting);
        return;
      case NodeKind::MethodInvocation:
        if (top && !recursion_counted_ && is_direct_recursion(n)) {
          recursion_counted_ = true;
          add(n.span, Rule::Recursion, 1, nesting);
        }
        visit_children(n, nesting, top);
        return;
      case NodeKind::AnonymousClassBody:
        // Member methods of the body sit one level deeper, not two.
        for (const auto& child : n.children) {
          if (child.kind == NodeKind::MethodDecl) {
            visit_children(child, nesting + 1, false);
          } else {
            visit(child, nesting + 1, false);
          }
        }
        return;
      case NodeKind::ClassDecl:
        // Local class: fields and initialisers are neutral, methods nest.
        visit_children(n, nesting, false);
        return;
      default:
        break;
    }
    switch (rule_category(n.kind)) {
      case RuleCategory::Structural:
        add(n.span, structural_rule(n.kind), 1 + nesting, nesting);
        visit_children(n, nesting + 1, top);
        return;
      case RuleCategory::NestingRaiser:
        visit_children(n, nesting + 1, n.kind == NodeKind::LambdaExpr && top);
        return;
      case RuleCategory::Hybrid:  // stray else clause; reached only via visit_if
      case RuleCategory::Flat:
      case RuleCategory::Neutral:
        visit_children(n, nesting, top);
        return;
    }
  }

  bool is_direct_recursion(const Node& call) const {
    if (method_.is_constructor) return false;
    if (call.name != method_.method_name || call.arity != method_.arity) return false;
    return !call.qualified() || call.qualifier == "this";
  }

  const MethodRecord& method_;
  CognitiveScore score_;
  bool recursion_counted_ = false;
};

}  // namespace

CognitiveScore cognitive_complexity(const MethodRecord& method) {
  return CognitiveVisitor(method).run();
}

std::vector<std::string> explain(const CognitiveScore& score) {
  std::vector<std::string> lines;
  lines.reserve(score.contributions.size());
  for (const auto& c : score.contributions) {
    lines.push_back(fmt::format("{}:{} {} +{} (nesting={})", c.span.begin.line, c.span.begin.column,
                                to_string(c.rule), c.increment, c.nesting_level));
  }
  return lines;
}

}  // namespace cctr
