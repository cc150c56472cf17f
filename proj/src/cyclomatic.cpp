#include "cctr/cyclomatic.hpp"

namespace cctr {

int decision_points(const Node& root) {
  int count = 0;
  for_each_node(root, [&](const Node& n) {
    switch (n.kind) {
      case NodeKind::IfStmt:
      case NodeKind::TernaryExpr:
      case NodeKind::ForStmt:
      case NodeKind::ForeachStmt:
      case NodeKind::WhileStmt:
      case NodeKind::DoStmt:
      case NodeKind::CatchClause:
      case NodeKind::BinaryLogicalOp:
        ++count;
        break;
      case NodeKind::CaseLabel:
        if (!n.is_default) ++count;
        break;
      default:
        break;
    }
  });
  return count;
}

CyclomaticScore cyclomatic_complexity(const MethodRecord& method) {
  if (!method.body) return {};
  return {1 + decision_points(*method.body)};
}

}  // namespace cctr
