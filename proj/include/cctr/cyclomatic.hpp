#pragma once

#include "cctr/syntax.hpp"

namespace cctr {

struct CyclomaticScore {
  int total = 1;
};

/// Extended McCabe complexity: 1 + decision points. Decision points are
/// if, ternary, for, foreach, while, do, non-default case labels, catch
/// clauses and every individual `&&` / `||`. `finally` and `default` do not
/// count. An absent body scores 1.
CyclomaticScore cyclomatic_complexity(const MethodRecord& method);

/// Decision points within an arbitrary subtree.
int decision_points(const Node& root);

}  // namespace cctr
