#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cctr/syntax.hpp"

namespace cctr {

/// How a node kind participates in cognitive complexity.
enum class RuleCategory {
  Structural,     // +1 plus nesting level; raises nesting for its contents
  Hybrid,         // +1, no nesting penalty; contents still nested one deeper
  Flat,           // +1, no nesting penalty, no nesting raise
  NestingRaiser,  // no increment; raises nesting for its contents
  Neutral,
};

/// The rule table. Total over NodeKind. Kinds whose increment depends on
/// context are classified by their increment-bearing form:
/// `break`/`continue` are Flat but only score with a label, a logical
/// operator scores once per maximal run of the same operator, and an `if`
/// that is the sole statement of an `else` scores as a Hybrid else-if.
RuleCategory rule_category(NodeKind kind);

enum class Rule {
  If,
  ElseIf,
  Else,
  Ternary,
  Switch,
  For,
  Foreach,
  While,
  DoWhile,
  Catch,
  LabeledJump,
  LogicalAnd,
  LogicalOr,
  Recursion,
};

std::string_view to_string(Rule rule);

struct Contribution {
  Span span;
  Rule rule = Rule::If;
  int increment = 1;
  int nesting_level = 0;
};

struct CognitiveScore {
  int total = 0;
  std::vector<Contribution> contributions;  // in traversal (source) order
};

/// Cognitive Complexity of a method body, SonarSource rules. An absent body
/// scores 0.
CognitiveScore cognitive_complexity(const MethodRecord& method);

/// One line per contribution: `line:col rule +n (nesting=m)`.
std::vector<std::string> explain(const CognitiveScore& score);

}  // namespace cctr
