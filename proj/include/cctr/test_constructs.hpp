#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cctr/syntax.hpp"

namespace cctr {

/// Names that identify assertions, mocking calls and test annotations. All
/// matching is by simple name; qualifiers and arguments are ignored.
struct ConstructVocabulary {
  // A callee is an assertion if it starts with one of the prefixes or is
  // listed in assertion_names.
  std::set<std::string> assertion_prefixes{"assert"};
  std::set<std::string> assertion_names{"fail"};
  std::set<std::string> mock_names{"mock", "verify", "when"};
  std::set<std::string> common_annotations{"Test",       "BeforeEach", "AfterEach",
                                           "Before",     "After",      "BeforeAll",
                                           "AfterAll",   "BeforeClass", "AfterClass"};
  std::set<std::string> specialized_annotations{"ParameterizedTest", "RepeatedTest",
                                                "TestFactory", "TestTemplate"};
  // false: specialised annotations add +2 once per method, for their
  // presence, however many occur.
  bool specialized_per_occurrence = true;

  static ConstructVocabulary empty();

  bool is_assertion(std::string_view name) const;
  bool is_mock(std::string_view name) const;

  /// Throws ConfigError when the annotation sets overlap or a mock name would
  /// also match the assertion rule.
  void validate() const;
};

struct ConstructCounts {
  int a = 0;  // assertions
  int m = 0;  // mock constructs
  int t = 0;  // annotation score
};

/// Assertion invocations anywhere in the body, lambdas included.
int count_assertions(const MethodRecord& method, const ConstructVocabulary& vocab);
int count_mocks(const MethodRecord& method, const ConstructVocabulary& vocab);
/// +1 per common annotation, +2 per specialised annotation.
int annotation_score(const std::vector<std::string>& annotations, const ConstructVocabulary& vocab);

ConstructCounts construct_counts(const MethodRecord& method, const ConstructVocabulary& vocab);

}  // namespace cctr
