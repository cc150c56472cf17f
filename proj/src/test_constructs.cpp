#include "cctr/test_constructs.hpp"

#include <algorithm>

#include "cctr/error.hpp"

namespace cctr {

ConstructVocabulary ConstructVocabulary::empty() {
  ConstructVocabulary v;
  v.assertion_prefixes.clear();
  v.assertion_names.clear();
  v.mock_names.clear();
  v.common_annotations.clear();
  v.specialized_annotations.clear();
  return v;
}

bool ConstructVocabulary::is_assertion(std::string_view name) const {
  if (assertion_names.contains(std::string(name))) return true;
  return std::any_of(assertion_prefixes.begin(), assertion_prefixes.end(),
                     [&](const std::string& prefix) { return name.starts_with(prefix); });
}

bool ConstructVocabulary::is_mock(std::string_view name) const {
  return mock_names.contains(std::string(name));
}

void ConstructVocabulary::validate() const {
  for (const auto& name : common_annotations) {
    if (specialized_annotations.contains(name)) {
      throw ConfigError("annotation '" + name + "' is both common and specialized");
    }
  }
  for (const auto& name : mock_names) {
    if (is_assertion(name)) {
      throw ConfigError("mock name '" + name + "' also matches the assertion vocabulary");
    }
  }
  for (const auto& prefix : assertion_prefixes) {
    if (prefix.empty()) throw ConfigError("empty assertion prefix would match every call");
  }
}

namespace {

template <typename Pred>
int count_invocations(const MethodRecord& method, Pred pred) {
  if (!method.body) return 0;
  int count = 0;
  for_each_node(*method.body, [&](const Node& n) {
    if (n.kind == NodeKind::MethodInvocation && pred(n.name)) ++count;
  });
  return count;
}

}  // namespace

int count_assertions(const MethodRecord& method, const ConstructVocabulary& vocab) {
  return count_invocations(method, [&](const std::string& name) { return vocab.is_assertion(name); });
}

int count_mocks(const MethodRecord& method, const ConstructVocabulary& vocab) {
  return count_invocations(method, [&](const std::string& name) { return vocab.is_mock(name); });
}

int annotation_score(const std::vector<std::string>& annotations, const ConstructVocabulary& vocab) {
  int score = 0;
  bool specialized_seen = false;
  for (const auto& name : annotations) {
    if (vocab.common_annotations.contains(name)) {
      score += 1;
    } else if (vocab.specialized_annotations.contains(name)) {
      if (vocab.specialized_per_occurrence || !specialized_seen) score += 2;
      specialized_seen = true;
    }
  }
  return score;
}

ConstructCounts construct_counts(const MethodRecord& method, const ConstructVocabulary& vocab) {
  return {count_assertions(method, vocab), count_mocks(method, vocab),
          annotation_score(method.annotations, vocab)};
}

}  // namespace cctr
