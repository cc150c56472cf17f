#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cctr/syntax.hpp"
#include "cctr/test_constructs.hpp"

namespace cctr {

/// Weights of the CCTR combination alpha*N + beta*A + gamma*M + delta*T.
struct WeightConfig {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double delta = 1.0;

  /// Throws ConfigError unless every weight is finite and non-negative.
  void validate() const;
  /// All four weights are whole numbers; scores then render as integers.
  bool integral() const;
  WeightConfig scaled(double factor) const;

  /// Parses "alpha,beta,gamma,delta", e.g. "1,1,0.5,2". Throws ConfigError.
  static WeightConfig parse(std::string_view text);

  friend bool operator==(const WeightConfig&, const WeightConfig&) = default;
};

double score_method(int n, int a, int m, int t, const WeightConfig& w);

/// Per-method metric values. The constructor rejects a cctr that differs
/// from the weighted sum of the components.
class MetricVector {
 public:
  MetricVector(int n, int a, int m, int t, int cyclomatic, double cctr, const WeightConfig& w);

  static MetricVector compute(int n, const ConstructCounts& counts, int cyclomatic,
                              const WeightConfig& w);

  int n() const { return n_; }
  int a() const { return a_; }
  int m() const { return m_; }
  int t() const { return t_; }
  int cyclomatic() const { return cyclomatic_; }
  double cctr() const { return cctr_; }

 private:
  int n_;
  int a_;
  int m_;
  int t_;
  int cyclomatic_;
  double cctr_;
};

struct MethodScore {
  std::string method;
  int line = 0;
  MetricVector metrics;
};

struct ClassMetrics {
  std::string class_name;
  int line = 0;
  std::vector<MethodScore> methods;
  int class_annotation_t = 0;
  double class_cctr = 0.0;

  // Component sums over the methods; t includes the class annotation term.
  int total_n() const;
  int total_a() const;
  int total_m() const;
  int total_t() const;
  int total_cyclomatic() const;
};

/// class_cctr = sum of method cctr + delta * class_annotation_t.
ClassMetrics score_class(std::string class_name, std::vector<MethodScore> methods,
                         int class_annotation_t, const WeightConfig& w);

MetricVector analyze_method(const MethodRecord& method, const ConstructVocabulary& vocab,
                            const WeightConfig& w);

/// One ClassMetrics per named, non-local class in source order. Methods of
/// anonymous and local classes are part of their enclosing method and are not
/// scored again.
std::vector<ClassMetrics> analyze_unit(const SyntaxUnit& unit, const ConstructVocabulary& vocab,
                                       const WeightConfig& w);

}  // namespace cctr
