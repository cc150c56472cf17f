#include "cctr/cctr_score.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numeric>

#include "cctr/cognitive.hpp"
#include "cctr/cyclomatic.hpp"
#include "cctr/error.hpp"

namespace cctr {

void WeightConfig::validate() const {
  for (double w : {alpha, beta, gamma, delta}) {
    if (!std::isfinite(w) || w < 0.0) throw ConfigError("weights must be finite and non-negative");
  }
}

bool WeightConfig::integral() const {
  return std::trunc(alpha) == alpha && std::trunc(beta) == beta && std::trunc(gamma) == gamma &&
         std::trunc(delta) == delta;
}

WeightConfig WeightConfig::scaled(double factor) const {
  return {alpha * factor, beta * factor, gamma * factor, delta * factor};
}

WeightConfig WeightConfig::parse(std::string_view text) {
  double values[4];
  std::size_t count = 0;
  while (true) {
    const auto comma = text.find(',');
    std::string_view field = text.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (count == 4) throw ConfigError("expected four weights, got more");
    double value = 0.0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw ConfigError("invalid weight '" + std::string(field) + "'");
    }
    values[count++] = value;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (count != 4) throw ConfigError("expected four weights alpha,beta,gamma,delta");
  WeightConfig w{values[0], values[1], values[2], values[3]};
  w.validate();
  return w;
}

double score_method(int n, int a, int m, int t, const WeightConfig& w) {
  return w.alpha * n + w.beta * a + w.gamma * m + w.delta * t;
}

MetricVector::MetricVector(int n, int a, int m, int t, int cyclomatic, double cctr,
                           const WeightConfig& w)
    : n_(n), a_(a), m_(m), t_(t), cyclomatic_(cyclomatic), cctr_(cctr) {
  if (n < 0 || a < 0 || m < 0 || t < 0) throw std::invalid_argument("negative metric component");
  if (cctr != score_method(n, a, m, t, w)) {
    throw std::invalid_argument("cctr does not match the weighted component sum");
  }
}

MetricVector MetricVector::compute(int n, const ConstructCounts& counts, int cyclomatic,
                                   const WeightConfig& w) {
  return {n,          counts.a, counts.m, counts.t, cyclomatic,
          score_method(n, counts.a, counts.m, counts.t, w), w};
}

namespace {

template <typename Fn>
int sum_over(const std::vector<MethodScore>& methods, Fn fn) {
  return std::accumulate(methods.begin(), methods.end(), 0,
                         [&](int acc, const MethodScore& s) { return acc + fn(s.metrics); });
}

}  // namespace

int ClassMetrics::total_n() const { return sum_over(methods, [](auto& v) { return v.n(); }); }
int ClassMetrics::total_a() const { return sum_over(methods, [](auto& v) { return v.a(); }); }
int ClassMetrics::total_m() const { return sum_over(methods, [](auto& v) { return v.m(); }); }
int ClassMetrics::total_t() const {
  return sum_over(methods, [](auto& v) { return v.t(); }) + class_annotation_t;
}
int ClassMetrics::total_cyclomatic() const {
  return sum_over(methods, [](auto& v) { return v.cyclomatic(); });
}

ClassMetrics score_class(std::string class_name, std::vector<MethodScore> methods,
                         int class_annotation_t, const WeightConfig& w) {
  ClassMetrics out;
  out.class_name = std::move(class_name);
  out.methods = std::move(methods);
  out.class_annotation_t = class_annotation_t;
  double total = 0.0;
  for (const auto& m : out.methods) total += m.metrics.cctr();
  out.class_cctr = total + w.delta * class_annotation_t;
  return out;
}

MetricVector analyze_method(const MethodRecord& method, const ConstructVocabulary& vocab,
                            const WeightConfig& w) {
  return MetricVector::compute(cognitive_complexity(method).total, construct_counts(method, vocab),
                               cyclomatic_complexity(method).total, w);
}

std::vector<ClassMetrics> analyze_unit(const SyntaxUnit& unit, const ConstructVocabulary& vocab,
                                       const WeightConfig& w) {
  std::map<std::string, std::vector<MethodScore>> by_class;
  for (const auto& method : extract_methods(unit)) {
    if (method.nested_in_method) continue;
    by_class[method.declaring_class].push_back(
        {method.method_name, method.span.begin.line, analyze_method(method, vocab, w)});
  }
  std::vector<ClassMetrics> out;
  for (const auto& cls : extract_classes(unit)) {
    if (cls.local) continue;
    auto it = by_class.find(cls.qualified_name);
    std::vector<MethodScore> methods;
    if (it != by_class.end()) methods = std::move(it->second);
    ClassMetrics metrics = score_class(cls.qualified_name, std::move(methods),
                                       annotation_score(cls.annotations, vocab), w);
    metrics.line = cls.span.begin.line;
    out.push_back(std::move(metrics));
  }
  return out;
}

}  // namespace cctr
