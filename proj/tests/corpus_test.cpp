#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cctr/corpus.hpp"
#include "cctr/error.hpp"
#include "support/helpers.hpp"

namespace cctr {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;
using testing::write_file;

std::vector<std::string> relatives(const std::vector<SourceFile>& files) {
  std::vector<std::string> out;
  for (const auto& f : files) out.push_back(f.relative);
  return out;
}

TEST(Glob, Semantics) {
  EXPECT_TRUE(glob_match("**/*.java", "A.java"));
  EXPECT_TRUE(glob_match("**/*.java", "a/b/A.java"));
  EXPECT_FALSE(glob_match("*.java", "a/A.java"));
  EXPECT_TRUE(glob_match("**/*Test.java", "x/FooTest.java"));
  EXPECT_FALSE(glob_match("**/*Test.java", "x/Foo.java"));
  EXPECT_TRUE(glob_match("gen-?/**", "gen-a/x/Y.java"));
  EXPECT_TRUE(glob_match("[ab]*/*.java", "b1/Z.java"));
  EXPECT_FALSE(glob_match("[!ab]*/*.java", "b1/Z.java"));
}

TEST(Scan, OrderingAndFilters) {
  TempDir dir("scan");
  EXPECT_TRUE(scan({dir.path()}).empty());
  write_file(dir.path() / "B.java", "class B {}");
  write_file(dir.path() / "A.java", "class A {}");
  write_file(dir.path() / "notes.txt", "");
  EXPECT_EQ(relatives(scan({dir.path()})), (std::vector<std::string>{"A.java", "B.java"}));

  write_file(dir.path() / "t" / "FooTest.java", "class FooTest {}");
  write_file(dir.path() / "t" / "Foo.java", "class Foo {}");
  ScanOptions tests_only;
  tests_only.include = {"**/*Test.java"};
  EXPECT_EQ(relatives(scan({dir.path() / "t"}, tests_only)), std::vector<std::string>{"FooTest.java"});

  ScanOptions excluding;
  excluding.exclude = {"t/**"};
  EXPECT_EQ(relatives(scan({dir.path()}, excluding)), (std::vector<std::string>{"A.java", "B.java"}));
  // overlapping roots are deduplicated
  EXPECT_EQ(scan({dir.path(), dir.path() / "A.java"}).size(), 4u);
}

TEST(Scan, MissingRootIsFatal) {
  try {
    scan({"/definitely/not/here"});
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/definitely/not/here"), std::string::npos);
  }
}

TEST(Labeler, DepthAndRules) {
  const SourceFile deep{"/c/gen-a/model/X.java", "/c", "gen-a/model/X.java"};
  const SourceFile flat{"/c/Y.java", "/c", "Y.java"};
  EXPECT_EQ(Labeler::by_depth(1).label(deep), "gen-a");
  EXPECT_EQ(Labeler::by_depth(2).label(deep), "gen-a/model");
  EXPECT_EQ(Labeler::by_depth(1).label(flat), "c");
  const auto rules = Labeler::by_rules({{"gen-a/**", "A"}, {"**/*.java", "other"}});
  EXPECT_EQ(rules.label(deep), "A");
  EXPECT_EQ(rules.label(flat), "other");
  EXPECT_EQ(Labeler::by_rules({{"zzz/**", "Z"}}).label(flat), "unlabeled");

  TempDir dir("labels");
  write_file(dir.path() / "map.tsv", "# comment\ngen-a/**\tGenerator A\n\n**\trest\n");
  EXPECT_EQ(Labeler::from_file(dir.path() / "map.tsv").label(deep), "Generator A");
  write_file(dir.path() / "bad.tsv", "no tab here\n");
  EXPECT_THROW(Labeler::from_file(dir.path() / "bad.tsv"), ConfigError);
}

TEST(AnalyzeCorpus, RecordsAndLabels) {
  EXPECT_TRUE(analyze_corpus({}, Labeler::by_depth(1), {}, {}).records.empty());

  TempDir dir("corpus");
  write_file(dir.path() / "gen-a" / "One.java", "class One { @Test void t() { assertTrue(a); } }");
  write_file(dir.path() / "gen-a" / "Two.java", testing::read_file(testing::fixture("TwoClasses.java")));
  write_file(dir.path() / "gen-b" / "Three.java", "class Three {}");
  write_file(dir.path() / "gen-b" / "Broken.java", "class { {");
  const auto result = analyze_corpus(scan({dir.path()}), Labeler::by_depth(1), {}, {});
  ASSERT_EQ(result.records.size(), 4u);
  EXPECT_EQ(result.records[0].class_metrics.class_name, "One");
  EXPECT_EQ(result.records[1].class_metrics.class_name, "FirstTest");
  EXPECT_EQ(result.records[2].class_metrics.class_name, "SecondTest");
  EXPECT_EQ(result.records[3].class_metrics.class_name, "Three");
  EXPECT_EQ(result.records[0].group_label, "gen-a");
  EXPECT_EQ(result.records[2].group_label, "gen-a");
  EXPECT_EQ(result.records[3].group_label, "gen-b");
  ASSERT_EQ(result.failed.size(), 1u);
  EXPECT_EQ(result.failed[0].path.filename(), "Broken.java");
}

TEST(AnalyzeCorpus, PartialFilesKeepSalvagedClasses) {
  TempDir dir("partial");
  write_file(dir.path() / "P.java", "class P { void a() { x(); } void b() { if ( } }\n");
  const auto result = analyze_corpus(scan({dir.path()}), Labeler::by_depth(1), {}, {});
  ASSERT_EQ(result.records.size(), 1u);
  EXPECT_TRUE(result.records[0].partial);
  EXPECT_EQ(result.records[0].class_metrics.methods.size(), 1u);
  EXPECT_TRUE(result.failed.empty());
}

TEST(AnalyzeCorpus, WorkerCountDoesNotChangeResults) {
  TempDir dir("workers");
  for (int i = 0; i < 20; ++i) {
    write_file(dir.path() / ("g" + std::to_string(i % 3)) / ("F" + std::to_string(i) + ".java"),
               "class F" + std::to_string(i) + " { @Test void t() { if (a) { assertTrue(b); } } }");
  }
  const auto files = scan({dir.path()});
  const auto one = analyze_corpus(files, Labeler::by_depth(1), {}, {}, 1);
  const auto many = analyze_corpus(files, Labeler::by_depth(1), {}, {}, 8);
  ASSERT_EQ(one.records.size(), many.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    EXPECT_EQ(one.records[i].path, many.records[i].path);
    EXPECT_EQ(one.records[i].class_metrics.class_cctr, many.records[i].class_metrics.class_cctr);
  }
}

TEST(Summary, QuartileExamples) {
  EXPECT_EQ(summarize_values({0, 1, 2, 3, 4}), (SummaryStats{0, 1, 2, 3, 4, 2, 5}));
  EXPECT_EQ(summarize_values({5}), (SummaryStats{5, 5, 5, 5, 5, 5, 1}));
  EXPECT_EQ(summarize_values({1, 2, 3, 4}), (SummaryStats{1, 1.75, 2.5, 3.25, 4, 2.5, 4}));
}

TEST(Summary, BoundsAgainstSortedOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> values(std::uniform_int_distribution<int>(1, 40)(rng));
    for (auto& v : values) v = std::uniform_int_distribution<int>(0, 100)(rng);
    const auto s = summarize_values(values);
    std::sort(values.begin(), values.end());
    EXPECT_EQ(s.min, values.front());
    EXPECT_EQ(s.max, values.back());
    EXPECT_LE(s.min, s.q1);
    EXPECT_LE(s.q1, s.median);
    EXPECT_LE(s.median, s.q3);
    EXPECT_LE(s.q3, s.max);
    EXPECT_GE(s.mean, s.min);
    EXPECT_LE(s.mean, s.max);
  }
}

TEST(Summary, PermutationInvariance) {
  std::mt19937 rng(3);
  std::vector<double> values;
  for (int i = 0; i < 101; ++i) values.push_back(std::uniform_real_distribution<double>(0, 50)(rng));
  const auto base = summarize_values(values);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(values.begin(), values.end(), rng);
    EXPECT_EQ(summarize_values(values), base);
  }
}

TEST(Summary, EmptyGroupsAreOmittedWithWarning) {
  const auto s = summarize_samples({{"a", 1.0}, {"a", 3.0}}, {"a", "b"});
  ASSERT_EQ(s.groups.size(), 1u);
  EXPECT_EQ(s.groups.at("a").mean, 2.0);
  ASSERT_EQ(s.warnings.size(), 1u);
  EXPECT_NE(s.warnings[0].find("'b'"), std::string::npos);
}

TEST(Summary, MetricNames) {
  EXPECT_EQ(parse_metric("cctr"), Metric::Cctr);
  EXPECT_EQ(parse_metric("cognitive"), Metric::Cognitive);
  EXPECT_EQ(parse_metric("cyclomatic"), Metric::Cyclomatic);
  EXPECT_THROW(parse_metric("halstead"), ConfigError);
}

}  // namespace
}  // namespace cctr
