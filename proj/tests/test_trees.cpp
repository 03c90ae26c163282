#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <functional>
#include <random>

#include "gmm/catalog.hpp"
#include "gmm/error.hpp"
#include "gmm/tree.hpp"

using namespace gmm;

namespace {

Word w(const char* s) { return parse_word(s); }

FiniteTree tree_of(int window, std::initializer_list<const char*> words) {
  std::vector<Word> ws;
  for (const char* s : words) ws.push_back(w(s));
  return make_tree(2, window, ws);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::load_error;
}

}  // namespace

TEST(Materialize, Examples) {
  EXPECT_EQ(materialize(catalog_tree("F1"), 3), tree_of(3, {"e", "a", "aa", "aaa"}));
  EXPECT_EQ(materialize(catalog_tree("B0"), 2), tree_of(2, {"e", "b", "B", "bb", "BB"}));
  EXPECT_EQ(materialize(catalog_tree("K"), 1), tree_of(1, {"e", "a", "A", "b", "B"}));
}

TEST(Materialize, ReportsBrokenOracle) {
  LazyTree bad(2, [](LetterView v) { return v.size() != 1; }, "holes");
  try {
    materialize(bad, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::contract_violation);
  }
}

TEST(Act, Examples) {
  FiniteTree f = act(materialize(catalog_tree("F1"), 6), w("aa"));
  EXPECT_EQ(f, tree_of(4, {"AA", "A", "e", "a", "aa", "aaa", "aaaa"}));
  EXPECT_EQ(f.window(), 4);
  FiniteTree b0 = materialize(catalog_tree("B0"), 8);
  EXPECT_EQ(act(b0, w("b")), ball(b0, Word(2), 7));
  EXPECT_EQ(materialize(act(catalog_tree("B0"), w("b")), 8), b0);
  EXPECT_EQ(act(b0, Word(2)), b0);
  EXPECT_EQ(act(b0, Word(2)).window(), 8);
}

TEST(Act, UndefinedOffTree) {
  FiniteTree b0 = materialize(catalog_tree("B0"), 4);
  EXPECT_EQ(kind_of([&] { act(b0, w("a")); }), ErrorKind::action_undefined);
  EXPECT_EQ(kind_of([&] { act(catalog_tree("B0"), w("a")); }), ErrorKind::action_undefined);
}

TEST(Ball, Examples) {
  EXPECT_EQ(ball(catalog_tree("K"), Word(2), 1), tree_of(1, {"e", "a", "A", "b", "B"}));
  EXPECT_EQ(ball(catalog_tree("Bm", {2}), Word(2), 2), tree_of(2, {"e", "a", "A", "b", "B", "bb", "BB"}));
  EXPECT_EQ(ball(catalog_tree("F1"), w("a"), 1), tree_of(1, {"A", "e", "a"}));
}

TEST(Ball, WindowExceededCarriesLargestRadius) {
  FiniteTree t = materialize(catalog_tree("B0"), 6);
  try {
    ball(t, w("bb"), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::window_exceeded);
    EXPECT_EQ(e.payload(), 4);
  }
}

TEST(Metric, Examples) {
  MetricResult m = ball_metric(materialize(catalog_tree("Bm", {2}), 3), materialize(catalog_tree("Bm", {4}), 3));
  EXPECT_EQ(m.agreement_radius, 2);
  EXPECT_TRUE(m.exact);
  EXPECT_NEAR(m.distance, std::exp(-2.0), 1e-12);

  FiniteTree k = materialize(catalog_tree("K"), 5);
  MetricResult self = ball_metric(k, k);
  EXPECT_EQ(self.agreement_radius, 5);
  EXPECT_FALSE(self.exact);

  MetricResult bc = ball_metric(materialize(catalog_tree("B0"), 4), materialize(catalog_tree("C"), 4));
  EXPECT_EQ(bc.agreement_radius, 0);
  EXPECT_DOUBLE_EQ(bc.distance, 1.0);
  EXPECT_TRUE(bc.exact);
}

TEST(Metric, RankMismatch) {
  EXPECT_EQ(kind_of([] { ball_metric(materialize(catalog_tree("B0"), 2), materialize(catalog_tree("full", {3}), 2)); }),
            ErrorKind::incompatible_rank);
}

TEST(Validate, Examples) {
  RawTree missing{2, 2, {{}, {1, 2}}};
  ValidationReport r = validate(missing);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, Violation::missing_prefix);
  EXPECT_EQ(r.violations[0].word, "a");

  EXPECT_TRUE(validate(RawTree{2, 2, {{}, {1}, {1, 1}}}).ok());

  ValidationReport nr = validate(RawTree{2, 2, {{}, {1, -1}}});
  ASSERT_FALSE(nr.ok());
  bool saw = false;
  for (const auto& v : nr.violations) saw = saw || v.kind == Violation::non_reduced;
  EXPECT_TRUE(saw);

  EXPECT_FALSE(validate(RawTree{2, 1, {{}, {1}, {1, 1}}}).ok());
  EXPECT_FALSE(validate(RawTree{2, 1, {{1}}}).ok());
  EXPECT_EQ(kind_of([] { make_tree(RawTree{2, 2, {{}, {1, 2}}}); }), ErrorKind::contract_violation);
}

TEST(Keys, EqualIffSameTree) {
  std::vector<FiniteTree> ts;
  for (const char* n : {"B0", "C", "K", "F1", "line", "cross"})
    for (int r = 0; r <= 3; ++r) ts.push_back(ball(catalog_tree(n), Word(2), r));
  for (const auto& x : ts) {
    EXPECT_EQ(decode_key(canonical_key(x)), x.vertices());
    for (const auto& y : ts) EXPECT_EQ(canonical_key(x) == canonical_key(y), x == y && x.window() == y.window());
  }
}

TEST(Keys, LazyKeyMatchesBall) {
  LazyTree k = catalog_tree("K");
  for (const char* g : {"e", "a", "aa", "aab", "AAAA", "bbA"})
    for (int r = 0; r <= 4; ++r) EXPECT_EQ(ball_key(k, w(g), r), canonical_key(ball(k, w(g), r)));
}

TEST(TreeProperties, DistanceAtMostOne) {
  std::vector<FiniteTree> ts;
  for (const char* n : {"B0", "C", "K", "F1", "F2", "cross", "Tlevel2"}) ts.push_back(materialize(catalog_tree(n), 5));
  for (const auto& x : ts)
    for (const auto& y : ts) {
      MetricResult m = ball_metric(x, y);
      EXPECT_LE(m.distance, 1.0);
      bool r1_differs = !(ball(x, Word(2), 1) == ball(y, Word(2), 1));
      EXPECT_EQ(m.distance == 1.0, r1_differs);
    }
}

TEST(TreeProperties, ActCommutesWithTruncation) {
  LazyTree t = catalog_tree("Tlevel2");
  for (const char* g : {"a", "aab", "AAbb", "aaaB"}) {
    for (int W = 6; W <= 9; ++W) {
      FiniteTree direct = materialize(act(t, w(g)), W - static_cast<int>(std::strlen(g)));
      FiniteTree via = act(materialize(t, W), w(g));
      EXPECT_EQ(direct, via);
      EXPECT_TRUE(validate(via).ok());
    }
  }
}
