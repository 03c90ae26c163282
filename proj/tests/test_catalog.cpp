#include <gtest/gtest.h>

#include <random>

#include "gmm/catalog.hpp"
#include "gmm/error.hpp"
#include "gmm/reference.hpp"

using namespace gmm;

namespace {

Word w(const std::string& s) { return parse_word(s); }

struct Named {
  std::string name;
  std::vector<int> params;
};

std::vector<Named> entries() {
  return {{"full", {}}, {"ray", {}}, {"line", {}},    {"A0", {}}, {"cross", {}}, {"B0", {}},      {"Bm", {1}},
          {"Bm", {2}},  {"Bm", {5}}, {"B0prime", {}}, {"C", {}},  {"Tlevel2", {}}, {"K", {}}, {"F1", {}}, {"F2", {}}};
}

std::string random_reduced(std::mt19937& rng, int len) {
  const Letter ls[] = {1, -1, 2, -2};
  std::string s;
  while (static_cast<int>(s.size()) < len) {
    Letter l = ls[rng() % 4];
    if (!s.empty() && static_cast<Letter>(s.back()) == inverse(l)) continue;
    s.push_back(static_cast<char>(l));
  }
  return s;
}

// Words that stay close to a tree: random walks inside it, with a final random step.
std::vector<std::string> probes(const LazyTree& t, std::mt19937& rng, int count, int len) {
  std::vector<std::string> out;
  const Letter ls[] = {1, -1, 2, -2};
  for (int i = 0; i < count; ++i) {
    std::string s;
    for (int step = 0; step < 4 * len && static_cast<int>(s.size()) < len; ++step) {
      Letter l = ls[rng() % 4];
      if (!s.empty() && static_cast<Letter>(s.back()) == inverse(l)) continue;
      std::string next = s + static_cast<char>(l);
      if (t.member(next) || rng() % 8 == 0) s = next;
      if (!t.member(s)) break;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Catalog, MembershipExamples) {
  LazyTree k = catalog_tree("K");
  EXPECT_TRUE(k.member(w("aaaa")));
  // K attaches a^{+-1} at b^{+-1} of the level-0 block, so "ba" is a vertex.
  EXPECT_TRUE(k.member(w("ba")));
  EXPECT_TRUE(k.member(w("bbbbba")));
  EXPECT_TRUE(k.member(w("ab")));
  EXPECT_FALSE(k.member(w("abb")));
  EXPECT_FALSE(k.member(w("aba")));
  EXPECT_TRUE(k.member(w("aaba")));
  EXPECT_FALSE(k.member(w("aabba")));
  EXPECT_TRUE(k.member(w("aaaabbba")));
  EXPECT_TRUE(k.member(w("aaaabbbb")));
  EXPECT_FALSE(k.member(w("aaaabbbba")));
  EXPECT_FALSE(k.member(w("aaaabbbbb")));

  LazyTree b2 = catalog_tree("Bm", {2});
  EXPECT_TRUE(b2.member(w("bba")));
  EXPECT_FALSE(b2.member(w("ba")));

  LazyTree f2 = catalog_tree("F2");
  EXPECT_TRUE(f2.member(w("ab")));
  EXPECT_FALSE(f2.member(w("Ba")));
}

TEST(Catalog, Errors) {
  auto kind = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::load_error;
  };
  EXPECT_EQ(kind([] { catalog_tree("nope"); }), ErrorKind::unknown_name);
  EXPECT_EQ(kind([] { catalog_tree("Bm", {0}); }), ErrorKind::invalid_params);
  EXPECT_EQ(kind([] { catalog_tree("Bm"); }), ErrorKind::invalid_params);
  EXPECT_EQ(kind([] { catalog_tree("Bm", {-2}); }), ErrorKind::invalid_params);
  EXPECT_EQ(kind([] { catalog_tree("cross", {1, 1}); }), ErrorKind::invalid_axes);
}

TEST(Catalog, EntriesCarryCitations) {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name, name == "Bm" ? std::vector<int>{3} : std::vector<int>{});
    EXPECT_EQ(e.name, name);
    EXPECT_FALSE(e.citation.empty());
  }
}

TEST(Catalog, MatchesReferenceSets) {
  for (const auto& [n, p] : entries()) {
    int W = n == "full" || n == "F2" ? 6 : 12;
    EXPECT_EQ(materialize(catalog_tree(n, p), W), ref::to_tree(2, W, ref::catalog_set(n, p, W))) << n;
  }
  EXPECT_EQ(materialize(catalog_tree("K"), 40), ref::to_tree(2, 40, ref::catalog_set("K", {}, 40)));
}

TEST(Catalog, PrefixClosedOnRandomWords) {
  std::mt19937 rng(11);
  for (const auto& [n, p] : entries()) {
    LazyTree t = catalog_tree(n, p);
    std::vector<std::string> ws = probes(t, rng, 2000, 12);
    for (int i = 0; i < 2000; ++i) ws.push_back(random_reduced(rng, 1 + i % 12));
    for (const auto& s : ws) {
      if (!t.member(s)) continue;
      for (std::size_t k = 0; k < s.size(); ++k) ASSERT_TRUE(t.member(LetterView(s).substr(0, k))) << n << " " << s;
    }
  }
}

TEST(Catalog, InfiniteEntriesGrowWithWindow) {
  for (const auto& [n, p] : entries()) {
    std::size_t prev = 0;
    for (int W = 0; W <= 8; ++W) {
      std::size_t s = materialize(catalog_tree(n, p), W).size();
      EXPECT_GT(s, prev) << n << " W=" << W;
      prev = s;
    }
  }
}

TEST(Catalog, BmTranslationInvariant) {
  for (int m = 1; m <= 6; ++m) {
    LazyTree t = catalog_tree("Bm", {m});
    Word g = power(w("b"), m);
    for (int W = 2; W <= 14; W += 4) EXPECT_EQ(materialize(act(t, g), W), materialize(t, W)) << m;
  }
}

TEST(Catalog, KRecurrenceSeed) {
  LazyTree k = catalog_tree("K");
  for (int i = 1; i <= 5; ++i) {
    long n = 1L << i;
    int r = static_cast<int>(n) - 1;
    EXPECT_EQ(ball(k, power(w("a"), n), r), ball(k, Word(2), r));
    EXPECT_EQ(ball(k, power(w("a"), -n), r), ball(k, Word(2), r));
    EXPECT_FALSE(ball(k, power(w("a"), n), r + 2) == ball(k, Word(2), r + 2));
  }
}

TEST(Catalog, TwoAdicValuation) {
  EXPECT_EQ(two_adic_valuation(1), 0);
  EXPECT_EQ(two_adic_valuation(12), 2);
  EXPECT_EQ(two_adic_valuation(-32), 5);
}
