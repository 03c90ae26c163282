#include <gtest/gtest.h>

#include <map>

#include "gmm/catalog.hpp"
#include "gmm/constructions.hpp"
#include "gmm/dynamics.hpp"
#include "gmm/error.hpp"

using namespace gmm;

namespace {

Word w(const std::string& s) { return parse_word(s); }
LazyTree cat(const std::string& n, std::vector<int> p = {}) { return catalog_tree(n, p); }

bool has_word(const std::vector<WitnessReport>& ws, const std::string& g) {
  return std::any_of(ws.begin(), ws.end(), [&](const WitnessReport& x) { return x.g.str() == g; });
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

TEST(OrbitGraph, Examples) {
  OrbitGraph b1 = orbit_graph(cat("Bm", {1}), 3, 12);
  EXPECT_EQ(b1.vertices.size(), 3u);
  EXPECT_TRUE(b1.covering.ok());
  EXPECT_TRUE(b1.out_edges_unique());
  EXPECT_EQ(orbit_graph(cat("Bm", {2}), 3, 12).vertices.size(), 4u);

  OrbitGraph f1 = orbit_graph(cat("F1"), 3, 10);
  EXPECT_EQ(f1.vertices.size(), 4u);
  EXPECT_EQ(f1.covering.artifacts.size(), 1u);
  bool loop = false;
  for (const OrbitEdge& e : f1.edges) loop = loop || (e.from == e.to && e.from == 3);
  EXPECT_TRUE(loop);
  EXPECT_EQ(kind_of([] { orbit_graph(cat("F1"), 4, 3); }), ErrorKind::window_exceeded);
}

TEST(OrbitGraph, EdgesStayInsideVertexSet) {
  for (const char* n : {"K", "C", "Tlevel2", "cross", "B0prime"}) {
    OrbitGraph g = orbit_graph(cat(n), 2, 10);
    for (const OrbitEdge& e : g.edges) {
      EXPECT_LT(static_cast<std::size_t>(e.from), g.vertices.size());
      EXPECT_LT(static_cast<std::size_t>(e.to), g.vertices.size());
    }
    EXPECT_EQ(g.vertices[static_cast<std::size_t>(g.base)], ball_key(cat(n), Word(2), 2));
  }
}

TEST(Growth, Examples) {
  auto f2 = growth_function(cat("F2"), 3);
  EXPECT_EQ(f2[2].count, 5);
  EXPECT_EQ(f2[3].count, 14);
  auto b1 = growth_function(cat("Bm", {1}), 5);
  EXPECT_EQ(b1[0].count, 1);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(b1[static_cast<std::size_t>(k)].count, 3);
  EXPECT_EQ(kind_of([] { growth_function(cat("F1"), -1); }), ErrorKind::out_of_range);
}

TEST(Growth, Stabilizes) {
  for (auto [n, p] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"F1", {}}, {"F2", {}}, {"Bm", {1}}, {"Bm", {2}}, {"Bm", {3}}}) {
    for (const GrowthRow& row : growth_function(cat(n, p), n == "F2" ? 5 : 8)) EXPECT_TRUE(row.stable()) << n;
  }
}

TEST(Recurrence, Examples) {
  auto k = recurrence_witnesses(cat("K"), 3, 24);
  for (const char* g : {"aaaa", "aaaaaaaa", "AAAA", "AAAAAAAA"}) EXPECT_TRUE(has_word(k, g)) << g;
  EXPECT_TRUE(recurrence_witnesses(cat("F1"), 2, 20, 1).empty());
  auto b1 = recurrence_witnesses(cat("Bm", {1}), 4, 20);
  for (int j = 1; j <= 16; ++j) {
    EXPECT_TRUE(has_word(b1, std::string(static_cast<std::size_t>(j), 'b')));
    EXPECT_TRUE(has_word(b1, std::string(static_cast<std::size_t>(j), 'B')));
  }
}

TEST(Expansivity, Examples) {
  FiniteTree b4 = materialize(cat("Bm", {4}), 12), b8 = materialize(cat("Bm", {8}), 12),
             b16 = materialize(cat("Bm", {16}), 20);
  WitnessReport x = expansivity_witness(b4, b8);
  EXPECT_EQ(x.g.str(), "bbb");
  EXPECT_EQ(x.kind, "expansivity");
  EXPECT_TRUE(verify_witness(x, b4, b8));
  EXPECT_FALSE(ball(b4, x.g, 2) == ball(b8, x.g, 2));
  EXPECT_EQ(expansivity_witness(materialize(cat("Bm", {8}), 20), b16).g.str(), "bbbbbbb");
  EXPECT_EQ(kind_of([&] { expansivity_witness(b4, b4); }), ErrorKind::no_witness);
  FiniteTree b0 = materialize(cat("B0"), 12), b1 = materialize(cat("Bm", {1}), 12);
  EXPECT_EQ(kind_of([&] { expansivity_witness(b0, b1); }), ErrorKind::precondition_unmet);
}

TEST(Accumulation, Examples) {
  auto cb = accumulates_on(cat("C"), cat("B0"), 3, 5, 14);
  EXPECT_TRUE(has_word(cb, "aaaaabbbb"));
  auto tc = accumulates_on(cat("Tlevel2"), cat("C"), 3, 4, 16);
  for (const char* g : {"aaaa", "aaaaaa", "aaaaaaaa", "AAAAAA"}) EXPECT_TRUE(has_word(tc, g)) << g;
  for (const auto& x : tc) EXPECT_TRUE(verify_witness(x, cat("Tlevel2"), cat("C")));
  EXPECT_FALSE(accumulates_on(cat("K"), cat("K"), 3, 1, 12).empty());
}

TEST(Closure, Examples) {
  std::set<BallKey> f1 = closure_sample(cat("F1"), 2, 12, 5);
  ASSERT_EQ(f1.size(), 1u);
  EXPECT_EQ(*f1.begin(), ball_key(cat("line"), Word(2), 2));
  OrbitGraph b1 = orbit_graph(cat("Bm", {1}), 3, 16);
  std::set<BallKey> b1_orbit(b1.vertices.begin(), b1.vertices.end());
  EXPECT_EQ(closure_sample(cat("Bm", {1}), 3, 16), b1_orbit);
  EXPECT_EQ(kind_of([] { closure_sample(cat("F1"), 3, 6, 5); }), ErrorKind::precondition_unmet);
}

TEST(Ends, Examples) {
  EXPECT_EQ(end_profile(cat("F1"), {1, 3, 5}, 15).counts, (std::vector<long>{1, 1, 1}));
  EndProfile cross = end_profile(cat("cross"), {2, 4, 6}, 18);
  EXPECT_EQ(cross.str(), "4 4 4 (stable: 4 ends)");
  EXPECT_EQ(end_profile(cat("K"), {2, 4, 8}, 24).counts, (std::vector<long>{4, 4, 4}));
  EXPECT_EQ(end_profile(cat("F2"), {1, 2, 3}, 9).verdict, "growing");
  EXPECT_EQ(kind_of([] { end_profile(cat("K"), {8}, 9); }), ErrorKind::window_exceeded);
}

TEST(Specialization, Examples) {
  auto chain = specialization_matrix({cat("B0"), cat("C"), cat("Tlevel2")}, 3, 16, 6, 3);
  EXPECT_EQ(chain.levels, (std::vector<int>{0, 1, 2}));
  auto trio = specialization_matrix({cat("Bm", {1}), cat("Bm", {2}), cat("Bm", {3})}, 3, 16, 6, 3);
  EXPECT_EQ(trio.levels, (std::vector<int>{0, 0, 0}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(trio.contains[i][j], i == j);
  auto line = specialization_matrix({cat("F1"), cat("A0")}, 3, 16, 6, 3);
  EXPECT_TRUE(line.contains[0][1]);
  EXPECT_FALSE(line.contains[1][0]);
}

TEST(Equicontinuity, Modulus) {
  EXPECT_EQ(equicontinuity_modulus(1), 7);
  EXPECT_EQ(equicontinuity_modulus(2), 7);
  EXPECT_EQ(equicontinuity_modulus(3), 15);
  EXPECT_EQ(equicontinuity_modulus(7), 31);
}

TEST(Equicontinuity, KTranslates) {
  LazyTree k = cat("K");
  std::vector<std::pair<FiniteTree, FiniteTree>> pairs;
  for (long m : {-2L, 1L, 3L}) pairs.emplace_back(ball(k, power(w("a"), 32 * m), 40), ball(k, Word(2), 40));
  EquicontinuityReport rep = equicontinuity_check(pairs, 3, 16);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.modulus, 15);
  EXPECT_GT(rep.checks, 0);
  FiniteTree b4 = materialize(cat("Bm", {4}), 20), b8 = materialize(cat("Bm", {8}), 20);
  EXPECT_EQ(kind_of([&] { equicontinuity_check({{b4, b8}}, 3, 16); }), ErrorKind::precondition_unmet);
}

TEST(DynamicsProperties, ResolutionRefinement) {
  for (const char* n : {"K", "C", "Tlevel2", "F1", "cross"}) {
    LazyTree t = cat(n);
    for (int r = 1; r <= 3; ++r) {
      const int W = 10;
      OrbitGraph coarse = orbit_graph(t, r, W), fine = orbit_graph(t, r + 1, W);
      std::map<int, int> down;
      for (std::size_t i = 0; i < fine.representatives.size(); ++i) {
        const Word& g = fine.representatives[i];
        BallKey k = ball_key(t, g, r);
        auto it = std::find(coarse.vertices.begin(), coarse.vertices.end(), k);
        ASSERT_NE(it, coarse.vertices.end()) << n;
        down[static_cast<int>(i)] = static_cast<int>(it - coarse.vertices.begin());
      }
      // Fine classes map into coarse classes, and fine edges map onto coarse edges.
      for (const OrbitEdge& e : fine.edges) {
        OrbitEdge image{down[e.from], e.label, down[e.to]};
        EXPECT_TRUE(std::binary_search(coarse.edges.begin(), coarse.edges.end(), image)) << n;
      }
      EXPECT_GE(fine.vertices.size() + 0, std::set<int>([&] {
                                            std::set<int> s;
                                            for (auto& [f, c] : down) s.insert(c);
                                            return s;
                                          }()).size());
    }
  }
}

TEST(DynamicsProperties, WitnessesReverify) {
  LazyTree k = cat("K"), c = cat("C"), b0 = cat("B0");
  for (const auto& x : recurrence_witnesses(k, 3, 24)) EXPECT_TRUE(verify_witness(x, k, k));
  for (const auto& x : accumulates_on(c, b0, 3, 5, 14)) EXPECT_TRUE(verify_witness(x, c, b0));
  WitnessReport forged{"recurrence", w("aaa"), 3, ""};
  EXPECT_FALSE(verify_witness(forged, k, k));
}

TEST(DynamicsProperties, CoveringOnCatalog) {
  for (const auto& name : catalog_names()) {
    LazyTree t = cat(name, name == "Bm" ? std::vector<int>{3} : std::vector<int>{});
    bool big = name == "full" || name == "F2";
    for (int r = 1; r <= 4; ++r) {
      OrbitGraph g = orbit_graph(t, r, big ? r + 5 : 16);
      EXPECT_TRUE(g.covering.ok()) << name << " r=" << r;
    }
  }
}

TEST(DynamicsProperties, CompactnessCertificate) {
  for (int m = 1; m <= 5; ++m)
    for (int r = m; r <= m + 2; ++r)
      EXPECT_EQ(orbit_graph(cat("Bm", {m}), r, 4 * r + 2 * m).vertices.size(),
                orbit_graph(cat("Bm", {m}), r + 2, 4 * r + 2 * m + 8).vertices.size());
  PeriodicApproximant p = periodic_approximation(cat("K"), 2);
  EXPECT_EQ(orbit_graph(p.tree, 3, 30).vertices.size(), orbit_graph(p.tree, 5, 34).vertices.size());
}
