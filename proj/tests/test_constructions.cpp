#include <gtest/gtest.h>

#include "gmm/catalog.hpp"
#include "gmm/constructions.hpp"
#include "gmm/dynamics.hpp"
#include "gmm/error.hpp"
#include "gmm/reference.hpp"

using namespace gmm;

namespace {

Word w(const std::string& s) { return parse_word(s); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::load_error;
}

Fusion b1_b2(FusePreset preset = FusePreset::cross) {
  LazyTree b1 = catalog_tree("Bm", {1}), b2 = catalog_tree("Bm", {2});
  return fuse(b1, default_ray(b1, false), b2, default_ray(b2, false), 1, 2, 2, preset);
}

}  // namespace

TEST(Periodic, KAtRadiusTwo) {
  LazyTree k = catalog_tree("K");
  PeriodicApproximant p = periodic_approximation(k, 2);
  EXPECT_EQ(p.f.str(), "aa");
  EXPECT_EQ(p.h, 1);
  EXPECT_EQ(p.hhat, 2);
  EXPECT_EQ(p.period.str(), "aabbbbbbAA");
  EXPECT_EQ(materialize(p.tree, 2), ball(k, Word(2), 2));
  EXPECT_EQ(p.core, ball(k, Word(2), 2));
}

TEST(Periodic, InvariantUnderPeriod) {
  LazyTree k = catalog_tree("K");
  for (int r = 1; r <= 5; ++r) {
    PeriodicApproximant p = periodic_approximation(k, r);
    int W = 2 * r + 6;
    EXPECT_EQ(materialize(act(p.tree, p.period), W), materialize(p.tree, W));
    EXPECT_EQ(materialize(act(p.tree, invert(p.period)), W), materialize(p.tree, W));
    EXPECT_GE(ball_metric(materialize(p.tree, W), materialize(k, W)).agreement_radius, r);
    EXPECT_EQ(materialize(p.tree, 36), ref::to_tree(2, 36, ref::periodic_set(ref::catalog_set("K", {}, r), r, 36)));
  }
}

TEST(Periodic, OtherTrees) {
  for (const char* n : {"C", "Tlevel2", "cross", "F2"}) {
    LazyTree t = catalog_tree(n);
    PeriodicApproximant p = periodic_approximation(t, 3);
    EXPECT_GE(ball_metric(materialize(p.tree, 8), materialize(t, 8)).agreement_radius, 3) << n;
    EXPECT_EQ(p.period.length(), 2 * p.f.length() + 9) << n;
  }
}

TEST(Periodic, FiniteTreeCannotBeApproximated) {
  EXPECT_EQ(kind_of([] { periodic_approximation(LazyTree(), 2); }), ErrorKind::cannot_approximate);
  LazyTree small = as_lazy(materialize(catalog_tree("K"), 2));
  EXPECT_EQ(kind_of([&] { periodic_approximation(small, 2); }), ErrorKind::cannot_approximate);
}

TEST(Fusion, Schedule) {
  Fusion f = b1_b2();
  ASSERT_GE(f.schedule.radii.size(), 3u);
  EXPECT_EQ(std::vector<int>(f.schedule.radii.begin(), f.schedule.radii.begin() + 3), (std::vector<int>{7, 15, 31}));
  EXPECT_EQ(std::vector<long>(f.schedule.exponents.begin(), f.schedule.exponents.begin() + 3),
            (std::vector<long>{9, 24, 55}));
  EXPECT_EQ(fusion_radii(2, 3), (std::vector<int>{7, 15, 31}));
  EXPECT_EQ(fusion_exponents(2, 3), (std::vector<long>{9, 24, 55}));
  EXPECT_EQ(fusion_exponents(3, 2), (std::vector<long>{18, 49}));
  EXPECT_EQ(f.schedule.anchors[0].str(), "aaaaaaaaaBBBBBBB");
}

TEST(Fusion, AnchoredCopiesAreExact) {
  LazyTree b1 = catalog_tree("Bm", {1}), b2 = catalog_tree("Bm", {2});
  Fusion f = b1_b2();
  for (std::size_t i = 0; i < 2; ++i) {
    int r = f.schedule.radii[i];
    FiniteTree d1 = materialize(b1, r), d2 = materialize(b2, r);
    for (const Word& v : d1.vertices()) EXPECT_TRUE(f.tree.member(concat(f.schedule.anchors[i], v)));
    for (const Word& v : d2.vertices()) EXPECT_TRUE(f.tree.member(concat(f.schedule.mirror[i], v)));
  }
}

TEST(Fusion, MatchesReferenceSets) {
  LazyTree b1 = catalog_tree("Bm", {1}), b2 = catalog_tree("Bm", {2});
  ref::WordSet s1 = ref::catalog_set("Bm", {1}, 40), s2 = ref::catalog_set("Bm", {2}, 40);
  Ray up1 = default_ray(b1, false), up2 = default_ray(b2, false), down1 = default_ray(b1, true);
  EXPECT_EQ(materialize(b1_b2().tree, 60),
            ref::to_tree(2, 60, ref::fusion_set(s1, up1, s2, up2, 1, 2, 2, FusePreset::cross, 60)));
  Fusion axis = fuse(b1, down1, b2, up2, 1, 2, 2, FusePreset::axis);
  EXPECT_EQ(materialize(axis.tree, 60),
            ref::to_tree(2, 60, ref::fusion_set(s1, down1, s2, up2, 1, 2, 2, FusePreset::axis, 60)));
}

TEST(Fusion, Errors) {
  LazyTree b1 = catalog_tree("Bm", {1});
  Ray up = default_ray(b1, false);
  EXPECT_EQ(kind_of([&] { fuse(b1, up, b1, up, 1, 1, 2); }), ErrorKind::invalid_axes);
  EXPECT_EQ(kind_of([&] { fuse(b1, up, b1, up, 1, 2, 1); }), ErrorKind::invalid_params);
  Ray off{w("a"), w("b")};
  EXPECT_EQ(kind_of([&] { fuse(b1, off, b1, up, 1, 2, 2); }), ErrorKind::contract_violation);
  EXPECT_EQ(kind_of([&] { check_ray(b1, off, 4); }), ErrorKind::contract_violation);
}

TEST(Fusion, AccumulatesOnBothSources) {
  Fusion f = b1_b2();
  EXPECT_FALSE(accumulates_on(f.tree, catalog_tree("Bm", {1}), 4, 8, 24).empty());
  EXPECT_FALSE(accumulates_on(f.tree, catalog_tree("Bm", {2}), 4, 8, 24).empty());
}

TEST(Coding, BasePoints) {
  std::vector<Word> xs = coding_base_points(parse_code("", "b"), 4);
  ASSERT_EQ(xs.size(), 4u);
  EXPECT_EQ(xs[0].str(), "e");
  EXPECT_EQ(xs[1].str(), "b");
  EXPECT_EQ(xs[2].str(), "bbb");
  EXPECT_EQ(xs[3].str(), "bbbbbbb");
}

TEST(Coding, Ends) {
  EXPECT_EQ(end_profile(coding_tree(parse_code("", "bB")), {2, 4, 8}, 24).counts, (std::vector<long>{2, 2, 2}));
  EXPECT_EQ(end_profile(coding_tree(parse_code("", "b")), {2, 4, 8}, 24).counts, (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(end_profile(coding_tree(parse_code("", "B")), {2, 4, 8}, 24).counts, (std::vector<long>{1, 1, 1}));
}

TEST(Coding, MalformedCodes) {
  EXPECT_EQ(kind_of([] { parse_code("", "ab"); }), ErrorKind::malformed_code);
  EXPECT_EQ(kind_of([] { parse_code("a", "b"); }), ErrorKind::malformed_code);
  EXPECT_EQ(kind_of([] { parse_code("", ""); }), ErrorKind::malformed_code);
}

TEST(Coding, MatchesReferenceSets) {
  for (auto [p, t] : std::vector<std::pair<std::string, std::string>>{
           {"", "b"}, {"", "B"}, {"", "bB"}, {"bB", "aA"}, {"b", "bB"}, {"BBb", "b"}, {"", "aA"}}) {
    Code c = parse_code(p, t);
    EXPECT_EQ(materialize(coding_tree(c), 24), ref::to_tree(2, 24, ref::coding_set(c, 24))) << c.str();
  }
}

TEST(Coding, BallsOccurInK) {
  LazyTree k = catalog_tree("K");
  const int W = 64;
  for (auto [p, t] : std::vector<std::pair<std::string, std::string>>{{"", "b"}, {"", "bB"}, {"bB", "aA"}, {"B", "B"}}) {
    LazyTree pt = coding_tree(parse_code(p, t));
    for (int r : {2, 5, 8}) {
      std::set<BallKey> kkeys;
      FiniteTree kb = ball(k, Word(2), W - r);
      for (const Word& g : kb.vertices()) kkeys.insert(ball_key(k, g, r));
      FiniteTree pb = ball(pt, Word(2), 3);
      for (const Word& u : pb.vertices()) EXPECT_TRUE(kkeys.count(ball_key(pt, u, r))) << p << "(" << t << ") " << u.str();
    }
  }
}

TEST(SelfFusion, DepthGrows) {
  LazyTree seed = catalog_tree("A0");
  EXPECT_EQ(depth_statistic(seed, 8), 0);
  int prev = 0;
  const int windows[] = {8, 32, 128};
  for (int n = 1; n <= 3; ++n) {
    int k = depth_statistic(iterated_self_fusion(seed, n), windows[n - 1] * 2);
    EXPECT_GE(k, prev + 1) << n;
    prev = k;
  }
  LazyTree t1 = iterated_self_fusion(seed, 1), t2 = iterated_self_fusion(seed, 2);
  MetricResult m = ball_metric(materialize(t1, 24), materialize(t2, 24));
  EXPECT_TRUE(m.exact);
  EXPECT_FALSE(accumulates_on(t2, t1, 4, 8, 40).empty());
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth_statistic(catalog_tree("F1"), 6), 0);
  EXPECT_EQ(depth_statistic(catalog_tree("C"), 2), 1);
  EXPECT_EQ(depth_statistic(catalog_tree("C"), 6), 1);
  EXPECT_EQ(depth_statistic(catalog_tree("Bm", {1}), 2), 1);
  EXPECT_EQ(depth_statistic(materialize(catalog_tree("Tlevel2"), 6)), 2);
}

TEST(ConstructionProperties, PrefixClosedAtEveryWindow) {
  LazyTree k = catalog_tree("K"), b1 = catalog_tree("Bm", {1}), b2 = catalog_tree("Bm", {2});
  std::vector<LazyTree> built = {b1_b2().tree, b1_b2(FusePreset::axis).tree, iterated_self_fusion(catalog_tree("A0"), 2)};
  for (int r = 1; r <= 4; ++r) built.push_back(periodic_approximation(k, r).tree);
  for (auto [p, t] : std::vector<std::pair<std::string, std::string>>{{"", "b"}, {"", "bB"}, {"bB", "aA"}, {"Bb", "B"}})
    built.push_back(coding_tree(parse_code(p, t)));
  for (const LazyTree& t : built)
    for (int W = 0; W <= 16; ++W) EXPECT_TRUE(validate(materialize(t, W)).ok()) << t.description() << " W=" << W;
}
