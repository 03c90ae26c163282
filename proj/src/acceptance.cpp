#include "gmm/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "gmm/catalog.hpp"
#include "gmm/constructions.hpp"
#include "gmm/dynamics.hpp"
#include "gmm/reference.hpp"

namespace gmm {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "[FAILED: " << what << "] ";
    }
  }
  template <class T>
  Check& operator<<(const T& x) {
    notes << x;
    return *this;
  }
  CriterionResult result() const { return {0, {}, ok, notes.str(), 0}; }
};

LazyTree cat(const std::string& name, std::vector<int> p = {}) { return catalog_tree(name, p); }
LazyTree bm(int m) { return cat("Bm", {m}); }
Word w(const std::string& s) { return parse_word(s); }
Word apow(long p) { return power(w("a"), p); }

std::string join(const std::vector<long>& xs) {
  std::string s;
  for (long x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// Keys of every ball of radius r about a vertex of the reference set within `reach`.
std::set<BallKey> reference_classes(const ref::WordSet& s, int r, int reach) {
  std::set<BallKey> out;
  for (const auto& g : s)
    if (static_cast<int>(g.size()) <= reach) out.insert(ref::key_of(2, s, g, r));
  return out;
}

CriterionResult growth_f1() {
  Check c;
  auto rows = growth_function(cat("F1"), 10);
  std::vector<long> h;
  for (const auto& r : rows) {
    h.push_back(r.count);
    c.expect(r.count == r.k + 1, "H(" + std::to_string(r.k) + ") = " + std::to_string(r.count));
    c.expect(r.stable(), "unstable at k=" + std::to_string(r.k));
  }
  c << "H = " << join(h) << ", stabilization check passed for all k";
  return c.result();
}

CriterionResult growth_f2() {
  Check c;
  auto rows = growth_function(cat("F2"), 7);
  std::vector<long> h;
  long p3 = 1;
  for (const auto& r : rows) {
    h.push_back(r.count);
    c.expect(r.count == (1 + p3) / 2, "H(" + std::to_string(r.k) + ") = " + std::to_string(r.count));
    c.expect(r.stable(), "unstable at k=" + std::to_string(r.k));
    p3 *= 3;
  }
  c << "H = " << join(h) << " = (1+3^k)/2, stable";
  return c.result();
}

CriterionResult periodic_density() {
  Check c;
  LazyTree K = cat("K");
  for (int r = 2; r <= 5; ++r) {
    PeriodicApproximant pa = periodic_approximation(K, r);
    const LazyTree& S = pa.tree;
    int W = 2 * r + 2;
    MetricResult m = ball_metric(materialize(S, W), materialize(K, W));
    c.expect(m.agreement_radius >= r, "r=" + std::to_string(r) + " agreement " + std::to_string(m.agreement_radius));
    ref::WordSet rs = ref::periodic_set(ref::catalog_set("K", {}, r), r, 30);
    c.expect(materialize(S, 30) == ref::to_tree(2, 30, rs), "r=" + std::to_string(r) + " differs from the reference set");

    int R = 2 * r;
    BallKey root = ball_key(S, Word(2), R);
    bool inv = ball_key(S, pa.period, R) == root && ball_key(S, invert(pa.period), R) == root;
    c.expect(inv, "r=" + std::to_string(r) + " not invariant under " + pa.period.str());

    int range = 2 * static_cast<int>(pa.period.length()) + 2 * r;
    std::size_t lo = orbit_graph(S, r + 1, range + r + 1).vertices.size();
    std::size_t hi = orbit_graph(S, r + 3, range + r + 3).vertices.size();
    int settle = r + 1;
    std::size_t prev = 0;
    for (int q = r + 1; q <= r + 8; ++q) {
      std::size_t n = orbit_graph(S, q, range + q).vertices.size();
      if (n != prev) settle = q;
      prev = n;
    }
    c.expect(lo == hi, "r=" + std::to_string(r) + " vertex counts " + std::to_string(lo) + " at r+1 vs " +
                           std::to_string(hi) + " at r+3");
    c << "r=" << r << ": g=" << pa.period.str() << " agree=" << m.agreement_radius << " counts " << lo << "/" << hi
      << " (settles at resolution " << settle << " with " << prev << "); ";
  }
  return c.result();
}

CriterionResult recurrence_k() {
  Check c;
  LazyTree K = cat("K");
  ref::WordSet rk = ref::catalog_set("K", {}, 96);
  for (int i = 2; i <= 5; ++i) {
    long n = 1L << i;
    int r = static_cast<int>(n) - 1;
    int W = 3 * static_cast<int>(n);
    auto ws = recurrence_witnesses(K, r, W, static_cast<int>(n));
    Word g = apow(n);
    auto it = std::find_if(ws.begin(), ws.end(), [&](const WitnessReport& x) { return x.g == g; });
    bool found = it != ws.end();
    c.expect(found, "a^" + std::to_string(n) + " missing");
    if (found) c.expect(verify_witness(*it, K, K), "a^" + std::to_string(n) + " does not re-verify");
    c.expect(ref::key_of(2, rk, g.view(), r) == ref::key_of(2, rk, "", r),
             "reference disagrees at a^" + std::to_string(n));
    c << "a^" << n << " at radius " << r << " (W=" << W << ", " << ws.size() << " witnesses); ";
  }
  return c.result();
}

CriterionResult expansivity() {
  Check c;
  std::vector<std::vector<std::pair<FiniteTree, FiniteTree>>> families(4);
  std::vector<int> ms = {2, 3, 4, 6, 8, 12, 16};
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      families[0].emplace_back(materialize(bm(ms[i]), 20), materialize(bm(ms[j]), 20));
  LazyTree K = cat("K");
  for (long p = -8; p <= 8; ++p)
    for (long q = p + 1; q <= 8; ++q) families[1].emplace_back(ball(K, apow(p), 20), ball(K, apow(q), 20));
  LazyTree C = cat("C"), T = cat("Tlevel2");
  for (long p = 2; p <= 10; ++p) {
    families[2].emplace_back(ball(C, apow(p), 16), ball(T, apow(p), 16));
    families[2].emplace_back(ball(C, apow(-p), 16), ball(T, apow(-p), 16));
  }
  std::vector<FiniteTree> sample;
  for (const BallKey& k : closure_sample(T, 4, 16, 6)) sample.push_back(FiniteTree::trusted(2, 4, decode_key(k)));
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j) families[3].emplace_back(sample[i], sample[j]);

  std::vector<std::pair<FiniteTree, FiniteTree>> pairs;
  std::vector<std::size_t> next(families.size(), 0), used(families.size(), 0);
  for (bool progress = true; progress && pairs.size() < 50;) {
    progress = false;
    for (std::size_t f = 0; f < families.size() && pairs.size() < 50; ++f) {
      while (next[f] < families[f].size()) {
        auto& pr = families[f][next[f]++];
        MetricResult m = ball_metric(pr.first, pr.second);
        if (m.exact && m.agreement_radius >= 2) {
          pairs.push_back(pr);
          ++used[f];
          progress = true;
          break;
        }
      }
    }
  }
  c.expect(pairs.size() == 50, "only " + std::to_string(pairs.size()) + " certified pairs");
  int good = 0;
  for (const auto& [t1, t2] : pairs) {
    WitnessReport wr = expansivity_witness(t1, t2);
    bool ok = verify_witness(wr, t1, t2) &&
              ball_metric(ball(t1, wr.g, 2), ball(t2, wr.g, 2)).agreement_radius < 2;
    if (ok) ++good;
  }
  c.expect(good == static_cast<int>(pairs.size()), std::to_string(good) + " witnesses re-verified");
  WitnessReport w48 = expansivity_witness(materialize(bm(4), 20), materialize(bm(8), 20));
  WitnessReport w816 = expansivity_witness(materialize(bm(8), 20), materialize(bm(16), 20));
  c.expect(w48.g == w("bbb"), "(B_4,B_8) gave " + w48.g.str());
  c.expect(w816.g == w("bbbbbbb"), "(B_8,B_16) gave " + w816.g.str());
  c << good << "/" << pairs.size() << " witnesses self-certify (families B_m:" << used[0] << " K:" << used[1]
    << " C/T:" << used[2] << " closure:" << used[3] << "); (B_4,B_8) -> " << w48.g.str() << ", (B_8,B_16) -> "
    << w816.g.str();
  return c.result();
}

CriterionResult fusion() {
  Check c;
  LazyTree B1 = bm(1), B2 = bm(2);
  Ray up1 = default_ray(B1, false), up2 = default_ray(B2, false);
  Fusion fz = fuse(B1, up1, B2, up2, 1, 2, 2);
  std::vector<long> radii(fz.schedule.radii.begin(), fz.schedule.radii.begin() + 3);
  std::vector<long> ex(fz.schedule.exponents.begin(), fz.schedule.exponents.begin() + 3);
  c.expect(radii == std::vector<long>{7, 15, 31}, "radii " + join(radii));
  c.expect(ex == std::vector<long>{9, 24, 55}, "exponents " + join(ex));
  ref::WordSet rs = ref::fusion_set(ref::catalog_set("Bm", {1}, 40), up1, ref::catalog_set("Bm", {2}, 40), up2, 1,
                                    2, 2, FusePreset::cross, 60);
  c.expect(materialize(fz.tree, 60) == ref::to_tree(2, 60, rs), "fused tree differs from the reference set");
  auto acc1 = accumulates_on(fz.tree, B1, 4, 8, 24);
  auto acc2 = accumulates_on(fz.tree, B2, 4, 8, 24);
  c.expect(!acc1.empty(), "no B_1 witness");
  c.expect(!acc2.empty(), "no B_2 witness");
  for (const auto& x : acc1) c.expect(verify_witness(x, fz.tree, B1), "B_1 witness " + x.g.str() + " fails");
  for (const auto& x : acc2) c.expect(verify_witness(x, fz.tree, B2), "B_2 witness " + x.g.str() + " fails");
  c << "radii " << join(radii) << ", exponents " << join(ex) << "; accumulation witnesses B_1: " << acc1.size()
    << " (first " << (acc1.empty() ? "-" : acc1[0].g.str()) << "), B_2: " << acc2.size() << " (first "
    << (acc2.empty() ? "-" : acc2[0].g.str()) << ")";
  return c.result();
}

CriterionResult level1_closure() {
  Check c;
  std::set<BallKey> got = closure_sample(cat("C"), 2, 16, 6);
  std::set<BallKey> want = reference_classes(ref::catalog_set("C", {}, 14), 2, 12);
  std::set<BallKey> b0 = reference_classes(ref::catalog_set("B0", {}, 14), 2, 12);
  want.insert(b0.begin(), b0.end());
  c.expect(got == want, "closure has " + std::to_string(got.size()) + " keys, reference " + std::to_string(want.size()));
  c << got.size() << " keys = classes of C and B_0 translates (" << want.size() << ")";
  return c.result();
}

CriterionResult level2_closure() {
  Check c;
  const int r = 3, bound = 14, reach = 14;
  std::set<BallKey> got = closure_sample(cat("Tlevel2"), r, 18, 6);
  std::set<BallKey> want;
  auto add = [&](const ref::WordSet& s) {
    auto k = reference_classes(s, r, reach);
    want.insert(k.begin(), k.end());
  };
  add(ref::catalog_set("C", {}, reach + r));
  add(ref::catalog_set("B0prime", {}, reach + r));
  add(ref::catalog_set("B0", {}, reach + r));
  for (int m = 1; m <= bound; ++m) add(ref::catalog_set("Bm", {m}, reach + r));
  std::set<BallKey> own = reference_classes(ref::catalog_set("Tlevel2", {}, 18), r, 15);
  bool inside = std::includes(own.begin(), own.end(), got.begin(), got.end());
  c.expect(got == want, "closure has " + std::to_string(got.size()) + " keys, inventory " + std::to_string(want.size()));
  c.expect(inside, "closure key outside the orbit of T");
  c << got.size() << " keys = classes of C, B_0', B_0, B_m (m<=" << bound << ") translates (" << want.size()
    << "); all occur in T's own orbit";
  return c.result();
}

CriterionResult specialization() {
  Check c;
  auto chain = specialization_matrix({cat("B0"), cat("C"), cat("Tlevel2")}, 3, 16, 6, 3);
  const auto& M = chain.contains;
  bool strict = M[1][0] && !M[0][1] && M[2][1] && !M[1][2] && M[2][0] && !M[0][2];
  c.expect(strict, "B_0 < C < T is not a strict chain");
  c.expect(chain.levels == std::vector<int>{0, 1, 2}, "levels differ from 0,1,2");
  auto trio = specialization_matrix({bm(1), bm(2), bm(3)}, 3, 16, 6, 3);
  bool incomparable = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && trio.contains[i][j]) incomparable = false;
  c.expect(incomparable, "B_1, B_2, B_3 are comparable");
  c << "resolution-(3,16) estimate: levels " << chain.levels[0] << "," << chain.levels[1] << "," << chain.levels[2]
    << "; {B_1,B_2,B_3} pairwise incomparable";
  return c.result();
}

CriterionResult self_fusion_depth() {
  Check c;
  const int windows[] = {8, 32, 128, 512};
  std::vector<long> ks;
  for (int n = 1; n <= 4; ++n) {
    LazyTree t = iterated_self_fusion(cat("A0"), n);
    ks.push_back(depth_statistic(t, windows[n - 1]));
  }
  for (std::size_t i = 1; i < ks.size(); ++i) c.expect(ks[i] > ks[i - 1], "not strictly increasing");
  c << "k(T_n) = " << join(ks) << " at windows 8,32,128,512";
  return c.result();
}

CriterionResult coding() {
  Check c;
  auto ends = [&](const std::string& prefix, const std::string& tail, long want) {
    Code code = parse_code(prefix, tail);
    LazyTree P = coding_tree(code);
    c.expect(materialize(P, 24) == ref::to_tree(2, 24, ref::coding_set(code, 24)),
             "P(" + code.str() + ") differs from the reference set");
    EndProfile e = end_profile(P, {2, 4, 8}, 24);
    bool ok = std::all_of(e.counts.begin(), e.counts.end(), [&](long x) { return x == want; });
    c.expect(ok, "P(" + code.str() + ") ends " + e.str());
    c << "P(" << code.str() << "): " << e.str() << "; ";
  };
  ends("", "b", 1);
  ends("", "B", 1);
  ends("", "bB", 2);
  Code alpha = parse_code("bB", "aA");
  LazyTree P = coding_tree(alpha);
  LazyTree K = cat("K");
  const int r = 6, W = 64;
  std::set<BallKey> kkeys;
  FiniteTree kball = ball(K, Word(2), W - r);
  for (const Word& g : kball.vertices()) kkeys.insert(ball_key(K, g, r));
  int checked = 0, found = 0;
  FiniteTree pball = ball(P, Word(2), 6);
  for (const Word& u : pball.vertices()) {
    ++checked;
    if (kkeys.count(ball_key(P, u, r))) ++found;
  }
  c.expect(found == checked, std::to_string(checked - found) + " radius-6 balls of P not found in K");
  auto acc = accumulates_on(K, P, r, 1, W);
  c.expect(!acc.empty(), "no accumulation witness in K");
  c << "P(" << alpha.str() << "): " << found << "/" << checked << " radius-6 balls occur in K, root first at "
    << (acc.empty() ? "-" : acc[0].g.str());
  return c.result();
}

CriterionResult equicontinuity() {
  Check c;
  LazyTree K = cat("K");
  std::vector<FiniteTree> pts;
  for (long x = -5; x <= 5; ++x) pts.push_back(ball(K, apow(32 * x), 40));
  for (int n = 1; n <= 3; ++n) {
    int R = equicontinuity_modulus(n);
    std::vector<std::pair<FiniteTree, FiniteTree>> pairs;
    for (std::size_t i = 0; i < pts.size() && pairs.size() < 20; ++i)
      for (std::size_t j = i + 1; j < pts.size() && pairs.size() < 20; ++j)
        if (ball_metric(pts[i], pts[j]).agreement_radius > R) pairs.emplace_back(pts[i], pts[j]);
    c.expect(pairs.size() == 20, "N=" + std::to_string(n) + ": only " + std::to_string(pairs.size()) + " pairs");
    EquicontinuityReport rep = equicontinuity_check(pairs, n, 16);
    c.expect(rep.ok(), "N=" + std::to_string(n) + " violations");
    c.expect(rep.checks > 0, "N=" + std::to_string(n) + " ran no checks");
    c << "N=" << n << " R_N=" << R << " " << rep.checks << " checks ok; ";
  }
  c.expect(equicontinuity_modulus(1) == 7 && equicontinuity_modulus(2) == 7 && equicontinuity_modulus(3) == 15,
           "R_N values");
  FiniteTree b4 = materialize(bm(4), 20), b8 = materialize(bm(8), 20);
  bool rejected = false;
  try {
    equicontinuity_check({{b4, b8}}, 3, 16);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::precondition_unmet;
  }
  c.expect(rejected, "(B_4,B_8) accepted as a V_2 pair");
  WitnessReport wr = expansivity_witness(b4, b8);
  int after = ball_metric(act(b4, wr.g), act(b8, wr.g)).agreement_radius;
  c.expect(after < 2, "translate by " + wr.g.str() + " keeps d below e^-2");
  c << "control (B_4,B_8): not in V_2, translate by " << wr.g.str() << " gives d=e^-" << after;
  return c.result();
}

// Property suites.

std::vector<std::pair<std::string, std::vector<int>>> catalog_params() {
  return {{"full", {}}, {"ray", {}},    {"line", {}},    {"A0", {}},      {"cross", {}}, {"B0", {}},
          {"Bm", {1}},  {"Bm", {2}},    {"Bm", {3}},     {"B0prime", {}}, {"C", {}},     {"Tlevel2", {}},
          {"K", {}},    {"F1", {}},     {"F2", {}}};
}

Word random_vertex(const FiniteTree& t, std::size_t max_len, std::mt19937& rng) {
  std::vector<const Word*> pool;
  for (const Word& v : t.vertices())
    if (v.length() <= max_len) pool.push_back(&v);
  return *pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

// Counts all root-preserving bijections that preserve adjacency, then keeps
// the label- and orientation-preserving ones.
struct IsoSearch {
  const FiniteTree& t1;
  const FiniteTree& t2;
  std::vector<Word> order;
  std::map<std::string, std::string> phi;
  std::set<std::string> used;
  std::vector<std::vector<std::pair<std::string, std::string>>> found;
  long visited = 0;

  void run(std::size_t i) {
    if (++visited > 2000000) return;
    if (i == order.size()) {
      found.emplace_back(phi.begin(), phi.end());
      return;
    }
    const Word& v = order[i];
    std::string parent_img = phi.at(std::string(prefix(v, v.length() - 1).view()));
    for (const Word& cand : t2.vertices()) {
      std::string c(cand.view());
      if (used.count(c)) continue;
      bool adjacent = (c.size() == parent_img.size() + 1 && c.substr(0, parent_img.size()) == parent_img) ||
                      (parent_img.size() == c.size() + 1 && parent_img.substr(0, c.size()) == c);
      if (!adjacent) continue;
      phi[std::string(v.view())] = c;
      used.insert(c);
      run(i + 1);
      used.erase(c);
      phi.erase(std::string(v.view()));
    }
  }
};

bool labels_preserved(const std::vector<std::pair<std::string, std::string>>& m) {
  std::map<std::string, std::string> phi(m.begin(), m.end());
  for (const auto& [v, img] : phi) {
    if (v.empty()) continue;
    std::string pv = v.substr(0, v.size() - 1);
    const std::string& pimg = phi.at(pv);
    // Edge pv --s--> v must map to pimg --s--> img.
    std::string want = ref::mul(pimg, v.substr(v.size() - 1));
    if (want != img) return false;
  }
  return true;
}

FiniteTree random_small_tree(std::mt19937& rng, int window, std::size_t size) {
  std::vector<std::string> verts{""};
  std::set<std::string> have{""};
  const Letter letters[] = {1, -1, 2, -2};
  for (int tries = 0; verts.size() < size && tries < 1000; ++tries) {
    std::string base = verts[std::uniform_int_distribution<std::size_t>(0, verts.size() - 1)(rng)];
    if (static_cast<int>(base.size()) >= window) continue;
    Letter l = letters[std::uniform_int_distribution<int>(0, 3)(rng)];
    if (!base.empty() && static_cast<Letter>(base.back()) == inverse(l)) continue;
    std::string nv = base + static_cast<char>(l);
    if (have.insert(nv).second) verts.push_back(nv);
  }
  ref::WordSet s(verts.begin(), verts.end());
  return ref::to_tree(2, window, s);
}

CriterionResult properties() {
  Check c;
  std::mt19937 rng(20240611);

  // Ultrametric inequality.
  std::vector<FiniteTree> pool;
  std::vector<LazyTree> lazies;
  for (const auto& [n, p] : catalog_params()) lazies.push_back(cat(n, p));
  for (const auto& t : lazies) {
    FiniteTree big = materialize(t, 8);
    for (int k = 0; k < 4; ++k) pool.push_back(ball(t, random_vertex(big, 2, rng), 6));
  }
  int ultra_bad = 0;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const FiniteTree &x = pool[pick(rng)], &y = pool[pick(rng)], &z = pool[pick(rng)];
    int xz = ball_metric(x, z).agreement_radius;
    if (xz < std::min(ball_metric(x, y).agreement_radius, ball_metric(y, z).agreement_radius)) ++ultra_bad;
  }
  c.expect(ultra_bad == 0, std::to_string(ultra_bad) + " ultrametric violations");

  // Prefix closure of every constructor.
  std::vector<LazyTree> built = lazies;
  LazyTree B1 = bm(1), B2 = bm(2), K = cat("K");
  built.push_back(fuse(B1, default_ray(B1, false), B2, default_ray(B2, false), 1, 2, 2).tree);
  built.push_back(fuse(B1, default_ray(B1, true), B2, default_ray(B2, false), 1, 2, 2, FusePreset::axis).tree);
  for (int r = 1; r <= 3; ++r) built.push_back(periodic_approximation(K, r).tree);
  for (auto [p, t] : std::vector<std::pair<std::string, std::string>>{{"", "b"}, {"", "B"}, {"", "bB"}, {"bB", "aA"}, {"B", "b"}})
    built.push_back(coding_tree(parse_code(p, t)));
  built.push_back(iterated_self_fusion(cat("A0"), 2));
  int closure_bad = 0, closure_checked = 0;
  for (std::size_t i = 0; i < built.size(); ++i)
    for (int W = 0; W <= (i == 0 || i == 14 ? 8 : 12); ++W) {
      const LazyTree& t = built[i];
      ++closure_checked;
      try {
        if (!validate(materialize(t, W)).ok()) ++closure_bad;
      } catch (const Error&) {
        ++closure_bad;
      }
    }
  c.expect(closure_bad == 0, std::to_string(closure_bad) + " prefix-closure failures");

  // Partial action composition.
  int comp_bad = 0;
  std::vector<FiniteTree> hosts;
  for (const auto& t : lazies) hosts.push_back(materialize(t, 9));
  std::uniform_int_distribution<std::size_t> host_pick(0, hosts.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const FiniteTree& t = hosts[host_pick(rng)];
    Word g = random_vertex(t, 3, rng);
    FiniteTree tg = act(t, g);
    Word h = random_vertex(tg, 3, rng);
    FiniteTree lhs = act(tg, h);
    FiniteTree rhs = act(t, concat(g, h));
    if (!(ball(rhs, Word(2), lhs.window()) == lhs)) ++comp_bad;
  }
  c.expect(comp_bad == 0, std::to_string(comp_bad) + " composition failures");

  // Isomorphism rigidity.
  int rigid_bad = 0, pairs = 0;
  for (int i = 0; i < 60; ++i) {
    int window = 1 + static_cast<int>(rng() % 4);
    FiniteTree x = random_small_tree(rng, window, 4 + rng() % 8);
    FiniteTree y = i % 2 ? x : random_small_tree(rng, window, x.size());
    if (x.size() != y.size()) continue;
    IsoSearch s{x, y, {}, {{"", ""}}, {""}, {}, 0};
    for (const Word& v : x.vertices())
      if (!v.empty()) s.order.push_back(v);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [](const Word& p, const Word& q) { return p.length() < q.length(); });
    s.run(0);
    ++pairs;
    int labelled = 0;
    bool identity_only = true;
    for (const auto& m : s.found)
      if (labels_preserved(m)) {
        ++labelled;
        for (const auto& [v, img] : m)
          if (v != img) identity_only = false;
      }
    if (labelled > 1 || !identity_only || (x == y) != (labelled == 1) || s.visited > 2000000) ++rigid_bad;
  }
  c.expect(rigid_bad == 0, std::to_string(rigid_bad) + " rigidity failures");

  // Covering check of orbit graphs.
  int cover_bad = 0, cover_checked = 0;
  for (const auto& t : lazies)
    for (int r = 1; r <= 4; ++r) {
      ++cover_checked;
      if (!orbit_graph(t, r, r + 8).covering.ok()) ++cover_bad;
    }
  c.expect(cover_bad == 0, std::to_string(cover_bad) + " covering failures");

  c << "ultrametric 1000 triples, prefix closure " << closure_checked << " windows, composition 500, rigidity "
    << pairs << " pairs, covering " << cover_checked << " graphs";
  return c.result();
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {1, "growth of F_1", growth_f1},
      {2, "growth of F_2", growth_f2},
      {3, "compact leaves dense (periodic approximants of K)", periodic_density},
      {4, "recurrence of K", recurrence_k},
      {5, "expansivity witnesses", expansivity},
      {6, "fusion of B_1 and B_2", fusion},
      {7, "level-1 closure of C", level1_closure},
      {8, "level-2 closure of T", level2_closure},
      {9, "specialization chain", specialization},
      {10, "iterated self-fusion depth", self_fusion_depth},
      {11, "coding map", coding},
      {12, "equicontinuity on V_2", equicontinuity},
      {13, "property suites", properties},
  };
  return all;
}

std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::vector<int>& only) {
  std::vector<CriterionResult> results;
  for (const Criterion& cr : acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
      res = cr.run();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.id = cr.id;
    res.title = cr.title;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << (res.pass ? "PASS" : "FAIL") << "  " << res.id << ". " << res.title << ": " << res.detail << " ("
        << static_cast<int>(res.seconds * 1000) << " ms)\n";
    out.flush();
    results.push_back(res);
  }
  return results;
}

}  // namespace gmm
