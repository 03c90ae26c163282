#include "gmm/dynamics.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gmm/catalog.hpp"

namespace gmm {

namespace {

constexpr std::size_t kRetainLimit = 4096;

std::vector<Letter> letters_of(int rank) {
  std::vector<Letter> out;
  for (int g = 1; g <= rank; ++g) {
    out.push_back(static_cast<Letter>(g));
    out.push_back(static_cast<Letter>(-g));
  }
  std::sort(out.begin(), out.end(), [](Letter x, Letter y) { return letter_order(x) < letter_order(y); });
  return out;
}

std::vector<Word> vertices_within(const LazyTree& t, int radius) {
  return ball(t, Word(t.rank()), radius).vertices();
}

// Vertices within `radius` of the root, shortest first.
std::vector<Word> shortlex_vertices(const LazyTree& t, int radius) {
  std::vector<Word> vs = vertices_within(t, radius);
  std::stable_sort(vs.begin(), vs.end(),
                   [](const Word& x, const Word& y) { return x.length() < y.length(); });
  return vs;
}

Word step(const Word& g, Letter s) {
  std::string out;
  std::string one(1, static_cast<char>(s));
  concat_into(out, g.view(), one);
  return Word::from_reduced(g.rank(), out);
}

std::vector<Letter> key_labels(const BallKey& k) {
  std::vector<Letter> out;
  int depth = 0;
  for (char c : k.code) {
    if (c == '\0') {
      --depth;
    } else {
      if (depth == 0) out.push_back(static_cast<Letter>(c));
      ++depth;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string exp_text(int r) { return "e^-" + std::to_string(r); }

bool in_v2(const FiniteTree& t) {
  if (t.window() < 2) return false;
  return canonical_key(ball(t, Word(t.rank()), 2)) == canonical_key(v2_ball());
}

}  // namespace

int ClassIndex::intern(const Word& g) { return intern(g, ball_key(tree_, g, r_)); }

int ClassIndex::intern(const Word& g, const BallKey& key) {
  std::size_t h = std::hash<std::string>{}(key.code);
  auto& bucket = buckets_[h];
  for (int id : bucket) {
    std::size_t i = static_cast<std::size_t>(id);
    if (retained_[i] ? codes_[i] == key.code : ball_key(tree_, reps_[i], r_).code == key.code) return id;
  }
  int id = static_cast<int>(reps_.size());
  reps_.push_back(g);
  bool keep = key.code.size() <= kRetainLimit;
  retained_.push_back(keep);
  codes_.push_back(keep ? key.code : std::string());
  bucket.push_back(id);
  return id;
}

BallKey ClassIndex::key(int id) const {
  std::size_t i = static_cast<std::size_t>(id);
  if (retained_[i]) return BallKey{tree_.rank(), r_, codes_[i]};
  return ball_key(tree_, reps_[i], r_);
}

bool OrbitGraph::out_edges_unique() const {
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].from == edges[i - 1].from && edges[i].label == edges[i - 1].label) return false;
  return true;
}

OrbitGraph orbit_graph(const LazyTree& t, int r, int W) {
  if (r < 0) throw Error(ErrorKind::out_of_range, "negative resolution");
  if (W < r)
    throw Error(ErrorKind::window_exceeded,
                "window " + std::to_string(W) + " is below resolution " + std::to_string(r), W);
  OrbitGraph og;
  og.resolution = r;
  og.window = W;
  ClassIndex index(t, r);
  std::vector<Word> range = shortlex_vertices(t, W - r);
  std::unordered_map<std::string, int> cls;
  for (const Word& g : range) {
    int id = index.intern(g);
    cls.emplace(std::string(g.view()), id);
    if (static_cast<std::size_t>(id) == og.vertices.size()) {
      og.vertices.push_back(index.key(id));
      og.representatives.push_back(g);
    }
  }
  std::vector<std::vector<Letter>> labels;
  for (const BallKey& k : og.vertices) labels.push_back(key_labels(k));

  std::set<OrbitEdge> edges;
  CoveringReport& cov = og.covering;
  const std::vector<Letter> alphabet = letters_of(t.rank());
  for (const Word& g : range) {
    int from = cls.at(std::string(g.view()));
    std::vector<Letter> present;
    for (Letter s : alphabet) {
      Word gs = step(g, s);
      if (!t.member(gs)) continue;
      present.push_back(s);
      const auto& lab = labels[static_cast<std::size_t>(from)];
      if (!std::binary_search(lab.begin(), lab.end(), s)) cov.morphism = false;
      auto it = cls.find(std::string(gs.view()));
      if (it != cls.end()) edges.insert({from, s, it->second});
    }
    std::sort(present.begin(), present.end());
    if (present != labels[static_cast<std::size_t>(from)]) cov.locally_bijective = false;
    ++cov.checked;
  }
  og.edges.assign(edges.begin(), edges.end());
  for (std::size_t i = 0; i < og.edges.size();) {
    std::size_t j = i;
    while (j < og.edges.size() && og.edges[j].from == og.edges[i].from &&
           og.edges[j].label == og.edges[i].label)
      ++j;
    if (j - i > 1) {
      std::ostringstream os;
      os << "class " << og.edges[i].from << " --" << letter_char(og.edges[i].label) << "--> {";
      for (std::size_t k = i; k < j; ++k) os << (k > i ? "," : "") << og.edges[k].to;
      os << "}";
      cov.artifacts.push_back(os.str());
    }
    i = j;
  }
  return og;
}

std::vector<GrowthRow> growth_function(const LazyTree& t, int kmax) {
  if (kmax < 0) throw Error(ErrorKind::out_of_range, "negative k");
  std::vector<GrowthRow> rows;
  for (int k = 0; k <= kmax; ++k) {
    ClassIndex at(t, k + 1), next(t, k + 2);
    for (const Word& g : vertices_within(t, k)) {
      at.intern(g);
      next.intern(g);
    }
    rows.push_back({k, static_cast<long>(at.size()), static_cast<long>(next.size())});
  }
  return rows;
}

std::vector<WitnessReport> recurrence_witnesses(const LazyTree& t, int r, int W, int min_norm) {
  if (W < r)
    throw Error(ErrorKind::window_exceeded,
                "window " + std::to_string(W) + " is below radius " + std::to_string(r), W);
  BallKey root = ball_key(t, Word(t.rank()), r);
  std::vector<WitnessReport> out;
  for (const Word& g : shortlex_vertices(t, W - r)) {
    if (static_cast<int>(g.length()) < min_norm) continue;
    if (ball_key(t, g, r) == root)
      out.push_back({"recurrence", g, r, "B_" + std::to_string(r) + "(g.T) = B_" + std::to_string(r) + "(T)"});
  }
  return out;
}

WitnessReport expansivity_witness(const FiniteTree& t1, const FiniteTree& t2) {
  MetricResult m = ball_metric(t1, t2);
  if (!m.exact)
    throw Error(ErrorKind::no_witness,
                "trees agree on the common window " + std::to_string(m.agreement_radius));
  if (m.agreement_radius < 2)
    throw Error(ErrorKind::precondition_unmet,
                "distance " + exp_text(m.agreement_radius) + " is not below e^-2");
  int rho = m.agreement_radius + 1;
  std::vector<Word> s1 = sphere(t1, rho), s2 = sphere(t2, rho), diff;
  std::set_symmetric_difference(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(diff));
  const Word& v = diff.front();
  Word g = prefix(v, static_cast<std::size_t>(rho - 2));
  MetricResult after = ball_metric(ball(t1, g, 2), ball(t2, g, 2));
  return {"expansivity", g, 2,
          "rho=" + std::to_string(rho) + " v=" + v.str() + " d(g.t1,g.t2)=" + exp_text(after.agreement_radius)};
}

std::vector<WitnessReport> accumulates_on(const LazyTree& host, const LazyTree& target, int r,
                                          int depth_min, int W) {
  if (host.rank() != target.rank())
    throw Error(ErrorKind::incompatible_rank, "host and target ranks differ");
  if (W - r < depth_min)
    throw Error(ErrorKind::window_exceeded,
                "window " + std::to_string(W) + " leaves no room beyond depth " + std::to_string(depth_min),
                W);
  BallKey want = ball_key(target, Word(target.rank()), r);
  std::vector<WitnessReport> out;
  for (const Word& g : shortlex_vertices(host, W - r)) {
    if (static_cast<int>(g.length()) < depth_min) continue;
    if (ball_key(host, g, r) == want)
      out.push_back({"accumulation", g, r, "B_" + std::to_string(r) + "(g.host) = B_" + std::to_string(r) + "(target)"});
  }
  return out;
}

bool verify_witness(const WitnessReport& w, const FiniteTree& t1, const FiniteTree& t2) {
  if (w.kind == "expansivity") {
    if (!t1.contains(w.g) || !t2.contains(w.g)) return false;
    int room = std::min(t1.window(), t2.window()) - static_cast<int>(w.g.length());
    if (room < w.radius) return false;
    return !(ball(t1, w.g, w.radius) == ball(t2, w.g, w.radius));
  }
  return verify_witness(w, as_lazy(t1), as_lazy(t2));
}

bool verify_witness(const WitnessReport& w, const LazyTree& host, const LazyTree& reference) {
  if (w.kind == "expansivity") return false;
  if (!host.member(w.g)) return false;
  return ball_key(host, w.g, w.radius) == ball_key(reference, Word(reference.rank()), w.radius);
}

std::set<BallKey> closure_sample(const LazyTree& t, int r, int W, int depth_min) {
  if (depth_min < 0) depth_min = W / 2;
  if (W - r < depth_min)
    throw Error(ErrorKind::precondition_unmet,
                "window " + std::to_string(W) + " leaves no vertices between depth " +
                    std::to_string(depth_min) + " and " + std::to_string(W - r));
  std::set<BallKey> out;
  ClassIndex index(t, r);
  for (const Word& g : vertices_within(t, W - r)) {
    if (static_cast<int>(g.length()) < depth_min) continue;
    std::size_t before = index.size();
    int id = index.intern(g);
    if (index.size() != before) out.insert(index.key(id));
  }
  return out;
}

std::string EndProfile::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rhos.size(); ++i) os << (i ? " " : "") << counts[i];
  os << " (" << verdict << ")";
  return os.str();
}

EndProfile end_profile(const LazyTree& t, const std::vector<int>& rhos, int W) {
  if (rhos.empty()) throw Error(ErrorKind::invalid_params, "no radii given");
  for (int rho : rhos) {
    if (rho < 0) throw Error(ErrorKind::out_of_range, "negative radius");
    if (rho + 1 >= W)
      throw Error(ErrorKind::window_exceeded,
                  "window " + std::to_string(W) + " is too small for radius " + std::to_string(rho) +
                      "; largest valid radius " + std::to_string(W - 2),
                  W - 2);
  }
  std::vector<Word> deep = sphere(ball(t, Word(t.rank()), W), W);
  EndProfile p;
  p.rhos = rhos;
  p.window = W;
  for (int rho : rhos) {
    std::set<std::string> heads;
    for (const Word& w : deep) heads.emplace(w.view().substr(0, static_cast<std::size_t>(rho + 1)));
    p.counts.push_back(static_cast<long>(heads.size()));
  }
  bool constant = std::all_of(p.counts.begin(), p.counts.end(), [&](long c) { return c == p.counts[0]; });
  bool increasing = p.counts.size() > 1;
  for (std::size_t i = 1; i < p.counts.size(); ++i)
    if (p.counts[i] <= p.counts[i - 1]) increasing = false;
  if (constant)
    p.verdict = "stable: " + std::to_string(p.counts[0]) + (p.counts[0] == 1 ? " end" : " ends");
  else if (increasing)
    p.verdict = "growing";
  else
    p.verdict = "unstable";
  return p;
}

std::string SpecializationResult::label() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < contains.size(); ++i) {
    for (std::size_t j = 0; j < contains[i].size(); ++j) os << (contains[i][j] ? '1' : '0');
    os << "  level " << levels[i] << "\n";
  }
  return os.str();
}

SpecializationResult specialization_matrix(const std::vector<LazyTree>& trees, int r, int W,
                                           int depth_min, int t_bound) {
  if (t_bound + r > W)
    throw Error(ErrorKind::window_exceeded, "t_bound plus resolution exceeds the window", W - r);
  for (const auto& t : trees)
    if (t.rank() != trees.front().rank())
      throw Error(ErrorKind::incompatible_rank, "trees of different rank");
  std::size_t n = trees.size();
  std::vector<std::set<BallKey>> cover(n), sample(n);
  for (std::size_t i = 0; i < n; ++i) {
    cover[i] = closure_sample(trees[i], r, W, depth_min);
    for (const Word& g : vertices_within(trees[i], W - r)) {
      BallKey k = ball_key(trees[i], g, r);
      if (static_cast<int>(g.length()) <= t_bound) sample[i].insert(k);
      cover[i].insert(std::move(k));
    }
  }
  SpecializationResult res;
  res.resolution = r;
  res.window = W;
  res.contains.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      res.contains[i][j] = std::includes(cover[i].begin(), cover[i].end(), sample[j].begin(), sample[j].end());
  // Longest strict chain below each tree; the strict relation is acyclic.
  res.levels.assign(n, 0);
  for (std::size_t pass = 0; pass < n; ++pass)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (res.contains[i][j] && !res.contains[j][i])
          res.levels[i] = std::max(res.levels[i], res.levels[j] + 1);
  return res;
}

int equicontinuity_modulus(int n) {
  if (n < 0) throw Error(ErrorKind::out_of_range, "negative N");
  int i = 1;
  while (n >= (1 << i) - 1) ++i;
  return 2 * (1 << i) - 1;
}

FiniteTree v2_ball() {
  static const FiniteTree b = ball(catalog_tree("K"), Word(2), 2);
  return b;
}

EquicontinuityReport equicontinuity_check(const std::vector<std::pair<FiniteTree, FiniteTree>>& pairs,
                                          int n, int k_budget) {
  EquicontinuityReport rep;
  rep.n = n;
  rep.modulus = equicontinuity_modulus(n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& [t1, t2] = pairs[p];
    if (!in_v2(t1) || !in_v2(t2))
      throw Error(ErrorKind::precondition_unmet, "pair " + std::to_string(p) + " is not in V_2");
    MetricResult m = ball_metric(t1, t2);
    if (m.agreement_radius <= rep.modulus)
      throw Error(ErrorKind::precondition_unmet, "pair " + std::to_string(p) + " has distance " +
                                                     exp_text(m.agreement_radius) + ", not below " +
                                                     exp_text(rep.modulus));
    int room = std::min(t1.window(), t2.window()) - (n + 1);
    for (int k = -(k_budget / 4); k <= k_budget / 4; ++k) {
      Word gamma = power(Word::from_reduced(t1.rank(), std::string(1, '\1')), 4L * k);
      if (static_cast<int>(gamma.length()) > room) continue;
      if (!t1.contains(gamma) || !t2.contains(gamma)) continue;
      ++rep.checks;
      MetricResult after = ball_metric(act(t1, gamma), act(t2, gamma));
      if (after.agreement_radius <= n)
        rep.violations.push_back("pair " + std::to_string(p) + " gamma=" + gamma.str() + ": d=" +
                                 exp_text(after.agreement_radius) + " >= " + exp_text(n));
    }
  }
  return rep;
}

}  // namespace gmm
