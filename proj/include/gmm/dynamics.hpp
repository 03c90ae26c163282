#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gmm/tree.hpp"

namespace gmm {

// Exact deduplication of ball classes. Long codes are not stored; a hash hit
// on one of those recomputes the representative's key before comparing.
class ClassIndex {
 public:
  ClassIndex(const LazyTree& t, int r) : tree_(t), r_(r) {}

  // Class id of ball(t, g, r), allocating a new id on first sight.
  int intern(const Word& g);
  int intern(const Word& g, const BallKey& key);
  std::size_t size() const { return reps_.size(); }
  const Word& representative(int id) const { return reps_[static_cast<std::size_t>(id)]; }
  BallKey key(int id) const;

 private:
  LazyTree tree_;
  int r_;
  std::vector<Word> reps_;
  std::vector<std::string> codes_;  // empty when not retained
  std::vector<bool> retained_;
  std::unordered_map<std::size_t, std::vector<int>> buckets_;
};

struct OrbitEdge {
  int from;
  Letter label;
  int to;
  auto operator<=>(const OrbitEdge&) const = default;
};

struct CoveringReport {
  bool morphism = true;
  bool locally_bijective = true;
  std::size_t checked = 0;
  // (class, label) pairs with several targets: quotient artifacts at this resolution.
  std::vector<std::string> artifacts;
  bool ok() const { return morphism && locally_bijective; }
};

struct OrbitGraph {
  int resolution = 0;
  int window = 0;
  std::vector<BallKey> vertices;  // in order of first appearance, shortlex
  std::vector<Word> representatives;
  std::vector<OrbitEdge> edges;   // sorted, one entry per (from, label, to)
  int base = 0;
  CoveringReport covering;

  bool out_edges_unique() const;
};

OrbitGraph orbit_graph(const LazyTree& t, int r, int W);

struct GrowthRow {
  int k = 0;
  long count = 0;
  long check = 0;  // recount at resolution k + 2
  bool stable() const { return count == check; }
};

std::vector<GrowthRow> growth_function(const LazyTree& t, int kmax);

struct WitnessReport {
  std::string kind;  // recurrence | accumulation | expansivity
  Word g;
  int radius = 0;
  std::string detail;
};

std::vector<WitnessReport> recurrence_witnesses(const LazyTree& t, int r, int W, int min_norm = 1);
WitnessReport expansivity_witness(const FiniteTree& t1, const FiniteTree& t2);
std::vector<WitnessReport> accumulates_on(const LazyTree& host, const LazyTree& target, int r,
                                          int depth_min, int W);

// Re-checks a witness by direct ball comparison. For expansivity the trees
// are the pair it separates; otherwise t1 is the host and t2 the reference.
bool verify_witness(const WitnessReport& w, const FiniteTree& t1, const FiniteTree& t2);
bool verify_witness(const WitnessReport& w, const LazyTree& host, const LazyTree& reference);

// depth_min < 0 selects W / 2.
std::set<BallKey> closure_sample(const LazyTree& t, int r, int W, int depth_min = -1);

struct EndProfile {
  std::vector<int> rhos;
  std::vector<long> counts;
  int window = 0;
  std::string verdict;
  std::string str() const;
};

EndProfile end_profile(const LazyTree& t, const std::vector<int>& rhos, int W);

struct SpecializationResult {
  int resolution = 0;
  int window = 0;
  std::vector<std::vector<bool>> contains;  // contains[i][j]: closure(i) covers orbit sample of j
  std::vector<int> levels;
  std::string label() const;
};

SpecializationResult specialization_matrix(const std::vector<LazyTree>& trees, int r, int W,
                                           int depth_min, int t_bound);

struct EquicontinuityReport {
  int n = 0;
  int modulus = 0;  // R_N
  long checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

int equicontinuity_modulus(int n);

// Radius-2 ball of K, the defining ball of the clopen set V_2.
FiniteTree v2_ball();

EquicontinuityReport equicontinuity_check(const std::vector<std::pair<FiniteTree, FiniteTree>>& pairs,
                                          int n, int k_budget);

}  // namespace gmm
