#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "gmm/word.hpp"

namespace gmm {

// Membership oracle on reduced words. Must be pure and prefix-closed.
using Oracle = std::function<bool(LetterView)>;

class LazyTree {
 public:
  // The one-vertex tree {e} in rank 2.
  LazyTree();
  LazyTree(int rank, Oracle member, std::string description);

  int rank() const { return rank_; }
  const std::string& description() const { return description_; }

  bool member(LetterView v) const { return (*member_)(v); }
  bool member(const Word& w) const;

 private:
  int rank_;
  std::shared_ptr<const Oracle> member_;
  std::string description_;
};

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};

// Knowledge of a tree inside the ball of radius `window` about the root.
class FiniteTree {
 public:
  FiniteTree();

  int rank() const { return data_->rank; }
  int window() const { return data_->window; }
  std::size_t size() const { return data_->vertices.size(); }
  // Sorted in the canonical lexicographic order.
  const std::vector<Word>& vertices() const { return data_->vertices; }

  bool contains(LetterView v) const;
  bool contains(const Word& w) const;

  bool operator==(const FiniteTree& o) const;

  // No validation; callers guarantee sorted, prefix-closed, reduced input.
  static FiniteTree trusted(int rank, int window, std::vector<Word> sorted);

 private:
  struct Data {
    int rank = 2;
    int window = 0;
    std::vector<Word> vertices;
    std::unordered_set<std::string, StringHash, std::equal_to<>> index;
  };
  std::shared_ptr<const Data> data_;
};

// Unchecked input for validation: raw letter sequences, possibly non-reduced.
struct RawTree {
  int rank = 2;
  int window = 0;
  std::vector<std::vector<Letter>> words;
};

struct Violation {
  enum Kind { missing_root, missing_prefix, over_window, non_reduced };
  Kind kind;
  std::string word;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

ValidationReport validate(const RawTree& raw);
ValidationReport validate(const FiniteTree& t);

// Validates and sorts; throws contract_violation carrying the report text.
FiniteTree make_tree(const RawTree& raw);
FiniteTree make_tree(int rank, int window, const std::vector<Word>& vertices);

struct MetricResult {
  int agreement_radius = 0;
  double distance = 1.0;
  bool exact = false;
};

struct BallKey {
  int rank = 2;
  int radius = 0;
  // Preorder walk of the sorted vertex list: a letter per descent, '\0' per
  // ascent, trailing ascents dropped. Determines the vertex set exactly.
  std::string code;

  bool operator==(const BallKey&) const = default;
  auto operator<=>(const BallKey&) const = default;
};

struct BallKeyHash {
  std::size_t operator()(const BallKey& k) const {
    return std::hash<std::string>{}(k.code) * 31 + static_cast<std::size_t>(k.radius);
  }
};

std::vector<Word> decode_key(const BallKey& k);

FiniteTree materialize(const LazyTree& t, int window);

LazyTree act(const LazyTree& t, const Word& g);
FiniteTree act(const FiniteTree& t, const Word& g);

FiniteTree ball(const LazyTree& t, const Word& g, int r);
FiniteTree ball(const FiniteTree& t, const Word& g, int r);

// Same key as canonical_key(ball(t, g, r)) without building the words.
BallKey ball_key(const LazyTree& t, const Word& g, int r);

MetricResult ball_metric(const FiniteTree& t1, const FiniteTree& t2);

BallKey canonical_key(const FiniteTree& t);

// The finite tree read as an oracle; words beyond its window are non-members.
LazyTree as_lazy(const FiniteTree& t);

std::vector<Word> sphere(const FiniteTree& t, int radius);

}  // namespace gmm
