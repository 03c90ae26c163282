#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gmm/constructions.hpp"
#include "gmm/dynamics.hpp"
#include "gmm/tree.hpp"

namespace gmm {

// {"rank": n, "window": W, "vertices": [...]}, vertices sorted.
nlohmann::json tree_to_json(const FiniteTree& t);
// rank defaults to 2 and window to the longest vertex. Schema problems raise
// load_error naming the field; validation failures carry the report.
FiniteTree tree_from_json(const nlohmann::json& doc);
FiniteTree load_tree(const std::string& path);
void save_tree(const FiniteTree& t, const std::string& path);

// Edges point along positive generators; the root is highlighted.
std::string tree_to_dot(const FiniteTree& t);
std::string orbit_graph_to_dot(const OrbitGraph& g);
nlohmann::json orbit_graph_to_json(const OrbitGraph& g);

nlohmann::json witness_to_json(const WitnessReport& w);
std::string witnesses_to_jsonl(const std::vector<WitnessReport>& ws);

nlohmann::json schedule_to_json(const FusionSchedule& s);
nlohmann::json approximant_to_json(const PeriodicApproximant& p);

// Tree expressions:
//   K | B:2 | cross:1:2 | Bm:3        catalog entry with ':'-separated parameters
//   path/to/tree.json                 a saved FiniteTree
//   fuse(X@up, Y@down, r0=2, h=a, ht=b, preset=cross)
//   periodic(X, r=2)
//   code(bB(aA))                      prefix over b/B, tail in parentheses
//   iterate(X, n=2)                   iterated self-fusion
//   act(X, g=ab)                      translate
struct TreeSpec {
  enum Kind { catalog, file, fuse, periodic, code, iterate, act };
  Kind kind = catalog;
  std::string name;          // catalog name or file path
  std::vector<int> params;   // catalog parameters
  std::vector<TreeSpec> args;
  bool down1 = false, down2 = false;
  int r0 = 2;
  Letter h = 1, ht = 2;
  FusePreset preset = FusePreset::cross;
  int radius = 1;
  int count = 1;
  std::string prefix, tail;  // code symbols
  std::string word;          // act
};

TreeSpec parse_tree_spec(std::string_view text);
std::string render_tree_spec(const TreeSpec& s);
LazyTree build_tree(const TreeSpec& s);
LazyTree build_tree(std::string_view text);

}  // namespace gmm
