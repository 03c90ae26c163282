#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gmm/tree.hpp"

namespace gmm {

struct CatalogEntry {
  std::string name;
  std::vector<int> parameters;
  LazyTree tree;
  std::string citation;
};

// Names: full, ray, line, A0, cross, B0, Bm, B0prime, C, Tlevel2, K, F1, F2.
// Parameters, all optional unless noted:
//   full [rank]            ray, line, A0 [gen, rank]    cross [h, ht, rank]
//   Bm [m (required), rank]          every other entry [rank]
// Generators are 1-based indices; the default axes are a (1) and b (2).
CatalogEntry catalog_entry(std::string_view name, const std::vector<int>& params = {});
LazyTree catalog_tree(std::string_view name, const std::vector<int>& params = {});

const std::vector<std::string>& catalog_names();

// Decoration sets of the recursive tree K, in closed form. With
// Dec(k) = { b^q : 1 <= |q| <= 2^k } u { b^q a^{+-1} : 1 <= |q| <= 2^k - 1 }:
//   L_k = { b^q : |q| <= 2^k } u { b^q a^{+-1} : |q| <= 2^k - 1 }
//   C_i = { a^p : |p| <= 2^i } u a^p Dec(v2(p)) (0 < |p| < 2^i) u Dec(i)
//   K   = { a^p } u a^p Dec(v2(p)) (p != 0) u Dec(infinity)
// where v2 is the 2-adic valuation. Levels above 62 are treated as infinite.
bool k_block_L(int level, LetterView u);
bool k_block_C(int level, LetterView u);
bool k_member(LetterView u);

int two_adic_valuation(long p);

}  // namespace gmm
