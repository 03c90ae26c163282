#pragma once

// Slow constructors that build vertex sets explicitly, bottom-up, from the
// defining unions. They share no membership logic with the fast oracles and
// serve as the independent side of the cross-checks.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gmm/constructions.hpp"
#include "gmm/tree.hpp"

namespace gmm::ref {

// Reduced words as letter strings.
using WordSet = std::set<std::string>;

std::string mul(LetterView u, LetterView v);
std::string inv(LetterView u);
std::string letter_power(Letter l, long n);

WordSet translate(const WordSet& s, LetterView g);
WordSet truncate(const WordSet& s, int W);
void unite(WordSet& into, const WordSet& s);

// { g^-1 v : v in s, |g^-1 v| <= r }. Only meaningful when s is complete within |g| + r.
WordSet ball_set(const WordSet& s, LetterView g, int r);

FiniteTree to_tree(int rank, int window, const WordSet& s);
BallKey key_of(int rank, const WordSet& s, LetterView g, int r);

// Vertex sets of the catalog entries within radius W (same names and parameters).
WordSet catalog_set(std::string_view name, const std::vector<int>& params, int W);

// Blocks of K from the doubling recursion
//   L_0 = C_0 = {e, a, A, b, B}
//   L_{i+1} = L_i u b^{2^i} L_i u b^{-2^i} L_i
//   C_{i+1} = C_i u a^{2^i} C_i u a^{-2^i} C_i u b^{2^i} L_i u b^{-2^i} L_i
const WordSet& k_block_L_set(int i);
const WordSet& k_block_C_set(int i);

// Union of x_i Block_i truncated to W, stopped once the truncation settles.
WordSet coding_set(const Code& alpha, int W);

// Cross (or h-line) base with explicit translated copies of the source balls.
WordSet fusion_set(const WordSet& src1, const Ray& ray1, const WordSet& src2, const Ray& ray2, Letter h,
                   Letter ht, int r0, FusePreset preset, int W);

// Translates g^n (D u f hhat^j) for all n reaching the window.
WordSet periodic_set(const WordSet& core, int r, int W);

}  // namespace gmm::ref
