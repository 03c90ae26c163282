#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gmm/tree.hpp"

namespace gmm {

// Eventually periodic geodesic ray from the root: prefix, then period forever.
struct Ray {
  Word prefix;
  Word period;

  // First k letters.
  Word head(std::size_t k) const;
  std::string str() const;
};

// Ray along the least generator s (or its inverse when `down`) with s^n in t
// for every n up to `probe`.
Ray default_ray(const LazyTree& t, bool down, int probe = 64);

// Checks that every prefix up to `depth` is a vertex; contract_violation otherwise.
void check_ray(const LazyTree& t, const Ray& ray, int depth);

struct PeriodicApproximant {
  int radius = 0;
  Word f;           // root to the chosen boundary vertex v2
  Letter h = 0;     // label of the boundary edge, with sign beta
  Letter hhat = 0;  // least generator different from h
  Word period;      // f hhat^{3r} f^{-1}
  FiniteTree core;  // ball(t, e, r)
  LazyTree tree;
};

PeriodicApproximant periodic_approximation(const LazyTree& t, int r);

enum class FusePreset {
  cross,  // four-ended cross base, t1 on the positive ends, t2 on the negative ends
  axis,   // single h-axis, t1 at h^{R_i+r_i} and t2 at h^{-(R_i+r_i)}
};

struct FusionSchedule {
  int r0 = 2;
  Letter h = 1;
  Letter ht = 2;
  FusePreset preset = FusePreset::cross;
  std::vector<int> radii;         // r_i, i >= 1
  std::vector<long> exponents;    // R_i + r_i
  std::vector<Word> anchors;      // t1 side
  std::vector<Word> mirror;       // t2 side
};

struct Fusion {
  LazyTree tree;
  FusionSchedule schedule;
};

// Schedule entries are generated while R_i + r_i <= max_exponent.
Fusion fuse(const LazyTree& t1, const Ray& ray1, const LazyTree& t2, const Ray& ray2, Letter h,
            Letter ht, int r0, FusePreset preset = FusePreset::cross, long max_exponent = 4096);

std::vector<int> fusion_radii(int r0, int count);
std::vector<long> fusion_exponents(int r0, int count);

// Admissible symbol sequences: a prefix over {b, B} and one of the tails
// "aA", "bB", "b", "B" repeated forever.
struct Code {
  std::vector<Letter> prefix;
  std::vector<Letter> tail;

  Letter at(std::size_t i) const;
  std::string str() const;
};

Code parse_code(const std::string& prefix, const std::string& tail);

// Base points x_0 = e, x_i = x_{i-1} alpha_{i-1}^{2^{i-1}}.
std::vector<Word> coding_base_points(const Code& alpha, int count);

LazyTree coding_tree(const Code& alpha);

// T_0 = seed, T_n = fuse(T_{n-1}, T_{n-1}) along the default up-rays, axes a, b, r0 = 2.
LazyTree iterated_self_fusion(const LazyTree& seed, int n);

int depth_statistic(const FiniteTree& t);
int depth_statistic(const LazyTree& t, int window);

}  // namespace gmm
