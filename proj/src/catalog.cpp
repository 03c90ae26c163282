#include "gmm/catalog.hpp"

#include <cstdlib>

namespace gmm {

namespace {

constexpr int kA = 1;
constexpr int kB = 2;

long pow2(int k) { return k >= 62 ? (1L << 62) : (1L << k); }

// Tail after the leading run of `gen`, plus that run's signed exponent.
long strip_run(LetterView& u, int gen) {
  long p = 0;
  while (!u.empty() && generator(static_cast<Letter>(u.front())) == gen) {
    p += static_cast<Letter>(u.front()) > 0 ? 1 : -1;
    u.remove_prefix(1);
  }
  return p;
}

bool is_single(LetterView u, int gen) { return u.size() == 1 && generator(static_cast<Letter>(u[0])) == gen; }

// b^q (|q| <= qmax) optionally followed by one a-letter (|q| <= qmax_a).
bool b_then_a(LetterView u, long qmin, long qmax, long qmax_a) {
  long q = std::labs(strip_run(u, kB));
  if (q < qmin) return false;
  if (u.empty()) return q <= qmax;
  return is_single(u, kA) && q <= qmax_a;
}

bool dec(int level, LetterView w) {
  if (w.empty()) return true;
  return b_then_a(w, 1, pow2(level), pow2(level) - 1);
}

bool single_axis(LetterView u, int gen) {
  for (char c : u)
    if (generator(static_cast<Letter>(c)) != gen) return false;
  return true;
}

void need_rank(int rank, int at_least, std::string_view name) {
  if (rank < at_least)
    throw Error(ErrorKind::invalid_params,
                std::string(name) + " needs rank >= " + std::to_string(at_least));
}

int param(const std::vector<int>& p, std::size_t i, int dflt) { return i < p.size() ? p[i] : dflt; }

}  // namespace

int two_adic_valuation(long p) {
  if (p == 0) return 63;
  int k = 0;
  while ((p & 1) == 0) {
    p >>= 1;
    ++k;
  }
  return k;
}

bool k_block_L(int level, LetterView u) {
  if (u.empty()) return true;
  return b_then_a(u, 0, pow2(level), pow2(level) - 1);
}

bool k_block_C(int level, LetterView u) {
  long p = strip_run(u, kA);
  long lim = pow2(level);
  if (std::labs(p) > lim) return false;
  if (p == 0) return dec(level, u);
  if (u.empty()) return true;
  if (std::labs(p) == lim) return false;
  return dec(two_adic_valuation(p), u);
}

bool k_member(LetterView u) {
  long p = strip_run(u, kA);
  return dec(two_adic_valuation(p), u);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"full", "ray", "line", "A0", "cross",
                                                 "B0", "Bm", "B0prime", "C", "Tlevel2",
                                                 "K", "F1", "F2"};
  return names;
}

CatalogEntry catalog_entry(std::string_view name, const std::vector<int>& params) {
  std::string n(name);
  auto make = [&](int rank, Oracle o, std::string desc, std::string cite) {
    return CatalogEntry{n, params, LazyTree(rank, std::move(o), std::move(desc)), std::move(cite)};
  };
  if (n == "full") {
    int rank = param(params, 0, 2);
    if (rank < 1) throw Error(ErrorKind::invalid_params, "rank must be positive");
    return make(rank, [](LetterView) { return true; }, "full", "whole Cayley tree");
  }
  if (n == "ray" || n == "line" || n == "A0") {
    int gen = param(params, 0, kA);
    int rank = param(params, 1, std::max(2, gen));
    if (gen < 1 || gen > rank) throw Error(ErrorKind::invalid_params, "axis generator out of range");
    if (n == "ray") {
      Letter g = static_cast<Letter>(gen);
      return make(rank,
                  [g](LetterView u) {
                    for (char c : u)
                      if (static_cast<Letter>(c) != g) return false;
                    return true;
                  },
                  "ray", "h^n, n >= 0");
    }
    return make(rank, [gen](LetterView u) { return single_axis(u, gen); }, n, "h^n, n in Z");
  }
  if (n == "cross") {
    int h = param(params, 0, kA);
    int ht = param(params, 1, kB);
    int rank = param(params, 2, std::max({2, h, ht}));
    if (h == ht) throw Error(ErrorKind::invalid_axes, "cross needs two distinct axes");
    if (h < 1 || ht < 1 || h > rank || ht > rank)
      throw Error(ErrorKind::invalid_params, "axis generator out of range");
    return make(rank,
                [h, ht](LetterView u) { return single_axis(u, h) || single_axis(u, ht); },
                "cross", "h-line union ht-line");
  }
  if (n == "Bm") {
    if (params.empty()) throw Error(ErrorKind::invalid_params, "Bm needs m");
    int m = params[0];
    int rank = param(params, 1, 2);
    if (m <= 0) throw Error(ErrorKind::invalid_params, "Bm needs m > 0");
    need_rank(rank, 2, n);
    return make(rank,
                [m](LetterView u) {
                  long q = strip_run(u, kB);
                  if (u.empty()) return true;
                  return is_single(u, kA) && q % m == 0;
                },
                "B:" + std::to_string(m), "b-line with a-leaves at b^(mk)");
  }
  int rank = param(params, 0, 2);
  if (n == "B0") {
    need_rank(rank, 2, n);
    return make(rank, [](LetterView u) { return single_axis(u, kB); }, n, "b-line");
  }
  if (n == "B0prime") {
    need_rank(rank, 2, n);
    return make(rank, [](LetterView u) { return single_axis(u, kB) || is_single(u, kA); }, n,
                "b-line plus a, A");
  }
  if (n == "C") {
    need_rank(rank, 2, n);
    return make(rank,
                [](LetterView u) {
                  strip_run(u, kA);
                  return single_axis(u, kB);
                },
                n, "a-line with a b-line through every vertex");
  }
  if (n == "Tlevel2") {
    need_rank(rank, 2, n);
    return make(rank,
                [](LetterView u) {
                  long p = strip_run(u, kA);
                  long j = strip_run(u, kB);
                  if (u.empty()) return true;
                  return p != 0 && j != 0 && is_single(u, kA) && j % p == 0;
                },
                n, "a-line with a copy of B_|k| through a^k");
  }
  if (n == "K") {
    need_rank(rank, 2, n);
    return make(rank, [](LetterView u) { return k_member(u); }, n, "union of the blocks C_i");
  }
  if (n == "F1") {
    return make(std::max(rank, 1),
                [](LetterView u) {
                  for (char c : u)
                    if (static_cast<Letter>(c) != kA) return false;
                  return true;
                },
                n, "a^n, n >= 0");
  }
  if (n == "F2") {
    need_rank(rank, 2, n);
    return make(rank, [](LetterView u) { return u.empty() || static_cast<Letter>(u[0]) == kA; }, n,
                "e and the words beginning with a");
  }
  throw Error(ErrorKind::unknown_name, "unknown catalog tree \"" + n + "\"");
}

LazyTree catalog_tree(std::string_view name, const std::vector<int>& params) {
  return catalog_entry(name, params).tree;
}

}  // namespace gmm
