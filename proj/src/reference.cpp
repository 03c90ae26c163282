#include "gmm/reference.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace gmm::ref {

namespace {

constexpr Letter a = 1, A = -1, b = 2, B = -2;

WordSet line_set(Letter h, long lo, long hi) {
  WordSet s;
  for (long n = lo; n <= hi; ++n) s.insert(letter_power(h, n));
  return s;
}

WordSet all_words(int rank, int W, const std::string& start) {
  WordSet out{start};
  std::vector<std::string> frontier{start};
  for (int len = static_cast<int>(start.size()); len < W; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier)
      for (int g = 1; g <= rank; ++g)
        for (int sg : {1, -1}) {
          Letter l = static_cast<Letter>(g * sg);
          if (!w.empty() && static_cast<Letter>(w.back()) == inverse(l)) continue;
          next.push_back(w + static_cast<char>(l));
        }
    out.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

WordSet bm_set(long m, int W) {
  WordSet s = line_set(b, -W, W);
  for (long k = -W; k <= W; ++k) {
    if (std::labs(m * k) + 1 > W) continue;
    std::string base = letter_power(b, m * k);
    s.insert(base + static_cast<char>(a));
    s.insert(base + static_cast<char>(A));
  }
  return s;
}

int param(const std::vector<int>& p, std::size_t i, int dflt) { return i < p.size() ? p[i] : dflt; }

}  // namespace

std::string letter_power(Letter l, long n) {
  return std::string(static_cast<std::size_t>(std::labs(n)), static_cast<char>(n < 0 ? inverse(l) : l));
}

std::string mul(LetterView u, LetterView v) {
  std::string out(u);
  for (char c : v) {
    if (!out.empty() && static_cast<Letter>(out.back()) == inverse(static_cast<Letter>(c)))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

std::string inv(LetterView u) {
  std::string out;
  for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(static_cast<char>(inverse(static_cast<Letter>(*it))));
  return out;
}

WordSet translate(const WordSet& s, LetterView g) {
  WordSet out;
  for (const auto& v : s) out.insert(mul(g, v));
  return out;
}

WordSet truncate(const WordSet& s, int W) {
  WordSet out;
  for (const auto& v : s)
    if (static_cast<int>(v.size()) <= W) out.insert(v);
  return out;
}

void unite(WordSet& into, const WordSet& s) { into.insert(s.begin(), s.end()); }

WordSet ball_set(const WordSet& s, LetterView g, int r) {
  std::string gi = inv(g);
  WordSet out;
  for (const auto& v : s) {
    std::string u = mul(gi, v);
    if (static_cast<int>(u.size()) <= r) out.insert(u);
  }
  return out;
}

FiniteTree to_tree(int rank, int window, const WordSet& s) {
  std::vector<Word> ws;
  for (const auto& v : s) ws.push_back(Word::from_reduced(rank, v));
  return make_tree(rank, window, ws);
}

BallKey key_of(int rank, const WordSet& s, LetterView g, int r) {
  return canonical_key(to_tree(rank, r, ball_set(s, g, r)));
}

const WordSet& k_block_L_set(int i) {
  static std::map<int, WordSet> memo;
  auto it = memo.find(i);
  if (it != memo.end()) return it->second;
  WordSet s;
  if (i == 0) {
    s = {"", std::string(1, a), std::string(1, A), std::string(1, b), std::string(1, B)};
  } else {
    const WordSet& prev = k_block_L_set(i - 1);
    long step = 1L << (i - 1);
    s = prev;
    unite(s, translate(prev, letter_power(b, step)));
    unite(s, translate(prev, letter_power(b, -step)));
  }
  return memo.emplace(i, std::move(s)).first->second;
}

const WordSet& k_block_C_set(int i) {
  static std::map<int, WordSet> memo;
  auto it = memo.find(i);
  if (it != memo.end()) return it->second;
  WordSet s;
  if (i == 0) {
    s = k_block_L_set(0);
  } else {
    const WordSet& prev = k_block_C_set(i - 1);
    const WordSet& lprev = k_block_L_set(i - 1);
    long step = 1L << (i - 1);
    s = prev;
    unite(s, translate(prev, letter_power(a, step)));
    unite(s, translate(prev, letter_power(a, -step)));
    unite(s, translate(lprev, letter_power(b, step)));
    unite(s, translate(lprev, letter_power(b, -step)));
  }
  return memo.emplace(i, std::move(s)).first->second;
}

WordSet catalog_set(std::string_view name, const std::vector<int>& params, int W) {
  std::string n(name);
  if (n == "full") return all_words(param(params, 0, 2), W, "");
  if (n == "ray") return line_set(static_cast<Letter>(param(params, 0, 1)), 0, W);
  if (n == "line" || n == "A0") return line_set(static_cast<Letter>(param(params, 0, 1)), -W, W);
  if (n == "cross") {
    WordSet s = line_set(static_cast<Letter>(param(params, 0, 1)), -W, W);
    unite(s, line_set(static_cast<Letter>(param(params, 1, 2)), -W, W));
    return s;
  }
  if (n == "B0") return line_set(b, -W, W);
  if (n == "Bm") return bm_set(param(params, 0, 1), W);
  if (n == "B0prime") {
    WordSet s = line_set(b, -W, W);
    s.insert(std::string(1, a));
    s.insert(std::string(1, A));
    return truncate(s, W);
  }
  if (n == "C" || n == "Tlevel2") {
    WordSet s = line_set(a, -W, W);
    for (long p = -W; p <= W; ++p) {
      WordSet deco = p != 0 && n == "Tlevel2" ? bm_set(std::labs(p), W) : line_set(b, -W, W);
      unite(s, truncate(translate(deco, letter_power(a, p)), W));
    }
    return s;
  }
  if (n == "K") {
    int i = 0;
    while ((1L << i) <= W) ++i;
    return truncate(k_block_C_set(i), W);
  }
  if (n == "F1") return line_set(a, 0, W);
  if (n == "F2") {
    WordSet s{""};
    if (W >= 1) unite(s, all_words(2, W, std::string(1, a)));
    return s;
  }
  throw Error(ErrorKind::unknown_name, "no reference set for \"" + n + "\"");
}

WordSet coding_set(const Code& alpha, int W) {
  WordSet acc, prev;
  for (int i = 0;; ++i) {
    std::vector<Word> xs = coding_base_points(alpha, i + 1);
    bool c_block = generator(alpha.at(static_cast<std::size_t>(i))) == 1;
    const WordSet& block = c_block ? k_block_C_set(i) : k_block_L_set(i);
    unite(acc, truncate(translate(block, xs.back().view()), W));
    if ((1L << i) > 2L * W && acc == prev) return acc;
    prev = acc;
  }
}

WordSet fusion_set(const WordSet& src1, const Ray& ray1, const WordSet& src2, const Ray& ray2, Letter h,
                   Letter ht, int r0, FusePreset preset, int W) {
  WordSet s = line_set(h, -W, W);
  if (preset == FusePreset::cross) unite(s, line_set(ht, -W, W));
  long R = r0;
  for (int i = 1;; ++i) {
    long r = (1L << (r0 + i)) - 1;
    long N = R + r;
    R += r;
    if (N > W) break;
    for (int side = 0; side < 2; ++side) {
      Word e = (side == 0 ? ray1 : ray2).head(static_cast<std::size_t>(r));
      Letter axis = preset == FusePreset::axis ? h : (generator(e.back()) != generator(ht) ? ht : h);
      std::string anchor = mul(letter_power(axis, side == 0 ? N : -N), inv(e.view()));
      const WordSet& src = side == 0 ? src1 : src2;
      unite(s, truncate(translate(truncate(src, static_cast<int>(r)), anchor), W));
    }
  }
  return s;
}

WordSet periodic_set(const WordSet& core, int r, int W) {
  std::string f;
  bool found = false;
  for (const auto& v : core) {
    if (static_cast<int>(v.size()) != r) continue;
    if (!found || compare_letters(v, f) < 0) f = v;
    found = true;
  }
  if (!found) throw Error(ErrorKind::cannot_approximate, "core has no boundary vertex");
  int hg = generator(static_cast<Letter>(f.back()));
  Letter hhat = static_cast<Letter>(hg == 1 ? 2 : 1);
  WordSet base = core;
  for (int j = 1; j <= 3 * r; ++j) base.insert(f + letter_power(hhat, j));
  std::string g = mul(mul(f, letter_power(hhat, 3L * r)), inv(f));
  std::string gi = inv(g);
  WordSet s;
  long reach = W / (3L * r) + 2;
  std::string gp, gm;
  for (long n = 0; n <= reach; ++n) {
    unite(s, truncate(translate(base, gp), W));
    unite(s, truncate(translate(base, gm), W));
    gp = mul(gp, g);
    gm = mul(gm, gi);
  }
  return s;
}

}  // namespace gmm::ref
