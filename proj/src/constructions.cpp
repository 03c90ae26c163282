#include "gmm/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>

#include "gmm/catalog.hpp"

namespace gmm {

namespace {

Word letter_word(int rank, Letter l, long n) {
  std::string s(static_cast<std::size_t>(std::labs(n)), static_cast<char>(n < 0 ? inverse(l) : l));
  return Word::from_reduced(rank, s);
}

bool starts_with(LetterView v, LetterView p) { return v.size() >= p.size() && v.substr(0, p.size()) == p; }

}  // namespace

Word Ray::head(std::size_t k) const {
  std::string s(prefix.view().substr(0, std::min(k, prefix.length())));
  while (s.size() < k) {
    if (period.empty())
      throw Error(ErrorKind::contract_violation, "ray " + str() + " is finite");
    for (std::size_t i = 0; i < period.length() && s.size() < k; ++i) {
      char c = static_cast<char>(period[i]);
      if (!s.empty() && static_cast<Letter>(s.back()) == inverse(static_cast<Letter>(c)))
        throw Error(ErrorKind::contract_violation, "ray " + str() + " is not reduced");
      s.push_back(c);
    }
  }
  return Word::from_reduced(prefix.rank(), s);
}

std::string Ray::str() const {
  return (prefix.empty() ? std::string() : prefix.str()) + "(" + period.str() + ")";
}

Ray default_ray(const LazyTree& t, bool down, int probe) {
  for (int g = 1; g <= t.rank(); ++g) {
    Letter s = static_cast<Letter>(down ? -g : g);
    bool ok = true;
    for (int n = 1; n <= probe && ok; ++n) ok = t.member(letter_word(t.rank(), s, n));
    if (ok) return Ray{Word(t.rank()), letter_word(t.rank(), s, 1)};
  }
  throw Error(ErrorKind::contract_violation,
              std::string("no ") + (down ? "down" : "up") + " axis ray in " + t.description());
}

void check_ray(const LazyTree& t, const Ray& ray, int depth) {
  Word w = ray.head(static_cast<std::size_t>(depth));
  for (int k = 1; k <= depth; ++k) {
    Word p = prefix(w, static_cast<std::size_t>(k));
    if (!t.member(p))
      throw Error(ErrorKind::contract_violation,
                  "ray " + ray.str() + " leaves " + t.description() + " at " + p.str());
  }
}

PeriodicApproximant periodic_approximation(const LazyTree& t, int r) {
  if (r < 1) throw Error(ErrorKind::invalid_params, "periodic approximation needs r >= 1");
  FiniteTree outer = ball(t, Word(t.rank()), r + 1);
  if (sphere(outer, r + 1).empty())
    throw Error(ErrorKind::cannot_approximate,
                t.description() + " is finite inside radius " + std::to_string(r + 1));
  PeriodicApproximant pa;
  pa.radius = r;
  pa.core = ball(t, Word(t.rank()), r);
  pa.f = sphere(pa.core, r).front();
  pa.h = pa.f.back();
  int hg = generator(pa.h);
  pa.hhat = static_cast<Letter>(hg == 1 ? 2 : 1);
  if (t.rank() < 2) throw Error(ErrorKind::cannot_approximate, "rank 1 has no second generator");
  int rank = t.rank();
  long span = 3L * r;
  Word fi = invert(pa.f);
  pa.period = concat(concat(pa.f, letter_word(rank, pa.hhat, span)), fi);

  FiniteTree core = pa.core;
  std::string f(pa.f.view());
  Letter hhat = pa.hhat;
  auto in_block = [core, f, hhat, span](LetterView u) {
    if (core.contains(u)) return true;
    if (!starts_with(u, f)) return false;
    LetterView rest = u.substr(f.size());
    if (rest.empty() || rest.size() > static_cast<std::size_t>(span)) return false;
    Letter c = static_cast<Letter>(rest[0]);
    if (generator(c) != generator(hhat)) return false;
    for (char x : rest)
      if (static_cast<Letter>(x) != c) return false;
    return true;
  };
  Oracle m = [in_block, f, hhat, span](LetterView v) {
    if (in_block(v)) return true;
    if (!starts_with(v, f)) return false;
    LetterView rest = v.substr(f.size());
    long k = 0;
    for (char x : rest) {
      Letter c = static_cast<Letter>(x);
      if (generator(c) != generator(hhat)) break;
      k += c == hhat ? 1 : -1;
    }
    if (k == 0) return false;
    long n0 = static_cast<long>(std::floor(static_cast<double>(k) / static_cast<double>(span)));
    std::string shift, u;
    for (long n = n0 - 1; n <= n0 + 1; ++n) {
      if (n == 0) continue;
      // g^{-n} v = f hhat^{-3rn} f^{-1} v; here f^{-1} v strips f.
      shift.assign(f);
      shift.append(static_cast<std::size_t>(std::labs(n) * span),
                   static_cast<char>(n > 0 ? inverse(hhat) : hhat));
      concat_into(u, shift, rest);
      if (in_block(u)) return true;
    }
    return false;
  };
  pa.tree = LazyTree(rank, std::move(m),
                     "periodic(" + t.description() + ", r=" + std::to_string(r) + ")");
  return pa;
}

std::vector<int> fusion_radii(int r0, int count) {
  std::vector<int> out;
  for (int i = 1; i <= count; ++i) out.push_back((1 << (r0 + i)) - 1);
  return out;
}

std::vector<long> fusion_exponents(int r0, int count) {
  std::vector<long> out;
  long R = r0;
  for (int r : fusion_radii(r0, count)) {
    out.push_back(R + r);
    R += r;
  }
  return out;
}

namespace {

// Lazily materialized source balls shared by all copies of a fused oracle.
struct BallCache {
  LazyTree source;
  std::vector<int> radii;
  std::vector<std::optional<FiniteTree>> balls;
  std::mutex mu;

  BallCache(LazyTree s, std::vector<int> r)
      : source(std::move(s)), radii(std::move(r)), balls(radii.size()) {}

  bool contains(std::size_t i, LetterView u) {
    if (u.size() > static_cast<std::size_t>(radii[i])) return false;
    std::unique_lock lock(mu);
    if (!balls[i]) balls[i] = ball(source, Word(source.rank()), radii[i]);
    const FiniteTree& b = *balls[i];
    lock.unlock();
    return b.contains(u);
  }
};

}  // namespace

Fusion fuse(const LazyTree& t1, const Ray& ray1, const LazyTree& t2, const Ray& ray2, Letter h,
            Letter ht, int r0, FusePreset preset, long max_exponent) {
  if (generator(h) == generator(ht)) throw Error(ErrorKind::invalid_axes, "fusion needs h != ht");
  if (r0 < 2) throw Error(ErrorKind::invalid_params, "fusion needs r0 >= 2");
  if (t1.rank() != t2.rank()) throw Error(ErrorKind::incompatible_rank, "fusion of different ranks");
  int rank = t1.rank();
  if (generator(h) > rank || generator(ht) > rank)
    throw Error(ErrorKind::invalid_axes, "axis letter outside the alphabet");
  h = static_cast<Letter>(generator(h));
  ht = static_cast<Letter>(generator(ht));

  FusionSchedule sch;
  sch.r0 = r0;
  sch.h = h;
  sch.ht = ht;
  sch.preset = preset;
  long R = r0;
  for (int i = 1; r0 + i < 30; ++i) {
    int r = (1 << (r0 + i)) - 1;
    if (R + r > max_exponent) break;
    sch.radii.push_back(r);
    sch.exponents.push_back(R + r);
    R += r;
  }
  if (!sch.radii.empty()) {
    check_ray(t1, ray1, sch.radii.back());
    check_ray(t2, ray2, sch.radii.back());
  }
  for (std::size_t i = 0; i < sch.radii.size(); ++i) {
    long n = sch.exponents[i];
    for (int side = 0; side < 2; ++side) {
      Word e = (side == 0 ? ray1 : ray2).head(static_cast<std::size_t>(sch.radii[i]));
      Letter v = e.back();
      long sn = side == 0 ? n : -n;
      Letter axis;
      if (preset == FusePreset::axis) {
        if (generator(v) == generator(h))
          throw Error(ErrorKind::invalid_axes, "axis preset needs rays leaving the h-axis");
        axis = h;
      } else {
        axis = generator(v) != generator(ht) ? ht : h;
      }
      Word anchor = concat(letter_word(rank, axis, sn), invert(e));
      (side == 0 ? sch.anchors : sch.mirror).push_back(anchor);
    }
  }

  auto c1 = std::make_shared<BallCache>(t1, sch.radii);
  auto c2 = std::make_shared<BallCache>(t2, sch.radii);
  std::vector<std::string> inv1, inv2;
  for (const Word& a : sch.anchors) inv1.emplace_back(invert(a).view());
  for (const Word& a : sch.mirror) inv2.emplace_back(invert(a).view());
  int hg = generator(h), htg = generator(ht);
  bool cross = preset == FusePreset::cross;
  std::vector<long> lo = sch.exponents;
  std::vector<int> radii = sch.radii;
  Oracle m = [=](LetterView v) {
    bool line_h = true, line_ht = cross;
    for (char c : v) {
      int g = generator(static_cast<Letter>(c));
      line_h = line_h && g == hg;
      line_ht = line_ht && g == htg;
    }
    if (line_h || line_ht) return true;
    long len = static_cast<long>(v.size());
    std::string u;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (len < lo[i]) break;
      if (len > lo[i] + 2L * radii[i]) continue;
      concat_into(u, inv1[i], v);
      if (c1->contains(i, u)) return true;
      concat_into(u, inv2[i], v);
      if (c2->contains(i, u)) return true;
    }
    return false;
  };
  std::string desc = "fuse(" + t1.description() + ", " + t2.description() +
                     ", r0=" + std::to_string(r0) + (cross ? "" : ", axis") + ")";
  return Fusion{LazyTree(rank, std::move(m), desc), sch};
}

Letter Code::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return tail[(i - prefix.size()) % tail.size()];
}

std::string Code::str() const {
  std::string s;
  for (Letter l : prefix) s.push_back(letter_char(l));
  s.push_back('(');
  for (Letter l : tail) s.push_back(letter_char(l));
  s.push_back(')');
  return s;
}

Code parse_code(const std::string& prefix, const std::string& tail) {
  Code c;
  for (char ch : prefix) {
    if (ch != 'b' && ch != 'B')
      throw Error(ErrorKind::malformed_code, "code prefix symbols must be b or B, got '" +
                                                 std::string(1, ch) + "'");
    c.prefix.push_back(static_cast<Letter>(ch == 'b' ? 2 : -2));
  }
  if (tail == "aA")
    c.tail = {1, -1};
  else if (tail == "bB")
    c.tail = {2, -2};
  else if (tail == "b")
    c.tail = {2};
  else if (tail == "B")
    c.tail = {-2};
  else
    throw Error(ErrorKind::malformed_code, "inadmissible tail (" + tail + ")");
  return c;
}

std::vector<Word> coding_base_points(const Code& alpha, int count) {
  std::vector<Word> xs{Word(2)};
  for (int i = 1; i < count; ++i)
    xs.push_back(concat(xs.back(), letter_word(2, alpha.at(static_cast<std::size_t>(i - 1)), 1L << (i - 1))));
  return xs;
}

LazyTree coding_tree(const Code& alpha) {
  if (alpha.tail.empty()) throw Error(ErrorKind::malformed_code, "empty tail");
  // Block i sits at x_i; it is an L-block when alpha_i is a b-letter and a
  // C-block otherwise, which makes block i-1 one of its sub-blocks.
  constexpr int kLevels = 17;
  std::vector<Word> xs = coding_base_points(alpha, kLevels);
  std::vector<std::string> inv;
  std::vector<bool> is_c;
  for (int i = 0; i < kLevels; ++i) {
    inv.emplace_back(invert(xs[static_cast<std::size_t>(i)]).view());
    is_c.push_back(generator(alpha.at(static_cast<std::size_t>(i))) == 1);
  }
  Oracle m = [inv, is_c](LetterView v) {
    int top = 3;
    while (top < kLevels - 1 && (1L << (top - 3)) <= static_cast<long>(v.size())) ++top;
    std::string u;
    for (int i = 0; i <= top; ++i) {
      concat_into(u, inv[static_cast<std::size_t>(i)], v);
      if (is_c[static_cast<std::size_t>(i)] ? k_block_C(i, u) : k_block_L(i, u)) return true;
    }
    return false;
  };
  return LazyTree(2, std::move(m), "code(" + alpha.str() + ")");
}

LazyTree iterated_self_fusion(const LazyTree& seed, int n) {
  if (n < 0) throw Error(ErrorKind::invalid_params, "negative iteration count");
  LazyTree t = seed;
  for (int k = 1; k <= n; ++k) {
    Ray ray = default_ray(t, false);
    t = fuse(t, ray, t, ray, 1, 2, 2).tree;
  }
  return t;
}

int depth_statistic(const FiniteTree& t) {
  int best = 0;
  for (const Word& w : t.vertices()) best = std::max(best, alternations(w.view()));
  return best;
}

int depth_statistic(const LazyTree& t, int window) {
  return depth_statistic(ball(t, Word(t.rank()), window));
}

}  // namespace gmm
