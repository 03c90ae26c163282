#include "gmm/tree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gmm {

LazyTree::LazyTree() : LazyTree(2, [](LetterView v) { return v.empty(); }, "point") {}

LazyTree::LazyTree(int rank, Oracle member, std::string description)
    : rank_(rank), member_(std::make_shared<const Oracle>(std::move(member))),
      description_(std::move(description)) {}

bool LazyTree::member(const Word& w) const {
  if (w.rank() != rank_)
    throw Error(ErrorKind::incompatible_rank, "word of rank " + std::to_string(w.rank()) +
                                                   " queried in tree of rank " + std::to_string(rank_));
  return member(w.view());
}

FiniteTree::FiniteTree() {
  auto d = std::make_shared<Data>();
  d->vertices.push_back(Word(2));
  d->index.insert(std::string());
  data_ = d;
}

bool FiniteTree::contains(LetterView v) const { return data_->index.find(v) != data_->index.end(); }

bool FiniteTree::contains(const Word& w) const { return w.rank() == rank() && contains(w.view()); }

bool FiniteTree::operator==(const FiniteTree& o) const {
  return rank() == o.rank() && window() == o.window() && vertices() == o.vertices();
}

FiniteTree FiniteTree::trusted(int rank, int window, std::vector<Word> sorted) {
  auto d = std::make_shared<Data>();
  d->rank = rank;
  d->window = window;
  d->index.reserve(sorted.size());
  for (const Word& w : sorted) d->index.emplace(w.view());
  d->vertices = std::move(sorted);
  FiniteTree t;
  t.data_ = std::move(d);
  return t;
}

namespace {

std::string raw_text(const std::vector<Letter>& raw) {
  if (raw.empty()) return "e";
  std::string s;
  for (Letter l : raw) s.push_back(letter_char(l));
  return s;
}

// Depth-first walk of the r-ball about g, children in canonical letter order,
// so vertices arrive sorted. `abs` tracks the reduced address g*v.
template <class Member, class Visitor>
struct Walker {
  int rank;
  const Member& member;
  Visitor& visit;
  int r;
  bool check;
  std::string abs;
  std::string rel;

  void run(int depth) {
    for (int gi = 1; gi <= rank; ++gi) {
      for (int sign : {1, -1}) {
        Letter s = static_cast<Letter>(gi * sign);
        if (!rel.empty() && static_cast<Letter>(rel.back()) == inverse(s)) continue;
        bool pop = !abs.empty() && static_cast<Letter>(abs.back()) == inverse(s);
        char saved = 0;
        if (pop) {
          saved = abs.back();
          abs.pop_back();
        } else {
          abs.push_back(static_cast<char>(s));
        }
        bool in = pop || member(LetterView(abs));
        if (in) {
          rel.push_back(static_cast<char>(s));
          visit.enter(rel, s);
          if (depth + 1 < r) run(depth + 1);
          visit.leave();
          rel.pop_back();
        } else if (check && depth + 1 < r) {
          probe_beyond(s);
        }
        if (pop)
          abs.push_back(saved);
        else
          abs.pop_back();
      }
    }
  }

  // Spot check of the prefix-closure contract one level past a non-member.
  void probe_beyond(Letter s) {
    for (int gi = 1; gi <= rank; ++gi) {
      for (int sign : {1, -1}) {
        Letter s2 = static_cast<Letter>(gi * sign);
        if (s2 == inverse(s)) continue;
        abs.push_back(static_cast<char>(s2));
        bool bad = member(LetterView(abs));
        std::string offending = abs;
        abs.pop_back();
        if (bad)
          throw Error(ErrorKind::contract_violation,
                      "oracle accepts " + Word::from_reduced(rank, offending).str() +
                          " but rejects its prefix " + Word::from_reduced(rank, abs).str());
      }
    }
  }
};

struct WordCollector {
  int rank;
  std::vector<Word> out;
  void enter(const std::string& rel, Letter) { out.push_back(Word::from_reduced(rank, rel)); }
  void leave() {}
};

struct KeyCollector {
  std::string code;
  void enter(const std::string&, Letter s) { code.push_back(static_cast<char>(s)); }
  void leave() { code.push_back('\0'); }
};

template <class Member, class Visitor>
void walk_ball(int rank, const Member& member, LetterView g, int r, bool check, Visitor& visit) {
  Walker<Member, Visitor> w{rank, member, visit, r, check, std::string(g), std::string()};
  if (r > 0) w.run(0);
}

std::vector<Word> lazy_ball_words(const LazyTree& t, const Word& g, int r, bool check) {
  if (!t.member(g))
    throw Error(ErrorKind::action_undefined, g.str() + " is not a vertex of " + t.description());
  WordCollector c{t.rank(), {Word(t.rank())}};
  auto m = [&t](LetterView v) { return t.member(v); };
  walk_ball(t.rank(), m, g.view(), r, check, c);
  return std::move(c.out);
}

}  // namespace

std::string ValidationReport::str() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const Violation& v = violations[i];
    if (i) os << "; ";
    switch (v.kind) {
      case Violation::missing_root: os << "missing root e"; break;
      case Violation::missing_prefix: os << "missing prefix \"" << v.word << "\""; break;
      case Violation::over_window: os << "vertex " << v.word << " exceeds window"; break;
      case Violation::non_reduced: os << "non-reduced vertex " << v.word; break;
    }
  }
  return os.str();
}

ValidationReport validate(const RawTree& raw) {
  ValidationReport rep;
  std::unordered_set<std::string> present;
  std::vector<const std::vector<Letter>*> reduced;
  bool root = false;
  for (const auto& w : raw.words) {
    if (w.empty()) root = true;
    if (!is_reduced(w)) {
      rep.violations.push_back({Violation::non_reduced, raw_text(w)});
      continue;
    }
    if (static_cast<int>(w.size()) > raw.window)
      rep.violations.push_back({Violation::over_window, raw_text(w)});
    present.emplace(w.begin(), w.end());
    reduced.push_back(&w);
  }
  if (!root) rep.violations.push_back({Violation::missing_root, "e"});
  std::unordered_set<std::string> reported;
  for (const auto* w : reduced) {
    for (std::size_t k = 1; k < w->size(); ++k) {
      std::string p(w->begin(), w->begin() + static_cast<std::ptrdiff_t>(k));
      if (!present.count(p) && reported.insert(p).second)
        rep.violations.push_back(
            {Violation::missing_prefix, raw_text(std::vector<Letter>(p.begin(), p.end()))});
    }
  }
  return rep;
}

ValidationReport validate(const FiniteTree& t) {
  RawTree raw{t.rank(), t.window(), {}};
  for (const Word& w : t.vertices()) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < w.length(); ++i) ls.push_back(w[i]);
    raw.words.push_back(std::move(ls));
  }
  return validate(raw);
}

FiniteTree make_tree(const RawTree& raw) {
  ValidationReport rep = validate(raw);
  if (!rep.ok()) throw Error(ErrorKind::contract_violation, rep.str());
  std::vector<Word> ws;
  for (const auto& w : raw.words) ws.push_back(reduce(raw.rank, w));
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return FiniteTree::trusted(raw.rank, raw.window, std::move(ws));
}

FiniteTree make_tree(int rank, int window, const std::vector<Word>& vertices) {
  RawTree raw{rank, window, {}};
  for (const Word& w : vertices) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < w.length(); ++i) ls.push_back(w[i]);
    raw.words.push_back(std::move(ls));
  }
  return make_tree(raw);
}

std::vector<Word> decode_key(const BallKey& k) {
  std::vector<Word> out{Word(k.rank)};
  std::string path;
  for (char c : k.code) {
    if (c == '\0') {
      path.pop_back();
    } else {
      path.push_back(c);
      out.push_back(Word::from_reduced(k.rank, path));
    }
  }
  return out;
}

FiniteTree materialize(const LazyTree& t, int window) {
  if (window < 0) throw Error(ErrorKind::out_of_range, "negative window");
  auto ws = lazy_ball_words(t, Word(t.rank()), window, true);
  return FiniteTree::trusted(t.rank(), window, std::move(ws));
}

LazyTree act(const LazyTree& t, const Word& g) {
  if (!t.member(g))
    throw Error(ErrorKind::action_undefined, g.str() + " is not a vertex of " + t.description());
  std::string gl(g.view());
  LazyTree base = t;
  Oracle m = [base, gl](LetterView v) {
    std::string buf;
    concat_into(buf, gl, v);
    return base.member(LetterView(buf));
  };
  std::string desc = g.empty() ? t.description() : "(" + t.description() + ")." + g.str();
  return LazyTree(t.rank(), std::move(m), desc);
}

FiniteTree ball(const FiniteTree& t, const Word& g, int r) {
  if (!t.contains(g))
    throw Error(ErrorKind::action_undefined, g.str() + " is not a vertex of the tree");
  int room = t.window() - static_cast<int>(g.length());
  if (r > room)
    throw Error(ErrorKind::window_exceeded,
                "radius " + std::to_string(r) + " about " + g.str() + " exceeds window " +
                    std::to_string(t.window()) + "; largest valid radius " + std::to_string(room),
                room);
  WordCollector c{t.rank(), {Word(t.rank())}};
  auto m = [&t](LetterView v) { return t.contains(v); };
  walk_ball(t.rank(), m, g.view(), r, false, c);
  return FiniteTree::trusted(t.rank(), r, std::move(c.out));
}

FiniteTree act(const FiniteTree& t, const Word& g) {
  return ball(t, g, t.window() - static_cast<int>(g.length()));
}

FiniteTree ball(const LazyTree& t, const Word& g, int r) {
  if (r < 0) throw Error(ErrorKind::out_of_range, "negative radius");
  return FiniteTree::trusted(t.rank(), r, lazy_ball_words(t, g, r, false));
}

BallKey ball_key(const LazyTree& t, const Word& g, int r) {
  if (!t.member(g))
    throw Error(ErrorKind::action_undefined, g.str() + " is not a vertex of " + t.description());
  KeyCollector c;
  auto m = [&t](LetterView v) { return t.member(v); };
  walk_ball(t.rank(), m, g.view(), r, false, c);
  while (!c.code.empty() && c.code.back() == '\0') c.code.pop_back();
  return BallKey{t.rank(), r, std::move(c.code)};
}

BallKey canonical_key(const FiniteTree& t) {
  BallKey k{t.rank(), t.window(), {}};
  std::string path;
  for (const Word& w : t.vertices()) {
    if (w.empty()) continue;
    LetterView v = w.view();
    while (path.size() >= v.size() || LetterView(path) != v.substr(0, path.size())) {
      path.pop_back();
      k.code.push_back('\0');
    }
    path.push_back(v.back());
    k.code.push_back(v.back());
  }
  return k;
}

MetricResult ball_metric(const FiniteTree& t1, const FiniteTree& t2) {
  if (t1.rank() != t2.rank())
    throw Error(ErrorKind::incompatible_rank, "trees of rank " + std::to_string(t1.rank()) +
                                                   " and " + std::to_string(t2.rank()));
  int m = std::min(t1.window(), t2.window());
  std::size_t first = static_cast<std::size_t>(m) + 1;
  const auto& a = t1.vertices();
  const auto& b = t2.vertices();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && a[i].length() > static_cast<std::size_t>(m)) { ++i; continue; }
    if (j < b.size() && b[j].length() > static_cast<std::size_t>(m)) { ++j; continue; }
    if (i < a.size() && j < b.size() && a[i] == b[j]) { ++i; ++j; continue; }
    bool take_a = j >= b.size() || (i < a.size() && a[i] < b[j]);
    std::size_t len = take_a ? a[i].length() : b[j].length();
    first = std::min(first, len);
    if (take_a) ++i; else ++j;
  }
  MetricResult res;
  res.exact = first <= static_cast<std::size_t>(m);
  res.agreement_radius = res.exact ? static_cast<int>(first) - 1 : m;
  res.distance = std::exp(-static_cast<double>(res.agreement_radius));
  return res;
}

LazyTree as_lazy(const FiniteTree& t) {
  FiniteTree copy = t;
  return LazyTree(t.rank(), [copy](LetterView v) { return copy.contains(v); },
                  "finite(window " + std::to_string(t.window()) + ")");
}

std::vector<Word> sphere(const FiniteTree& t, int radius) {
  std::vector<Word> out;
  for (const Word& w : t.vertices())
    if (static_cast<int>(w.length()) == radius) out.push_back(w);
  return out;
}

}  // namespace gmm
