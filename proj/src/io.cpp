#include "gmm/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gmm/catalog.hpp"

namespace gmm {

using nlohmann::json;

namespace {

[[noreturn]] void load_fail(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::load_error, "field \"" + field + "\": " + what);
}

std::string words_json_text(const std::vector<Word>& ws) {
  std::string s;
  for (const Word& w : ws) s += (s.empty() ? "" : ",") + w.str();
  return s;
}

std::string node_id(const Word& w) { return "\"" + w.str() + "\""; }

}  // namespace

json tree_to_json(const FiniteTree& t) {
  json vs = json::array();
  for (const Word& w : t.vertices()) vs.push_back(w.str());
  return json{{"rank", t.rank()}, {"window", t.window()}, {"vertices", vs}};
}

FiniteTree tree_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::load_error, "tree document must be a JSON object");
  int rank = 2;
  if (doc.contains("rank")) {
    if (!doc["rank"].is_number_integer() || doc["rank"].get<int>() < 1) load_fail("rank", "expected a positive integer");
    rank = doc["rank"].get<int>();
  }
  if (!doc.contains("vertices")) load_fail("vertices", "missing");
  const json& vs = doc["vertices"];
  if (!vs.is_array()) load_fail("vertices", "expected an array of words");
  RawTree raw{rank, 0, {}};
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string field = "vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_string()) load_fail(field, "expected a word string");
    try {
      raw.words.push_back(parse_letters(vs[i].get<std::string>(), rank));
    } catch (const Error& e) {
      load_fail(field, e.what());
    }
  }
  if (doc.contains("window")) {
    if (!doc["window"].is_number_integer() || doc["window"].get<int>() < 0)
      load_fail("window", "expected a nonnegative integer");
    raw.window = doc["window"].get<int>();
  } else {
    for (const auto& w : raw.words) raw.window = std::max(raw.window, static_cast<int>(w.size()));
  }
  ValidationReport rep = validate(raw);
  if (!rep.ok()) throw Error(ErrorKind::load_error, "invalid tree: " + rep.str());
  return make_tree(raw);
}

FiniteTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::load_error, "cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::load_error, path + ": " + e.what());
  }
  return tree_from_json(doc);
}

void save_tree(const FiniteTree& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::load_error, "cannot write " + path);
  out << tree_to_json(t).dump(1) << "\n";
}

std::string tree_to_dot(const FiniteTree& t) {
  std::ostringstream os;
  os << "digraph tree {\n  " << node_id(Word(t.rank())) << " [style=filled, fillcolor=gold];\n";
  for (const Word& w : t.vertices()) {
    if (w.empty()) continue;
    Word parent = prefix(w, w.length() - 1);
    Letter s = w.back();
    std::string label(1, letter_char(static_cast<Letter>(generator(s))));
    if (s > 0)
      os << "  " << node_id(parent) << " -> " << node_id(w);
    else
      os << "  " << node_id(w) << " -> " << node_id(parent);
    os << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string orbit_graph_to_dot(const OrbitGraph& g) {
  std::ostringstream os;
  os << "digraph orbit {\n  label=\"resolution " << g.resolution << ", window " << g.window << "\";\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  c" << i << " [label=\"c" << i << "\\n" << g.representatives[i].str() << "\"";
    if (static_cast<int>(i) == g.base) os << ", style=filled, fillcolor=gold";
    os << "];\n";
  }
  for (const OrbitEdge& e : g.edges)
    if (e.label > 0)
      os << "  c" << e.from << " -> c" << e.to << " [label=\"" << letter_char(e.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

json orbit_graph_to_json(const OrbitGraph& g) {
  json vs = json::array(), es = json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    vs.push_back({{"id", i},
                  {"representative", g.representatives[i].str()},
                  {"ball", words_json_text(decode_key(g.vertices[i]))}});
  for (const OrbitEdge& e : g.edges)
    es.push_back({{"from", e.from}, {"label", std::string(1, letter_char(e.label))}, {"to", e.to}});
  return json{{"resolution", g.resolution},
              {"window", g.window},
              {"base", g.base},
              {"vertices", vs},
              {"edges", es},
              {"covering",
               {{"morphism", g.covering.morphism},
                {"locally_bijective", g.covering.locally_bijective},
                {"checked", g.covering.checked},
                {"artifacts", g.covering.artifacts}}}};
}

json witness_to_json(const WitnessReport& w) {
  return json{{"kind", w.kind}, {"g", w.g.str()}, {"radius", w.radius}, {"detail", w.detail}};
}

std::string witnesses_to_jsonl(const std::vector<WitnessReport>& ws) {
  std::string out;
  for (const auto& w : ws) out += witness_to_json(w).dump() + "\n";
  return out;
}

json schedule_to_json(const FusionSchedule& s) {
  json anchors = json::array(), mirror = json::array();
  for (const Word& w : s.anchors) anchors.push_back(w.str());
  for (const Word& w : s.mirror) mirror.push_back(w.str());
  return json{{"r0", s.r0},
              {"h", std::string(1, letter_char(s.h))},
              {"ht", std::string(1, letter_char(s.ht))},
              {"preset", s.preset == FusePreset::cross ? "cross" : "axis"},
              {"radii", s.radii},
              {"exponents", s.exponents},
              {"anchors", anchors},
              {"mirror", mirror}};
}

json approximant_to_json(const PeriodicApproximant& p) {
  return json{{"radius", p.radius},
              {"f", p.f.str()},
              {"h", std::string(1, letter_char(p.h))},
              {"hhat", std::string(1, letter_char(p.hhat))},
              {"period", p.period.str()},
              {"core_size", p.core.size()}};
}

namespace {

bool is_file_atom(std::string_view s) {
  return s.find('/') != std::string_view::npos ||
         (s.size() > 5 && s.substr(s.size() - 5) == ".json");
}

int param_value(const std::string& s) {
  if (s.size() == 1 && std::islower(static_cast<unsigned char>(s[0])) && s[0] != 'e')
    return generator(parse_letters(s, 26)[0]);
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::malformed_input, "bad parameter \"" + s + "\"");
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view t) : text_(t) {}

  TreeSpec parse_all() {
    TreeSpec s = spec();
    skip();
    if (pos_ != text_.size()) fail("unexpected \"" + std::string(text_.substr(pos_)) + "\"");
    return s;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::malformed_input, "tree expression: " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string atom() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::string_view(",()@=").find(text_[pos_]) == std::string_view::npos &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void keyword(const std::string& want, std::string& value) {
    std::string k = atom();
    if (k != want) fail("expected " + want + "=");
    expect('=');
    value = atom();
  }

  TreeSpec spec() {
    std::string head = atom();
    if (head.empty()) fail("expected a tree");
    TreeSpec s;
    if (!peek('(')) return leaf(head);
    expect('(');
    if (head == "fuse") {
      s.kind = TreeSpec::fuse;
      s.args.push_back(spec());
      s.down1 = direction();
      expect(',');
      s.args.push_back(spec());
      s.down2 = direction();
      while (peek(',')) {
        expect(',');
        std::string k = atom();
        expect('=');
        std::string v = atom();
        if (k == "r0")
          s.r0 = param_value(v);
        else if (k == "h")
          s.h = static_cast<Letter>(param_value(v));
        else if (k == "ht")
          s.ht = static_cast<Letter>(param_value(v));
        else if (k == "preset" && (v == "cross" || v == "axis"))
          s.preset = v == "cross" ? FusePreset::cross : FusePreset::axis;
        else
          fail("unknown fuse option " + k + "=" + v);
      }
    } else if (head == "periodic" || head == "iterate" || head == "act") {
      s.kind = head == "periodic" ? TreeSpec::periodic : head == "iterate" ? TreeSpec::iterate : TreeSpec::act;
      s.args.push_back(spec());
      expect(',');
      std::string v;
      if (s.kind == TreeSpec::periodic) {
        keyword("r", v);
        s.radius = param_value(v);
      } else if (s.kind == TreeSpec::iterate) {
        keyword("n", v);
        s.count = param_value(v);
      } else {
        keyword("g", v);
        s.word = v;
      }
    } else if (head == "code") {
      s.kind = TreeSpec::code;
      s.prefix = atom();
      expect('(');
      s.tail = atom();
      expect(')');
      parse_code(s.prefix, s.tail);
    } else {
      fail("unknown construction " + head);
    }
    expect(')');
    return s;
  }

  bool direction() {
    if (!peek('@')) return false;
    expect('@');
    std::string d = atom();
    if (d != "up" && d != "down") fail("ray must be @up or @down");
    return d == "down";
  }

  TreeSpec leaf(const std::string& head) {
    TreeSpec s;
    if (is_file_atom(head)) {
      s.kind = TreeSpec::file;
      s.name = head;
      return s;
    }
    std::vector<std::string> parts;
    std::stringstream ss(head);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.empty() || parts[0].empty()) fail("empty catalog name");
    s.name = parts[0] == "B" ? "Bm" : parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s.params.push_back(param_value(parts[i]));
    const auto& names = catalog_names();
    if (std::find(names.begin(), names.end(), s.name) == names.end())
      throw Error(ErrorKind::unknown_name, "unknown catalog tree \"" + parts[0] + "\"");
    return s;
  }
};

std::string letter_text(Letter l) { return std::string(1, letter_char(l)); }

}  // namespace

TreeSpec parse_tree_spec(std::string_view text) { return SpecParser(text).parse_all(); }

std::string render_tree_spec(const TreeSpec& s) {
  switch (s.kind) {
    case TreeSpec::catalog: {
      std::string out = s.name == "Bm" ? "B" : s.name;
      for (int p : s.params) out += ":" + std::to_string(p);
      return out;
    }
    case TreeSpec::file:
      return s.name;
    case TreeSpec::fuse:
      return "fuse(" + render_tree_spec(s.args[0]) + (s.down1 ? "@down" : "@up") + ", " +
             render_tree_spec(s.args[1]) + (s.down2 ? "@down" : "@up") + ", r0=" + std::to_string(s.r0) +
             ", h=" + letter_text(s.h) + ", ht=" + letter_text(s.ht) +
             ", preset=" + (s.preset == FusePreset::cross ? "cross" : "axis") + ")";
    case TreeSpec::periodic:
      return "periodic(" + render_tree_spec(s.args[0]) + ", r=" + std::to_string(s.radius) + ")";
    case TreeSpec::code:
      return "code(" + s.prefix + "(" + s.tail + "))";
    case TreeSpec::iterate:
      return "iterate(" + render_tree_spec(s.args[0]) + ", n=" + std::to_string(s.count) + ")";
    case TreeSpec::act:
      return "act(" + render_tree_spec(s.args[0]) + ", g=" + s.word + ")";
  }
  return {};
}

LazyTree build_tree(const TreeSpec& s) {
  switch (s.kind) {
    case TreeSpec::catalog:
      return catalog_tree(s.name, s.params);
    case TreeSpec::file:
      return as_lazy(load_tree(s.name));
    case TreeSpec::fuse: {
      LazyTree t1 = build_tree(s.args[0]);
      LazyTree t2 = build_tree(s.args[1]);
      return fuse(t1, default_ray(t1, s.down1), t2, default_ray(t2, s.down2), s.h, s.ht, s.r0, s.preset).tree;
    }
    case TreeSpec::periodic:
      return periodic_approximation(build_tree(s.args[0]), s.radius).tree;
    case TreeSpec::code:
      return coding_tree(parse_code(s.prefix, s.tail));
    case TreeSpec::iterate:
      return iterated_self_fusion(build_tree(s.args[0]), s.count);
    case TreeSpec::act: {
      LazyTree t = build_tree(s.args[0]);
      return act(t, parse_word(s.word, t.rank()));
    }
  }
  throw Error(ErrorKind::malformed_input, "unknown tree expression kind");
}

LazyTree build_tree(std::string_view text) { return build_tree(parse_tree_spec(text)); }

}  // namespace gmm
