#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmm/acceptance.hpp"
#include "gmm/catalog.hpp"
#include "gmm/constructions.hpp"
#include "gmm/dynamics.hpp"
#include "gmm/io.hpp"

using namespace gmm;
using nlohmann::json;

namespace {

Letter parse_letter(const std::string& s) {
  std::vector<Letter> ls = parse_letters(s, 26);
  if (ls.size() != 1) throw Error(ErrorKind::malformed_input, "expected a single letter, got \"" + s + "\"");
  return ls[0];
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::malformed_input, "bad integer \"" + item + "\" in list \"" + s + "\"");
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error(ErrorKind::load_error, "cannot write \"" + out_path + "\"");
  f << text;
}

std::string window_line(int W) { return "# window=" + std::to_string(W) + "\n"; }

std::string distance_text(int r) { return "r=" + std::to_string(r) + " d=e^-" + std::to_string(r); }

std::string ball_text(const BallKey& k) {
  std::string s = "{";
  bool first = true;
  for (const Word& w : decode_key(k)) {
    s += (first ? "" : ",") + w.str();
    first = false;
  }
  return s + "}";
}

std::string jsonl_with_window(const std::vector<WitnessReport>& ws, int W) {
  std::string out;
  for (const auto& w : ws) {
    json j = witness_to_json(w);
    j["window"] = W;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-resolution experiments on pointed trees in free groups"};
  app.require_subcommand(1);
  std::function<int()> action;

  // tree
  std::string tree_spec, format = "json", out_path;
  int window = -1;
  auto* tree = app.add_subcommand("tree", "materialize a tree");
  tree->add_option("--tree", tree_spec, "tree expression")->required();
  tree->add_option("--window", window, "window (default 6)");
  tree->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  tree->add_option("--out", out_path, "write to a file");
  tree->callback([&] {
    action = [&] {
      int W = window < 0 ? 6 : window;
      FiniteTree t = materialize(build_tree(tree_spec), W);
      emit(format == "dot" ? tree_to_dot(t) : tree_to_json(t).dump(2) + "\n", out_path);
      return 0;
    };
  });

  // dist
  std::string spec_a, spec_b;
  auto* dist = app.add_subcommand("dist", "ball-metric distance of two rooted trees");
  dist->add_option("--a", spec_a)->required();
  dist->add_option("--b", spec_b)->required();
  dist->add_option("--window", window, "window (default 8)");
  dist->callback([&] {
    action = [&] {
      int W = window < 0 ? 8 : window;
      MetricResult m = ball_metric(materialize(build_tree(spec_a), W), materialize(build_tree(spec_b), W));
      std::cout << distance_text(m.agreement_radius) << (m.exact ? " exact" : " upper-bound") << "\n"
                << window_line(W);
      return 0;
    };
  });

  // orbit-graph
  int r = -1;
  auto* og = app.add_subcommand("orbit-graph", "quotient of the tree by ball classes");
  og->add_option("--tree", tree_spec)->required();
  og->add_option("--r", r, "resolution")->required();
  og->add_option("--window", window, "window (default 4r)");
  og->add_option("--format", format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));
  og->callback([&] {
    action = [&] {
      int W = window < 0 ? 4 * r : window;
      OrbitGraph g = orbit_graph(build_tree(tree_spec), r, W);
      if (format == "json") {
        std::cout << orbit_graph_to_json(g).dump(2) << "\n";
      } else if (format == "dot") {
        std::cout << orbit_graph_to_dot(g);
      } else {
        std::cout << "vertices " << g.vertices.size() << " edges " << g.edges.size() << " covering "
                  << (g.covering.ok() ? "ok" : "failed") << " artifacts " << g.covering.artifacts.size() << "\n";
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
          std::cout << "c" << i << " " << (g.representatives[i].empty() ? "e" : g.representatives[i].str()) << "\n";
        for (const OrbitEdge& e : g.edges)
          std::cout << "c" << e.from << " -" << letter_char(e.label) << "-> c" << e.to << "\n";
        std::cout << "# resolution=" << r << "\n" << window_line(W);
      }
      return 0;
    };
  });

  // growth
  int kmax = 5;
  auto* growth = app.add_subcommand("growth", "number of ball classes H(k)");
  growth->add_option("--tree", tree_spec)->required();
  growth->add_option("--kmax", kmax);
  growth->callback([&] {
    action = [&] {
      std::cout << "k H check stable\n";
      for (const GrowthRow& row : growth_function(build_tree(tree_spec), kmax))
        std::cout << row.k << " " << row.count << " " << row.check << " " << (row.stable() ? "yes" : "no") << "\n";
      std::cout << "# window=2k+2 per row\n";
      return 0;
    };
  });

  // recurrence
  int min_norm = 1;
  auto* rec = app.add_subcommand("recurrence", "nontrivial g with ball(t,g,r) = ball(t,e,r)");
  rec->add_option("--tree", tree_spec)->required();
  rec->add_option("--r", r)->required();
  rec->add_option("--window", window, "window (default 3(r+1))");
  rec->add_option("--min-norm", min_norm);
  rec->callback([&] {
    action = [&] {
      int W = window < 0 ? 3 * (r + 1) : window;
      std::cout << jsonl_with_window(recurrence_witnesses(build_tree(tree_spec), r, W, min_norm), W);
      return 0;
    };
  });

  // expansivity
  auto* exp = app.add_subcommand("expansivity", "translate separating two nearby trees");
  exp->add_option("--a", spec_a)->required();
  exp->add_option("--b", spec_b)->required();
  exp->add_option("--window", window, "window (default 20)");
  exp->callback([&] {
    action = [&] {
      int W = window < 0 ? 20 : window;
      FiniteTree t1 = materialize(build_tree(spec_a), W), t2 = materialize(build_tree(spec_b), W);
      WitnessReport w = expansivity_witness(t1, t2);
      int after = ball_metric(act(t1, w.g), act(t2, w.g)).agreement_radius;
      json j = witness_to_json(w);
      j["window"] = W;
      j["after"] = distance_text(after);
      std::cout << j.dump() << "\n";
      return 0;
    };
  });

  // accumulate
  std::string host_spec, target_spec;
  int depth_min = -1;
  auto* acc = app.add_subcommand("accumulate", "deep vertices of host whose r-ball matches target");
  acc->add_option("--host", host_spec)->required();
  acc->add_option("--target", target_spec)->required();
  acc->add_option("--r", r)->required();
  acc->add_option("--depth-min", depth_min, "default 2r");
  acc->add_option("--window", window, "window (default depth-min + 3r)");
  acc->callback([&] {
    action = [&] {
      int dm = depth_min < 0 ? 2 * r : depth_min;
      int W = window < 0 ? dm + 3 * r : window;
      std::cout << jsonl_with_window(accumulates_on(build_tree(host_spec), build_tree(target_spec), r, dm, W), W);
      return 0;
    };
  });

  // closure
  auto* clo = app.add_subcommand("closure", "ball classes occurring far from the root");
  clo->add_option("--tree", tree_spec)->required();
  clo->add_option("--r", r)->required();
  clo->add_option("--window", window, "window (default 4r + 8)");
  clo->add_option("--depth-min", depth_min, "default window/2");
  clo->callback([&] {
    action = [&] {
      int W = window < 0 ? 4 * r + 8 : window;
      std::set<BallKey> keys = closure_sample(build_tree(tree_spec), r, W, depth_min);
      std::cout << keys.size() << " classes\n";
      for (const BallKey& k : keys) std::cout << ball_text(k) << "\n";
      std::cout << "# resolution=" << r << " depth_min=" << (depth_min < 0 ? W / 2 : depth_min) << "\n"
                << window_line(W);
      return 0;
    };
  });

  // ends
  std::string radii_text;
  auto* ends = app.add_subcommand("ends", "escaping components beyond each radius");
  ends->add_option("--tree", tree_spec)->required();
  ends->add_option("--radii", radii_text, "comma-separated radii")->required();
  ends->add_option("--window", window, "window (default 3 max radius)");
  ends->callback([&] {
    action = [&] {
      std::vector<int> rhos = parse_int_list(radii_text);
      int W = window < 0 ? 3 * *std::max_element(rhos.begin(), rhos.end()) : window;
      std::cout << end_profile(build_tree(tree_spec), rhos, W).str() << "\n" << window_line(W);
      return 0;
    };
  });

  // fuse
  std::string t1_spec, t2_spec, ray1 = "up", ray2 = "up", h_text = "a", ht_text = "b", preset = "cross";
  int r0 = 2;
  long max_exponent = 64;
  auto* fu = app.add_subcommand("fuse", "fusion of two trees along rays");
  fu->set_help_flag("--help", "print this help message and exit");
  fu->add_option("--t1", t1_spec)->required();
  fu->add_option("--t2", t2_spec)->required();
  fu->add_option("--ray1", ray1)->check(CLI::IsMember({"up", "down"}));
  fu->add_option("--ray2", ray2)->check(CLI::IsMember({"up", "down"}));
  fu->add_option("--r0", r0);
  fu->add_option("--h", h_text);
  fu->add_option("--ht", ht_text);
  fu->add_option("--preset", preset)->check(CLI::IsMember({"cross", "axis"}));
  fu->add_option("--max-exponent", max_exponent, "list schedule entries up to this exponent (default 64)");
  fu->add_option("--window", window, "also materialize and report the vertex count");
  fu->callback([&] {
    action = [&] {
      LazyTree t1 = build_tree(t1_spec), t2 = build_tree(t2_spec);
      Fusion f = fuse(t1, default_ray(t1, ray1 == "down"), t2, default_ray(t2, ray2 == "down"),
                      parse_letter(h_text), parse_letter(ht_text), r0,
                      preset == "axis" ? FusePreset::axis : FusePreset::cross, max_exponent);
      json j = schedule_to_json(f.schedule);
      if (window >= 0) {
        j["window"] = window;
        j["vertices"] = materialize(f.tree, window).size();
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    };
  });

  // approx-periodic
  auto* ap = app.add_subcommand("approx-periodic", "periodic tree agreeing with t on the r-ball");
  ap->add_option("--tree", tree_spec)->required();
  ap->add_option("--r", r)->required();
  ap->add_option("--window", window, "comparison window (default 2r+2)");
  ap->callback([&] {
    action = [&] {
      int W = window < 0 ? 2 * r + 2 : window;
      LazyTree t = build_tree(tree_spec);
      PeriodicApproximant p = periodic_approximation(t, r);
      MetricResult m = ball_metric(materialize(p.tree, W), materialize(t, W));
      json j = approximant_to_json(p);
      j["window"] = W;
      j["distance"] = distance_text(m.agreement_radius);
      j["exact"] = m.exact;
      std::cout << j.dump(2) << "\n";
      return 0;
    };
  });

  // code
  std::string prefix, tail;
  bool want_ends = false;
  auto* co = app.add_subcommand("code", "tree coded by a symbol sequence");
  co->add_option("--prefix", prefix, "symbols over b, B");
  co->add_option("--tail", tail, "aA | bB | b | B")->required();
  co->add_option("--window", window, "window (default 24)");
  co->add_flag("--ends", want_ends, "report the end profile at radii 2,4,8");
  co->callback([&] {
    action = [&] {
      int W = window < 0 ? 24 : window;
      Code c = parse_code(prefix, tail);
      LazyTree t = coding_tree(c);
      std::vector<Word> xs = coding_base_points(c, 5);
      std::cout << "code " << c.str() << "\nbase points";
      for (const Word& x : xs) std::cout << " " << (x.empty() ? "e" : x.str());
      std::cout << "\nvertices " << materialize(t, W).size() << "\n";
      if (want_ends) std::cout << "ends " << end_profile(t, {2, 4, 8}, W).str() << "\n";
      std::cout << window_line(W);
      return 0;
    };
  });

  // levels
  std::vector<std::string> tree_specs;
  int t_bound = 3;
  auto* lv = app.add_subcommand("levels", "specialization matrix and level estimates");
  lv->add_option("--tree", tree_specs, "repeat for each tree")->required();
  lv->add_option("--r", r, "resolution (default 3)");
  lv->add_option("--window", window, "window (default 16)");
  lv->add_option("--depth-min", depth_min, "default 6");
  lv->add_option("--t-bound", t_bound);
  lv->callback([&] {
    action = [&] {
      int rr = r < 0 ? 3 : r, W = window < 0 ? 16 : window, dm = depth_min < 0 ? 6 : depth_min;
      std::vector<LazyTree> ts;
      for (const auto& s : tree_specs) ts.push_back(build_tree(s));
      SpecializationResult res = specialization_matrix(ts, rr, W, dm, t_bound);
      std::cout << "resolution-(" << rr << "," << W << ") estimate\n" << res.label() << window_line(W);
      return 0;
    };
  });

  // check
  std::vector<int> only;
  auto* ck = app.add_subcommand("check", "run the acceptance suite");
  ck->add_option("--only", only, "criterion ids");
  ck->callback([&] {
    action = [&] {
      auto results = run_acceptance(std::cout, only);
      long failed = std::count_if(results.begin(), results.end(), [](const CriterionResult& x) { return !x.pass; });
      std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
      return failed == 0 ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << kind_name(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }
}
