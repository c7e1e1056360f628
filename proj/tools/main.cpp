// Command-line driver: analyze a routing on a graph, search for good
// routings, or run randomized verification sweeps against the theorems.
// Reports go to standard output as JSON; diagnostics to standard error.
// Exit codes: 0 ok, 1 sweep found a violation (or internal error), 2 parse
// or validation failure, 3 routing inapplicable to the graph, 4 search
// limits exceeded.
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "routegap/bounds.hpp"
#include "routegap/constructions.hpp"
#include "routegap/errors.hpp"
#include "routegap/graph.hpp"
#include "routegap/optimizer.hpp"
#include "routegap/report.hpp"
#include "routegap/rng.hpp"
#include "routegap/routing.hpp"
#include "routegap/spanning_tree.hpp"
#include "routegap/spectral.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct GraphFlags {
  std::string file;
  int complete = 0;
  int cycle = 0;
  int path = 0;
  int star = 0;
  int tree_random = 0;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& f) {
  cmd->add_option("--graph", f.file, "edge-list file (\"u v\" per line, # comments)");
  cmd->add_option("--complete", f.complete, "complete graph on N vertices");
  cmd->add_option("--cycle", f.cycle, "cycle on N vertices");
  cmd->add_option("--path", f.path, "path on N vertices");
  cmd->add_option("--star", f.star, "star on N vertices, hub 0");
  cmd->add_option("--tree-random", f.tree_random,
                  "random labeled tree on N vertices (seeded)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw routegap::ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

routegap::Graph build_graph(const GraphFlags& f, std::uint64_t seed) {
  const int chosen = (!f.file.empty() ? 1 : 0) + (f.complete > 0) + (f.cycle > 0) +
                     (f.path > 0) + (f.star > 0) + (f.tree_random > 0);
  if (chosen != 1) {
    throw routegap::ParseError(
        "pick exactly one of --graph, --complete, --cycle, --path, --star, "
        "--tree-random");
  }
  if (!f.file.empty()) return routegap::Graph::from_edge_list(read_file(f.file));
  if (f.complete) return routegap::complete_graph(f.complete);
  if (f.cycle) return routegap::cycle_graph(f.cycle);
  if (f.path) return routegap::path_graph(f.path);
  if (f.star) return routegap::star_graph(f.star);
  return routegap::random_tree(f.tree_random, seed);
}

struct BuiltRouting {
  routegap::Routing routing;
  std::optional<routegap::SpanningTree> tree;  // set when routed along a tree
};

BuiltRouting build_routing(const routegap::Graph& g, const std::string& selector,
                           std::uint64_t seed) {
  const int n = g.vertex_count();
  if (selector == "geodesic") return {routegap::geodesic_routing(g), std::nullopt};
  if (selector == "counterexample" || selector == "eulerian") {
    if (!routegap::is_complete(g)) {
      throw routegap::InapplicableError(selector +
                                        " routing requires a complete graph");
    }
    if (selector == "counterexample") {
      return {routegap::counterexample_routing(n), std::nullopt};
    }
    if (n < 7) {
      throw routegap::InapplicableError(
          "eulerian routing needs a complete graph on at least 7 vertices");
    }
    return {routegap::eulerian_counterexample_routing(n), std::nullopt};
  }
  if (selector.rfind("tree:", 0) == 0) {
    const std::string builder = selector.substr(5);
    std::optional<routegap::SpanningTree> t;
    if (builder == "bfs") {
      t = routegap::bfs_tree(g, 0);
    } else if (builder == "dfs") {
      t = routegap::dfs_tree(g, 0);
    } else if (builder == "hamiltonian") {
      t = routegap::hamiltonian_path_tree(g);
    } else if (builder == "star") {
      t = routegap::star_tree(g, 0);
    } else if (builder == "random") {
      t = routegap::random_spanning_tree(g, seed);
    } else {
      throw routegap::ParseError("unknown tree builder '" + builder +
                                 "' (bfs, dfs, hamiltonian, star, random)");
    }
    routegap::Routing r = routegap::spanning_tree_routing(g, *t);
    return {std::move(r), std::move(t)};
  }
  if (selector.rfind("file:", 0) == 0) {
    routegap::Routing r =
        routegap::parse_routing(n, read_file(selector.substr(5)));
    const std::vector<routegap::RoutingViolation> violations =
        routegap::validate(g, r);
    if (!violations.empty()) {
      throw routegap::ParseError("invalid routing: " +
                                 routegap::to_string(violations.front()));
    }
    return {std::move(r), std::nullopt};
  }
  throw routegap::ParseError(
      "unknown routing selector '" + selector +
      "' (geodesic, tree:<builder>, file:<path>, counterexample, eulerian)");
}

int run_analyze(const GraphFlags& gf, const std::string& routing_selector,
                std::uint64_t seed, int tv_rmax) {
  const routegap::Graph g = build_graph(gf, seed);
  BuiltRouting built = build_routing(g, routing_selector, seed);

  routegap::AnalysisReport rep;
  rep.vertex_count = g.vertex_count();
  rep.edge_count = g.edge_count();
  rep.max_degree = g.max_degree();
  rep.diameter = routegap::diameter(g);
  rep.edge_list = routegap::to_edge_list(g);
  rep.routing_source = routing_selector;
  rep.routing_text = routegap::to_text(built.routing);
  rep.forwarding_index = routegap::forwarding_index(built.routing);
  rep.bounds = routegap::compare(g, built.routing);
  rep.theorem1 = routegap::theorem1_check(g, built.routing);
  rep.lemma1 = routegap::lemma1_check(g, built.routing);
  if (routegap::is_tree(g) && g.max_degree() >= 2) {
    rep.lemma2 = routegap::lemma2_check(g);
  }
  if (built.tree) rep.theorem2 = routegap::theorem2_check(g, *built.tree);

  const routegap::SpectralReport sp = routegap::eigenvalues(routegap::kernel(g));
  rep.eigenvalues.assign(sp.eigenvalues.data(),
                         sp.eigenvalues.data() + sp.eigenvalues.size());
  rep.stationary.assign(sp.stationary.data(),
                        sp.stationary.data() + sp.stationary.size());
  rep.beta1 = sp.beta1();
  rep.beta_star = sp.beta_star();

  if (tv_rmax > 0) {
    const routegap::TvBoundReport tv = routegap::tv_bound_check(g, 0, tv_rmax);
    routegap::TvSeries series;
    series.start = tv.start;
    series.tv.assign(tv.tv.data(), tv.tv.data() + tv.tv.size());
    series.bound.assign(tv.bound.data(), tv.bound.data() + tv.bound.size());
    series.holds = tv.holds;
    rep.tv = std::move(series);
  }

  std::cout << routegap::serialize_report(rep);
  return 0;
}

int run_optimize(const GraphFlags& gf, const std::string& objective_name,
                 const std::string& mode, std::uint64_t seed,
                 std::int64_t max_iters, const routegap::SearchLimits& limits) {
  const routegap::Graph g = build_graph(gf, seed);
  const routegap::Objective obj = routegap::objective_from_name(objective_name);
  routegap::SearchResult res;
  if (mode == "exact") {
    res = routegap::enumerate_optimal(g, obj, limits);
  } else if (mode == "local") {
    res = routegap::local_search(g, obj, seed, max_iters);
  } else {
    throw routegap::ParseError("unknown mode '" + mode + "' (exact, local)");
  }

  ordered_json j;
  j["graph"] = {
      {"vertices", g.vertex_count()},
      {"edges", g.edge_count()},
      {"max_degree", g.max_degree()},
      {"diameter", routegap::diameter(g)},
      {"edge_list", routegap::to_edge_list(g)},
  };
  j["objective"] = routegap::to_string(res.objective);
  j["mode"] = mode;
  j["seed"] = seed;
  j["integer_value"] = res.integer_value;
  j["objective_value"] = res.objective_value;
  j["optimal"] = res.optimal;
  j["evaluations"] = res.evaluations;
  j["gamma_star"] = routegap::gamma_star(res.routing);
  j["bottleneck"] = routegap::bottleneck(res.routing);
  j["poincare"] = routegap::poincare_bound(g, res.routing);
  j["cheeger"] = routegap::cheeger_bound(g, res.routing);
  j["routing"] = routegap::to_text(res.routing);
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---- verify sweeps ---------------------------------------------------------

struct VerifyFlags {
  std::string suite;
  int max_n = 8;
  int trials = 100;
  int rmax = 50;
  std::uint64_t seed = 1;
};

void print_falsifier(const routegap::Graph& g, const routegap::Routing* r,
                     const std::string& note) {
  std::cout << "FALSIFIED: " << note << "\n";
  std::cout << "graph:\n" << routegap::to_edge_list(g);
  if (r != nullptr) std::cout << "routing:\n" << routegap::to_text(*r);
}

routegap::Graph random_graph_for_trial(routegap::Rng& rng, int min_n, int max_n) {
  const int n = rng.uniform_int(min_n, max_n);
  const double p = 0.2 + 0.6 * rng.uniform();
  return routegap::random_connected_graph(n, p, rng.next());
}

int verify_theorem1(const VerifyFlags& f) {
  routegap::Rng rng(f.seed);
  std::int64_t checked = 0;
  std::int64_t premise_hits = 0;
  for (int t = 0; t < f.trials; ++t) {
    const routegap::Graph g = random_graph_for_trial(rng, 2, f.max_n);
    std::vector<routegap::Routing> routings;
    routings.push_back(routegap::geodesic_routing(g));
    routings.push_back(routegap::spanning_tree_routing(
        g, routegap::random_spanning_tree(g, rng.next())));
    routings.push_back(routegap::random_simple_routing(g, rng.next()));
    for (const routegap::Routing& r : routings) {
      const routegap::Theorem1Result res = routegap::theorem1_check(g, r);
      ++checked;
      if (res.premise) ++premise_hits;
      if (!res.implication_holds()) {
        print_falsifier(g, &r, "8*gamma_bar >= gamma_star but 4d^2 b < gamma_star|E|");
        return 1;
      }
    }
  }
  std::cout << "theorem1: " << checked << " routings checked, " << premise_hits
            << " with premise true: pass\n";
  return 0;
}

int verify_theorem2(const VerifyFlags& f) {
  routegap::Rng rng(f.seed);
  for (int t = 0; t < f.trials; ++t) {
    const routegap::Graph g = random_graph_for_trial(rng, 2, f.max_n);
    const routegap::SpanningTree tree =
        routegap::random_spanning_tree(g, rng.next());
    const routegap::Theorem2Result res = routegap::theorem2_check(g, tree);
    const bool ok =
        g.vertex_count() >= 3 ? res.strict() : res.holds();
    if (!ok) {
      const routegap::Routing r = routegap::spanning_tree_routing(g, tree);
      print_falsifier(g, &r, "spanning-tree routing with d^2 b < gamma_star|E|");
      return 1;
    }
  }
  std::cout << "theorem2: " << f.trials << " (graph, tree) pairs: pass\n";
  return 0;
}

int verify_lemma1(const VerifyFlags& f) {
  routegap::Rng rng(f.seed);
  std::int64_t subordinate_hits = 0;
  std::int64_t premise_hits = 0;
  for (int t = 0; t < f.trials; ++t) {
    const routegap::Graph g = random_graph_for_trial(rng, 2, f.max_n);
    std::vector<routegap::Routing> routings;
    routings.push_back(routegap::geodesic_routing(g));
    routings.push_back(routegap::spanning_tree_routing(
        g, routegap::random_spanning_tree(g, rng.next())));
    for (const routegap::Routing& r : routings) {
      const routegap::Lemma1Result res = routegap::lemma1_check(g, r);
      if (res.subordinate_longest) {
        ++subordinate_hits;
        if (!res.central_floor_holds()) {
          print_falsifier(g, &r, "subordinate longest path but b below the central-edge floor");
          return 1;
        }
      }
      if (res.premise()) {
        ++premise_hits;
        if (!res.conclusion_strict()) {
          print_falsifier(g, &r, "lemma premise holds but d^2 b <= gamma_star|E|");
          return 1;
        }
      }
    }
  }
  std::cout << "lemma1: " << 2 * f.trials << " routings checked, "
            << subordinate_hits << " subordinate, " << premise_hits
            << " with full premise: pass\n";
  return 0;
}

int verify_lemma2(const VerifyFlags& f) {
  routegap::Rng rng(f.seed);
  int checked = 0;
  for (int t = 0; t < f.trials; ++t) {
    const int n = rng.uniform_int(2, f.max_n);
    const routegap::Graph tree = routegap::random_tree(n, rng.next());
    if (tree.max_degree() < 2) continue;  // the single edge has d_T = 1
    const routegap::Lemma2Result res = routegap::lemma2_check(tree);
    ++checked;
    const bool witness_ok =
        static_cast<std::int64_t>(res.witness_small_side) * res.d_t >= n - 1;
    if (!res.holds() || !witness_ok) {
      print_falsifier(tree, nullptr, "tree with b_T d_T^2 < (n-1)^2 or bad witness");
      return 1;
    }
  }
  std::cout << "lemma2: " << checked << " trees checked: pass\n";
  return 0;
}

int verify_bounds_validity(const VerifyFlags& f) {
  routegap::Rng rng(f.seed);
  std::int64_t checked = 0;
  for (int t = 0; t < f.trials; ++t) {
    const routegap::Graph g = random_graph_for_trial(rng, 2, f.max_n);
    const double beta1 = routegap::eigenvalues(routegap::kernel(g)).beta1();
    std::vector<routegap::Routing> routings;
    routings.push_back(routegap::geodesic_routing(g));
    routings.push_back(routegap::spanning_tree_routing(
        g, routegap::random_spanning_tree(g, rng.next())));
    routings.push_back(routegap::random_simple_routing(g, rng.next()));
    for (const routegap::Routing& r : routings) {
      ++checked;
      const double p = routegap::poincare_bound(g, r);
      const double c = routegap::cheeger_bound(g, r);
      if (beta1 > std::min(p, c) + 1e-8) {
        print_falsifier(g, &r, "beta_1 exceeds a routing bound");
        return 1;
      }
    }
  }
  std::cout << "bounds-validity: " << checked
            << " routings checked (beta_1 <= both bounds): pass\n";
  return 0;
}

int verify_tv(const VerifyFlags& f) {
  routegap::Rng rng(f.seed);
  for (int t = 0; t < f.trials; ++t) {
    const routegap::Graph g = random_graph_for_trial(rng, 2, f.max_n);
    const routegap::TvBoundReport res = routegap::tv_bound_check(g, 0, f.rmax);
    if (!res.holds) {
      print_falsifier(g, nullptr, "TV distance above the spectral decay bound");
      return 1;
    }
  }
  std::cout << "tv: " << f.trials << " graphs, steps 1.." << f.rmax
            << " from vertex 0: pass\n";
  return 0;
}

int run_verify(const VerifyFlags& f) {
  if (f.suite == "theorem1") return verify_theorem1(f);
  if (f.suite == "theorem2") return verify_theorem2(f);
  if (f.suite == "lemma1") return verify_lemma1(f);
  if (f.suite == "lemma2") return verify_lemma2(f);
  if (f.suite == "bounds-validity") return verify_bounds_validity(f);
  if (f.suite == "tv") return verify_tv(f);
  throw routegap::ParseError("unknown suite '" + f.suite +
                             "' (theorem1, theorem2, lemma1, lemma2, "
                             "bounds-validity, tv)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Poincare and Cheeger eigenvalue bounds for simple random walks under "
      "canonical-path routings"};
  app.require_subcommand(1);

  GraphFlags analyze_graph;
  std::string analyze_routing = "geodesic";
  std::uint64_t analyze_seed = 0;
  int analyze_tv = 0;
  CLI::App* analyze = app.add_subcommand("analyze", "full report for one routing");
  add_graph_flags(analyze, analyze_graph);
  analyze->add_option(
      "--routing", analyze_routing,
      "geodesic | tree:<bfs|dfs|hamiltonian|star|random> | file:<path> | "
      "counterexample | eulerian");
  analyze->add_option("--seed", analyze_seed, "seed for random graph/tree builders");
  analyze->add_option("--tv", analyze_tv,
                      "include the TV-vs-bound series for steps 1..R from vertex 0");

  GraphFlags opt_graph;
  std::string opt_objective = "gamma-b";
  std::string opt_mode = "exact";
  std::uint64_t opt_seed = 0;
  std::int64_t opt_max_iters = 1000;
  routegap::SearchLimits opt_limits;
  CLI::App* optimize = app.add_subcommand("optimize", "search for a good routing");
  add_graph_flags(optimize, opt_graph);
  optimize->add_option("--objective", opt_objective,
                       "gamma-b | b | poincare | cheeger");
  optimize->add_option("--mode", opt_mode, "exact | local");
  optimize->add_option("--seed", opt_seed, "seed (local mode and random graphs)");
  optimize->add_option("--max-iters", opt_max_iters,
                       "accepted-move budget for local mode");
  optimize->add_option("--max-vertices", opt_limits.max_vertices,
                       "largest graph exact mode accepts");
  optimize->add_option("--max-paths", opt_limits.max_total_paths,
                       "candidate-path budget for exact mode");

  VerifyFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "randomized theorem sweeps");
  verify
      ->add_option("suite", verify_flags.suite,
                   "theorem1 | theorem2 | lemma1 | lemma2 | bounds-validity | tv")
      ->required();
  verify->add_option("--max-n", verify_flags.max_n, "largest vertex count");
  verify->add_option("--trials", verify_flags.trials, "number of random instances");
  verify->add_option("--rmax", verify_flags.rmax, "walk steps for the tv suite");
  verify->add_option("--seed", verify_flags.seed, "sweep seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      return run_analyze(analyze_graph, analyze_routing, analyze_seed, analyze_tv);
    }
    if (app.got_subcommand(optimize)) {
      return run_optimize(opt_graph, opt_objective, opt_mode, opt_seed,
                          opt_max_iters, opt_limits);
    }
    return run_verify(verify_flags);
  } catch (const routegap::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const routegap::InapplicableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const routegap::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
