// entex: command-line front end for the library.
//
// stdout carries data (JSON documents or CSV tables), stderr carries
// diagnostics. Exit status: 0 success, 1 computation or input error (including
// a reported inequality failure), 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "entex/cayley.hpp"
#include "entex/expansion.hpp"
#include "entex/ff_optimizer.hpp"
#include "entex/graph_families.hpp"
#include "entex/harness.hpp"
#include "entex/indset_bounds.hpp"
#include "entex/seed_system.hpp"
#include "entex/serialize.hpp"
#include "entex/uncertainty.hpp"

using namespace entex;

namespace {

struct Globals {
  int jobs = 1;
  bool bits = false;
};

/// Every floating-point number is emitted at 12 significant digits.
void round_numbers(Json& j) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    j = std::isfinite(x) ? Json(std::stod(format12(x))) : Json(nullptr);
  } else if (j.is_structured()) {
    for (auto& v : j) round_numbers(v);
  }
}

/// Indented JSON with short arrays and objects kept on one line.
std::string pretty(const Json& j, int indent = 0) {
  const std::string flat = j.dump();
  if (!j.is_structured() || j.empty() || flat.size() + indent <= 80) return flat;
  const std::string pad(indent + 2, ' ');
  std::string out(1, j.is_object() ? '{' : '[');
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += first ? "\n" : ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    out += pretty(*it, indent + 2);
  }
  out += "\n" + std::string(indent, ' ') + (j.is_object() ? '}' : ']');
  return out;
}

int emit(Json j) {
  round_numbers(j);
  std::cout << pretty(j) << "\n";
  return 0;
}

Json json_of(const ExpansionResult& r) {
  return {{"value", r.value}, {"witness_seed", r.witness_seed}, {"witness_set", r.witness_set}};
}

std::vector<VertexSet> full_visibility(int n) {
  VertexSet all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  return {all};
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stod(item));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

// ---------------------------------------------------------------- beta

struct BetaArgs {
  std::string input;
  std::string kind = "hyperedge";
  bool full = false;
};

int run_beta(const BetaArgs& a, const Globals& g) {
  const auto doc = hypergraph_from_json(read_json_file(a.input));
  const int n = doc.hypergraph.num_vertices();
  const auto vis = (a.full || !doc.visibility) ? full_visibility(n) : *doc.visibility;
  Json out{{"kind", a.kind}, {"visibility", vis}};
  if (a.kind == "hyperedge") {
    out.update(json_of(beta(doc.hypergraph, vis, g.jobs)));
  } else {
    if (!doc.hypergraph.is_graph()) throw std::invalid_argument(a.kind + " needs a graph (all edges of size 2)");
    const auto graph = SimpleGraph::from_hypergraph(doc.hypergraph);
    if (a.kind == "regular") {
      out.update(json_of(beta_regular(graph, vis, g.jobs)));
    } else {
      const auto r = star_edge_beta(graph, vis, g.jobs);
      out.update({{"value", r.value}, {"witness_seed", r.witness_seed}, {"witness_edges", r.witness_edges}});
    }
  }
  return emit(out);
}

// ---------------------------------------------------------- expansion-ball

struct BallArgs {
  std::string family = "tree";
  std::string region;
  int d = 3;
  int n = 2;
  int radius = 1;
};

int run_expansion_ball(const BallArgs& a, const Globals& g) {
  GraphRegion r;
  Json out;
  if (!a.region.empty()) {
    r = region_from_json(read_json_file(a.region));
    out["region"] = a.region;
  } else if (a.family == "tree") {
    r = tree_ball(a.d, a.radius);
    out.update({{"family", "tree"}, {"d", a.d}, {"radius", a.radius}});
  } else {
    r = lattice_ball(a.n, a.radius);
    out.update({{"family", "lattice"}, {"n", a.n}, {"radius", a.radius}});
  }
  const auto e = ball_expansion(r, g.jobs);
  out.update({{"vertices", r.num_vertices},
              {"host_degree", r.host_degree},
              {"ball_expansion", e.value},
              {"witness_set", e.witness_set},
              {"full_region_ratio", full_region_ratio(r)},
              {"vertex_coefficient", (r.host_degree + e.value) / 2}});
  return emit(out);
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string theorem;
  std::string system;
  std::string graph;
  std::string pair = "entropy";
  double a = 2;
  double b = 0;
};

int run_verify(const VerifyArgs& a, const Globals& g) {
  const auto s = seed_system_from_json(read_json_file(a.system));
  const auto doc = hypergraph_from_json(read_json_file(a.graph));
  auto graph = [&] {
    if (!doc.hypergraph.is_graph()) throw std::invalid_argument(a.theorem + " needs a graph (all edges of size 2)");
    return SimpleGraph::from_hypergraph(doc.hypergraph);
  };
  if (a.theorem == "correlation") {
    const auto r = correlation_bound_check(s, graph(), g.jobs);
    emit({{"theorem", "correlation"},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"slack", r.slack},
          {"beta", r.beta},
          {"degree", r.degree},
          {"a", r.a},
          {"branch", r.branch},
          {"derived_slack_plus", r.derived_slack_plus},
          {"derived_slack_minus", r.derived_slack_minus},
          {"pass", r.pass}});
    return r.pass ? 0 : 1;
  }
  VerificationReport r;
  bool entropic = true;
  if (a.theorem == "weighted") {
    r = verify_weighted(s, doc.hypergraph, g.jobs);
  } else if (a.theorem == "regular-edge") {
    r = verify_regular_edge(s, graph(), g.jobs);
  } else if (a.theorem == "shearer") {
    r = verify_shearer(s, doc.hypergraph);
  } else if (a.theorem == "star-edge") {
    r = verify_star_edge(s, graph(), g.jobs);
  } else {
    entropic = a.pair == "entropy";
    const auto pair = entropic ? entropy_pair() : variance_pair({a.a, a.b});
    r = verify_uncertainty(s, graph(), pair, g.jobs);
  }
  auto j = to_json(r);
  if (g.bits && entropic) {
    for (const char* k : {"lhs", "rhs_base", "slack"}) j[k] = j[k].get<double>() / std::log(2.0);
    j["units"] = "bits";
  }
  emit(j);
  return r.pass ? 0 : 1;
}

// -------------------------------------------------------------------- fuzz

struct FuzzArgs {
  std::uint64_t seed = 0;
  std::size_t count = 500;
  int max_vertices = 5;
  int max_seeds = 3;
  int max_alphabet = 3;
  int max_edges = 6;
  std::string failures_dir;
};

int run_fuzz(const FuzzArgs& a, const Globals& g) {
  FuzzConfig c;
  c.shape.num_vertices = a.max_vertices;
  c.shape.num_seeds = a.max_seeds;
  c.shape.max_seed_support = a.max_alphabet;
  c.shape.max_alphabet = a.max_alphabet;
  c.max_edges = a.max_edges;
  c.count = a.count;
  c.seed = a.seed;
  c.jobs = g.jobs;
  const auto s = fuzz(c);
  std::cout << fuzz_csv(s);
  for (const auto& [thm, slack] : s.min_slack) std::cerr << "min slack " << thm << ": " << format12(slack) << "\n";
  std::cerr << s.failures.size() << " failures in " << s.rows.size() << " checks\n";
  if (!a.failures_dir.empty()) {
    std::filesystem::create_directories(a.failures_dir);
    for (const auto& f : s.failures)
      write_text_file(a.failures_dir + "/instance_" + std::to_string(f.instance) + "_" + f.theorem + ".json",
                      f.reproducer.dump(2) + "\n");
  }
  return s.failures.empty() ? 0 : 1;
}

// ------------------------------------------------------- entropy-decompose

struct DecomposeArgs {
  std::string system;
  std::string order;
  std::string track;
  int average_vertex = -1;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int run_decompose(const DecomposeArgs& a, const Globals& g) {
  const auto s = seed_system_from_json(read_json_file(a.system));
  const double unit = g.bits ? 1 / std::log(2.0) : 1.0;
  if (a.average_vertex >= 0) {
    AveragedGain r;
    if (a.samples == 0) {
      r = averaged_gain(s, a.average_vertex);
    } else {
      if (!a.seed_given) throw CLI::RequiredError("--seed (Monte Carlo averaging is randomized)");
      r = averaged_gain_monte_carlo(s, a.average_vertex, a.samples, a.seed);
    }
    std::cout << "seed,gain,std_error\n";
    for (std::size_t i = 0; i < r.per_seed.size(); ++i)
      std::cout << i << "," << format12(unit * r.per_seed[i]) << "," << format12(unit * r.std_error[i]) << "\n";
    return 0;
  }
  std::vector<int> order = parse_ints(a.order);
  if (a.order.empty())
    for (int i = 0; i < s.num_seeds(); ++i) order.push_back(i);
  std::vector<VertexSet> tracked;
  if (a.track.empty()) {
    for (int v = 0; v < s.num_vertices; ++v) tracked.push_back({v});
  } else {
    std::stringstream ss(a.track);
    for (std::string item; std::getline(ss, item, ';');) tracked.push_back(parse_ints(item));
  }
  const auto p = gain_profile(s, order, tracked);
  std::cout << "step,seed,tracked,gain\n";
  for (std::size_t k = 0; k < p.order.size(); ++k)
    for (std::size_t t = 0; t < p.tracked.size(); ++t) {
      std::string set;
      for (int v : p.tracked[t]) set += (set.empty() ? "" : " ") + std::to_string(v);
      std::cout << k << "," << p.order[k] << "," << set << "," << format12(unit * p.gains[k][t]) << "\n";
    }
  return 0;
}

// ------------------------------------------------------------------ bounds

struct BoundsArgs {
  std::string family;
  std::vector<int> d;
  int k = 4;
  int n = 2;
  int radius = 1;
  std::vector<double> tau;
};

int run_bounds(const BoundsArgs& a, const Globals& g) {
  std::vector<BoundReport> rows;
  if (a.family == "tree") {
    for (int d : a.d) rows.push_back(bound_tree(d));
  } else if (a.family == "tessellation") {
    for (int d : a.d) rows.push_back(bound_tessellation(d, a.k));
  } else if (a.family == "lattice") {
    rows.push_back(bound_lattice(a.n, a.radius, g.jobs));
  } else {
    for (double t : a.tau) rows.push_back(bound_custom(t));
  }
  if (rows.empty()) throw CLI::ValidationError("bounds", "no parameters given (--d or --tau)");
  std::cout << bounds_csv(rows);
  return 0;
}

// ------------------------------------------------------------- optimize-ff

struct OptimizeArgs {
  int d = 3;
  int grid = 40;
  double tol = 1e-9;
  std::string mode = "lp";
  int j = 0;
  std::string out;
};

Json dual_json(const DualReport& r) {
  Json fams = Json::array();
  for (const auto& f : r.families)
    fams.push_back({{"family", f.name}, {"rows", f.rows}, {"active", f.active}, {"sum", f.sum}});
  return {{"gap", r.gap}, {"dual_residual", r.dual_residual}, {"families", fams}};
}

int run_optimize(const OptimizeArgs& a, const Globals& g) {
  Certificate cert;
  Json out{{"d", a.d}, {"grid", a.grid}, {"mode", a.mode}};
  if (a.j > 0) {
    cert = a.mode == "lp" ? feasibility_margin(a.d, a.j, a.grid) : entropy_certificate(a.d, a.j, a.grid);
    out["q"] = cert.q();
  } else {
    auto b = best_bound(a.d, a.grid, a.tol, a.mode, g.jobs);
    out.update({{"found", b.found}, {"q_star", b.q_star}, {"full_scan", b.full_scan}, {"monotone", b.monotone}});
    if (b.full_scan) out["margins"] = b.margins;
    out["search_notes"] = b.notes;
    cert = std::move(b.certificate);
  }
  out["margin"] = cert.margin;
  out["verified"] = verify_certificate(cert).pass;
  if (cert.has_duals) {
    out["duals"] = dual_json(cert.dual_summary);
    out["box_binding"] = cert.box_binding;
  }
  out["notes"] = cert.notes;
  if (!a.out.empty()) {
    write_text_file(a.out, to_json(cert).dump(1) + "\n");
    out["certificate"] = a.out;
  }
  return emit(out);
}

int run_verify_certificate(const std::string& path) {
  const auto c = certificate_from_json(read_json_file(path));
  const auto v = verify_certificate(c);
  Json out{{"d", c.d}, {"grid", c.grid.N()}, {"q", c.q()}, {"mode", c.mode}, {"margin", c.margin},
           {"pass", v.pass}, {"failures", v.failures},
           {"max_second_difference", v.max_second_difference}, {"margin_error", v.margin_error}};
  bool ok = v.pass;
  if (c.has_duals) {
    const auto r = dual_report(c);
    out["duals"] = dual_json(r);
    out["dual_gap_ok"] = std::abs(r.gap) <= 1e-8;
  }
  emit(out);
  return ok ? 0 : 1;
}

// ------------------------------------------------------------- cayley-beta

struct CayleyArgs {
  std::string group;
  std::string table;
  std::string generators;
  std::string alpha;
  int budget = 200;
};

int run_cayley(const CayleyArgs& a) {
  std::unique_ptr<GroupOracle> grp;
  const auto colon = a.group.find(':');
  const std::string kind = a.group.substr(0, colon);
  const int param = colon == std::string::npos ? 0 : std::stoi(a.group.substr(colon + 1));
  if (kind == "lattice") {
    grp = std::make_unique<IntegerLatticeGroup>(param);
  } else if (kind == "free") {
    grp = std::make_unique<FreeGroup>(param);
  } else if (kind == "table") {
    const auto j = read_json_file(a.table);
    grp = std::make_unique<TableGroup>(j.at("table").get<std::vector<std::vector<int>>>(),
                                       j.at("generators").get<std::vector<int>>());
  } else {
    throw CLI::ValidationError("--group", "expected lattice:N, free:R or table");
  }
  auto alpha = parse_doubles(a.alpha);
  if (a.alpha.empty()) alpha.assign(grp->num_generators(), 1.0);
  const auto r = cayley_beta_upper(*grp, alpha, a.budget);
  return emit({{"group", grp->name()},
               {"upper_bound", r.value},
               {"witness_size", r.witness.size()},
               {"ball_radius", r.ball_radius},
               {"local_moves", r.local_moves},
               {"ball_ratios", r.ball_ratios}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy inequalities on hypergraphs, expansion and independence-ratio bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "entex 1.0");
  Globals g;
  app.add_option("--jobs", g.jobs, "Worker threads for exhaustive scans")->check(CLI::Range(1, 256));
  app.add_flag("--bits", g.bits, "Report entropy values in bits (computation stays in nats)");
  std::function<int()> action;

  BetaArgs beta_a;
  auto* beta = app.add_subcommand("beta", "Expansion coefficient of a hypergraph with visibility sets");
  beta->add_option("input", beta_a.input, "Hypergraph file")->required()->check(CLI::ExistingFile);
  beta->add_option("--kind", beta_a.kind, "hyperedge | regular | star-edge")
      ->check(CLI::IsMember({"hyperedge", "regular", "star-edge"}));
  beta->add_flag("--full-visibility", beta_a.full, "Ignore the file's visibility sets; one seed sees all");
  beta->callback([&] { action = [&] { return run_beta(beta_a, g); }; });

  BallArgs ball_a;
  auto* ball = app.add_subcommand("expansion-ball", "Exact boundary expansion of a ball region");
  ball->add_option("--family", ball_a.family)->check(CLI::IsMember({"tree", "lattice"}));
  ball->add_option("--region", ball_a.region, "Region file instead of a generated ball")->check(CLI::ExistingFile);
  ball->add_option("--d", ball_a.d, "Tree degree")->check(CLI::Range(2, 1000));
  ball->add_option("--n", ball_a.n, "Lattice dimension")->check(CLI::Range(1, 64));
  ball->add_option("--radius", ball_a.radius)->check(CLI::Range(0, 64));
  ball->callback([&] { action = [&] { return run_expansion_ball(ball_a, g); }; });

  VerifyArgs ver_a;
  auto* ver = app.add_subcommand("verify", "Check one inequality on a seed system");
  ver->add_option("--theorem", ver_a.theorem)
      ->required()
      ->check(CLI::IsMember({"weighted", "regular-edge", "shearer", "star-edge", "uncertainty", "correlation"}));
  ver->add_option("--system", ver_a.system, "Seed system file")->required()->check(CLI::ExistingFile);
  ver->add_option("--graph", ver_a.graph, "Hypergraph or graph file")->required()->check(CLI::ExistingFile);
  ver->add_option("--pair", ver_a.pair, "Uncertainty pair")->check(CLI::IsMember({"entropy", "variance"}));
  ver->add_option("--a", ver_a.a, "Variance pair parameter a > 1");
  ver->add_option("--b", ver_a.b, "Variance pair parameter b");
  ver->callback([&] { action = [&] { return run_verify(ver_a, g); }; });

  FuzzArgs fuzz_a;
  auto* fz = app.add_subcommand("fuzz", "Randomized campaign over all inequalities; CSV on stdout");
  fz->add_option("--seed", fuzz_a.seed, "Campaign seed")->required();
  fz->add_option("--count", fuzz_a.count)->check(CLI::Range(1, 10'000'000));
  fz->add_option("--max-vertices", fuzz_a.max_vertices)->check(CLI::Range(2, 12));
  fz->add_option("--max-seeds", fuzz_a.max_seeds)->check(CLI::Range(1, 8));
  fz->add_option("--max-alphabet", fuzz_a.max_alphabet)->check(CLI::Range(1, 8));
  fz->add_option("--max-edges", fuzz_a.max_edges)->check(CLI::Range(1, 64));
  fz->add_option("--failures", fuzz_a.failures_dir, "Directory for reproducer files");
  fz->callback([&] { action = [&] { return run_fuzz(fuzz_a, g); }; });

  DecomposeArgs dec_a;
  auto* dec = app.add_subcommand("entropy-decompose", "Per-seed entropy gains along a revelation order");
  dec->add_option("--system", dec_a.system)->required()->check(CLI::ExistingFile);
  dec->add_option("--order", dec_a.order, "Comma-separated seed order (default 0..m-1)");
  dec->add_option("--track", dec_a.track, "Semicolon-separated vertex sets (default each vertex)");
  dec->add_option("--average", dec_a.average_vertex, "Average gains of this vertex over all orders");
  dec->add_option("--samples", dec_a.samples, "Monte Carlo orders instead of exact averaging");
  auto* dseed = dec->add_option("--seed", dec_a.seed, "Seed for Monte Carlo averaging");
  dec->callback([&] {
    dec_a.seed_given = dseed->count() > 0;
    action = [&] { return run_decompose(dec_a, g); };
  });

  BoundsArgs bnd_a;
  auto* bnd = app.add_subcommand("bounds", "Independence-ratio upper bounds as CSV");
  bnd->add_option("--family", bnd_a.family)
      ->required()
      ->check(CLI::IsMember({"tree", "tessellation", "lattice", "custom"}));
  bnd->add_option("--d", bnd_a.d, "Degrees (repeatable)")->delimiter(',');
  bnd->add_option("--k", bnd_a.k, "Face size for tessellations");
  bnd->add_option("--n", bnd_a.n, "Lattice dimension");
  bnd->add_option("--radius", bnd_a.radius, "Lattice ball radius");
  bnd->add_option("--tau", bnd_a.tau, "Custom tau values")->delimiter(',');
  bnd->callback([&] { action = [&] { return run_bounds(bnd_a, g); }; });

  OptimizeArgs opt_a;
  auto* opt = app.add_subcommand("optimize-ff", "Grid LP for the excluded independent-set density");
  opt->add_option("--d", opt_a.d)->check(CLI::Range(2, 1'000'000));
  opt->add_option("--grid", opt_a.grid, "Grid resolution N")->check(CLI::Range(8, 400));
  opt->add_option("--tol", opt_a.tol, "Margin threshold")->check(CLI::PositiveNumber);
  opt->add_option("--mode", opt_a.mode)->check(CLI::IsMember({"lp", "entropy"}));
  opt->add_option("--j", opt_a.j, "Solve only at q = j/N");
  opt->add_option("--out", opt_a.out, "Certificate file");
  opt->callback([&] { action = [&] { return run_optimize(opt_a, g); }; });

  std::string cert_path;
  auto* vc = app.add_subcommand("verify-certificate", "Re-check a certificate without trusting the solver");
  vc->add_option("input", cert_path)->required()->check(CLI::ExistingFile);
  vc->callback([&] { action = [&] { return run_verify_certificate(cert_path); }; });

  CayleyArgs cay_a;
  auto* cay = app.add_subcommand("cayley-beta", "Upper bound on the Cayley-graph expansion infimum");
  cay->add_option("--group", cay_a.group, "lattice:N | free:R | table")->required();
  cay->add_option("--table", cay_a.table, "JSON file with table and generators")->check(CLI::ExistingFile);
  cay->add_option("--alpha", cay_a.alpha, "Comma-separated generator weights (default all 1)");
  cay->add_option("--budget", cay_a.budget, "Largest ball to try")->check(CLI::Range(1, 1'000'000));
  cay->callback([&] { action = [&] { return run_cayley(cay_a); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
