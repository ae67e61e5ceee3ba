#include "entex/serialize.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace entex {

parse_error::parse_error(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ")"
                                  : what),
      line_(line),
      column_(column) {}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    const auto colon = msg.find("syntax error");
    if (colon != std::string::npos) msg = msg.substr(colon);
    throw parse_error(source + ": " + msg, line, column);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw parse_error(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw parse_error(where + ": missing field '" + name + "'");
  return *it;
}

template <class T>
T as(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(where + ": wrong type (" + std::string(e.what()) + ")");
  }
}

/// Wraps validation errors from constructors with the document context.
template <class F>
auto checked(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const parse_error&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw parse_error(where + ": " + e.what());
  }
}

}  // namespace

Json to_json(const SeedSystem& s) {
  Json seeds = Json::array();
  for (const auto& z : s.seeds) {
    const auto sup = z.support();
    const auto pr = z.probs();
    seeds.push_back({{"support", std::vector<double>(sup.begin(), sup.end())},
                     {"probs", std::vector<double>(pr.begin(), pr.end())}});
  }
  Json functions = Json::array();
  for (int v = 0; v < s.num_vertices; ++v) {
    const auto vis = s.visible_seeds(v);
    Json rows = Json::array();
    std::vector<int> a(vis.size(), 0);
    for (std::size_t r = 0; r < s.tables[v].size(); ++r) {
      rows.push_back(Json::array({a, s.tables[v][r]}));
      for (std::size_t t = 0; t < vis.size(); ++t) {
        if (++a[t] < static_cast<int>(s.seeds[vis[t]].size())) break;
        a[t] = 0;
      }
    }
    functions.push_back({{"vertex", v}, {"alphabet", s.alphabets[v]}, {"seeds", vis}, {"rows", rows}});
  }
  return {{"vertices", s.num_vertices}, {"seeds", seeds}, {"visibility", s.visibility},
          {"functions", functions}};
}

SeedSystem seed_system_from_json(const Json& j) {
  SeedSystem s;
  s.num_vertices = as<int>(field(j, "vertices", "seed system"), "vertices");
  if (s.num_vertices < 0) throw parse_error("vertices: must be >= 0");
  const auto& seeds = field(j, "seeds", "seed system");
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const std::string w = "seeds[" + std::to_string(i) + "]";
    auto probs = as<std::vector<double>>(field(seeds[i], "probs", w), w + ".probs");
    std::vector<double> sup;
    if (seeds[i].contains("support"))
      sup = as<std::vector<double>>(seeds[i]["support"], w + ".support");
    else
      for (std::size_t k = 0; k < probs.size(); ++k) sup.push_back(static_cast<double>(k));
    s.seeds.push_back(checked(w, [&] { return Dist(sup, probs); }));
  }
  s.visibility = as<std::vector<VertexSet>>(field(j, "visibility", "seed system"), "visibility");
  const auto& fns = field(j, "functions", "seed system");
  if (!fns.is_array() || fns.size() != static_cast<std::size_t>(s.num_vertices))
    throw parse_error("functions: need one entry per vertex");
  s.alphabets.resize(s.num_vertices);
  s.tables.resize(s.num_vertices);
  checked("seed system", [&] {
    // visibility must be sane before visible_seeds() is meaningful
    for (auto& w : s.visibility)
      if (make_vertex_set(w) != w) throw std::invalid_argument("visibility sets must be sorted and unique");
    return 0;
  });
  std::vector<bool> done(s.num_vertices, false);
  for (std::size_t f = 0; f < fns.size(); ++f) {
    const std::string w = "functions[" + std::to_string(f) + "]";
    const int v = as<int>(field(fns[f], "vertex", w), w + ".vertex");
    if (v < 0 || v >= s.num_vertices || done[v]) throw parse_error(w + ": bad or repeated vertex id");
    done[v] = true;
    s.alphabets[v] = as<std::vector<double>>(field(fns[f], "alphabet", w), w + ".alphabet");
    const auto vis = s.visible_seeds(v);
    if (fns[f].contains("seeds") && as<std::vector<int>>(fns[f]["seeds"], w + ".seeds") != vis)
      throw parse_error(w + ".seeds: does not match the visibility sets");
    std::size_t rows = 1;
    std::vector<std::size_t> radix;
    for (int i : vis) {
      radix.push_back(rows);
      rows *= s.seeds[i].size();
    }
    if (rows > kMaxOutcomes) throw resource_error(w + ": table too large");
    s.tables[v].assign(rows, -1);
    const auto& rj = field(fns[f], "rows", w);
    if (!rj.is_array() || rj.size() != rows)
      throw parse_error(w + ".rows: expected " + std::to_string(rows) + " rows");
    for (std::size_t r = 0; r < rj.size(); ++r) {
      const std::string wr = w + ".rows[" + std::to_string(r) + "]";
      if (!rj[r].is_array() || rj[r].size() != 2) throw parse_error(wr + ": expected [assignment, symbol]");
      const auto a = as<std::vector<int>>(rj[r][0], wr);
      if (a.size() != vis.size()) throw parse_error(wr + ": assignment has the wrong length");
      std::size_t idx = 0;
      for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] < 0 || a[t] >= static_cast<int>(s.seeds[vis[t]].size()))
          throw parse_error(wr + ": seed symbol out of range");
        idx += a[t] * radix[t];
      }
      if (s.tables[v][idx] != -1) throw parse_error(wr + ": repeated assignment");
      s.tables[v][idx] = as<int>(rj[r][1], wr);
    }
  }
  checked("seed system", [&] {
    s.validate();
    return 0;
  });
  return s;
}

Json to_json(const HypergraphDoc& d) {
  Json edges = Json::array();
  for (const auto& e : d.hypergraph.edges())
    edges.push_back({{"subset", e.vertices}, {"weight", e.weight}});
  Json j{{"vertices", d.hypergraph.num_vertices()}, {"edges", edges}};
  if (d.visibility) j["visibility"] = *d.visibility;
  return j;
}

HypergraphDoc hypergraph_from_json(const Json& j) {
  const int n = as<int>(field(j, "vertices", "hypergraph"), "vertices");
  const auto& ej = field(j, "edges", "hypergraph");
  if (!ej.is_array()) throw parse_error("edges: expected an array");
  std::vector<Hyperedge> edges;
  for (std::size_t k = 0; k < ej.size(); ++k) {
    const std::string w = "edges[" + std::to_string(k) + "]";
    if (ej[k].is_array()) {
      // graph shorthand [u, v] with unit weight
      const auto uv = as<std::vector<int>>(ej[k], w);
      if (uv.size() != 2) throw parse_error(w + ": shorthand edges are pairs [u, v]");
      edges.push_back({make_vertex_set(uv), 1.0});
    } else {
      const auto sub = as<std::vector<int>>(field(ej[k], "subset", w), w + ".subset");
      const double wt = ej[k].contains("weight") ? as<double>(ej[k]["weight"], w + ".weight") : 1.0;
      edges.push_back({make_vertex_set(sub), wt});
    }
  }
  HypergraphDoc d{checked("hypergraph", [&] { return WeightedHypergraph(n, edges); }), std::nullopt};
  if (j.contains("visibility")) {
    auto vis = as<std::vector<VertexSet>>(j["visibility"], "visibility");
    for (auto& w : vis) {
      w = make_vertex_set(w);
      if (!w.empty() && (w.front() < 0 || w.back() >= n))
        throw parse_error("visibility: vertex outside 0.." + std::to_string(n - 1));
    }
    d.visibility = std::move(vis);
  }
  return d;
}

Json to_json(const GraphRegion& r) {
  Json edges = Json::array();
  for (auto [u, v] : r.edges) edges.push_back({u, v});
  Json j{{"vertices", r.num_vertices}, {"host_degree", r.host_degree}, {"edges", edges}};
  if (!r.labels.empty()) j["labels"] = r.labels;
  return j;
}

GraphRegion region_from_json(const Json& j) {
  GraphRegion r;
  r.num_vertices = as<int>(field(j, "vertices", "region"), "vertices");
  r.host_degree = as<int>(field(j, "host_degree", "region"), "host_degree");
  const auto& ej = field(j, "edges", "region");
  if (!ej.is_array()) throw parse_error("edges: expected an array");
  for (std::size_t k = 0; k < ej.size(); ++k) {
    const std::string w = "edges[" + std::to_string(k) + "]";
    std::vector<int> uv;
    if (ej[k].is_object())
      uv = as<std::vector<int>>(field(ej[k], "subset", w), w + ".subset");
    else
      uv = as<std::vector<int>>(ej[k], w);
    if (uv.size() != 2) throw parse_error(w + ": region edges are pairs");
    r.edges.emplace_back(uv[0], uv[1]);
  }
  if (j.contains("labels")) {
    r.labels = as<std::vector<std::vector<int>>>(j["labels"], "labels");
    if (r.labels.size() != static_cast<std::size_t>(r.num_vertices))
      throw parse_error("labels: need one label per vertex");
  }
  checked("region", [&] {
    r.finalize();
    return 0;
  });
  return r;
}

}  // namespace entex
