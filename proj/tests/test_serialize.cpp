#include <doctest.h>

#include <cmath>
#include <fstream>

#include "entex/expansion.hpp"
#include "entex/graph_families.hpp"
#include "entex/harness.hpp"
#include "entex/serialize.hpp"

using namespace entex;

namespace {
std::string fixture(const std::string& name) { return std::string(ENTEX_FIXTURE_DIR) + "/" + name; }
}  // namespace

TEST_CASE("hypergraph fixtures round-trip") {
  for (const char* name : {"triangle.json", "triangle_singleton.json", "c4.json", "weighted.json"}) {
    CAPTURE(name);
    const auto doc = hypergraph_from_json(read_json_file(fixture(name)));
    const auto again = hypergraph_from_json(parse_json(to_json(doc).dump()));
    CHECK(again == doc);
    CHECK(to_json(again) == to_json(doc));
  }
}

TEST_CASE("canonical fixtures are fixed points of the serializers") {
  for (const char* name : {"t3_ball_r1.json", "t3_ball_r2.json", "z2_cross.json"}) {
    CAPTURE(name);
    const auto j = read_json_file(fixture(name));
    CHECK(to_json(region_from_json(j)) == j);
  }
  for (const char* name : {"sharpness_triangle_singleton.json", "sharpness_weighted.json"}) {
    CAPTURE(name);
    const auto j = read_json_file(fixture(name));
    const auto s = seed_system_from_json(j);
    CHECK(to_json(s) == j);
    CHECK(seed_system_from_json(to_json(s)) == s);
  }
}

TEST_CASE("fixture values") {
  const auto tri = hypergraph_from_json(read_json_file(fixture("triangle.json")));
  const std::vector<VertexSet> full{{0, 1, 2}};
  CHECK(beta(tri.hypergraph, full).value == doctest::Approx(1.0).epsilon(1e-12));

  const auto single = hypergraph_from_json(read_json_file(fixture("triangle_singleton.json")));
  CHECK(beta(single.hypergraph, *single.visibility).value == doctest::Approx(2.0).epsilon(1e-12));

  const auto r1 = region_from_json(read_json_file(fixture("t3_ball_r1.json")));
  CHECK(r1 == tree_ball(3, 1));
  CHECK(ball_expansion(r1).value == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(region_from_json(read_json_file(fixture("z2_cross.json"))) == lattice_ball(2, 1));

  for (const auto& [sys, graph] : {std::pair{"sharpness_triangle_singleton.json", "triangle_singleton.json"},
                                   std::pair{"sharpness_weighted.json", "weighted.json"}}) {
    CAPTURE(sys);
    const auto s = seed_system_from_json(read_json_file(fixture(sys)));
    const auto h = hypergraph_from_json(read_json_file(fixture(graph)));
    const auto rep = verify_weighted(s, h.hypergraph);
    CHECK(rep.pass);
    CHECK(std::abs(rep.slack) <= 1e-9);
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_json("{\n  \"vertices\": 3,\n  \"edges\": [[0, 1],, [1, 2]]\n}", "bad.json");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(hypergraph_from_json(parse_json(R"({"vertices": 2, "edges": [[0, 5]]})")), parse_error);
  CHECK_THROWS_AS(hypergraph_from_json(parse_json(R"({"edges": []})")), parse_error);
  CHECK_THROWS_AS(region_from_json(parse_json(R"({"vertices": 2, "host_degree": 1, "edges": [[0, 1], [1, 0]]})")),
                  parse_error);
  CHECK_THROWS_AS(read_json_file(fixture("does_not_exist.json")), std::runtime_error);
}
