#include "oracles.hpp"
#include "splitconf/families.hpp"
#include "splitconf/haar.hpp"
#include "splitconf/symmetry.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace splitconf;

namespace {

std::size_t finite(const Extent& e) { return std::get<std::size_t>(e); }

Graph moebius_ladder(std::size_t rungs) {
  const auto n = static_cast<Vertex>(2 * rungs);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (Vertex i = 0; i < rungs; ++i) edges.push_back({i, static_cast<Vertex>(i + rungs)});
  return Graph(n, edges);
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph construction rejects malformed edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  const Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK(!g.adjacent(2, 3));
  CHECK(g.row(0).count() == 2);
  const std::vector<Vertex> expected{1, 3};
  CHECK(std::equal(g.neighbors(0).begin(), g.neighbors(0).end(), expected.begin(), expected.end()));
}

TEST_CASE("connected components") {
  const Graph empty(3, {});
  CHECK(connected_components(empty) == Partition{{0}, {1}, {2}});

  const Graph c6 = cycle_graph(6);
  CHECK(components_without(c6, VertexSet{0, 3}.to_bitset(6)) == Partition{{1, 2}, {4, 5}});

  const Graph nauru = build_gp({12, 5});
  const auto sigma = *gp_splitting_set({12, 5});
  const auto parts = components_without(nauru, sigma.to_bitset(nauru.vertex_count()));
  REQUIRE(parts.size() == 3);
  for (const auto& part : parts) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < nauru.vertex_count(); ++v) {
      if (!std::binary_search(part.begin(), part.end(), v)) rest.push_back(v);
    }
    CHECK(find_isomorphism(nauru.without(VertexSet(rest)), cycle_graph(6)).has_value());
  }
}

TEST_CASE("girth") {
  CHECK(finite(girth(build_haar(HaarSymbol(7, {0, 1, 3})).graph)) == 6);
  CHECK(finite(girth(build_haar(HaarSymbol(8, {0, 1, 4})).graph)) == 4);
  CHECK(is_infinite(girth(path_graph(5))));
  CHECK(finite(girth(build_gp({24, 5}))) == 8);
  CHECK(finite(girth(petersen_graph())) == 5);
  CHECK(finite(girth(complete_graph(4))) == 3);
}

TEST_CASE("girth agrees with the edge-deletion oracle on small random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const Graph g = random_graph(n, 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
    const auto expected = oracle::girth(g);
    const Extent got = girth(g);
    if (expected) {
      REQUIRE(!is_infinite(got));
      CHECK(finite(got) == *expected);
    } else {
      CHECK(is_infinite(got));
    }
  }
}

TEST_CASE("diameter and radius") {
  CHECK(finite(diameter(build_haar(HaarSymbol(7, {0, 1, 3})).graph)) == 3);
  CHECK(finite(diameter(complete_graph(2))) == 1);
  CHECK(finite(diameter(build_haar(HaarSymbol(30, {0, 2, 5})).graph)) == 8);
  CHECK(is_infinite(diameter(Graph(2, {}))));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(2 + rng() % 9, 0.5, rng);
    const Extent d = diameter(g);
    const Extent r = radius(g);
    if (is_infinite(d)) continue;
    CHECK(finite(d) >= finite(r));
  }
  for (std::size_t n = 2; n <= 12; ++n) {
    const Graph p = path_graph(n);
    CHECK(finite(diameter(square(p))) == (finite(diameter(p)) + 1) / 2);
  }
}

TEST_CASE("square") {
  const Graph sq = square(cycle_graph(6));
  CHECK(sq.is_regular(4));
  CHECK(!sq.adjacent(0, 3));
  CHECK(!sq.adjacent(1, 4));
  CHECK(square(petersen_graph()) == complete_graph(10));

  const Graph heawood = build_haar(HaarSymbol(7, {0, 1, 3})).graph;
  // The complement joins each point to the four lines missing it: 4-regular,
  // so not the cubic Moebius ladder on 14 vertices.
  const Graph far = square(heawood).complement();
  CHECK(far.is_regular(4));
  CHECK(!find_isomorphism(far, moebius_ladder(7)).has_value());
  CHECK(find_isomorphism(far, build_haar(HaarSymbol(7, {2, 4, 5, 6})).graph).has_value());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(3 + rng() % 10, 0.3, rng);
    const Graph g2 = square(g);
    const auto dist = oracle::all_distances(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        CHECK(g2.adjacent(u, v) == (u != v && dist[u][v] <= 2));
      }
    }
    for (const Edge& e : g.edges()) CHECK(g2.adjacent(e.u, e.v));
    if (is_connected(g)) CHECK(is_connected(g2));
  }
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity_at_least(cycle_graph(6), 2));
  CHECK(!vertex_connectivity_at_least(cycle_graph(6), 3));
  CHECK(!vertex_connectivity_at_least(path_graph(3), 2));
  CHECK(vertex_connectivity_at_least(build_haar(HaarSymbol(7, {0, 1, 3})).graph, 3));
  CHECK(!vertex_connectivity_at_least(complete_graph(3), 3));
  CHECK_THROWS_AS(vertex_connectivity_at_least(Graph(4, {{0, 1}, {2, 3}}), 2), std::invalid_argument);
}

TEST_CASE("edge list round trip and errors") {
  std::istringstream in("# triangle\n0 1\n1 2\n\n2 0\n");
  const Graph g = read_edge_list(in);
  CHECK(g == complete_graph(3));
  std::ostringstream out;
  write_edge_list(out, g);
  CHECK(out.str() == "0 1\n0 2\n1 2\n");

  std::istringstream bad("0 1\n1 x\n");
  try {
    read_edge_list(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("dot export keeps labels") {
  std::ostringstream out;
  write_dot(out, build_haar(HaarSymbol(1, {0})).graph);
  CHECK(out.str() == "graph G {\n  0 [label=\"0+\"];\n  1 [label=\"0-\"];\n  0 -- 1;\n}\n");
}
