#include "oracles.hpp"
#include "splitconf/families.hpp"
#include "splitconf/haar.hpp"
#include "splitconf/symmetry.hpp"

#include <doctest.h>

#include <random>

using namespace splitconf;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng, Permutation& perm) {
  perm.resize(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

Graph heawood() { return build_haar(HaarSymbol(7, {0, 1, 3})).graph; }

}  // namespace

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(cycle_graph(6)).order == 12);
  CHECK(oracle::automorphism_count(cycle_graph(6)) == 12);
  const Graph k33 = build_haar(HaarSymbol(3, {0, 1, 2})).graph;
  CHECK(automorphism_group(k33).order == 72);
  CHECK(oracle::automorphism_count(k33) == 72);
  CHECK(automorphism_group(heawood()).order == 336);
  CHECK(automorphism_group(petersen_graph()).order == 120);
  CHECK(automorphism_group(complete_graph(5)).order == 120);
}

TEST_CASE("automorphism orders match permutation brute force on small graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 2) edges.push_back({u, v});
    const Graph g(n, edges);
    const auto group = automorphism_group(g);
    CHECK(group.order == oracle::automorphism_count(g));
    for (const auto& gen : group.generators) CHECK(is_isomorphism(g, g, gen));
  }
}

TEST_CASE("colour-preserving automorphisms") {
  const HaarGraph h = build_haar(HaarSymbol(7, {0, 1, 3}));
  // Collineations of the Fano plane.
  CHECK(automorphism_group(h.graph, h.coloring()).order == 168);
}

TEST_CASE("heawood order agrees with arc count times arc stabiliser") {
  const Graph g = heawood();
  CHECK(is_arc_transitive(g));
  std::vector<std::uint32_t> colors(g.vertex_count(), 0);
  colors[0] = 1;
  colors[g.neighbors(0)[0]] = 2;
  CHECK(automorphism_group(g).order == 42 * automorphism_group(g, colors).order);
}

TEST_CASE("arc transitivity") {
  CHECK(is_arc_transitive(build_haar(HaarSymbol(7, {0, 1, 3})).graph));
  CHECK(!is_arc_transitive(build_haar(HaarSymbol(9, {0, 1, 3})).graph));
  CHECK(is_arc_transitive(build_haar(HaarSymbol(21, {0, 1, 5})).graph));
  CHECK(is_arc_transitive(build_haar(HaarSymbol(13, {0, 1, 4})).graph));
  CHECK(is_arc_transitive(petersen_graph()));
  CHECK(!is_arc_transitive(path_graph(4)));
}

TEST_CASE("zero-symmetric members of the {0,1,4} family") {
  CHECK(is_zero_symmetric(build_haar(HaarSymbol(16, {0, 1, 4})).graph));
  CHECK(!is_zero_symmetric(build_haar(HaarSymbol(13, {0, 1, 4})).graph));
  CHECK(!is_zero_symmetric(build_haar(HaarSymbol(15, {0, 1, 4})).graph));
  std::size_t exceptions = 0;
  for (std::uint32_t n = 13; n <= 40; ++n) {
    exceptions += !is_zero_symmetric(build_haar(HaarSymbol(n, {0, 1, 4})).graph);
  }
  CHECK(exceptions == 2);
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(build_gp({8, 3}), build_haar(HaarSymbol(8, {0, 1, 3})).graph).has_value());
  const Graph gp245 = build_gp({24, 5});
  for (const auto& sym : enumerate_haar_classes(24)) {
    CHECK(!find_isomorphism(gp245, build_haar(sym).graph).has_value());
  }
  CHECK(!find_isomorphism(cycle_graph(6), complete_graph(6)).has_value());
  CHECK(!find_isomorphism(cycle_graph(6), cycle_graph(7)).has_value());

  std::mt19937_64 rng(23);
  for (const Graph& g : {heawood(), petersen_graph(), build_gp({12, 5}), cycle_graph(9)}) {
    for (int trial = 0; trial < 5; ++trial) {
      Permutation perm;
      const Graph h = shuffled(g, rng, perm);
      const auto iso = find_isomorphism(g, h);
      REQUIRE(iso.has_value());
      CHECK(is_isomorphism(g, h, *iso));
    }
  }
}

TEST_CASE("colour-respecting isomorphism") {
  const HaarGraph h = build_haar(HaarSymbol(7, {0, 1, 3}));
  auto colors = h.coloring();
  std::vector<std::uint32_t> swapped(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v) swapped[v] = 1 - colors[v];
  // Self-duality: some isomorphism exchanges points and lines.
  CHECK(find_isomorphism(h.graph, h.graph, colors, swapped).has_value());
  CHECK_THROWS(find_isomorphism(h.graph, h.graph, colors, {}));
}

TEST_CASE("group sanity") {
  for (std::uint32_t n = 3; n <= 16; ++n) {
    for (const auto& sym : enumerate_haar_classes(n)) {
      const Graph g = build_haar(sym).graph;
      const auto group = automorphism_group(g);
      CHECK(group.order % g.vertex_count() == 0);
      CHECK(is_vertex_transitive(g));
    }
  }
}

TEST_CASE("arc-transitive girth-6 classes are exactly the flag-transitive symbols") {
  for (std::uint32_t n = 7; n <= 30; ++n) {
    const auto flagged = flag_transitive_symbols(n);
    for (const auto& sym : enumerate_haar_classes(n)) {
      const Graph g = build_haar(sym).graph;
      if (std::get<std::size_t>(girth(g)) != 6) continue;
      const bool listed = std::find(flagged.begin(), flagged.end(), sym) != flagged.end();
      CHECK_MESSAGE(is_arc_transitive(g) == listed, sym.to_string());
    }
  }
}

TEST_CASE("permutation text") {
  const Permutation p{0, 3, 1, 2};
  CHECK(format_permutation(p) == "0 3 1 2");
  CHECK(parse_permutation("0 3 1 2") == p);
  CHECK_THROWS_AS(parse_permutation("0 0 1"), ParseError);
}
