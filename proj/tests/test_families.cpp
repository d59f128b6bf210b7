#include "oracles.hpp"
#include "splitconf/families.hpp"
#include "splitconf/haar.hpp"
#include "splitconf/symmetry.hpp"

#include <doctest.h>

#include <sstream>

using namespace splitconf;

namespace {

VertexSet haar_set(std::uint32_t n, std::vector<std::int64_t> plus, std::vector<std::int64_t> minus) {
  const HaarGraph h = build_haar(HaarSymbol(n, {0, 1}));
  std::vector<Vertex> out;
  for (auto i : plus) out.push_back(h.plus(i));
  for (auto i : minus) out.push_back(h.minus(i));
  return VertexSet(out);
}

bool is_cycle_union(const Graph& g, std::size_t cycles, std::size_t length) {
  if (!g.is_regular(2)) return false;
  const auto comps = connected_components(g);
  if (comps.size() != cycles) return false;
  for (const auto& c : comps)
    if (c.size() != length) return false;
  return true;
}

}  // namespace

TEST_CASE("construction sets on small instances") {
  CHECK(construction_splitting_set(13, 1, 4) == haar_set(13, {0, 6, 8}, {3, 5, 11}));
  CHECK(construction_splitting_set(16, 1, 5) == haar_set(16, {0, 8, 10}, {4, 6, 14}));
  CHECK(construction_splitting_set(16, 2, 5) == haar_set(16, {0, 6, 10}, {3, 7, 13}));
  CHECK(!construction_splitting_set(12, 1, 4).has_value());
  CHECK_THROWS_AS(construction_splitting_set(12, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(construction_splitting_set(12, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(construction_splitting_set(4, 1, 4), std::invalid_argument);

  const auto inst = construction_instance(12, 1, 4);
  CHECK(!inst.admissible());
  CHECK(inst.white.size() == 12);
  CHECK(inst.black.size() == 12);
}

TEST_CASE("construction property: admissible instances split and have girth 6") {
  for (std::uint32_t n = 3; n <= 45; ++n) {
    for (std::uint32_t b = 2; b < n; ++b) {
      for (std::uint32_t a = 1; a < b; ++a) {
        const auto inst = construction_instance(n, a, b);
        auto distinct = [](std::vector<std::uint32_t> v) {
          std::sort(v.begin(), v.end());
          return std::unique(v.begin(), v.end()) == v.end();
        };
        CHECK(inst.admissible() == (distinct(inst.white) && distinct(inst.black)));
        const auto sigma = construction_splitting_set(n, a, b);
        CHECK(sigma.has_value() == inst.admissible());
        if (!sigma) continue;
        const Graph g = build_haar(HaarSymbol(n, {0, a, b})).graph;
        CHECK(verify_splitting_set(g, *sigma).ok());
        CHECK(std::get<std::size_t>(girth(g)) == 6);
      }
    }
  }
}

TEST_CASE("splittable families") {
  CHECK(splittable_family_member(HaarSymbol(13, {0, 1, 4})));
  CHECK(!splittable_family_member(HaarSymbol(12, {0, 1, 4})));
  CHECK(splittable_family_member(HaarSymbol(30, {0, 2, 5})));
  CHECK(!splittable_family_member(HaarSymbol(15, {0, 1, 5})));
  // Canonical-equal symbols count as members.
  CHECK(splittable_family_member(HaarSymbol(13, {0, 3, 4})));
  for (std::uint32_t n = 13; n <= 40; ++n) {
    if (splittable_family_member(HaarSymbol(n, {0, 1, 4}))) CHECK(find_splitting_set(build_haar(HaarSymbol(n, {0, 1, 4})).graph).splittable());
  }
}

TEST_CASE("unsplittable families") {
  using enum UnsplittableFamily;
  CHECK(unsplittable_family_member(HaarSymbol(7, {0, 1, 3})) == F1);
  CHECK(unsplittable_family_member(HaarSymbol(12, {0, 1, 4})) == F2);
  CHECK(unsplittable_family_member(HaarSymbol(12, {0, 1, 5})) == F3);
  CHECK(!unsplittable_family_member(HaarSymbol(13, {0, 1, 4})).has_value());
  // m = 6 is excluded from F3, but {0,1,7} is the same class as {0,1,6}.
  CHECK(unsplittable_family_member(HaarSymbol(18, {0, 1, 7})) == F2);
  CHECK(unsplittable_family_member(HaarSymbol(15, {0, 1, 6})) == F3);
  CHECK(!unsplittable_family_member(HaarSymbol(15, {0, 1, 4})).has_value());
  CHECK(to_string(F2) == "F2");
  for (std::uint32_t n = 7; n <= 30; ++n) CHECK(!find_splitting_set(build_haar(HaarSymbol(n, {0, 1, 3})).graph).splittable());
  for (std::uint32_t m = 2; m <= 10; ++m) CHECK(!find_splitting_set(build_haar(HaarSymbol(3 * m, {0, 1, m})).graph).splittable());
}

TEST_CASE("generalized Petersen graphs") {
  const Graph gp = build_gp({5, 2});
  CHECK(find_isomorphism(gp, petersen_graph()).has_value());
  CHECK(gp.label(0) == "0");
  CHECK(gp.label(5) == "0'");
  const Graph q3 = build_gp({4, 1});
  // The cube is K4,4 minus a perfect matching.
  CHECK(find_isomorphism(q3, build_haar(HaarSymbol(4, {0, 1, 2})).graph).has_value());
  CHECK(is_bipartite(q3));
  CHECK(std::get<std::size_t>(girth(q3)) == 4);
  CHECK(std::get<std::size_t>(girth(build_gp({10, 3}))) == 6);
  CHECK(automorphism_group(build_gp({12, 5})).order == 144);
  CHECK_THROWS_AS(build_gp({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_gp({10, 5}), std::invalid_argument);
  CHECK_THROWS_AS(build_gp({10, 0}), std::invalid_argument);

  for (std::uint32_t n = 3; n <= 20; ++n) {
    for (std::uint32_t k = 1; 2 * k < n; ++k) {
      const Graph g = build_gp({n, k});
      CHECK(g.vertex_count() == 2 * n);
      CHECK(g.edge_count() == 3 * n);
      CHECK(g.is_regular(3));
    }
  }

  const auto sigma12 = gp_splitting_set({12, 5});
  REQUIRE(sigma12.has_value());
  CHECK(format_certificate(build_gp({12, 5}), *sigma12) == "2 6 10 0' 4' 8'");
  CHECK(is_cycle_union(build_gp({12, 5}).without(*sigma12), 3, 6));
  const auto sigma24 = gp_splitting_set({24, 5});
  REQUIRE(sigma24.has_value());
  CHECK(sigma24->size() == 12);
  CHECK(is_cycle_union(build_gp({24, 5}).without(*sigma24), 3, 12));
  CHECK(!gp_splitting_set({10, 3}).has_value());

  const auto colors = gp_coloring({12, 5});
  CHECK(colors[0] == kWhite);
  CHECK(colors[12] == kBlack);
}

TEST_CASE("flag-transitive symbols") {
  CHECK(flag_transitive_symbols(13) == std::vector<HaarSymbol>{HaarSymbol(13, {0, 1, 4})});
  CHECK(flag_transitive_symbols(21) == std::vector<HaarSymbol>{HaarSymbol(21, {0, 1, 5})});
  CHECK(flag_transitive_symbols(12).empty());
  CHECK(flag_transitive_symbols(7) == std::vector<HaarSymbol>{HaarSymbol(7, {0, 1, 3})});
  // Independent root search for r^2 + r + 1 = 0 mod n.
  for (std::uint32_t n = 11; n <= 60; n += 2) {
    bool root = false;
    for (std::uint32_t r = 0; r < n; ++r) root |= (r * r + r + 1) % n == 0;
    CHECK(root == !flag_transitive_symbols(n).empty());
  }
}

TEST_CASE("grid expansion") {
  const Configuration g2 = gray_configuration(2);
  const Expansion e2 = expand_along_line(g2, g2.line_ids().front());
  CHECK(e2.configuration.point_count() == 8);
  CHECK(e2.configuration.is_balanced(2));

  const Configuration g3 = gray_configuration(3);
  const Expansion e = expand_along_line(g3, "00*");
  const Configuration& c = e.configuration;
  CHECK(c.point_count() == 81);
  CHECK(c.is_balanced(3));
  CHECK(e.new_lines.size() == 3);
  CHECK(c.line_ids()[e.new_lines[0]] == "M1");
  const ColoredLevi l = levi(c);
  std::vector<Vertex> lines;
  for (auto m : e.new_lines) lines.push_back(static_cast<Vertex>(c.point_count() + m));
  CHECK(verify_splitting_set(l.graph, VertexSet(lines)).ok());
  for (const auto& copy : e.copy_points) {
    CHECK(copy.size() == 3);
    CHECK(verify_splitting_set(l.graph, VertexSet(std::vector<Vertex>(copy.begin(), copy.end()))).ok());
  }
  CHECK(splitting_type(c) == SplittingType::T1);
  CHECK(std::find(c.point_ids().begin(), c.point_ids().end(), "000@1") != c.point_ids().end());

  CHECK_THROWS_AS(expand_along_line(g3, "nope"), std::invalid_argument);
  const Configuration tri({"a", "b", "c"}, {"x", "y"}, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(expand_along_line(tri, "x"), NotRegular);
}

TEST_CASE("cubic scan") {
  const ScanReport r12 = scan_cubic_families(7, 12);
  CHECK(r12.mismatches() == 0);
  std::vector<HaarSymbol> unsplit12;
  for (const auto& row : r12.rows) {
    CHECK(row.girth == 6);
    if (row.n == 12 && row.verdict == Verdict::unsplittable) unsplit12.push_back(row.symbol);
  }
  CHECK(unsplit12 == std::vector<HaarSymbol>{HaarSymbol(12, {0, 1, 3}), HaarSymbol(12, {0, 1, 4}), HaarSymbol(12, {0, 1, 5})});

  const ScanReport r7 = scan_cubic_families(7, 7);
  REQUIRE(r7.rows.size() == 1);
  CHECK(r7.rows[0].family == UnsplittableFamily::F1);

  const ScanReport r30 = scan_cubic_families(7, 30, 2);
  CHECK(r30.mismatches() == 0);
  CHECK(r30.unverified_certificates() == 0);
  std::size_t at30 = 0;
  for (const auto& row : r30.rows) at30 += row.n == 30 && row.verdict == Verdict::unsplittable;
  CHECK(at30 == 3);

  std::ostringstream out;
  write_scan_tsv(out, r7);
  CHECK(out.str() == "n\tsymbol\tgirth\tverdict\tfamily_tag\tcertificate\n7\tH(7;0,1,3)\t6\tunsplittable\tF1\t-\n");
}

TEST_CASE("higher-valency scan") {
  CHECK(scan_higher_valency(4, 14, 13).rows.empty());
  CHECK_THROWS_AS(scan_higher_valency(4, 7, 40), SizeGuardError);
  const ScanReport r = scan_higher_valency(4, 7, 14);
  CHECK(r.unverified_certificates() == 0);
  for (const auto& row : r.rows) {
    CHECK(row.girth == 6);
    CHECK(row.symbol.arity() == 4);
  }
}
