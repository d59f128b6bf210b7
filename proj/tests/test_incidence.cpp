#include "oracles.hpp"
#include "splitconf/families.hpp"
#include "splitconf/haar.hpp"
#include "splitconf/incidence.hpp"
#include "splitconf/symmetry.hpp"

#include <doctest.h>

#include <sstream>

using namespace splitconf;

namespace {

Configuration fano() {
  std::vector<std::string> points;
  std::vector<std::string> lines;
  std::vector<std::vector<std::uint32_t>> on;
  for (std::uint32_t i = 0; i < 7; ++i) {
    points.push_back(std::to_string(i + 1));
    lines.push_back("l" + std::to_string(i));
    on.push_back({i, (i + 1) % 7, (i + 3) % 7});
    std::sort(on.back().begin(), on.back().end());
  }
  return Configuration(points, lines, on);
}

Configuration cyclic_configuration(const HaarSymbol& sym) {
  const HaarGraph h = build_haar(sym);
  return config_from_levi({h.graph, h.coloring()});
}

}  // namespace

TEST_CASE("raw configuration validation") {
  CHECK_THROWS_AS(Configuration({"a", "a"}, {"L"}, {{0, 1}}), ConfigurationError);
  CHECK_THROWS_AS(Configuration({"a", "b"}, {"a"}, {{0, 1}}), ConfigurationError);
  CHECK_THROWS_AS(Configuration({"a", "b"}, {"L"}, {{0, 0}}), ConfigurationError);
  CHECK_THROWS_AS(Configuration({"a", "b"}, {"L"}, {{0, 2}}), ConfigurationError);
  CHECK_THROWS_AS(Configuration({"a", "b"}, {"L", "M"}, {{0, 1}, {1, 0}}), GirthViolation);
  CHECK_THROWS_AS(Configuration({"a"}, {"L", "M"}, {{0}}), ConfigurationError);

  const Configuration f = fano();
  CHECK(f.is_balanced(3));
  CHECK(!f.is_balanced(2));
  CHECK(f.balanced_order() == 3);
  CHECK(f.incident(0, 0));
  CHECK(!f.incident(2, 0));
  CHECK(f.incidence_count() == 21);
  CHECK(f.find_line("l4") == 4U);
  CHECK(!f.find_line("zz").has_value());
  CHECK(f.lines_through(0) == std::vector<std::uint32_t>{0, 4, 6});
}

TEST_CASE("fano plane and heawood graph") {
  const ColoredLevi l = levi(fano());
  CHECK(l.graph.vertex_count() == 14);
  CHECK(l.graph.edge_count() == 21);
  CHECK(std::get<std::size_t>(girth(l.graph)) == 6);
  CHECK(find_isomorphism(l.graph, build_haar(HaarSymbol(7, {0, 1, 3})).graph).has_value());
  CHECK(config_from_levi(l) == fano());
  CHECK(splitting_type(fano()) == SplittingType::T4);
}

TEST_CASE("levi graphs that are not configurations") {
  const HaarGraph h8 = build_haar(HaarSymbol(8, {0, 1, 4}));
  CHECK_THROWS_AS(config_from_levi({h8.graph, h8.coloring()}), GirthViolation);

  // C6 as a triangle: a (3_2) configuration, not (3_3).
  const Graph c6 = cycle_graph(6);
  const std::vector<std::uint32_t> alternating{0, 1, 0, 1, 0, 1};
  const Configuration tri = config_from_levi({c6, alternating});
  CHECK(tri.is_balanced(2));
  CHECK_THROWS_AS(config_from_levi({c6, alternating}, 3), NotRegular);
  CHECK_THROWS_AS(tri.require_balanced(3), NotRegular);

  CHECK_THROWS_AS(config_from_levi({c6, {0, 0, 1, 1, 0, 1}}), NotBipartite);
  CHECK_THROWS_AS(config_from_levi({c6, {0, 1}}), NotBipartite);
}

TEST_CASE("duality") {
  for (std::uint32_t n = 7; n <= 16; ++n) {
    for (const auto& sym : enumerate_haar_classes(n)) {
      if (std::get<std::size_t>(girth(build_haar(sym).graph)) != 6) continue;
      const Configuration c = cyclic_configuration(sym);
      CHECK(dual(dual(c)) == c);
      const ColoredLevi a = levi(c);
      const ColoredLevi b = levi(dual(c));
      std::vector<std::uint32_t> flipped(b.colors.size());
      for (std::size_t v = 0; v < flipped.size(); ++v) flipped[v] = 1 - b.colors[v];
      CHECK(find_isomorphism(a.graph, b.graph, a.colors, flipped).has_value());
      // Cyclic configurations are self-dual.
      CHECK(find_isomorphism(a.graph, b.graph, a.colors, b.colors).has_value());
    }
  }
}

TEST_CASE("type map") {
  using enum SplittingType;
  CHECK(splitting_type_of(true, true) == T1);
  CHECK(splitting_type_of(true, false) == T2);
  CHECK(splitting_type_of(false, true) == T3);
  CHECK(splitting_type_of(false, false) == T4);
  CHECK(dual_type(T1) == T1);
  CHECK(dual_type(T2) == T3);
  CHECK(dual_type(T3) == T2);
  CHECK(dual_type(T4) == T4);
  CHECK(to_string(T3) == "T3");
}

TEST_CASE("cyclic configurations are T1 or T4 and types dualize") {
  for (std::uint32_t n = 7; n <= 20; ++n) {
    for (const auto& sym : enumerate_haar_classes(n)) {
      if (std::get<std::size_t>(girth(build_haar(sym).graph)) != 6) continue;
      const Configuration c = cyclic_configuration(sym);
      const SplittingType t = splitting_type(c);
      CHECK_MESSAGE((t == SplittingType::T1 || t == SplittingType::T4), sym.to_string());
      CHECK(splitting_type(dual(c)) == dual_type(t));
    }
  }
}

TEST_CASE("grunbaum graph") {
  const Graph g = grunbaum(fano());
  // Three lines through a point and the six points sharing one of them.
  CHECK(g.is_regular(9));
  CHECK(g == square(levi(fano()).graph));
  const Graph moebius14 = build_lcf(std::vector<std::int64_t>{7}, 14);
  CHECK(g.complement().is_regular(4));
  CHECK(!find_isomorphism(g.complement(), moebius14).has_value());
}

TEST_CASE("configuration text") {
  const std::string text = "# fano\n1 2 4\n2 3 5\n\n3 4 6\n4 5 7\n5 6 1\n6 7 2\n7 1 3\n";
  std::istringstream in(text);
  const Configuration c = read_configuration(in);
  CHECK(c.point_count() == 7);
  CHECK(c.line_ids().front() == "L0");
  CHECK(c.is_balanced(3));
  std::ostringstream out;
  write_configuration(out, c);
  CHECK(out.str() == "1 2 4\n2 3 5\n3 4 6\n4 5 7\n5 6 1\n6 7 2\n7 1 3\n");
  std::istringstream again(out.str());
  CHECK(read_configuration(again) == c);

  std::istringstream clash("1 2\n2 1\n");
  CHECK_THROWS_AS(read_configuration(clash), GirthViolation);
}

TEST_CASE("gray configuration") {
  const Configuration g2 = gray_configuration(2);
  CHECK(g2.point_count() == 4);
  CHECK(g2.line_count() == 4);
  CHECK(g2.is_balanced(2));

  const Configuration g3 = gray_configuration(3);
  CHECK(g3.is_balanced(3));
  CHECK(g3.point_ids().front() == "000");
  CHECK(g3.find_line("0*2").has_value());
  const ColoredLevi l = levi(g3);
  CHECK(l.graph.vertex_count() == 54);
  CHECK(std::get<std::size_t>(girth(l.graph)) == 8);
  CHECK_THROWS_AS(gray_configuration(5), SizeGuardError);
  CHECK_THROWS_AS(gray_configuration(1), std::invalid_argument);
}

TEST_CASE("gray configuration is line-splittable only") {
  const Configuration g3 = gray_configuration(3);
  const ColoredLevi l = levi(g3);
  const TypeReport report = classify(g3);
  CHECK(report.type == SplittingType::T3);
  CHECK(verify_splitting_set(l.graph, *report.lines.certificate).ok());
  // Exhaustive check over independent point sets and line sets.
  CHECK(!brute_force_splittable(l.graph, ColorRestriction::black_only, l.colors, 54).splittable());
  CHECK(brute_force_splittable(l.graph, ColorRestriction::white_only, l.colors, 54).splittable());
  CHECK(splitting_type(dual(g3)) == SplittingType::T2);
}
