#include "splitconf/report.hpp"

#include "cursor.hpp"
#include "splitconf/families.hpp"
#include "splitconf/incidence.hpp"
#include "splitconf/parallel.hpp"
#include "splitconf/splittability.hpp"
#include "splitconf/symmetry.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace splitconf {
namespace {

const char* mark(bool b) { return b ? "⊤" : "⊥"; }
const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Pads to `width` display columns; UTF-8 continuation bytes take no column.
std::string cell(const std::string& text, std::size_t width) {
  const auto shown = static_cast<std::size_t>(
      std::count_if(text.begin(), text.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  return text + std::string(width > shown ? width - shown : 1, ' ');
}

std::string residues(const HaarSymbol& sym) {
  std::string out;
  for (auto r : sym.residues()) {
    if (!out.empty()) out += ',';
    out += std::to_string(r);
  }
  return out;
}

std::size_t finite(const Extent& e) { return is_infinite(e) ? 0 : std::get<std::size_t>(e); }

SurveyRow survey_row(const HaarSymbol& sym, bool oracle) {
  const HaarGraph h = build_haar(sym);
  SurveyRow row;
  row.n = sym.n();
  row.symbol = sym;
  row.splittable = find_splitting_set(h.graph).splittable();
  if (oracle && h.graph.vertex_count() <= kDefaultOracleBound) {
    if (brute_force_splittable(h.graph).splittable() != row.splittable) {
      throw OracleMismatch("search and brute force disagree on " + sym.to_string());
    }
  }
  // Cyclic Haar graphs are vertex-transitive, so one root sees the girth and the diameter.
  row.girth = finite(girth_through(h.graph, 0));
  const auto dist = distances_from(h.graph, 0);
  for (const auto& d : dist) row.diameter = std::max(row.diameter, d.value_or(0));
  row.arc_transitive = is_arc_transitive(h.graph);
  return row;
}

std::string join_sizes(const Partition& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + std::to_string(p.size());
  return out;
}

Graph disjoint_cycles(std::size_t copies, std::size_t length) {
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < copies; ++c) {
    const auto base = static_cast<Vertex>(c * length);
    for (std::size_t i = 0; i < length; ++i) {
      edges.push_back({base + static_cast<Vertex>(i), base + static_cast<Vertex>((i + 1) % length)});
    }
  }
  return Graph(copies * length, edges);
}

std::string sigma_text(const Graph& g, const std::optional<VertexSet>& sigma) {
  return sigma ? format_certificate(g, *sigma) : "absent";
}

CheckResult check_construction_examples(bool inject_fault) {
  CheckResult r{"construction-examples", true, ""};
  struct Case {
    std::uint32_t n, a, b;
    std::optional<std::vector<std::int64_t>> plus, minus;
  };
  const std::vector<Case> cases{{13, 1, 4, {{0, 6, 8}}, {{3, 5, 11}}},
                                {16, 1, 5, {{0, 8, 10}}, {{4, 6, 14}}},
                                {16, 2, 5, {{0, 6, 10}}, {{3, 7, 13}}},
                                {12, 1, 4, std::nullopt, std::nullopt}};
  for (const auto& c : cases) {
    const HaarGraph h = build_haar(HaarSymbol(c.n, {0, c.a, c.b}));
    auto sigma = construction_splitting_set(c.n, c.a, c.b);
    if (inject_fault && sigma && c.n == 13) {
      auto members = sigma->members();
      members.push_back(h.plus(1));
      sigma = VertexSet(members);
    }
    std::ostringstream line;
    line << "(" << c.n << "," << c.a << "," << c.b << "): " << sigma_text(h.graph, sigma);
    bool ok = sigma.has_value() == c.plus.has_value();
    if (ok && sigma) {
      std::vector<Vertex> expected;
      for (auto i : *c.plus) expected.push_back(h.plus(i));
      for (auto i : *c.minus) expected.push_back(h.minus(i));
      const auto check = verify_splitting_set(h.graph, *sigma);
      ok = check.ok() && *sigma == VertexSet(expected);
      if (!check.ok()) line << " [" << check.reason() << "]";
    }
    if (!ok) r.passed = false;
    r.detail += (r.detail.empty() ? "" : "; ") + line.str();
  }
  return r;
}

CheckResult check_construction_sweep(std::uint32_t n_max) {
  std::size_t count = 0;
  for (std::uint32_t n = 4; n <= n_max; ++n) {
    for (std::uint32_t a = 1; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) {
        auto sigma = construction_splitting_set(n, a, b);
        if (!sigma) continue;
        ++count;
        const Graph g = build_haar(HaarSymbol(n, {0, a, b})).graph;
        if (!verify_splitting_set(g, *sigma).ok() || finite(girth_through(g, 0)) != 6) {
          return {"construction-sweep", false,
                  "H(" + std::to_string(n) + ";0," + std::to_string(a) + "," + std::to_string(b) + ") fails"};
        }
      }
    }
  }
  return {"construction-sweep", true, std::to_string(count) + " admissible triples with n <= " + std::to_string(n_max)};
}

CheckResult check_splittable_families(std::uint32_t n_max) {
  struct Family {
    std::uint32_t a, b, bound;
  };
  CheckResult r{"splittable-families", true, ""};
  for (const Family f : {Family{1, 4, 13}, Family{1, 5, 16}, Family{2, 5, 16}}) {
    std::size_t verified = 0;
    const std::uint32_t top = std::max(n_max, f.bound);
    for (std::uint32_t n = f.bound; n <= top; ++n) {
      const HaarSymbol sym(n, {0, f.a, f.b});
      auto sigma = construction_splitting_set(n, f.a, f.b);
      if (!sigma || !splittable_family_member(sym) || !verify_splitting_set(build_haar(sym).graph, *sigma).ok()) {
        r.passed = false;
        r.detail += "; " + sym.to_string() + " fails";
        continue;
      }
      ++verified;
    }
    const HaarSymbol below(f.bound - 1, {0, f.a, f.b});
    if (construction_splitting_set(f.bound - 1, f.a, f.b)) {
      r.passed = false;
      r.detail += "; " + below.to_string() + " construction should be absent";
    }
    if (splittable_family_member(below)) {
      r.passed = false;
      r.detail += "; " + below.to_string() + " wrongly counted as a member";
    }
    r.detail += "; {0," + std::to_string(f.a) + "," + std::to_string(f.b) + "}: n=" + std::to_string(f.bound) + ".." +
                std::to_string(top) + " verified " + std::to_string(verified);
  }
  r.detail.erase(0, 2);
  return r;
}

CheckResult check_unsplittable_prefix(const std::string& name, std::vector<HaarSymbol> symbols) {
  for (const auto& sym : symbols) {
    const auto report = find_splitting_set(build_haar(sym).graph);
    if (report.splittable()) {
      const HaarGraph h = build_haar(sym);
      return {name, false, sym.to_string() + " splits via " + format_certificate(h.graph, *report.certificate)};
    }
  }
  return {name, true,
          std::to_string(symbols.size()) + " graphs unsplittable, " + symbols.front().to_string() + " to " +
              symbols.back().to_string()};
}

CheckResult check_small_cubic_certificates() {
  CheckResult r{"small-cubic-certificates", true, ""};
  auto note = [&](bool ok, const std::string& text) {
    if (!ok) r.passed = false;
    r.detail += (r.detail.empty() ? "" : "; ") + text + (ok ? "" : " [failed]");
  };
  note(!find_splitting_set(build_haar(HaarSymbol(7, {0, 1, 3})).graph).splittable(), "H(7;0,1,3) unsplittable");
  const Graph gp83 = build_gp({8, 3});
  note(!find_splitting_set(gp83).splittable() &&
           find_isomorphism(gp83, build_haar(HaarSymbol(8, {0, 1, 3})).graph).has_value(),
       "GP(8,3) unsplittable and isomorphic to H(8;0,1,3)");
  note(!find_splitting_set(build_gp({10, 3})).splittable(), "GP(10,3) unsplittable");
  for (const GPParams p : {GPParams{12, 5}, GPParams{24, 5}}) {
    const Graph g = build_gp(p);
    const auto sigma = gp_splitting_set(p);
    const bool verified = sigma && verify_splitting_set(g, *sigma).ok();
    const bool cycles = verified && find_isomorphism(g.without(*sigma), disjoint_cycles(3, p.n / 2)).has_value();
    note(verified && cycles && find_splitting_set(g).splittable(),
         "GP(" + std::to_string(p.n) + ",5) minus {" + sigma_text(g, sigma) + "} is 3C" + std::to_string(p.n / 2));
  }
  return r;
}

CheckResult check_grid_expansion() {
  CheckResult r{"grid-expansion", true, ""};
  const Configuration gray = gray_configuration(3);
  Configuration current = gray;
  for (int step = 1; step <= 2; ++step) {
    const Expansion e = expand_along_line(current, current.line_ids().front());
    const ColoredLevi l = levi(e.configuration);
    const auto v = static_cast<Vertex>(e.configuration.point_count());
    std::vector<Vertex> lines;
    for (auto m : e.new_lines) lines.push_back(v + m);
    bool ok = e.configuration.is_balanced(3) && verify_splitting_set(l.graph, VertexSet(lines)).ok();
    for (const auto& pts : e.copy_points) {
      ok = ok && verify_splitting_set(l.graph, VertexSet(std::vector<Vertex>(pts.begin(), pts.end()))).ok();
    }
    const SplittingType type = splitting_type(e.configuration);
    ok = ok && type == SplittingType::T1;
    if (!ok) r.passed = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("(") + std::to_string(e.configuration.point_count()) +
                "_3) " + to_string(type);
    current = e.configuration;
  }
  return r;
}

}  // namespace

std::vector<SurveyRow> compute_survey(std::uint32_t n_min, std::uint32_t n_max, const RunOptions& options) {
  if (n_min < 3 || n_min > n_max) throw std::invalid_argument("need 3 <= n-min <= n-max");
  auto per_n = parallel_map(n_max - n_min + 1, options.jobs, [&](std::size_t i) {
    std::vector<SurveyRow> rows;
    for (const auto& sym : enumerate_haar_classes(n_min + static_cast<std::uint32_t>(i))) {
      rows.push_back(survey_row(sym, options.oracle));
    }
    return rows;
  });
  std::vector<SurveyRow> out;
  for (auto& rows : per_n) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

std::vector<ClassCountRow> class_counts_from_survey(const std::vector<SurveyRow>& survey) {
  std::vector<ClassCountRow> rows;
  for (const auto& s : survey) {
    if (rows.empty() || rows.back().n != s.n) rows.push_back({s.n});
    ClassCountRow& t = rows.back();
    const bool six = s.girth == 6;
    ++t.a;
    t.b += six;
    (s.splittable ? t.c : t.d) += 1;
    if (six) (s.splittable ? t.e : t.f) += 1;
  }
  return rows;
}

std::vector<ClassCountRow> compute_class_counts(std::uint32_t n_min, std::uint32_t n_max, const RunOptions& options) {
  return class_counts_from_survey(compute_survey(n_min, n_max, options));
}

void write_class_counts(std::ostream& out, const std::vector<ClassCountRow>& rows, bool tsv) {
  if (tsv) {
    out << "n\ta\tb\tc\td\te\tf\n";
    for (const auto& r : rows) {
      out << r.n << '\t' << r.a << '\t' << r.b << '\t' << r.c << '\t' << r.d << '\t' << r.e << '\t' << r.f << '\n';
    }
    return;
  }
  out << cell("n", 5) << cell("(a)", 5) << cell("(b)", 5) << cell("(c)", 5) << cell("(d)", 5) << cell("(e)", 5)
      << "(f)\n";
  for (const auto& r : rows) {
    out << cell(std::to_string(r.n), 5) << cell(std::to_string(r.a), 5) << cell(std::to_string(r.b), 5)
        << cell(std::to_string(r.c), 5) << cell(std::to_string(r.d), 5) << cell(std::to_string(r.e), 5) << r.f
        << '\n';
  }
}

void write_survey(std::ostream& out, const std::vector<SurveyRow>& rows, bool tsv) {
  if (tsv) {
    out << "n\tS\tsplittable\tgirth\tdiameter\tarc_transitive\n";
    for (const auto& r : rows) {
      out << r.n << '\t' << residues(r.symbol) << '\t' << r.splittable << '\t' << r.girth << '\t' << r.diameter
          << '\t' << r.arc_transitive << '\n';
    }
    return;
  }
  out << cell("n", 5) << cell("S", 12) << cell("split", 7) << cell("girth", 7) << cell("diam", 6) << "arc\n";
  for (const auto& r : rows) {
    out << cell(std::to_string(r.n), 5) << cell("{" + residues(r.symbol) + "}", 12) << cell(mark(r.splittable), 7)
        << cell(std::to_string(r.girth), 7) << cell(std::to_string(r.diameter), 6) << mark(r.arc_transitive) << '\n';
  }
}

NamedGraph parse_graph_spec(const std::string& spec) {
  if (spec.starts_with("H(")) {
    const HaarSymbol sym = HaarSymbol::parse(spec);
    HaarGraph h = build_haar(sym);
    auto colors = h.coloring();
    std::optional<VertexSet> construction;
    const auto& r = sym.residues();
    if (r.size() == 3 && r[0] == 0) construction = construction_splitting_set(sym.n(), r[1], r[2]);
    return {sym.to_string(), std::move(h.graph), std::move(colors), std::move(construction)};
  }
  if (spec.starts_with("GP(")) {
    detail::Cursor cur(spec);
    cur.expect("GP(");
    const auto n = cur.non_negative();
    cur.expect(',');
    const auto k = cur.non_negative();
    cur.expect(')');
    cur.finish();
    if (n > 1'000'000 || k > 1'000'000) throw ParseError("GP parameters too large", 4);
    const GPParams p{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)};
    Graph g = build_gp(p);
    auto colors = bipartition(g);
    return {"GP(" + std::to_string(n) + "," + std::to_string(k) + ")", std::move(g), std::move(colors),
            gp_splitting_set(p)};
  }
  if (spec.starts_with("LCF[")) {
    const LcfCode code = LcfCode::parse(spec);
    Graph g = build_lcf(code);
    auto colors = bipartition(g);
    return {code.to_string(), std::move(g), std::move(colors), std::nullopt};
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open edge-list file '" + spec + "'");
  Graph g = read_edge_list(in);
  auto colors = bipartition(g);
  return {spec, std::move(g), std::move(colors), std::nullopt};
}

void write_analysis(std::ostream& out, const NamedGraph& ng) {
  const Graph& g = ng.graph;
  const bool connected = g.vertex_count() > 0 && is_connected(g);
  const Extent gir = girth(g);
  std::size_t min_degree = g.vertex_count() ? g.degree(0) : 0, max_degree = min_degree;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    min_degree = std::min(min_degree, g.degree(v));
    max_degree = std::max(max_degree, g.degree(v));
  }
  out << "graph: " << ng.name << '\n';
  out << "vertices: " << g.vertex_count() << '\n';
  out << "edges: " << g.edge_count() << '\n';
  out << "degree: " << min_degree;
  if (max_degree != min_degree) out << ".." << max_degree;
  out << '\n';
  out << "connected: " << yes_no(connected) << '\n';
  out << "bipartite: " << yes_no(ng.colors.has_value()) << '\n';
  out << "girth: " << to_string(gir) << '\n';
  out << "diameter: " << to_string(diameter(g)) << '\n';
  if (connected) out << "3-connected: " << yes_no(vertex_connectivity_at_least(g, 3)) << '\n';

  out << "\n[splittability]\n";
  if (!connected || g.vertex_count() < 2) {
    out << "splittable: n/a (needs a connected graph on at least two vertices)\n";
  } else {
    const SplitReport report = find_splitting_set(g);
    out << "splittable: " << yes_no(report.splittable()) << '\n';
    // A verified known construction is preferred as the displayed certificate.
    std::optional<VertexSet> shown;
    if (ng.construction && verify_splitting_set(g, *ng.construction).ok()) shown = ng.construction;
    if (report.splittable()) {
      const VertexSet& sigma = shown ? *shown : *report.certificate;
      const auto parts = components_without(g, sigma.to_bitset(g.vertex_count()));
      out << "certificate: " << format_certificate(g, sigma) << (shown ? " (construction)" : "") << '\n';
      out << "components: " << parts.size() << " (sizes " << join_sizes(parts) << ")\n";
      if (shown) out << "search certificate: " << format_certificate(g, *report.certificate) << '\n';
    } else if (ng.construction) {
      out << "construction rejected: " << format_certificate(g, *ng.construction) << '\n';
    }
    out << "search: " << report.stats.seeds << " seeds, " << report.stats.nodes << " nodes\n";
  }

  out << "\n[configuration]\n";
  if (!ng.colors || is_infinite(gir) || std::get<std::size_t>(gir) < 6) {
    std::string why = ng.colors ? "" : "not bipartite";
    if (!is_infinite(gir) && std::get<std::size_t>(gir) < 6) {
      why += (why.empty() ? "" : ", ") + std::string("girth ") + to_string(gir);
    }
    if (why.empty()) why = "acyclic";
    out << "levi: excluded (" << why << ")\n";
  } else {
    const Configuration c = config_from_levi({g, *ng.colors});
    if (auto k = c.balanced_order()) {
      out << "levi: (" << c.point_count() << "_" << *k << ")\n";
    } else {
      out << "levi: unbalanced (" << c.point_count() << " points, " << c.line_count() << " lines)\n";
    }
    if (connected) {
      const TypeReport t = classify(c);
      out << "type: " << to_string(t.type) << '\n';
      out << "point-splittable: " << yes_no(t.points.splittable()) << '\n';
      out << "line-splittable: " << yes_no(t.lines.splittable()) << '\n';
    } else {
      out << "type: n/a (disconnected)\n";
    }
  }

  out << "\n[symmetry]\n";
  const AutomorphismGroup group = automorphism_group(g);
  out << "automorphisms: " << group.order << '\n';
  out << "vertex-transitive: " << yes_no(is_vertex_transitive(g)) << '\n';
  out << "arc-transitive: " << yes_no(is_arc_transitive(g)) << '\n';
}

std::vector<CheckResult> verify_theorems(const CheckOptions& options) {
  std::vector<CheckResult> checks;
  checks.push_back(check_construction_examples(options.inject_fault));
  checks.push_back(check_construction_sweep(60));
  checks.push_back(check_splittable_families(options.n_max));
  std::vector<HaarSymbol> heawood, triple;
  for (std::uint32_t n = 7; n <= options.n_max; ++n) heawood.emplace_back(n, std::initializer_list<std::int64_t>{0, 1, 3});
  for (std::uint32_t m = 2; 3 * m <= options.n_max; ++m) {
    triple.emplace_back(3 * m, std::initializer_list<std::int64_t>{0, 1, m});
  }
  checks.push_back(check_unsplittable_prefix("heawood-family-prefix", heawood));
  checks.push_back(check_unsplittable_prefix("triple-family-prefix", triple));
  checks.push_back(check_small_cubic_certificates());
  checks.push_back(check_grid_expansion());
  return checks;
}

void write_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    failed += !c.passed;
  }
  out << checks.size() << " checks, " << failed << " failed\n";
}

}  // namespace splitconf
