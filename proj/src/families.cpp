#include "splitconf/families.hpp"

#include "splitconf/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace splitconf {
namespace {

std::uint32_t mod(std::int64_t x, std::uint32_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(((x % m) + m) % m);
}

bool all_distinct(std::vector<std::uint32_t> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

bool same_class(const HaarSymbol& sym, std::initializer_list<std::int64_t> residues) {
  return canonical_symbol(sym) == canonical_symbol(HaarSymbol(sym.n(), residues));
}

ScanRow scan_row(const HaarSymbol& sym, std::size_t girth) {
  const HaarGraph h = build_haar(sym);
  ScanRow row;
  row.n = sym.n();
  row.symbol = sym;
  row.girth = girth;
  const SplitReport report = find_splitting_set(h.graph);
  row.verdict = report.verdict;
  if (report.splittable()) {
    row.certificate = format_certificate(h.graph, *report.certificate);
    row.certificate_verified = verify_splitting_set(h.graph, *report.certificate).ok();
  }
  return row;
}

std::vector<ScanRow> girth_six_rows(std::uint32_t n, std::size_t arity) {
  std::vector<ScanRow> rows;
  for (const auto& sym : enumerate_haar_classes(n, arity)) {
    const Extent g = girth_through(build_haar(sym).graph, 0);
    if (is_infinite(g) || std::get<std::size_t>(g) != 6) continue;
    rows.push_back(scan_row(sym, 6));
  }
  return rows;
}

ScanReport flatten(std::vector<std::vector<ScanRow>> per_n) {
  ScanReport report;
  for (auto& rows : per_n) {
    for (auto& row : rows) report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

bool ConstructionInstance::admissible() const { return all_distinct(white) && all_distinct(black); }

ConstructionInstance construction_instance(std::uint32_t n, std::uint32_t a, std::uint32_t b) {
  if (!(0 < a && a < b && b < n)) throw std::invalid_argument("expected 0 < a < b < n");
  const std::int64_t A = a, B = b;
  ConstructionInstance t{n, a, b, {}, {}};
  const std::vector<std::int64_t> shared{0, A, B, 2 * B, B + A, B - A, 2 * B - A, 2 * B - 2 * A, 3 * B - A, 3 * B - 2 * A};
  for (auto x : shared) {
    t.white.push_back(mod(x, n));
    t.black.push_back(mod(x, n));
  }
  t.white.push_back(mod(2 * B + A, n));
  t.white.push_back(mod(3 * B, n));
  t.black.push_back(mod(-A, n));
  t.black.push_back(mod(B - 2 * A, n));
  return t;
}

std::optional<VertexSet> construction_splitting_set(std::uint32_t n, std::uint32_t a, std::uint32_t b) {
  if (!construction_instance(n, a, b).admissible()) return std::nullopt;
  const std::int64_t A = a, B = b;
  return VertexSet({mod(0, n), mod(2 * B, n), mod(2 * B - 2 * A, n), n + mod(B - A, n), n + mod(B + A, n),
                    n + mod(3 * B - A, n)});
}

bool splittable_family_member(const HaarSymbol& sym) {
  if (sym.arity() != 3) return false;
  const std::uint32_t n = sym.n();
  return (n >= 13 && same_class(sym, {0, 1, 4})) || (n >= 16 && same_class(sym, {0, 1, 5})) ||
         (n >= 16 && same_class(sym, {0, 2, 5}));
}

std::string to_string(UnsplittableFamily f) {
  switch (f) {
    case UnsplittableFamily::F1:
      return "F1";
    case UnsplittableFamily::F2:
      return "F2";
    case UnsplittableFamily::F3:
      return "F3";
  }
  return "?";
}

std::optional<UnsplittableFamily> unsplittable_family_member(const HaarSymbol& sym) {
  if (sym.arity() != 3) return std::nullopt;
  const std::uint32_t n = sym.n();
  if (n >= 7 && same_class(sym, {0, 1, 3})) return UnsplittableFamily::F1;
  if (n % 3 == 0) {
    const std::uint32_t m = n / 3;
    if (m >= 2 && same_class(sym, {0, 1, m})) return UnsplittableFamily::F2;
    if (m >= 4 && m % 3 != 0 && same_class(sym, {0, 1, m + 1})) return UnsplittableFamily::F3;
  }
  return std::nullopt;
}

Graph build_gp(GPParams p) {
  if (p.n < 3 || p.k < 1 || 2 * p.k >= p.n) throw std::invalid_argument("GP(n,k) needs n >= 3 and 1 <= k < n/2");
  const std::uint32_t n = p.n;
  std::vector<Edge> edges;
  std::vector<std::string> labels(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    edges.push_back({n + i, n + (i + 1) % n});
    edges.push_back({i, n + i});
    edges.push_back({i, (i + p.k) % n});
    labels[i] = std::to_string(i);
    labels[n + i] = std::to_string(i) + "'";
  }
  return Graph(2 * n, edges, std::move(labels));
}

std::vector<std::uint32_t> gp_coloring(GPParams p) {
  std::vector<std::uint32_t> colors(p.n, kWhite);
  colors.resize(2 * p.n, kBlack);
  return colors;
}

std::optional<VertexSet> gp_splitting_set(GPParams p) {
  if (p.k != 5 || (p.n != 12 && p.n != 24)) return std::nullopt;
  std::vector<Vertex> sigma;
  for (std::uint32_t i = 0; i < p.n; i += 4) {
    sigma.push_back(p.n + i);
    sigma.push_back(i + 2);
  }
  return VertexSet(std::move(sigma));
}

std::vector<HaarSymbol> flag_transitive_symbols(std::uint32_t n) {
  std::set<HaarSymbol> out;
  if (n == 7 || n == 8) out.insert(canonical_symbol(HaarSymbol(n, {0, 1, 3})));
  if (n >= 11 && n % 2 == 1) {
    for (std::uint64_t r = 1; r < n; ++r) {
      if (std::gcd(r, std::uint64_t{n}) == 1 && (r * r + r + 1) % n == 0) {
        out.insert(canonical_symbol(HaarSymbol(n, {0, 1, static_cast<std::int64_t>(r + 1)})));
      }
    }
  }
  return {out.begin(), out.end()};
}

Configuration gray_configuration(std::uint32_t k, std::uint32_t max_k) {
  if (k < 2) throw std::invalid_argument("Gray configuration needs k >= 2");
  if (k > max_k || k > 9) throw SizeGuardError("Gray configuration for k = " + std::to_string(k) + " is too large");
  std::size_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= k;
  auto digits = [&](std::size_t index) {
    std::string s(k, '0');
    for (std::uint32_t d = k; d-- > 0; index /= k) s[d] = static_cast<char>('0' + index % k);
    return s;
  };
  std::vector<std::string> points;
  for (std::size_t i = 0; i < count; ++i) points.push_back(digits(i));
  std::vector<std::string> lines;
  std::vector<std::vector<std::uint32_t>> line_points;
  std::size_t stride = count;
  for (std::uint32_t axis = 0; axis < k; ++axis) {
    stride /= k;
    for (std::size_t i = 0; i < count; ++i) {
      if ((i / stride) % k != 0) continue;
      std::string id = points[i];
      id[axis] = '*';
      lines.push_back(std::move(id));
      auto& pts = line_points.emplace_back();
      for (std::uint32_t t = 0; t < k; ++t) pts.push_back(static_cast<std::uint32_t>(i + t * stride));
    }
  }
  Configuration c(std::move(points), std::move(lines), std::move(line_points));
  c.require_balanced(k);
  return c;
}

Expansion expand_along_line(const Configuration& c, const std::string& line_id) {
  const auto k = c.balanced_order();
  if (!k) throw NotRegular("expansion needs a balanced configuration");
  const auto removed = c.find_line(line_id);
  if (!removed) throw std::invalid_argument("no line named '" + line_id + "'");
  const auto v = static_cast<std::uint32_t>(c.point_count());
  const auto& joined = c.points_on(*removed);

  std::vector<std::string> points, lines;
  std::vector<std::vector<std::uint32_t>> line_points;
  Expansion out{Configuration({}, {}, {}), {}, {}};
  for (std::uint32_t copy = 0; copy < *k; ++copy) {
    const std::string suffix = "@" + std::to_string(copy + 1);
    const std::uint32_t offset = copy * v;
    for (const auto& id : c.point_ids()) points.push_back(id + suffix);
    for (std::uint32_t l = 0; l < c.line_count(); ++l) {
      if (l == *removed) continue;
      lines.push_back(c.line_ids()[l] + suffix);
      auto& pts = line_points.emplace_back();
      for (std::uint32_t p : c.points_on(l)) pts.push_back(offset + p);
    }
    auto& copies = out.copy_points.emplace_back();
    for (std::uint32_t p : joined) copies.push_back(offset + p);
  }
  for (std::uint32_t j = 0; j < *k; ++j) {
    out.new_lines.push_back(static_cast<std::uint32_t>(lines.size()));
    lines.push_back("M" + std::to_string(j + 1));
    auto& pts = line_points.emplace_back();
    for (std::uint32_t copy = 0; copy < *k; ++copy) pts.push_back(copy * v + joined[j]);
  }
  out.configuration = Configuration(std::move(points), std::move(lines), std::move(line_points));
  return out;
}

std::size_t ScanReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return !r.agrees; }));
}

std::size_t ScanReport::unverified_certificates() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return !r.certificate_verified; }));
}

ScanReport scan_cubic_families(std::uint32_t n_min, std::uint32_t n_max, std::size_t jobs) {
  if (n_min > n_max) return {};
  auto per_n = parallel_map(n_max - n_min + 1, jobs, [&](std::size_t i) {
    auto rows = girth_six_rows(n_min + static_cast<std::uint32_t>(i), 3);
    for (auto& row : rows) {
      row.family = unsplittable_family_member(row.symbol);
      row.agrees = (row.verdict == Verdict::unsplittable) == row.family.has_value();
    }
    return rows;
  });
  return flatten(std::move(per_n));
}

ScanReport scan_higher_valency(std::uint32_t k, std::uint32_t n_min, std::uint32_t n_max, std::size_t jobs,
                             std::uint32_t max_n) {
  if (k < 4) throw std::invalid_argument("the k >= 4 scan needs k >= 4");
  if (n_min > n_max) return {};
  if (n_max > max_n) throw SizeGuardError("scan limited to n <= " + std::to_string(max_n));
  auto per_n = parallel_map(n_max - n_min + 1, jobs, [&](std::size_t i) {
    auto rows = girth_six_rows(n_min + static_cast<std::uint32_t>(i), k);
    for (auto& row : rows) row.agrees = row.verdict == Verdict::unsplittable;
    return rows;
  });
  return flatten(std::move(per_n));
}

void write_scan_tsv(std::ostream& out, const ScanReport& report) {
  out << "n\tsymbol\tgirth\tverdict\tfamily_tag\tcertificate\n";
  for (const auto& row : report.rows) {
    out << row.n << '\t' << row.symbol.to_string() << '\t' << row.girth << '\t' << to_string(row.verdict) << '\t'
        << (row.family ? to_string(*row.family) : "-") << '\t' << (row.certificate.empty() ? "-" : row.certificate)
        << '\n';
  }
}

}  // namespace splitconf
