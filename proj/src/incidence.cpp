#include "splitconf/incidence.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace splitconf {
namespace {

std::uint64_t flag_key(std::uint32_t point, std::uint32_t line) {
  return (static_cast<std::uint64_t>(point) << 32) | line;
}

}  // namespace

Configuration::Configuration(std::vector<std::string> point_ids, std::vector<std::string> line_ids,
                             std::vector<std::vector<std::uint32_t>> line_points)
    : point_ids_(std::move(point_ids)), line_ids_(std::move(line_ids)), line_points_(std::move(line_points)) {
  if (line_points_.size() != line_ids_.size()) {
    throw ConfigurationError("line identifier count does not match the number of lines");
  }
  std::unordered_set<std::string> ids;
  for (const auto& id : point_ids_) {
    if (!ids.insert(id).second) throw ConfigurationError("duplicate point identifier '" + id + "'");
  }
  for (const auto& id : line_ids_) {
    if (!ids.insert(id).second) throw ConfigurationError("identifier '" + id + "' used twice");
  }
  point_lines_.assign(point_ids_.size(), {});
  std::set<std::pair<std::uint32_t, std::uint32_t>> joined;
  for (std::uint32_t l = 0; l < line_points_.size(); ++l) {
    const auto& pts = line_points_[l];
    for (std::uint32_t p : pts) {
      if (p >= point_ids_.size()) throw ConfigurationError("line " + line_ids_[l] + " refers to an unknown point");
      if (!incidences_.insert(flag_key(p, l)).second) {
        throw ConfigurationError("point " + point_ids_[p] + " listed twice on line " + line_ids_[l]);
      }
      point_lines_[p].push_back(l);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const auto pair = std::minmax(pts[i], pts[j]);
        if (!joined.insert(pair).second) {
          throw GirthViolation("points " + point_ids_[pair.first] + " and " + point_ids_[pair.second] +
                               " lie on two common lines");
        }
      }
    }
  }
}

bool Configuration::incident(std::uint32_t point, std::uint32_t line) const {
  return incidences_.contains(flag_key(point, line));
}

std::optional<std::uint32_t> Configuration::find_line(const std::string& id) const {
  auto it = std::find(line_ids_.begin(), line_ids_.end(), id);
  if (it == line_ids_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - line_ids_.begin());
}

bool Configuration::is_balanced(std::size_t k) const {
  if (point_count() != line_count()) return false;
  return std::all_of(line_points_.begin(), line_points_.end(), [&](const auto& l) { return l.size() == k; }) &&
         std::all_of(point_lines_.begin(), point_lines_.end(), [&](const auto& p) { return p.size() == k; });
}

void Configuration::require_balanced(std::size_t k) const {
  if (!is_balanced(k)) {
    throw NotRegular("not a balanced (v_" + std::to_string(k) + ") configuration: " +
                     std::to_string(point_count()) + " points, " + std::to_string(line_count()) + " lines");
  }
}

std::optional<std::size_t> Configuration::balanced_order() const {
  if (line_points_.empty()) return std::nullopt;
  const std::size_t k = line_points_.front().size();
  if (is_balanced(k)) return k;
  return std::nullopt;
}

Configuration config_from_levi(const ColoredLevi& levi, std::optional<std::size_t> balanced_k) {
  const Graph& g = levi.graph;
  if (levi.colors.size() != g.vertex_count()) throw NotBipartite("colouring does not cover every vertex");
  for (const auto& e : g.edges()) {
    if (levi.colors[e.u] == levi.colors[e.v]) {
      throw NotBipartite("edge " + g.label(e.u) + " -- " + g.label(e.v) + " joins two vertices of one colour");
    }
  }
  std::vector<std::uint32_t> index(g.vertex_count());
  std::vector<std::string> points, lines;
  std::vector<Vertex> line_vertices;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (levi.colors[v] == kBlack) {
      index[v] = static_cast<std::uint32_t>(points.size());
      points.push_back(g.label(v));
    } else {
      index[v] = static_cast<std::uint32_t>(lines.size());
      lines.push_back(g.label(v));
      line_vertices.push_back(v);
    }
  }
  std::vector<std::vector<std::uint32_t>> line_points;
  for (Vertex l : line_vertices) {
    auto& pts = line_points.emplace_back();
    for (Vertex p : g.neighbors(l)) pts.push_back(index[p]);
  }
  Configuration c(std::move(points), std::move(lines), std::move(line_points));
  if (balanced_k) c.require_balanced(*balanced_k);
  return c;
}

ColoredLevi levi(const Configuration& c) {
  const auto v = static_cast<Vertex>(c.point_count());
  std::vector<Edge> edges;
  for (std::uint32_t l = 0; l < c.line_count(); ++l) {
    for (std::uint32_t p : c.points_on(l)) edges.push_back({p, v + l});
  }
  std::vector<std::string> labels = c.point_ids();
  labels.insert(labels.end(), c.line_ids().begin(), c.line_ids().end());
  std::vector<std::uint32_t> colors(c.point_count(), kBlack);
  colors.resize(c.point_count() + c.line_count(), kWhite);
  return {Graph(c.point_count() + c.line_count(), edges, std::move(labels)), std::move(colors)};
}

Configuration dual(const Configuration& c) {
  std::vector<std::vector<std::uint32_t>> line_points;
  for (std::uint32_t p = 0; p < c.point_count(); ++p) line_points.push_back(c.lines_through(p));
  return Configuration(c.line_ids(), c.point_ids(), std::move(line_points));
}

Graph grunbaum(const Configuration& c) { return square(levi(c).graph); }

SplittingType splitting_type_of(bool point_splittable, bool line_splittable) {
  if (point_splittable) return line_splittable ? SplittingType::T1 : SplittingType::T2;
  return line_splittable ? SplittingType::T3 : SplittingType::T4;
}

SplittingType dual_type(SplittingType t) {
  switch (t) {
    case SplittingType::T2:
      return SplittingType::T3;
    case SplittingType::T3:
      return SplittingType::T2;
    default:
      return t;
  }
}

std::string to_string(SplittingType t) {
  switch (t) {
    case SplittingType::T1:
      return "T1";
    case SplittingType::T2:
      return "T2";
    case SplittingType::T3:
      return "T3";
    case SplittingType::T4:
      return "T4";
  }
  return "?";
}

TypeReport classify(const Configuration& c) {
  const ColoredLevi l = levi(c);
  if (l.graph.vertex_count() < 2 || !is_connected(l.graph)) throw DisconnectedLevi("Levi graph is disconnected");
  TypeReport report;
  report.points = find_splitting_set(l.graph, ColorRestriction::black_only, l.colors);
  report.lines = find_splitting_set(l.graph, ColorRestriction::white_only, l.colors);
  report.type = splitting_type_of(report.points.splittable(), report.lines.splittable());
  return report;
}

Configuration read_configuration(std::istream& in) {
  std::vector<std::string> points, lines;
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> line_points;
  std::string text;
  while (std::getline(in, text)) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty() || text.front() == '#') continue;
    std::istringstream tokens(text);
    std::vector<std::uint32_t> pts;
    std::string id;
    while (tokens >> id) {
      auto [it, fresh] = index.try_emplace(id, static_cast<std::uint32_t>(points.size()));
      if (fresh) points.push_back(id);
      pts.push_back(it->second);
    }
    if (pts.empty()) continue;
    lines.push_back("L" + std::to_string(lines.size()));
    line_points.push_back(std::move(pts));
  }
  return Configuration(std::move(points), std::move(lines), std::move(line_points));
}

void write_configuration(std::ostream& out, const Configuration& c) {
  for (std::uint32_t l = 0; l < c.line_count(); ++l) {
    const auto& pts = c.points_on(l);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ' ';
      out << c.point_ids()[pts[i]];
    }
    out << '\n';
  }
}

}  // namespace splitconf
