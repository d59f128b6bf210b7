#pragma once

#include "splitconf/graph.hpp"
#include "splitconf/splittability.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace splitconf {

class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
/// Two points on two common lines (a 4-cycle in the Levi graph).
class GirthViolation : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};
class NotBipartite : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};
class NotRegular : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};
class DisconnectedLevi : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

/// Incidence structure of points and lines. Points and lines are indexed
/// 0.. in the order given and carry string identifiers; a line keeps its
/// points in the order it was given.
///
/// Construction validates the raw structure only: identifiers unique and
/// disjoint between points and lines, and no two points on two common lines.
/// Balance is a separate, optional assertion.
class Configuration {
 public:
  Configuration(std::vector<std::string> point_ids, std::vector<std::string> line_ids,
                std::vector<std::vector<std::uint32_t>> line_points);

  [[nodiscard]] std::size_t point_count() const { return point_ids_.size(); }
  [[nodiscard]] std::size_t line_count() const { return line_ids_.size(); }
  [[nodiscard]] const std::vector<std::string>& point_ids() const { return point_ids_; }
  [[nodiscard]] const std::vector<std::string>& line_ids() const { return line_ids_; }
  [[nodiscard]] const std::vector<std::uint32_t>& points_on(std::uint32_t line) const { return line_points_[line]; }
  /// Sorted.
  [[nodiscard]] const std::vector<std::uint32_t>& lines_through(std::uint32_t point) const {
    return point_lines_[point];
  }
  [[nodiscard]] bool incident(std::uint32_t point, std::uint32_t line) const;
  [[nodiscard]] std::size_t incidence_count() const { return incidences_.size(); }
  [[nodiscard]] std::optional<std::uint32_t> find_line(const std::string& id) const;

  /// (v_k): v points, v lines, k lines per point, k points per line.
  [[nodiscard]] bool is_balanced(std::size_t k) const;
  /// Throws NotRegular unless is_balanced(k).
  void require_balanced(std::size_t k) const;
  /// k when the structure is some (v_k), else nullopt.
  [[nodiscard]] std::optional<std::size_t> balanced_order() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.point_ids_ == b.point_ids_ && a.line_ids_ == b.line_ids_ && a.line_points_ == b.line_points_;
  }

 private:
  std::vector<std::string> point_ids_;
  std::vector<std::string> line_ids_;
  std::vector<std::vector<std::uint32_t>> line_points_;
  std::vector<std::vector<std::uint32_t>> point_lines_;
  std::unordered_set<std::uint64_t> incidences_;
};

/// Bipartite graph with points black (kBlack) and lines white (kWhite).
struct ColoredLevi {
  Graph graph;
  std::vector<std::uint32_t> colors;
};

/// Points are the black vertices and lines the white ones, each in index
/// order; identifiers come from the vertex labels. Throws NotBipartite,
/// GirthViolation (girth < 6), or NotRegular when `balanced_k` is given and fails.
Configuration config_from_levi(const ColoredLevi& levi, std::optional<std::size_t> balanced_k = std::nullopt);

/// Points take indices 0..v-1 and lines follow; vertex labels are the identifiers.
ColoredLevi levi(const Configuration& c);

/// Points and lines swapped.
Configuration dual(const Configuration& c);

/// Two elements adjacent iff they are distinct and at distance <= 2 in the Levi graph.
Graph grunbaum(const Configuration& c);

enum class SplittingType { T1, T2, T3, T4 };

/// T1: point- and line-splittable, T2: point only, T3: line only, T4: neither.
SplittingType splitting_type_of(bool point_splittable, bool line_splittable);
/// Type of the dual configuration.
SplittingType dual_type(SplittingType t);
std::string to_string(SplittingType t);

struct TypeReport {
  SplittingType type = SplittingType::T4;
  SplitReport points;
  SplitReport lines;
};

/// Throws DisconnectedLevi when the Levi graph is disconnected.
TypeReport classify(const Configuration& c);
inline SplittingType splitting_type(const Configuration& c) { return classify(c).type; }

/// Text form: one configuration line per text line, listing its points'
/// identifiers separated by single spaces. Lines are named L0, L1, ... in
/// order. Blank lines and lines starting with '#' are skipped on input.
Configuration read_configuration(std::istream& in);
void write_configuration(std::ostream& out, const Configuration& c);

}  // namespace splitconf
