#pragma once

#include "splitconf/graph.hpp"
#include "splitconf/haar.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace splitconf {

/// Per-n counts over connected cubic cyclic Haar graphs:
/// (a) classes, (b) of girth 6, (c) splittable, (d) unsplittable,
/// (e) splittable of girth 6, (f) unsplittable of girth 6.
struct ClassCountRow {
  std::uint32_t n = 0;
  std::size_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  friend bool operator==(const ClassCountRow&, const ClassCountRow&) = default;
};

struct SurveyRow {
  std::uint32_t n = 0;
  HaarSymbol symbol{1, {0}};
  bool splittable = false;
  std::size_t girth = 0;
  std::size_t diameter = 0;
  bool arc_transitive = false;
};

struct RunOptions {
  std::size_t jobs = 1;
  /// Re-decide every graph small enough for the brute-force oracle and
  /// throw OracleMismatch on disagreement.
  bool oracle = false;
};

class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One row per class, ordered by (n, canonical symbol). Throws
/// std::invalid_argument unless 3 <= n_min <= n_max.
std::vector<SurveyRow> compute_survey(std::uint32_t n_min, std::uint32_t n_max, const RunOptions& options = {});
std::vector<ClassCountRow> class_counts_from_survey(const std::vector<SurveyRow>& survey);
std::vector<ClassCountRow> compute_class_counts(std::uint32_t n_min, std::uint32_t n_max, const RunOptions& options = {});

void write_class_counts(std::ostream& out, const std::vector<ClassCountRow>& rows, bool tsv);
void write_survey(std::ostream& out, const std::vector<SurveyRow>& rows, bool tsv);

/// A graph named on the command line, with the colouring used for the
/// configuration view when it is bipartite.
struct NamedGraph {
  std::string name;
  Graph graph;
  std::optional<std::vector<std::uint32_t>> colors;
  /// Splitting set from a known construction, when one applies.
  std::optional<VertexSet> construction;
};

/// `H(n;s1,...)`, `GP(n,k)`, `LCF[a,b,...]^r`, or a path to an edge-list
/// file. Throws ParseError (with column) for malformed specs.
NamedGraph parse_graph_spec(const std::string& spec);

/// Multi-section text report: basic invariants, splittability with
/// certificate, configuration type when the graph is a bipartite girth >= 6
/// Levi graph, and symmetry.
void write_analysis(std::ostream& out, const NamedGraph& g);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  /// Upper end of the {0,1,3} and {0,1,m} prefixes.
  std::uint32_t n_max = 30;
  /// Corrupts one known splitting set to exercise the failure path.
  bool inject_fault = false;
};

std::vector<CheckResult> verify_theorems(const CheckOptions& options = {});
void write_checks(std::ostream& out, const std::vector<CheckResult>& checks);

}  // namespace splitconf
