#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace splitconf {

using Vertex = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Text that failed to parse; `column` is 1-based within the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column, std::size_t line = 1)
      : std::runtime_error(what), column_(column), line_(line) {}
  [[nodiscard]] std::size_t column() const { return column_; }
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t column_;
  std::size_t line_;
};

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Marker for an unbounded girth or diameter (acyclic / disconnected graphs).
struct Infinite {
  friend bool operator==(Infinite, Infinite) = default;
};
inline constexpr Infinite kInfinite{};

/// Either a finite length or `Infinite`.
using Extent = std::variant<std::size_t, Infinite>;

inline bool is_infinite(const Extent& e) { return std::holds_alternative<Infinite>(e); }
std::string to_string(const Extent& e);

/// Sorted set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);
  static VertexSet from_bitset(const Bitset& bits);

  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }
  [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }
  [[nodiscard]] Bitset to_bitset(std::size_t vertex_count) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
///
/// Adjacency is held twice: packed sorted neighbour lists for traversal and bitset
/// rows for set intersections. Optional vertex labels are carried along for
/// certificates and DOT output.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, duplicate edges or endpoints out of range.
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        std::vector<std::string> labels = {});
  Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] std::size_t vertex_count() const { return offsets_.size() - 1; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted.
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  /// Bitset rows are built on first use.
  [[nodiscard]] const Bitset& row(Vertex v) const { return rows()[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  [[nodiscard]] bool is_regular(std::size_t k) const;

  [[nodiscard]] bool has_labels() const { return !labels_.empty(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  /// Label of `v`, or its decimal index when the graph is unlabelled.
  [[nodiscard]] std::string label(Vertex v) const;
  [[nodiscard]] Graph with_labels(std::vector<std::string> labels) const;

  /// Same graph with vertex `v` renamed to `perm[v]`.
  [[nodiscard]] Graph relabeled(std::span<const Vertex> perm) const;
  /// Graph on the same vertices with complemented edge set.
  [[nodiscard]] Graph complement() const;
  /// Subgraph induced by the vertices not in `removed`, reindexed in order.
  [[nodiscard]] Graph without(const VertexSet& removed) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  std::vector<Edge> edges_;  // u < v, sorted
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  struct RowCache {
    std::once_flag once;
    std::vector<Bitset> rows;
  };
  const std::vector<Bitset>& rows() const;
  std::shared_ptr<RowCache> rows_ = std::make_shared<RowCache>();
  std::vector<std::string> labels_;
};

using Partition = std::vector<std::vector<Vertex>>;

/// Components as sorted vertex lists, ordered by smallest member.
Partition connected_components(const Graph& g);
/// Components of g - removed, in the original vertex indexing.
Partition components_without(const Graph& g, const Bitset& removed);
std::size_t component_count_without(const Graph& g, const Bitset& removed);
bool is_connected(const Graph& g);

/// BFS distances from `source`; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);

Extent girth(const Graph& g);
/// Shortest closed walk bound seen from one root. Equals the girth whenever
/// the graph is vertex-transitive.
Extent girth_through(const Graph& g, Vertex root);
Extent diameter(const Graph& g);
Extent radius(const Graph& g);

/// Same vertices, with uv adjacent iff 1 <= d(u,v) <= 2.
Graph square(const Graph& g);

/// Closed balls of radius two: row v holds every vertex within distance 2 of v.
std::vector<Bitset> distance_two_balls(const Graph& g);

/// True iff removing fewer than k vertices never disconnects g and g has
/// more than k vertices. Throws std::invalid_argument when g is disconnected.
bool vertex_connectivity_at_least(const Graph& g, std::size_t k);

bool is_bipartite(const Graph& g);
/// Proper 2-colouring with the smallest vertex of each component coloured 0.
std::optional<std::vector<std::uint32_t>> bipartition(const Graph& g);

/// Graphviz rendering; labels are used when present.
void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");

/// Edge list text: one `u v` pair per line, 0-indexed.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Small named graphs used throughout the tests and the CLI.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph petersen_graph();

}  // namespace splitconf
