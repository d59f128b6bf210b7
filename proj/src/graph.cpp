#include "splitconf/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>

namespace splitconf {

std::string to_string(const Extent& e) {
  if (is_infinite(e)) return "inf";
  return std::to_string(std::get<std::size_t>(e));
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_bitset(const Bitset& bits) {
  std::vector<Vertex> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) out.push_back(static_cast<Vertex>(i));
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

Bitset VertexSet::to_bitset(std::size_t vertex_count) const {
  Bitset b(vertex_count);
  for (Vertex v : members_) {
    if (v >= vertex_count) throw std::out_of_range("vertex set member outside the graph");
    b.set(v);
  }
  return b;
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges, std::vector<std::string> labels)
    : offsets_(vertex_count + 1, 0), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  if (!std::is_sorted(edges_.begin(), edges_.end())) std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v): the smaller neighbours of each vertex come
  // first and in order, then the larger ones.
  for (const Edge& e : edges_) targets_[fill[e.v]++] = e.u;
  for (const Edge& e : edges_) targets_[fill[e.u]++] = e.v;
}

const std::vector<Bitset>& Graph::rows() const {
  std::call_once(rows_->once, [this] {
    rows_->rows.assign(vertex_count(), Bitset(vertex_count()));
    for (const Edge& e : edges_) {
      rows_->rows[e.u].set(e.v);
      rows_->rows[e.v].set(e.u);
    }
  });
  return rows_->rows;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_regular(std::size_t k) const {
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degree(v) != k) return false;
  }
  return true;
}

std::string Graph::label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

Graph Graph::with_labels(std::vector<std::string> labels) const { return Graph(vertex_count(), edges_, std::move(labels)); }

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != vertex_count()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({perm[e.u], perm[e.v]});
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.resize(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v) labels[perm[v]] = labels_[v];
  }
  return Graph(vertex_count(), out, std::move(labels));
}

Graph Graph::complement() const {
  std::vector<Edge> out;
  const auto n = static_cast<Vertex>(vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!adjacent(u, v)) out.push_back({u, v});
    }
  }
  return Graph(n, out, labels_);
}

Graph Graph::without(const VertexSet& removed) const {
  std::vector<Vertex> index(vertex_count(), std::numeric_limits<Vertex>::max());
  std::vector<std::string> labels;
  Vertex next = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (removed.contains(v)) continue;
    index[v] = next++;
    if (!labels_.empty()) labels.push_back(labels_[v]);
  }
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (index[e.u] != std::numeric_limits<Vertex>::max() && index[e.v] != std::numeric_limits<Vertex>::max()) {
      out.push_back({index[e.u], index[e.v]});
    }
  }
  return Graph(next, out, std::move(labels));
}

Partition components_without(const Graph& g, const Bitset& removed) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  Partition parts;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || removed.test(s)) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w] && !removed.test(w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    parts.push_back(std::move(comp));
  }
  return parts;
}

std::size_t component_count_without(const Graph& g, const Bitset& removed) {
  Bitset seen = removed;
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (auto s = (~seen).find_first(); s != Bitset::npos; s = (~seen).find_next(s)) {
    ++count;
    seen.set(s);
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen.test(w)) {
          seen.set(w);
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

Partition connected_components(const Graph& g) { return components_without(g, Bitset(g.vertex_count())); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Extent girth_through(const Graph& g, Vertex root) {
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), kUnseen);
  std::vector<Vertex> parent(g.vertex_count(), root);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  std::size_t best = kUnseen;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    // Any non-tree edge found from here on closes a walk of length >= 2 dist[v].
    if (best != kUnseen && 2 * dist[v] >= best) break;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      } else if (parent[v] != w) {
        best = std::min(best, dist[v] + dist[w] + 1);
      }
    }
  }
  if (best == kUnseen) return kInfinite;
  return best;
}

Extent girth(const Graph& g) {
  Extent best = kInfinite;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Extent here = girth_through(g, v);
    if (!is_infinite(here) && (is_infinite(best) || std::get<std::size_t>(here) < std::get<std::size_t>(best))) {
      best = here;
    }
  }
  return best;
}

namespace {

// Eccentricities of all vertices; nullopt when g is disconnected.
std::optional<std::vector<std::size_t>> eccentricities(const Graph& g) {
  std::vector<std::size_t> ecc(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const auto& d : distances_from(g, v)) {
      if (!d) return std::nullopt;
      ecc[v] = std::max(ecc[v], *d);
    }
  }
  return ecc;
}

}  // namespace

Extent diameter(const Graph& g) {
  if (g.vertex_count() == 0) return std::size_t{0};
  auto ecc = eccentricities(g);
  if (!ecc) return kInfinite;
  return *std::max_element(ecc->begin(), ecc->end());
}

Extent radius(const Graph& g) {
  if (g.vertex_count() == 0) return std::size_t{0};
  auto ecc = eccentricities(g);
  if (!ecc) return kInfinite;
  return *std::min_element(ecc->begin(), ecc->end());
}

std::vector<Bitset> distance_two_balls(const Graph& g) {
  std::vector<Bitset> balls;
  balls.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Bitset ball = g.row(v);
    for (Vertex w : g.neighbors(v)) ball |= g.row(w);
    ball.set(v);
    balls.push_back(std::move(ball));
  }
  return balls;
}

Graph square(const Graph& g) {
  auto balls = distance_two_balls(g);
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (auto w = balls[u].find_next(u); w != Bitset::npos; w = balls[u].find_next(w)) {
      out.push_back({u, static_cast<Vertex>(w)});
    }
  }
  return Graph(g.vertex_count(), out, g.labels());
}

namespace {

bool removal_disconnects(const Graph& g, const std::vector<Vertex>& removed) {
  Bitset mask(g.vertex_count());
  for (Vertex v : removed) mask.set(v);
  return components_without(g, mask).size() > 1;
}

// Visits every subset of 0..n-1 with exactly `size` members; stops when fn returns true.
template <typename Fn>
bool any_subset(std::size_t n, std::size_t size, Fn&& fn) {
  std::vector<Vertex> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<Vertex>(i);
  if (size > n) return false;
  while (true) {
    if (fn(pick)) return true;
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

bool vertex_connectivity_at_least(const Graph& g, std::size_t k) {
  if (!is_connected(g)) throw std::invalid_argument("vertex_connectivity_at_least needs a connected graph");
  if (g.vertex_count() <= k) return false;
  for (std::size_t size = 1; size < k; ++size) {
    if (any_subset(g.vertex_count(), size, [&](const std::vector<Vertex>& s) { return removal_disconnects(g, s); })) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> bipartition(const Graph& g) {
  constexpr std::uint32_t unset = 2;
  std::vector<std::uint32_t> side(g.vertex_count(), unset);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != unset) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == unset) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t max_vertex = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = line.substr(0, hash);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    Vertex ends[2];
    std::size_t pos = 0;
    for (Vertex& end : ends) {
      pos = body.find_first_not_of(" \t", pos);
      if (pos == std::string::npos) throw ParseError("expected two vertex indices", body.size() + 1, line_no);
      const char* first = body.data() + pos;
      const char* last = body.data() + body.size();
      auto [ptr, ec] = std::from_chars(first, last, end);
      if (ec != std::errc{}) throw ParseError("expected a vertex index", pos + 1, line_no);
      pos = static_cast<std::size_t>(ptr - body.data());
    }
    const auto rest = body.find_first_not_of(" \t\r", pos);
    if (rest != std::string::npos) throw ParseError("unexpected trailing text", rest + 1, line_no);
    edges.push_back({ends[0], ends[1]});
    max_vertex = std::max<std::size_t>(max_vertex, std::max(ends[0], ends[1]));
    any = true;
  }
  return Graph(any ? max_vertex + 1 : 0, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, edges);
}

}  // namespace splitconf
