#include "splitconf/splittability.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace splitconf {
namespace {

Bitset allowed_vertices(const Graph& g, ColorRestriction restriction, std::span<const std::uint32_t> colors) {
  Bitset allowed(g.vertex_count());
  if (restriction == ColorRestriction::any) {
    allowed.set();
    return allowed;
  }
  if (colors.size() != g.vertex_count()) {
    throw std::invalid_argument("restricted splitting needs a colouring of every vertex");
  }
  const std::uint32_t want = restriction == ColorRestriction::black_only ? kBlack : kWhite;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (colors[v] == want) allowed.set(v);
  }
  return allowed;
}

bool within_distance_two(const Graph& g, Vertex u, Vertex v) {
  if (u == v || g.adjacent(u, v)) return true;
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i == *j) return true;
    *i < *j ? ++i : ++j;
  }
  return false;
}

void require_connected(const Graph& g) {
  if (g.vertex_count() < 2) throw std::invalid_argument("splittability needs at least two vertices");
  if (!is_connected(g)) throw std::invalid_argument("splittability needs a connected graph");
}

SplitReport splittable_report(const Graph& g, const Bitset& sigma, SearchStats stats) {
  SplitReport report;
  report.verdict = Verdict::splittable;
  report.certificate = VertexSet::from_bitset(sigma);
  report.components = components_without(g, sigma);
  report.stats = stats;
  return report;
}

Bitset neighbourhood(const Graph& g, const std::vector<Vertex>& part) {
  Bitset out(g.vertex_count());
  for (Vertex v : part) out |= g.row(v);
  for (Vertex v : part) out.reset(v);
  return out;
}

// Depth-first search for a set S, independent in g^2 and inside `capable`,
// that separates `inside` from every vertex in `targets`. Each node picks a
// path from `inside` to the targets avoiding S with as few capable vertices
// as possible; one of them must join S, and the branches are made disjoint by
// excluding the vertices tried before. A path with no capable vertex ends the
// branch.
class SeparatorSearch {
 public:
  SeparatorSearch(const Graph& g, const std::vector<Bitset>& balls, SearchStats& stats)
      : g_(g),
        balls_(balls),
        stats_(stats),
        parent_(g.vertex_count()),
        cost_(g.vertex_count()),
        stamp_(g.vertex_count(), 0) {}

  std::optional<Bitset> run(Vertex inside, const Bitset& targets, Bitset chosen, Bitset capable) {
    inside_ = inside;
    targets_ = &targets;
    if (dfs(chosen, capable)) return chosen;
    return std::nullopt;
  }

 private:
  bool dfs(Bitset& chosen, Bitset capable) {
    ++stats_.nodes;
    auto path = cheapest_path(chosen, capable);
    if (!path) return true;
    for (Vertex p : *path) {
      chosen.set(p);
      if (dfs(chosen, capable - balls_[p])) return true;
      chosen.reset(p);
      capable.reset(p);
    }
    return false;
  }

  // Capable vertices on a path from `inside` to the nearest target (0-1 BFS,
  // entering a capable vertex costs 1); nullopt if no target is reachable.
  std::optional<std::vector<Vertex>> cheapest_path(const Bitset& chosen, const Bitset& capable) {
    ++epoch_;
    std::deque<Vertex> queue{inside_};
    stamp_[inside_] = epoch_;
    cost_[inside_] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (v != inside_ && targets_->test(v)) {
        std::vector<Vertex> path;
        for (Vertex x = v; x != inside_; x = parent_[x]) {
          if (capable.test(x)) path.push_back(x);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      for (Vertex w : g_.neighbors(v)) {
        if (chosen.test(w)) continue;
        const std::uint32_t c = cost_[v] + (capable.test(w) ? 1 : 0);
        if (stamp_[w] == epoch_ && cost_[w] <= c) continue;
        stamp_[w] = epoch_;
        cost_[w] = c;
        parent_[w] = v;
        if (c == cost_[v]) {
          queue.push_front(w);
        } else {
          queue.push_back(w);
        }
      }
    }
    return std::nullopt;
  }

  const Graph& g_;
  const std::vector<Bitset>& balls_;
  SearchStats& stats_;
  Vertex inside_ = 0;
  const Bitset* targets_ = nullptr;
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> cost_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

// Shrinks a splitting set to a minimal separator contained in it.
Bitset shrink_to_minimal(const Graph& g, const Bitset& sigma, Vertex inside, Vertex outside) {
  auto component_of = [&](const Bitset& removed, Vertex v) {
    for (auto& part : components_without(g, removed)) {
      if (std::binary_search(part.begin(), part.end(), v)) return part;
    }
    throw std::logic_error("vertex missing from components");
  };
  const Bitset first = neighbourhood(g, component_of(sigma, inside));
  return neighbourhood(g, component_of(first, outside));
}

}  // namespace

std::string SplitCheckResult::reason() const {
  switch (status) {
    case SplitCheck::ok:
      return "ok";
    case SplitCheck::out_of_range:
      return "vertex out of range";
    case SplitCheck::not_independent:
      return "not independent in the square: " + std::to_string(clash->first) + " and " +
             std::to_string(clash->second) + " are within distance 2";
    case SplitCheck::not_disconnecting:
      return "removal leaves the graph connected";
  }
  return "unknown";
}

SplitCheckResult verify_splitting_set(const Graph& g, const VertexSet& sigma) {
  SplitCheckResult result;
  for (Vertex v : sigma) {
    if (v >= g.vertex_count()) {
      result.status = SplitCheck::out_of_range;
      return result;
    }
  }
  const auto& m = sigma.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (within_distance_two(g, m[i], m[j])) {
        result.status = SplitCheck::not_independent;
        result.clash = {m[i], m[j]};
        return result;
      }
    }
  }
  result.component_count = component_count_without(g, sigma.to_bitset(g.vertex_count()));
  if (result.component_count < 2) result.status = SplitCheck::not_disconnecting;
  return result;
}

SplitReport find_splitting_set(const Graph& g, ColorRestriction restriction, std::span<const std::uint32_t> colors) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  const Bitset allowed = allowed_vertices(g, restriction, colors);
  const auto balls = distance_two_balls(g);
  SearchStats stats;
  SeparatorSearch search(g, balls, stats);

  // The smallest vertex outside the splitting set is `a0`; every vertex below
  // it lies in the set. Each vertex `b0` is then tried as the first vertex, in
  // order of decreasing distance from a0, that the set cuts off from a0.
  Bitset prefix(n);
  Bitset prefix_reach(n);
  for (Vertex a0 = 0; a0 < n; ++a0) {
    if (a0 > 0) {
      const Vertex last = a0 - 1;
      if (!allowed.test(last) || prefix_reach.test(last)) break;
      prefix.set(last);
      prefix_reach |= balls[last];
    }
    const auto dist = distances_from(g, a0);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return *dist[x] > *dist[y]; });
    Bitset targets(n);
    targets.set(a0);
    const Bitset capable_base = allowed - prefix_reach;
    for (Vertex b0 : order) {
      if (b0 == a0 || prefix.test(b0)) continue;
      ++stats.seeds;
      Bitset capable = capable_base;
      capable.reset(a0);
      capable.reset(b0);
      if (auto sigma = search.run(b0, targets, prefix, capable)) {
        const Bitset minimal = shrink_to_minimal(g, *sigma, b0, a0);
        return splittable_report(g, minimal, stats);
      }
      targets.set(b0);
    }
  }
  SplitReport report;
  report.stats = stats;
  return report;
}

void for_each_minimal_separator(const Graph& g, const std::function<bool(const VertexSet&)>& visit) {
  if (!is_connected(g)) throw std::invalid_argument("minimal separators need a connected graph");
  const std::size_t n = g.vertex_count();
  std::set<std::vector<Vertex>> seen;
  std::deque<Bitset> queue;
  auto close = [&](const Bitset& removed) {
    for (const auto& part : components_without(g, removed)) {
      Bitset sep = neighbourhood(g, part);
      if (sep.none()) continue;
      if (seen.insert(VertexSet::from_bitset(sep).members()).second) queue.push_back(std::move(sep));
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    Bitset closed = g.row(v);
    closed.set(v);
    close(closed);
  }
  while (!queue.empty()) {
    const Bitset sep = std::move(queue.front());
    queue.pop_front();
    if (!visit(VertexSet::from_bitset(sep))) return;
    for (auto x = sep.find_first(); x != Bitset::npos; x = sep.find_next(x)) close(sep | g.row(static_cast<Vertex>(x)));
  }
}

std::vector<VertexSet> minimal_separators(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_minimal_separator(g, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

SplitReport separator_filter_splittable(const Graph& g, ColorRestriction restriction,
                                        std::span<const std::uint32_t> colors) {
  require_connected(g);
  const Bitset allowed = allowed_vertices(g, restriction, colors);
  SearchStats stats;
  std::optional<VertexSet> best;
  for_each_minimal_separator(g, [&](const VertexSet& s) {
    ++stats.separators;
    const bool inside = std::all_of(s.begin(), s.end(), [&](Vertex v) { return allowed.test(v); });
    if (inside && verify_splitting_set(g, s).ok() && (!best || s < *best)) best = s;
    return true;
  });
  if (!best) {
    SplitReport report;
    report.stats = stats;
    return report;
  }
  return splittable_report(g, best->to_bitset(g.vertex_count()), stats);
}

SplitReport brute_force_splittable(const Graph& g, ColorRestriction restriction, std::span<const std::uint32_t> colors,
                                   std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices) {
    throw SizeGuardError("brute-force oracle limited to " + std::to_string(max_vertices) + " vertices");
  }
  require_connected(g);
  const std::size_t n = g.vertex_count();
  const Bitset allowed = allowed_vertices(g, restriction, colors);
  const auto balls = distance_two_balls(g);
  SearchStats stats;
  std::optional<Bitset> found;
  Bitset chosen(n);
  // Each independent set of g^2 is visited once, extending by larger indices only.
  std::function<bool(Vertex, const Bitset&)> extend = [&](Vertex from, const Bitset& blocked) {
    ++stats.nodes;
    if (chosen.any() && components_without(g, chosen).size() > 1) {
      found = chosen;
      return true;
    }
    for (Vertex v = from; v < n; ++v) {
      if (!allowed.test(v) || blocked.test(v)) continue;
      chosen.set(v);
      if (extend(v + 1, blocked | balls[v])) return true;
      chosen.reset(v);
    }
    return false;
  };
  if (extend(0, Bitset(n))) return splittable_report(g, *found, stats);
  SplitReport report;
  report.stats = stats;
  return report;
}

std::string format_certificate(const Graph& g, const VertexSet& sigma) {
  std::string out;
  for (Vertex v : sigma) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out;
}

std::string to_string(ColorRestriction r) {
  switch (r) {
    case ColorRestriction::any:
      return "any";
    case ColorRestriction::black_only:
      return "black_only";
    case ColorRestriction::white_only:
      return "white_only";
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::splittable ? "splittable" : "unsplittable"; }

}  // namespace splitconf
