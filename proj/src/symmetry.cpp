#include "splitconf/symmetry.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace splitconf {
namespace {

using Colors = std::vector<std::uint32_t>;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  return h ^ x;
}

std::size_t class_count(const Colors& colors) {
  Colors sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Colour refinement to the coarsest equitable partition finer than `colors`.
// New colour ids are ranks of (old colour, sorted neighbour colours), so they
// do not depend on vertex names; the returned trace lets two searches check
// that they refined identically.
std::vector<std::uint64_t> refine(const Graph& g, Colors& colors) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> trace;
  std::size_t classes = class_count(colors);
  std::vector<std::vector<std::uint32_t>> keys(n);
  std::vector<std::uint32_t> order(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.clear();
      key.push_back(colors[v]);
      for (Vertex w : g.neighbors(v)) key.push_back(colors[w]);
      std::sort(key.begin() + 1, key.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
    std::uint32_t next = 0;
    std::uint64_t h = 0;
    std::size_t run = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && keys[order[i]] != keys[order[i - 1]]) {
        h = mix(h, run);
        ++next;
        run = 0;
      }
      if (run == 0) {
        for (auto x : keys[order[i]]) h = mix(h, x);
      }
      ++run;
      colors[order[i]] = next;
    }
    h = mix(h, run);
    trace.push_back(h);
    const std::size_t now = n == 0 ? 0 : next + 1;
    if (now == classes) break;
    classes = now;
  }
  return trace;
}

// Smallest non-singleton colour class (ties: lowest colour); nullopt if discrete.
std::optional<std::uint32_t> target_cell(const Colors& colors) {
  std::vector<std::uint32_t> sizes(colors.size() + 1, 0);
  for (auto c : colors) ++sizes[c];
  std::optional<std::uint32_t> best;
  for (std::uint32_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] > 1 && (!best || sizes[c] < sizes[*best])) best = c;
  }
  return best;
}

Colors individualize(Colors colors, Vertex v) {
  colors[v] = static_cast<std::uint32_t>(colors.size());
  return colors;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2) {}

  std::optional<Permutation> run(Colors c1, Colors c2) {
    if (refine(g1_, c1) != refine(g2_, c2)) return std::nullopt;
    auto cell = target_cell(c1);
    if (!cell) {
      Permutation perm(c1.size());
      std::vector<Vertex> by_color2(c2.size());
      for (Vertex w = 0; w < c2.size(); ++w) by_color2[c2[w]] = w;
      for (Vertex v = 0; v < c1.size(); ++v) perm[v] = by_color2[c1[v]];
      if (is_isomorphism(g1_, g2_, perm)) return perm;
      return std::nullopt;
    }
    Vertex v = 0;
    while (c1[v] != *cell) ++v;
    Colors left = individualize(c1, v);
    for (Vertex w = 0; w < c2.size(); ++w) {
      if (c2[w] != *cell) continue;
      if (auto found = run(left, individualize(c2, w))) return found;
    }
    return std::nullopt;
  }

 private:
  const Graph& g1_;
  const Graph& g2_;
};

Colors initial_colors(std::size_t n, std::span<const std::uint32_t> colors) {
  if (colors.empty()) return Colors(n, 0);
  if (colors.size() != n) throw std::invalid_argument("colouring size does not match vertex count");
  // Compress to 0..k-1 keeping the numeric order of the given colours.
  Colors sorted(colors.begin(), colors.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors out(n);
  for (std::size_t v = 0; v < n; ++v) {
    out[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), colors[v]) - sorted.begin());
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("automorphism group order exceeds 64 bits");
  return out;
}

class GroupSearch {
 public:
  explicit GroupSearch(const Graph& g) : g_(g), iso_(g, g) {}

  // |stabiliser of the individualised prefix encoded in `colors`|
  std::uint64_t order(Colors colors) {
    refine(g_, colors);
    auto cell = target_cell(colors);
    if (!cell) return 1;
    Vertex v = 0;
    while (colors[v] != *cell) ++v;
    const Colors fixed = individualize(colors, v);
    const std::uint64_t below = order(fixed);
    // Every generator collected so far fixes the current prefix.
    for (Vertex w = 0; w < colors.size(); ++w) {
      if (colors[w] != *cell || w == v) continue;
      auto known = orbit(generators, v, colors.size());
      if (std::binary_search(known.begin(), known.end(), w)) continue;
      if (auto perm = iso_.run(fixed, individualize(colors, w))) generators.push_back(std::move(*perm));
    }
    return checked_mul(orbit(generators, v, colors.size()).size(), below);
  }

  std::vector<Permutation> generators;

 private:
  const Graph& g_;
  IsoSearch iso_;
};

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const Vertex> perm) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  if (perm.size() != g1.vertex_count()) return false;
  std::vector<char> hit(perm.size(), 0);
  for (Vertex image : perm) {
    if (image >= perm.size() || hit[image]) return false;
    hit[image] = 1;
  }
  return std::all_of(g1.edges().begin(), g1.edges().end(),
                     [&](const Edge& e) { return g2.adjacent(perm[e.u], perm[e.v]); });
}

std::vector<Vertex> orbit(std::span<const Permutation> generators, Vertex v, std::size_t vertex_count) {
  std::vector<char> seen(vertex_count, 0);
  std::vector<Vertex> out{v};
  seen[v] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& gen : generators) {
      Vertex w = gen[out[i]];
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AutomorphismGroup automorphism_group(const Graph& g, std::span<const std::uint32_t> colors) {
  GroupSearch search(g);
  AutomorphismGroup group;
  group.order = g.vertex_count() == 0 ? 1 : search.order(initial_colors(g.vertex_count(), colors));
  group.generators = std::move(search.generators);
  return group;
}

std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2, std::span<const std::uint32_t> colors1,
                                            std::span<const std::uint32_t> colors2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (colors1.empty() != colors2.empty()) throw std::invalid_argument("colour both graphs or neither");
  if (!colors1.empty()) {
    // Colour classes must match as labelled multisets before refinement.
    Colors a(colors1.begin(), colors1.end()), b(colors2.begin(), colors2.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::size_t n = g1.vertex_count();
  if (n == 0) return Permutation{};
  // Joint compression keeps equal input colours equal on both sides.
  Colors all(colors1.begin(), colors1.end());
  all.insert(all.end(), colors2.begin(), colors2.end());
  Colors c1(n, 0), c2(n, 0);
  if (!colors1.empty()) {
    Colors joint = initial_colors(2 * n, all);
    std::copy(joint.begin(), joint.begin() + static_cast<std::ptrdiff_t>(n), c1.begin());
    std::copy(joint.begin() + static_cast<std::ptrdiff_t>(n), joint.end(), c2.begin());
  }
  auto perm = IsoSearch(g1, g2).run(std::move(c1), std::move(c2));
  if (perm && !colors1.empty()) {
    for (Vertex v = 0; v < n; ++v) {
      if (colors1[v] != colors2[(*perm)[v]]) throw std::logic_error("isomorphism search broke colour classes");
    }
  }
  return perm;
}

bool is_vertex_transitive(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto group = automorphism_group(g);
  return orbit(group.generators, 0, g.vertex_count()).size() == g.vertex_count();
}

bool is_arc_transitive(const Graph& g) {
  if (g.edge_count() == 0) return false;
  auto group = automorphism_group(g);
  const std::size_t n = g.vertex_count();
  // Arcs (u, v) encoded as u * n + v.
  std::vector<char> seen(n * n, 0);
  std::vector<std::uint64_t> queue{static_cast<std::uint64_t>(g.edges()[0].u) * n + g.edges()[0].v};
  seen[queue[0]] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto u = static_cast<Vertex>(queue[i] / n);
    const auto v = static_cast<Vertex>(queue[i] % n);
    auto push = [&](Vertex a, Vertex b) {
      const auto code = static_cast<std::uint64_t>(a) * n + b;
      if (!seen[code]) {
        seen[code] = 1;
        queue.push_back(code);
      }
    };
    push(v, u);
    for (const auto& gen : group.generators) push(gen[u], gen[v]);
  }
  return queue.size() == 2 * g.edge_count();
}

bool is_zero_symmetric(const Graph& g) {
  auto group = automorphism_group(g);
  if (g.vertex_count() == 0) return false;
  return orbit(group.generators, 0, g.vertex_count()).size() == g.vertex_count() && group.order == g.vertex_count();
}

std::string format_permutation(std::span<const Vertex> perm) {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(perm[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  Permutation perm;
  std::size_t pos = 0;
  while (true) {
    pos = text.find_first_not_of(' ', pos);
    if (pos == std::string_view::npos) break;
    Vertex v{};
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{}) throw ParseError("expected a vertex index", pos + 1);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && text[pos] != ' ') throw ParseError("expected a space", pos + 1);
    perm.push_back(v);
  }
  std::vector<char> hit(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || hit[perm[i]]) throw ParseError("not a permutation", i + 1);
    hit[perm[i]] = 1;
  }
  return perm;
}

}  // namespace splitconf
