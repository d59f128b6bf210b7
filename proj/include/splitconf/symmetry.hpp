#pragma once

#include "splitconf/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace splitconf {

/// Image notation: perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

/// Vertex colour classes used to restrict automorphisms and isomorphisms.
using VertexColors = std::vector<std::uint32_t>;

struct AutomorphismGroup {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
};

/// Generators and exact order of Aut(g), or of the colour-preserving
/// subgroup when `colors` is non-empty.
AutomorphismGroup automorphism_group(const Graph& g, std::span<const std::uint32_t> colors = {});

/// A bijection V(g1) -> V(g2) mapping edges onto edges (and, when colourings
/// are supplied, each colour onto the same colour), or nullopt.
std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2,
                                             std::span<const std::uint32_t> colors1 = {},
                                             std::span<const std::uint32_t> colors2 = {});

bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const Vertex> perm);

/// Orbit of `v` under the group generated by `generators`.
std::vector<Vertex> orbit(std::span<const Permutation> generators, Vertex v, std::size_t vertex_count);

bool is_vertex_transitive(const Graph& g);
bool is_arc_transitive(const Graph& g);
/// Aut(g) acts regularly on the vertices (a graphical regular representation).
bool is_zero_symmetric(const Graph& g);

std::string format_permutation(std::span<const Vertex> perm);
Permutation parse_permutation(std::string_view text);

}  // namespace splitconf
