#pragma once

#include "splitconf/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitconf {

/// Colour ids used for point/line restrictions.
inline constexpr std::uint32_t kBlack = 0;
inline constexpr std::uint32_t kWhite = 1;

/// Which vertices a splitting set may use. The restricted modes need a
/// vertex colouring (black = points, white = lines).
enum class ColorRestriction { any, black_only, white_only };

enum class Verdict { splittable, unsplittable };

struct SearchStats {
  std::uint64_t seeds = 0;       // (inside, outside) vertex pairs tried
  std::uint64_t nodes = 0;       // search-tree nodes
  std::uint64_t separators = 0;  // candidate separators inspected
};

/// Outcome of a splittability decision. A splittable report carries a
/// splitting set and the components left after removing it; an unsplittable
/// report means the whole search space was exhausted.
struct SplitReport {
  Verdict verdict = Verdict::unsplittable;
  std::optional<VertexSet> certificate;
  std::optional<Partition> components;
  SearchStats stats;

  [[nodiscard]] bool splittable() const { return verdict == Verdict::splittable; }
};

enum class SplitCheck { ok, out_of_range, not_independent, not_disconnecting };

struct SplitCheckResult {
  SplitCheck status = SplitCheck::ok;
  /// For not_independent: two members at distance <= 2.
  std::optional<std::pair<Vertex, Vertex>> clash;
  std::size_t component_count = 0;

  [[nodiscard]] bool ok() const { return status == SplitCheck::ok; }
  [[nodiscard]] std::string reason() const;
};

/// Checks that members of `sigma` are pairwise at distance >= 3 and that
/// g - sigma is disconnected.
SplitCheckResult verify_splitting_set(const Graph& g, const VertexSet& sigma);

/// Exact decision. Searches for a set independent in g^2 that separates two
/// vertices, then shrinks it to a minimal separator for the certificate.
/// Throws std::invalid_argument if g is disconnected or has < 2 vertices, or
/// if a restricted mode is requested without a colouring.
SplitReport find_splitting_set(const Graph& g, ColorRestriction restriction = ColorRestriction::any,
                               std::span<const std::uint32_t> colors = {});

/// Streams every minimal vertex separator of a connected graph exactly once
/// (every set with at least two full components). Return false from `visit`
/// to stop early.
void for_each_minimal_separator(const Graph& g, const std::function<bool(const VertexSet&)>& visit);
std::vector<VertexSet> minimal_separators(const Graph& g);

/// Decision by filtering the minimal-separator stream; independent of the
/// search in find_splitting_set.
SplitReport separator_filter_splittable(const Graph& g, ColorRestriction restriction = ColorRestriction::any,
                                        std::span<const std::uint32_t> colors = {});

class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultOracleBound = 28;

/// Reference decision: enumerates every independent set of g^2 (within the
/// allowed colour) and tests whether its removal disconnects g.
SplitReport brute_force_splittable(const Graph& g, ColorRestriction restriction = ColorRestriction::any,
                                   std::span<const std::uint32_t> colors = {},
                                   std::size_t max_vertices = kDefaultOracleBound);

/// Vertex labels (e.g. `0+ 6+ 8+ 3- 5- 11-`) in index order, or raw indices.
std::string format_certificate(const Graph& g, const VertexSet& sigma);

std::string to_string(ColorRestriction r);
std::string to_string(Verdict v);

}  // namespace splitconf
