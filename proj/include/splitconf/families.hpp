#pragma once

#include "splitconf/graph.hpp"
#include "splitconf/haar.hpp"
#include "splitconf/incidence.hpp"
#include "splitconf/splittability.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace splitconf {

/// The residue multisets W and B attached to H(n,{0,a,b}). The splitting set
/// construction applies when each has 12 distinct elements.
struct ConstructionInstance {
  std::uint32_t n = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::vector<std::uint32_t> white;  // W
  std::vector<std::uint32_t> black;  // B

  [[nodiscard]] bool admissible() const;
};

/// Throws std::invalid_argument unless 0 < a < b < n.
ConstructionInstance construction_instance(std::uint32_t n, std::uint32_t a, std::uint32_t b);

/// {0+, 2b+, (2b-2a)+, (b-a)-, (b+a)-, (3b-a)-} as vertices of H(n,{0,a,b})
/// when the instance is admissible.
std::optional<VertexSet> construction_splitting_set(std::uint32_t n, std::uint32_t a, std::uint32_t b);

/// {0,1,4} with n >= 13, {0,1,5} with n >= 16 or {0,2,5} with n >= 16, up to
/// canonical symbol.
bool splittable_family_member(const HaarSymbol& sym);

enum class UnsplittableFamily { F1, F2, F3 };
std::string to_string(UnsplittableFamily f);

/// F1: {0,1,3}, n >= 7. F2: H(3m,{0,1,m}), m >= 2. F3: H(3m,{0,1,m+1}),
/// m >= 4 and 3 does not divide m. Matched up to canonical symbol, in that order.
std::optional<UnsplittableFamily> unsplittable_family_member(const HaarSymbol& sym);

struct GPParams {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
};

/// GP(n,k): inner vertex i has index i (label "i"), outer vertex i' has
/// index n+i (label "i'"). Edges i'--(i+1)', i--i', i--(i+k).
/// Throws std::invalid_argument unless n >= 3 and 1 <= k < n/2.
Graph build_gp(GPParams p);
/// Outer vertices black, inner white.
std::vector<std::uint32_t> gp_coloring(GPParams p);

/// Known splitting sets for GP(12,5) and GP(24,5): outer vertices 0', 4', ...
/// and inner vertices 2, 6, ...
std::optional<VertexSet> gp_splitting_set(GPParams p);

/// Flag-transitive cyclic symbols of girth 6 on n: {0,1,r+1} for every unit
/// r with r^2 + r + 1 = 0 mod n when n >= 11 is odd, the Heawood graph for
/// n = 7 and the Moebius-Kantor graph for n = 8. Canonical and deduplicated.
std::vector<HaarSymbol> flag_transitive_symbols(std::uint32_t n);

/// {0..k-1}^k with the axis-parallel lines; a balanced (k^k)_k
/// configuration. Point ids are the coordinate digits ("012"); line ids put
/// '*' in the free coordinate ("0*2"). Throws SizeGuardError when k > max_k.
Configuration gray_configuration(std::uint32_t k, std::uint32_t max_k = 4);

struct Expansion {
  Configuration configuration;
  /// The new lines M_1..M_k.
  std::vector<std::uint32_t> new_lines;
  /// For each copy i, the copies p_i^(1..k) of the removed line's points.
  std::vector<std::vector<std::uint32_t>> copy_points;
};

/// Removes line `line_id`, takes k copies of the rest and joins the copies of
/// each removed point by a new line. Copy i renames element x to "x@i"; the
/// new lines are "M1".."Mk". Throws std::invalid_argument when the line is
/// unknown and NotRegular when `c` is not balanced.
Expansion expand_along_line(const Configuration& c, const std::string& line_id);

/// One scanned girth-6 class.
struct ScanRow {
  std::uint32_t n = 0;
  HaarSymbol symbol{1, {0}};
  std::size_t girth = 0;
  Verdict verdict = Verdict::unsplittable;
  std::optional<UnsplittableFamily> family;
  std::string certificate;  // formatted splitting set, empty when unsplittable
  bool certificate_verified = true;
  /// Whether the verdict agrees with the conjectured characterization.
  bool agrees = true;
};

struct ScanReport {
  std::vector<ScanRow> rows;

  [[nodiscard]] std::size_t mismatches() const;
  [[nodiscard]] std::size_t unverified_certificates() const;
};

/// Girth-6 cubic classes for n in [n_min, n_max]; a row agrees when it is
/// unsplittable exactly if it belongs to one of the three families.
ScanReport scan_cubic_families(std::uint32_t n_min, std::uint32_t n_max, std::size_t jobs = 1);

/// Girth-6 classes H(n,S) with |S| = k for n in [n_min, n_max]; a row agrees
/// when it is unsplittable. Throws SizeGuardError when n_max > max_n.
ScanReport scan_higher_valency(std::uint32_t k, std::uint32_t n_min, std::uint32_t n_max, std::size_t jobs = 1,
                             std::uint32_t max_n = 24);

/// Tab-separated: n, symbol, girth, verdict, family_tag, certificate.
void write_scan_tsv(std::ostream& out, const ScanReport& report);

}  // namespace splitconf
