#pragma once

#include "splitconf/graph.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace splitconf {

/// The pair (n, S) with S a non-empty set of residues mod n.
class HaarSymbol {
 public:
  /// Residues are reduced mod n and deduplicated; throws std::invalid_argument
  /// on n = 0 or an empty residue list.
  HaarSymbol(std::uint32_t n, std::span<const std::int64_t> residues);
  HaarSymbol(std::uint32_t n, std::initializer_list<std::int64_t> residues)
      : HaarSymbol(n, std::span<const std::int64_t>(residues.begin(), residues.size())) {}

  [[nodiscard]] std::uint32_t n() const { return n_; }
  [[nodiscard]] const std::vector<std::uint32_t>& residues() const { return residues_; }
  [[nodiscard]] std::size_t arity() const { return residues_.size(); }
  [[nodiscard]] bool contains(std::uint32_t r) const;

  /// Translate so that the smallest residue becomes 0.
  [[nodiscard]] HaarSymbol normalized() const;
  /// a*S + b mod n.
  [[nodiscard]] HaarSymbol affine_image(std::uint32_t a, std::uint32_t b) const;

  /// `H(n;s1,...,sk)` with residues ascending.
  [[nodiscard]] std::string to_string() const;
  static HaarSymbol parse(std::string_view text);

  friend bool operator==(const HaarSymbol&, const HaarSymbol&) = default;
  friend std::strong_ordering operator<=>(const HaarSymbol& a, const HaarSymbol& b);

 private:
  HaarSymbol() = default;
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> residues_;
};

/// H(n,S): vertex i+ has index i, vertex i- has index n+i; edge i+ -- (i+k)- for k in S.
struct HaarGraph {
  HaarSymbol symbol;
  Graph graph;

  [[nodiscard]] Vertex plus(std::int64_t i) const;
  [[nodiscard]] Vertex minus(std::int64_t i) const;
  [[nodiscard]] bool is_plus(Vertex v) const { return v < symbol.n(); }
  /// `i+` or `i-`.
  [[nodiscard]] std::string name(Vertex v) const;
  /// Black (0) for the plus side, white (1) for the minus side.
  [[nodiscard]] std::vector<std::uint32_t> coloring() const;
};

HaarGraph build_haar(const HaarSymbol& sym);

/// BFS connectivity, cross-checked against gcd(n, differences of S) = 1.
bool is_connected_haar(const HaarSymbol& sym);

/// Lexicographically least member of {a*S + b : a a unit mod n, b in Z_n}.
HaarSymbol canonical_symbol(const HaarSymbol& sym);

/// One canonical representative per isomorphism class of connected cyclic
/// Haar graphs H(n,S) with |S| = arity, sorted ascending. Symbol orbits are
/// only a pre-filter: classes are merged by the graph isomorphism search.
std::vector<HaarSymbol> enumerate_haar_classes(std::uint32_t n, std::size_t arity = 3);

/// Cubic graph from LCF notation.
struct LcfCode {
  std::vector<std::int64_t> steps;
  std::size_t repetitions = 1;

  [[nodiscard]] std::string to_string() const;  // LCF[a,b,...]^r
  static LcfCode parse(std::string_view text);
};

class LcfError : public std::invalid_argument {
 public:
  LcfError(const std::string& what, std::size_t index) : std::invalid_argument(what), index_(index) {}
  /// Vertex on the Hamiltonian cycle whose chord is malformed.
  [[nodiscard]] std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Hamiltonian cycle 0..N-1 (N = steps * repetitions) plus chord i -- i + s[i mod L].
/// Throws LcfError on a loop, a chord doubling a cycle edge, or chords that disagree.
Graph build_lcf(std::span<const std::int64_t> steps, std::size_t repetitions);
inline Graph build_lcf(const LcfCode& code) { return build_lcf(code.steps, code.repetitions); }

}  // namespace splitconf
