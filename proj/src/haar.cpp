#include "splitconf/haar.hpp"

#include "cursor.hpp"
#include "splitconf/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace splitconf {
namespace {

std::uint32_t reduce(std::int64_t x, std::uint32_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(((x % m) + m) % m);
}

}  // namespace

HaarSymbol::HaarSymbol(std::uint32_t n, std::span<const std::int64_t> residues) : n_(n) {
  if (n == 0) throw std::invalid_argument("Haar symbol modulus must be positive");
  if (residues.empty()) throw std::invalid_argument("Haar symbol needs at least one residue");
  for (auto r : residues) residues_.push_back(reduce(r, n));
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
}

bool HaarSymbol::contains(std::uint32_t r) const { return std::binary_search(residues_.begin(), residues_.end(), r); }

HaarSymbol HaarSymbol::affine_image(std::uint32_t a, std::uint32_t b) const {
  HaarSymbol out;
  out.n_ = n_;
  out.residues_.reserve(residues_.size());
  for (auto r : residues_) {
    out.residues_.push_back(static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * r + b) % n_));
  }
  std::sort(out.residues_.begin(), out.residues_.end());
  out.residues_.erase(std::unique(out.residues_.begin(), out.residues_.end()), out.residues_.end());
  return out;
}

HaarSymbol HaarSymbol::normalized() const { return affine_image(1, n_ - residues_.front()); }

std::strong_ordering operator<=>(const HaarSymbol& a, const HaarSymbol& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.residues_.begin(), a.residues_.end(), b.residues_.begin(),
                                                b.residues_.end());
}

std::string HaarSymbol::to_string() const {
  std::string out = "H(" + std::to_string(n_) + ";";
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(residues_[i]);
  }
  return out + ")";
}

HaarSymbol HaarSymbol::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.expect("H(");
  const std::size_t n_col = cur.column();
  const auto n = cur.non_negative();
  if (n == 0 || n > UINT32_MAX) throw ParseError("modulus must be a positive 32-bit integer", n_col);
  cur.expect(';');
  std::vector<std::int64_t> residues{cur.non_negative()};
  while (cur.accept(',')) residues.push_back(cur.non_negative());
  cur.expect(')');
  cur.finish();
  return HaarSymbol(static_cast<std::uint32_t>(n), residues);
}

Vertex HaarGraph::plus(std::int64_t i) const { return reduce(i, symbol.n()); }
Vertex HaarGraph::minus(std::int64_t i) const { return symbol.n() + reduce(i, symbol.n()); }

std::string HaarGraph::name(Vertex v) const {
  return is_plus(v) ? std::to_string(v) + "+" : std::to_string(v - symbol.n()) + "-";
}

std::vector<std::uint32_t> HaarGraph::coloring() const {
  std::vector<std::uint32_t> colors(2 * symbol.n(), 1);
  std::fill(colors.begin(), colors.begin() + symbol.n(), 0);
  return colors;
}

HaarGraph build_haar(const HaarSymbol& sym) {
  const std::uint32_t n = sym.n();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * sym.arity());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (auto k : sym.residues()) edges.push_back({i, n + (i + k) % n});
  }
  std::vector<std::string> labels(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    labels[n + i] = labels[i];
    labels[i] += '+';
    labels[n + i] += '-';
  }
  return HaarGraph{sym, Graph(2 * n, edges, std::move(labels))};
}

bool is_connected_haar(const HaarSymbol& sym) {
  const bool bfs = is_connected(build_haar(sym).graph);
  std::uint32_t g = sym.n();
  for (auto s : sym.residues()) g = std::gcd(g, (s + sym.n() - sym.residues().front()) % sym.n());
  if (bfs != (g == 1)) throw std::logic_error("Haar connectivity disagrees with the gcd criterion for " + sym.to_string());
  return bfs;
}

HaarSymbol canonical_symbol(const HaarSymbol& sym) {
  const std::uint32_t n = sym.n();
  HaarSymbol best = sym.normalized();
  for (std::uint32_t a = 1; a <= std::max(n - 1, 1U); ++a) {
    if (std::gcd(a, n) != 1) continue;
    // The least image contains 0, so only translations sending some a*s to 0 matter.
    for (auto s : sym.residues()) {
      const auto b = static_cast<std::uint32_t>((n - (static_cast<std::uint64_t>(a) * s) % n) % n);
      HaarSymbol image = sym.affine_image(a, b);
      if (image < best) best = std::move(image);
    }
  }
  return best;
}

namespace {

// Cheap isomorphism invariants for vertex-transitive graphs.
std::vector<std::size_t> haar_invariant(const Graph& g) {
  std::vector<std::size_t> key;
  key.push_back(is_infinite(girth_through(g, 0)) ? 0 : std::get<std::size_t>(girth_through(g, 0)));
  for (const auto& d : distances_from(g, 0)) {
    const std::size_t level = d ? *d + 1 : 0;
    if (key.size() <= level + 1) key.resize(level + 2, 0);
    ++key[level + 1];
  }
  return key;
}

template <typename Fn>
void for_each_subset_with_zero(std::uint32_t n, std::size_t arity, Fn&& fn) {
  if (arity == 0 || arity > n) return;
  std::vector<std::int64_t> pick(arity, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t from) {
    if (i == arity) {
      fn(pick);
      return;
    }
    for (std::int64_t x = from; x < n; ++x) {
      pick[i] = x;
      rec(i + 1, x + 1);
    }
  };
  rec(1, 1);
}

}  // namespace

std::vector<HaarSymbol> enumerate_haar_classes(std::uint32_t n, std::size_t arity) {
  std::set<HaarSymbol> canonical;
  for_each_subset_with_zero(n, arity, [&](const std::vector<std::int64_t>& residues) {
    HaarSymbol sym(n, residues);
    if (is_connected_haar(sym)) canonical.insert(canonical_symbol(sym));
  });
  std::vector<HaarSymbol> reps(canonical.begin(), canonical.end());
  std::vector<Graph> graphs;
  std::vector<std::vector<std::size_t>> keys;
  for (const auto& sym : reps) {
    graphs.push_back(build_haar(sym).graph);
    keys.push_back(haar_invariant(graphs.back()));
  }
  // Union classes whose graphs are isomorphic; the smallest symbol represents each class.
  std::vector<std::size_t> parent(reps.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t j = 0; j < reps.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (find(i) != i || keys[i] != keys[j]) continue;
      if (find_isomorphism(graphs[i], graphs[j])) {
        parent[j] = i;
        break;
      }
    }
  }
  std::vector<HaarSymbol> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (find(i) == i) out.push_back(reps[i]);
  }
  return out;
}

std::string LcfCode::to_string() const {
  std::string out = "LCF[";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(steps[i]);
  }
  return out + "]^" + std::to_string(repetitions);
}

LcfCode LcfCode::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.expect("LCF[");
  LcfCode code;
  code.steps.push_back(cur.integer());
  while (cur.accept(',')) code.steps.push_back(cur.integer());
  cur.expect(']');
  if (cur.accept('^')) {
    const std::size_t col = cur.column();
    const auto r = cur.non_negative();
    if (r == 0) throw ParseError("repetitions must be positive", col);
    code.repetitions = static_cast<std::size_t>(r);
  }
  cur.finish();
  return code;
}

Graph build_lcf(std::span<const std::int64_t> steps, std::size_t repetitions) {
  const std::size_t count = steps.size() * repetitions;
  if (steps.empty() || repetitions == 0 || count < 3 || count % 2 != 0) {
    throw std::invalid_argument("LCF code needs an even number (>= 4) of vertices");
  }
  const auto n = static_cast<std::int64_t>(count);
  auto chord = [&](std::size_t i) {
    return static_cast<std::size_t>(((static_cast<std::int64_t>(i) + steps[i % steps.size()]) % n + n) % n);
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % count)});
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = chord(i);
    if (j == i) throw LcfError("LCF chord at index " + std::to_string(i) + " is a loop", i);
    if (j == (i + 1) % count || i == (j + 1) % count) {
      throw LcfError("LCF chord at index " + std::to_string(i) + " duplicates a cycle edge", i);
    }
    if (chord(j) != i) {
      throw LcfError("LCF chord at index " + std::to_string(i) + " collides with the chord at " + std::to_string(j), i);
    }
    if (i < j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return Graph(count, edges);
}

}  // namespace splitconf
