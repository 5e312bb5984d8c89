#include "exclusivity/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace excl {
namespace {

using Bits = std::uint64_t;

Bits bit(std::size_t v) { return Bits{1} << v; }

int lowest(Bits b) { return std::countr_zero(b); }

void check_size(const Graph& g) {
  if (g.size() > kMaxSearchVertices)
    throw SizeLimitError("graph has " + std::to_string(g.size()) + " vertices; limit is " +
                         std::to_string(kMaxSearchVertices));
}

std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> rows(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.has_edge(i, j)) rows[i] |= bit(j);
  return rows;
}

VertexSet to_set(Bits b) {
  std::vector<std::size_t> out;
  while (b) {
    out.push_back(static_cast<std::size_t>(lowest(b)));
    b &= b - 1;
  }
  return VertexSet(std::move(out));
}

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : adj_(adjacency_bits(g)) {}

  Bits run(Bits all) {
    expand(all, 0, 0);
    return best_;
  }

 private:
  // Number of cliques in a greedy cover of `candidates`; an upper bound on
  // how many of them can be added to an independent set.
  int cover_bound(Bits candidates) const {
    int cliques = 0;
    while (candidates) {
      Bits clique_pool = candidates;
      while (clique_pool) {
        const int v = lowest(clique_pool);
        candidates &= ~bit(static_cast<std::size_t>(v));
        clique_pool &= adj_[static_cast<std::size_t>(v)];
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(Bits candidates, Bits chosen, int chosen_size) {
    if (!candidates) {
      if (chosen_size > best_size_) {
        best_size_ = chosen_size;
        best_ = chosen;
      }
      return;
    }
    if (chosen_size + cover_bound(candidates) <= best_size_) return;
    const auto v = static_cast<std::size_t>(lowest(candidates));
    const Bits rest = candidates & ~bit(v);
    expand(rest & ~adj_[v], chosen | bit(v), chosen_size + 1);
    // Excluding v only pays off if some neighbour of v can be taken instead.
    if (rest & adj_[v]) expand(rest, chosen, chosen_size);
  }

  std::vector<Bits> adj_;
  Bits best_ = 0;
  int best_size_ = -1;
};

void bron_kerbosch(const std::vector<Bits>& adj, Bits r, Bits p, Bits x,
                   std::vector<VertexSet>& out) {
  if (!p && !x) {
    out.push_back(to_set(r));
    return;
  }
  // Pivot: vertex of P ∪ X with most neighbours in P.
  Bits px = p | x;
  std::size_t pivot = static_cast<std::size_t>(lowest(px));
  int best = -1;
  for (Bits scan = px; scan; scan &= scan - 1) {
    const auto u = static_cast<std::size_t>(lowest(scan));
    const int c = std::popcount(p & adj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (Bits todo = p & ~adj[pivot]; todo; todo &= todo - 1) {
    const auto v = static_cast<std::size_t>(lowest(todo));
    bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, std::size_t size) : adj_(adjacency_bits(g)), size_(size) {}

  bool run(Bits uncovered) { return cover(uncovered); }
  std::vector<VertexSet> parts() const {
    std::vector<VertexSet> out;
    for (Bits b : chosen_) out.push_back(to_set(b));
    return out;
  }

 private:
  bool cover(Bits uncovered) {
    if (!uncovered) return true;
    const auto v = static_cast<std::size_t>(lowest(uncovered));
    return extend(bit(v), uncovered & adj_[v], 1, uncovered);
  }

  // Grows a clique containing the lowest uncovered vertex, members in
  // increasing order, then recurses on what is left.
  bool extend(Bits clique, Bits candidates, std::size_t count, Bits uncovered) {
    if (count == size_) {
      chosen_.push_back(clique);
      if (cover(uncovered & ~clique)) return true;
      chosen_.pop_back();
      return false;
    }
    if (static_cast<std::size_t>(std::popcount(candidates)) < size_ - count) return false;
    for (Bits todo = candidates; todo; todo &= todo - 1) {
      const auto u = static_cast<std::size_t>(lowest(todo));
      const Bits higher = ~((bit(u) << 1) - 1);
      if (extend(clique | bit(u), candidates & adj_[u] & higher, count + 1, uncovered))
        return true;
    }
    return false;
  }

  std::vector<Bits> adj_;
  std::size_t size_;
  std::vector<Bits> chosen_;
};

Bits all_vertices(std::size_t n) { return n == 64 ? ~Bits{0} : (bit(n) - 1); }

}  // namespace

bool is_clique(const Graph& g, const VertexSet& s) {
  if (!s.fits(g.size())) throw std::out_of_range("vertex set does not fit the graph");
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!g.has_edge(s[a], s[b])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  if (!s.fits(g.size())) throw std::out_of_range("vertex set does not fit the graph");
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.has_edge(s[a], s[b])) return false;
  return true;
}

IndependentSetResult max_independent_set(const Graph& g) {
  check_size(g);
  if (g.size() == 0) return {};
  IndependentSetSearch search(g);
  const Bits best = search.run(all_vertices(g.size()));
  VertexSet witness = to_set(best);
  return {witness.size(), std::move(witness)};
}

std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g) {
  check_size(g);
  std::vector<VertexSet> out;
  if (g.size() == 0) return out;
  bron_kerbosch(adjacency_bits(g), 0, all_vertices(g.size()), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<VertexSet>> clique_partition_search(const Graph& g, std::size_t parts,
                                                              std::size_t size) {
  check_size(g);
  if (parts * size != g.size())
    throw std::invalid_argument("parts * size must equal the vertex count");
  if (g.size() == 0) return std::vector<VertexSet>{};
  if (size == 0) return std::nullopt;
  PartitionSearch search(g, size);
  if (!search.run(all_vertices(g.size()))) return std::nullopt;
  return search.parts();
}

}  // namespace excl
