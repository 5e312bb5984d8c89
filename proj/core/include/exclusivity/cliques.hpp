#pragma once

// Exact clique and independent-set searches on graphs with at most 64 vertices.

#include <cstddef>
#include <optional>
#include <vector>

#include "exclusivity/graph.hpp"

namespace excl {

inline constexpr std::size_t kMaxSearchVertices = 64;

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

struct IndependentSetResult {
  std::size_t size = 0;
  VertexSet witness;
};

/// Exact maximum independent set by branch and bound with a greedy
/// clique-cover bound. Throws SizeLimitError above kMaxSearchVertices.
IndependentSetResult max_independent_set(const Graph& g);

/// All maximal cliques (Bron-Kerbosch with pivoting), sorted lexicographically.
std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g);

/// Partition of all vertices into `parts` disjoint cliques of `size` vertices
/// each, or nullopt when none exists. The first solution in lexicographic
/// branch order is returned. Throws std::invalid_argument unless parts * size == n.
std::optional<std::vector<VertexSet>> clique_partition_search(const Graph& g, std::size_t parts,
                                                              std::size_t size);

}  // namespace excl
