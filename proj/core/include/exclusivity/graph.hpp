#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exclusivity/scenario.hpp"

namespace excl {

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Simple undirected graph on vertices 0..n-1, dense adjacency.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : n_(n), adj_(n * n, 0), labels_(n) {}

  std::size_t size() const noexcept { return n_; }

  /// Throws std::out_of_range for bad indices and std::invalid_argument for self-loops.
  void add_edge(std::size_t i, std::size_t j);
  bool has_edge(std::size_t i, std::size_t j) const noexcept {
    return i < n_ && j < n_ && adj_[i * n_ + j] != 0;
  }
  std::size_t degree(std::size_t i) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  std::size_t edge_count() const noexcept;
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  const std::string& label(std::size_t i) const { return labels_.at(i); }
  void set_label(std::size_t i, std::string label) { labels_.at(i) = std::move(label); }

  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::string> labels_;
};

/// Sorted set of distinct vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts; throws std::invalid_argument on duplicates.
  explicit VertexSet(std::vector<std::size_t> members);
  VertexSet(std::initializer_list<std::size_t> members)
      : VertexSet(std::vector<std::size_t>(members)) {}

  std::span<const std::size_t> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t v) const noexcept;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  std::size_t operator[](std::size_t i) const { return members_.at(i); }

  /// True when every member is < n.
  bool fits(std::size_t n) const noexcept { return members_.empty() || members_.back() < n; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::size_t> members_;
};

std::string to_string(const VertexSet& s);

/// i ~ j iff (j - i) mod n or (i - j) mod n is in `offsets`. Offsets must lie in 1..n/2.
Graph circulant(std::size_t n, std::initializer_list<std::size_t> offsets);
Graph circulant(std::size_t n, std::span<const std::size_t> offsets);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

/// OR product: (i,j) ~ (i',j') iff i ~ i' in g or j ~ j' in h. Vertex (i,j)
/// has index i * h.size() + j.
Graph disjunctive_product(const Graph& g, const Graph& h);

/// Vertices are the events (labelled by `labels` when given, else by the
/// event's text form); edges join exclusive pairs. Throws ScenarioError on
/// duplicate events.
Graph build_exclusivity_graph(std::span<const Event> events, const Scenario& scenario,
                              std::span<const std::string> labels = {});
Graph build_exclusivity_graph(const Scenario& scenario);

// Graph file: "n <count>" then "e <i> <j>" lines (0-based), "#" comments.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace excl
