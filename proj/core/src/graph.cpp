#include "exclusivity/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "exclusivity/scenario_io.hpp"

namespace excl {

void Graph::add_edge(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_) throw std::out_of_range("edge endpoint out of range");
  if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
  adj_[i * n_ + j] = 1;
  adj_[j * n_ + i] = 1;
}

std::size_t Graph::degree(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("vertex out of range");
  return static_cast<std::size_t>(
      std::count(adj_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                 adj_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_), std::uint8_t{1}));
}

std::vector<std::size_t> Graph::neighbors(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("vertex out of range");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (adj_[i * n_ + j]) out.push_back(j);
  return out;
}

std::size_t Graph::edge_count() const noexcept {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1})) / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (adj_[i * n_ + j]) out.emplace_back(i, j);
  return out;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    c.labels_[i] = labels_[i];
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!has_edge(i, j)) c.add_edge(i, j);
  }
  return c;
}

VertexSet::VertexSet(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("duplicate vertex in vertex set");
}

bool VertexSet::contains(std::size_t v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Graph circulant(std::size_t n, std::span<const std::size_t> offsets) {
  Graph g(n);
  for (std::size_t o : offsets) {
    if (o == 0 || 2 * o > n) throw std::invalid_argument("circulant offset out of 1..n/2");
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + o) % n;
      if (i != j) g.add_edge(i, j);
    }
  }
  return g;
}

Graph circulant(std::size_t n, std::initializer_list<std::size_t> offsets) {
  return circulant(n, std::span<const std::size_t>(offsets.begin(), offsets.size()));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  return circulant(n, {1});
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph disjunctive_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.size();
  const std::size_t nh = h.size();
  Graph p(ng * nh);
  for (std::size_t i = 0; i < ng; ++i) {
    for (std::size_t j = 0; j < nh; ++j) {
      const std::size_t u = i * nh + j;
      if (!g.label(i).empty() || !h.label(j).empty())
        p.set_label(u, g.label(i) + "x" + h.label(j));
      for (std::size_t i2 = 0; i2 < ng; ++i2) {
        for (std::size_t j2 = 0; j2 < nh; ++j2) {
          const std::size_t v = i2 * nh + j2;
          if (v <= u) continue;
          if (g.has_edge(i, i2) || h.has_edge(j, j2)) p.add_edge(u, v);
        }
      }
    }
  }
  return p;
}

Graph build_exclusivity_graph(std::span<const Event> events, const Scenario& scenario,
                              std::span<const std::string> labels) {
  if (!labels.empty() && labels.size() != events.size())
    throw std::invalid_argument("label count does not match event count");
  const std::size_t n = events.size();
  std::vector<Event> closed;
  closed.reserve(n);
  for (const auto& e : events) closed.push_back(scenario.close(e));
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.set_label(i, labels.empty() ? to_string(events[i]) : labels[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (closed[i] == closed[j])
        throw ScenarioError("duplicate event " + to_string(events[i]) + " at positions " +
                            std::to_string(i) + " and " + std::to_string(j));
      if (are_exclusive(events[i], events[j], scenario)) g.add_edge(i, j);
    }
  }
  return g;
}

Graph build_exclusivity_graph(const Scenario& scenario) {
  std::vector<Event> events;
  std::vector<std::string> labels;
  for (const auto& le : scenario.events()) {
    events.push_back(le.event);
    labels.push_back(le.label);
  }
  return build_exclusivity_graph(events, scenario, labels);
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  bool have_n = false;
  Graph g;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "n") {
      long long count = -1;
      if (have_n || !(ls >> count) || count < 0)
        throw ParseError(number, "expected a single 'n <count>' line");
      g = Graph(static_cast<std::size_t>(count));
      have_n = true;
    } else if (keyword == "e") {
      long long i = -1;
      long long j = -1;
      if (!have_n) throw ParseError(number, "edge before 'n <count>'");
      if (!(ls >> i >> j) || i < 0 || j < 0)
        throw ParseError(number, "expected 'e <i> <j>'");
      try {
        g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      } catch (const std::exception& e) {
        throw ParseError(number, e.what());
      }
    } else {
      throw ParseError(number, "unknown line '" + keyword + "'");
    }
    std::string extra;
    if (ls >> extra && extra.front() != '#') throw ParseError(number, "trailing input");
  }
  if (!have_n) throw ParseError(number, "missing 'n <count>' line");
  return g;
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.size() << '\n';
  for (const auto& [i, j] : g.edges()) out << "e " << i << ' ' << j << '\n';
}

}  // namespace excl
