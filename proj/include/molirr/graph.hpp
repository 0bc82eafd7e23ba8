#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "molirr/rational.hpp"

namespace molirr {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, stored as sorted neighbor
/// lists in a compressed (offset + flat array) layout. Immutable once built;
/// every transform returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Validating constructor. Rejects self-loops, out-of-range endpoints and
  /// repeated pairs (in either orientation).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;

  /// Canonical edge list: u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

/// Degree multiset of a graph: counts[i] is the number of vertices of degree i.
struct DegreeSequence {
  std::map<std::size_t, std::size_t> counts;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  std::size_t degree_sum = 0;  // 2m
  Rational mean_degree;

  /// Builds from a degree -> count histogram; zero counts are dropped.
  /// Throws EmptyGraph when the histogram covers no vertex.
  static DegreeSequence from_counts(std::map<std::size_t, std::size_t> counts);
};

DegreeSequence degree_sequence(const Graph& g);

/// Number of edges per unordered pair of endpoint degrees (low, high).
using EdgeClassCounts = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;
EdgeClassCounts edge_class_counts(const Graph& g);

bool is_connected(const Graph& g);

/// Vertex (i, j) maps to i * h.order() + j.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Originals keep labels 0..n-1, the shadow of v is n + v and the apex is 2n.
Graph mycielski(const Graph& g);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

// Edge-list interchange: "n m" then m lines "u v" with u < v, ascending.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace molirr
