#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace clustmax {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on the vertices 0..n-1.
//
// Neighbor lists are kept sorted and symmetric. A Graph never changes after
// construction; with_edge()/without_edge() return modified copies.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Throws GraphError on out-of-range endpoints or self-loops. Duplicate
  // pairs (in either orientation) collapse into one edge.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }

  int degree(Vertex u) const;
  std::span<const Vertex> neighbors(Vertex u) const;
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex u) const { return u >= 0 && u < order(); }

  int max_degree() const;
  std::vector<int> degree_sequence() const;  // sorted ascending

  // Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  // Relabels vertex v as perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex u) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// m(G[U]): number of edges with both endpoints in U. Throws GraphError if a
// vertex of U is out of range. Repeated vertices in U are counted once.
std::size_t edges_within(const Graph& g, std::span<const Vertex> vertices);

// Number of triangles containing u, i.e. edges_within(g, N(u)).
std::size_t triangles_at(const Graph& g, Vertex u);

// True iff g has at most one connected component.
bool is_connected(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace clustmax
