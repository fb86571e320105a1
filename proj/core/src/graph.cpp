#include "clustmax/graph.hpp"

#include <algorithm>
#include <string>

#include "clustmax/error.hpp"

namespace clustmax {

namespace {

void insert_sorted(std::vector<Vertex>& list, Vertex v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

void erase_sorted(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) list.erase(it);
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice_m = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice_m += list.size();
  }
  g.edge_count_ = twice_m / 2;
  return g;
}

void Graph::check_vertex(Vertex u) const {
  if (!contains(u)) {
    throw GraphError("vertex " + std::to_string(u) + " outside [0," + std::to_string(order()) + ")");
  }
}

int Graph::degree(Vertex u) const {
  check_vertex(u);
  return static_cast<int>(adj_[u].size());
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return adj_[u];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return static_cast<int>(best);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq;
  seq.reserve(adj_.size());
  for (const auto& list : adj_) seq.push_back(static_cast<int>(list.size()));
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  if (has_edge(u, v)) return g;
  insert_sorted(g.adj_[u], v);
  insert_sorted(g.adj_[v], u);
  ++g.edge_count_;
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  if (u == v || !has_edge(u, v)) return g;
  erase_sorted(g.adj_[u], v);
  erase_sorted(g.adj_[v], u);
  --g.edge_count_;
  return g;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != adj_.size()) throw GraphError("permutation size does not match order");
  std::vector<bool> seen(adj_.size(), false);
  for (Vertex p : perm) {
    check_vertex(p);
    if (seen[p]) throw GraphError("not a permutation");
    seen[p] = true;
  }
  Graph g(order());
  for (Vertex u = 0; u < order(); ++u) {
    auto& list = g.adj_[perm[u]];
    for (Vertex v : adj_[u]) list.push_back(perm[v]);
    std::sort(list.begin(), list.end());
  }
  g.edge_count_ = edge_count_;
  return g;
}

std::size_t edges_within(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> in_set(static_cast<std::size_t>(g.order()), false);
  for (Vertex u : vertices) {
    if (!g.contains(u)) {
      throw GraphError("vertex " + std::to_string(u) + " outside [0," + std::to_string(g.order()) + ")");
    }
    in_set[u] = true;
  }
  std::size_t count = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!in_set[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (u < v && in_set[v]) ++count;
    }
  }
  return count;
}

std::size_t triangles_at(const Graph& g, Vertex u) {
  auto nbrs = g.neighbors(u);
  std::size_t count = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    auto ni = g.neighbors(nbrs[i]);
    // Both lists are sorted: count common members greater than nbrs[i].
    auto a = std::upper_bound(nbrs.begin(), nbrs.end(), nbrs[i]);
    auto b = std::upper_bound(ni.begin(), ni.end(), nbrs[i]);
    while (a != nbrs.end() && b != ni.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
  }
  return count;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace clustmax
