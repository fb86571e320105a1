#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Nothing here calls the code under test except for graph
// construction.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "clustmax/graph.hpp"
#include "clustmax/rational.hpp"

namespace clustmax::oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix(const Graph& g) {
  Matrix m(g.order(), std::vector<char>(g.order(), 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

inline int degree(const Matrix& m, int u) { return static_cast<int>(std::count(m[u].begin(), m[u].end(), 1)); }

// Triangles through u by scanning every pair of other vertices.
inline long triangles_at(const Graph& g, int u) {
  const Matrix m = matrix(g);
  long t = 0;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (a != u && b != u && m[u][a] && m[u][b] && m[a][b]) ++t;
    }
  }
  return t;
}

inline long triangle_count(const Graph& g) {
  const Matrix m = matrix(g);
  long t = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) t += m[a][b] && m[b][c] && m[a][c];
  return t;
}

// Mean local clustering, accumulated as one unreduced fraction.
inline Rational graph_cc(const Graph& g) {
  BigInt num = 0;
  BigInt den = 1;
  const Matrix m = matrix(g);
  for (int u = 0; u < g.order(); ++u) {
    const int d = degree(m, u);
    if (d < 2) continue;
    const BigInt pairs = BigInt(d) * (d - 1) / 2;
    num = num * pairs + BigInt(oracle::triangles_at(g, u)) * den;
    den *= pairs;
  }
  return Rational(num, den * g.order());
}

// Tries all n! bijections.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  const Matrix ma = matrix(a);
  const Matrix mb = matrix(b);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = ma[u][v] == mb[p[u]][p[v]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Blocks as vertex sets: two edges share a block iff they lie on a common
// cycle. For each edge ab, every edge on a simple b-a path avoiding ab is in
// its block.
inline std::set<std::vector<int>> blocks(const Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  std::set<std::vector<int>> out;
  for (auto [a, b] : g.edges()) {
    std::set<int> verts{a, b};
    std::vector<int> path{b};
    std::vector<char> on(n, 0);
    on[b] = 1;
    auto dfs = [&](auto&& self, int x) -> void {
      for (int y = 0; y < n; ++y) {
        if (!m[x][y] || (x == b && y == a)) continue;
        if (y == a) {
          verts.insert(path.begin(), path.end());
          continue;
        }
        if (on[y]) continue;
        on[y] = 1;
        path.push_back(y);
        self(self, y);
        path.pop_back();
        on[y] = 0;
      }
    };
    dfs(dfs, b);
    out.insert(std::vector<int>(verts.begin(), verts.end()));
  }
  return out;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Random spanning tree plus random extra edges.
inline Graph random_connected_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace clustmax::oracle
