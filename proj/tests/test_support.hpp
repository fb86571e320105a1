#pragma once

#include <random>
#include <vector>

#include "clustmax/generators.hpp"

namespace clustmax::testing {

// Random tree of order n with max degree 3 (attach each new vertex to a random
// earlier vertex that still has room).
inline Graph random_subcubic_tree(int n, std::mt19937& rng) {
  std::vector<Edge> edges;
  std::vector<int> deg(n, 0);
  for (int v = 1; v < n; ++v) {
    std::vector<int> room;
    for (int u = 0; u < v; ++u)
      if (deg[u] < 3) room.push_back(u);
    const int u = room[std::uniform_int_distribution<std::size_t>(0, room.size() - 1)(rng)];
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  return Graph::from_edges(n, edges);
}

// A valid skeleton: random leaf gadgets, every degree-2 vertex marked, each
// degree-3 internal vertex marked with probability 1/3.
inline BSkeleton random_skeleton(int n, std::mt19937& rng) {
  BSkeleton sk;
  sk.tree = random_subcubic_tree(n, rng);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution third(1.0 / 3);
  for (Vertex v = 0; v < n; ++v) {
    const int d = sk.tree.degree(v);
    if (d == 1) sk.leaf_marks[v] = coin(rng) ? EndMark::triangle : EndMark::diamond;
    if (d == 2 || (d == 3 && third(rng))) sk.inner_marks.insert(v);
  }
  return sk;
}

}  // namespace clustmax::testing
