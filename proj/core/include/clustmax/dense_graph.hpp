#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>

#include "clustmax/graph.hpp"

namespace clustmax {

// Largest order handled by canonical labeling and enumeration.
inline constexpr int kMaxDenseOrder = 16;

// Adjacency-bitmask graph for the hot loops of canonical labeling and
// enumeration. Bit v of adj[u] is set iff u and v are adjacent.
struct DenseGraph {
  int n = 0;
  std::array<std::uint32_t, kMaxDenseOrder> adj{};

  static DenseGraph from_graph(const Graph& g);  // CapabilityError if too large
  Graph to_graph() const;

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int u) const { return std::popcount(adj[u]); }
  void add_edge(int u, int v) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;
};

// The upper adjacency triangle in graph6 bit order (b(0,1), b(0,2), b(1,2),
// b(0,3), ...), packed most-significant-bit first into 128 bits. Comparing
// codes compares the corresponding graph6 strings of equal order.
struct AdjacencyCode {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  void set(int bit) {
    if (bit < 64) {
      hi |= std::uint64_t{1} << (63 - bit);
    } else {
      lo |= std::uint64_t{1} << (127 - bit);
    }
  }
  bool test(int bit) const {
    return bit < 64 ? (hi >> (63 - bit)) & 1u : (lo >> (127 - bit)) & 1u;
  }

  friend auto operator<=>(const AdjacencyCode&, const AdjacencyCode&) = default;
};

inline constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

AdjacencyCode adjacency_code(const DenseGraph& g);
DenseGraph from_adjacency_code(int n, const AdjacencyCode& code);
std::string graph6_from_code(int n, const AdjacencyCode& code);

}  // namespace clustmax
