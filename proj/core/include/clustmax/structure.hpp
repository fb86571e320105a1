#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "clustmax/clustering.hpp"
#include "clustmax/graph.hpp"

namespace clustmax {

struct BlockDecomposition {
  // Vertex sets (sorted) of the maximal 2-connected subgraphs and bridges,
  // ordered by their smallest vertex, then lexicographically.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;  // sorted

  // Number of cut vertices in blocks[i].
  int cut_count(std::size_t i) const;
  bool is_endblock(std::size_t i) const { return cut_count(i) <= 1; }
};

enum class BlockKind { K2, K3, Diamond, Other };

std::string_view to_string(BlockKind kind);

// Throws DomainError if g is disconnected.
BlockDecomposition blocks(const Graph& g);

// Throws DomainError if `block` is not the vertex set of a block of g.
BlockKind classify_block(const Graph& g, std::span<const Vertex> block);

// Block kind from the block's own order and size; `block` must be a block.
BlockKind block_kind(const Graph& g, std::span<const Vertex> block);

struct TypeReport {
  GraphType type;
  bool blocks_ok = false;  // every block is K2, K3 or a diamond
};

// Diamond blocks and triangle blocks with two or three vertices of degree 3.
// Defined for any connected graph; blocks_ok flags graphs with other blocks.
TypeReport graph_type(const Graph& g);

// Vertices of degree at most 2 that lie in no triangle.
std::vector<Vertex> s_set(const Graph& g);

// Groups the vertices of a k-regular graph by C(k,2) - triangles_at(u).
// Only non-empty groups appear. Throws DomainError if g is not k-regular.
std::map<int, std::vector<Vertex>> v_partition(const Graph& g, int k);

// Connected subcubic graphs of order >= 6 with all blocks K2/K3/diamond and
// every diamond block an endblock. Throws DomainError for n < 6 or a
// disconnected graph.
bool is_in_b0(const Graph& g);

// is_in_b0 with an extremal type and no vertex in s_set.
bool is_in_b(const Graph& g);

// The literal family: is_in_b0 with an extremal type, ignoring s_set.
bool is_in_b_literal(const Graph& g);

}  // namespace clustmax
