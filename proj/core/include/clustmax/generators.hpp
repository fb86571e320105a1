#pragma once

#include <map>
#include <set>
#include <string_view>

#include "clustmax/clustering.hpp"
#include "clustmax/graph.hpp"

namespace clustmax {

// Graphs by name: "triangle", "diamond", "paw", "K4", "path(N)", "cycle(N)".
// The diamond is K4 minus the edge 2-3; the paw is the triangle 0-1-2 with
// pendant vertex 3 on vertex 0. Throws DomainError for unknown names.
Graph named(std::string_view name);

Graph path_graph(int n);   // n >= 1
Graph cycle_graph(int n);  // n >= 3
Graph complete_graph(int n);

// K_q minus the edge between its last two vertices (q >= 2).
Graph complete_minus_edge(int q);

// K_{a,b}; the part of size a is 0..a-1.
Graph complete_bipartite(int a, int b);

// copies.size() copies of K_{k+1}-e, copy i on the labels
// i(k+1)..i(k+1)+k. Within a copy the two vertices of degree k-1 are the last
// two labels.
//
// The k-regular cyclic chain: the last vertex of copy i is joined to the
// second-to-last vertex of copy i+1 (indices mod l). Needs k >= 3, l >= 2.
Graph regular_chain(int k, int l);

// Connected caveman graph: the last vertex of copy i (degree k-1) is joined to
// the first vertex of copy i+1 (degree k). Needs k >= 2, l >= 2.
Graph caveman(int k, int l);

// caveman(k, l) with the edge from copy 0 to copy 1 removed and the two
// degree-(k-1) vertices of copy 0 joined instead.
Graph caveman_rewired(int k, int l);

enum class EndMark { triangle, diamond };

// A tree (max degree 3) whose leaves become triangle or diamond endblocks and
// whose marked internal vertices become triangles. Every internal vertex of
// degree 2 must be marked.
struct BSkeleton {
  Graph tree;
  std::map<Vertex, EndMark> leaf_marks;
  std::set<Vertex> inner_marks;
};

// Throws DomainError naming the first violated condition.
void validate(const BSkeleton& sk);

// Replaces skeleton vertices by their gadgets; unmarked tree edges between
// gadgets become bridges. Tree vertex order determines the labeling: each
// gadget occupies a consecutive label range.
Graph family_b(const BSkeleton& sk);

// A caterpillar skeleton of type t with k unmarked internal vertices, so that
// family_b(...) has order family_b_order(t, k).
BSkeleton family_b_skeleton(const GraphType& t, int k);

}  // namespace clustmax
