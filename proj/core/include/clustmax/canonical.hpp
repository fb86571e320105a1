#pragma once

#include <compare>
#include <string>
#include <vector>

#include "clustmax/dense_graph.hpp"
#include "clustmax/graph.hpp"

namespace clustmax {

// graph6 string of a canonical relabeling. Two graphs have equal forms iff
// they are isomorphic.
struct CanonicalForm {
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  // labeling[v] is the canonical label of input vertex v.
  std::vector<Vertex> labeling;
  AdjacencyCode code;
};

// Canonical labeling by individualization and equitable refinement: the
// search tree's leaf with the smallest adjacency code wins. Automorphisms
// found at equal leaves prune equivalent branches.
// Throws CapabilityError if n > kMaxDenseOrder.
CanonicalLabeling canonical_labeling(const Graph& g);
AdjacencyCode canonical_code(const DenseGraph& g);

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace clustmax
