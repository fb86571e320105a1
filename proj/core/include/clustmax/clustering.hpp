#pragma once

#include <span>
#include <vector>

#include "clustmax/graph.hpp"
#include "clustmax/rational.hpp"

namespace clustmax {

// (d, i2, i3): diamond blocks, and triangle blocks with exactly two or three
// vertices of degree 3.
struct GraphType {
  int d = 0;
  int i2 = 0;
  int i3 = 0;

  friend auto operator<=>(const GraphType&, const GraphType&) = default;
};

// C_u(G) = m(G[N(u)]) / C(d(u), 2) for d(u) >= 2, else 0.
Rational local_cc(const Graph& g, Vertex u);

// All local coefficients, indexed by vertex.
std::vector<Rational> local_ccs(const Graph& g);

// C(G): mean of local_cc over all vertices. Throws DomainError for n = 0.
Rational graph_cc(const Graph& g);

// Sum of local_cc over `vertices` (each listed vertex counted once).
Rational cc_sum(const Graph& g, std::span<const Vertex> vertices);

// C(G + uv) - C(G). Throws DomainError if u == v, u and v are adjacent, or
// n < 3.
Rational edge_add_delta(const Graph& g, Vertex u, Vertex v);

// Upper bound on C(G) for connected k-regular G of order >= k + 2.
Rational regular_cc_bound(int k);

// Upper bound on C(G) for connected subcubic G of order n >= 6.
Rational subcubic_cc_bound(int n);

// Upper bound on C(G + uv) - C(G) over graphs of order n >= 3.
Rational edge_add_bound(int n);

// Types whose members are built by family_b (the extremal seven plus the
// diamond pair (2,0,0)).
std::span<const GraphType> family_b_types();

// The seven types attaining the subcubic bound.
std::span<const GraphType> extremal_types();
bool is_extremal_type(const GraphType& t);

// Order of a type-t graph with k triangle-free internal vertices.
// Throws DomainError for a type outside family_b_types() or k < 0.
int family_b_order(const GraphType& t, int k);

// Closed-form C(G) of a type-t graph of order n. Throws DomainError unless
// n == family_b_order(t, k) for some k >= 0.
Rational family_b_cc(const GraphType& t, int n);

}  // namespace clustmax
