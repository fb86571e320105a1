#include "clustmax/clustering.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "clustmax/error.hpp"

namespace clustmax {

namespace {

std::int64_t choose2(std::int64_t d) { return d * (d - 1) / 2; }

void require_vertex(const Graph& g, Vertex u) {
  if (!g.contains(u)) {
    throw GraphError("vertex " + std::to_string(u) + " outside [0," + std::to_string(g.order()) + ")");
  }
}

constexpr std::array<GraphType, 8> kFamilyTypes{{
    {0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 3, 0},
}};

constexpr std::array<GraphType, 7> kExtremalTypes{{
    {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {0, 2, 0}, {0, 3, 0},
}};

struct TypeConstants {
  int base_order;  // order at k = 0; each triangle-free internal vertex adds 4
  int excess;      // C(G) = 7/12 + excess / (12 n)
};

TypeConstants type_constants(const GraphType& t) {
  if (t.i2 == 0 && t.i3 == 0 && t.d <= 2) return {6 + t.d, 14 - 3 * t.d};
  if (t.d == 0) {
    if (t.i2 == 1 && t.i3 == 0) return {9, 13};
    if ((t.i2 == 0 && t.i3 == 1) || (t.i2 == 2 && t.i3 == 0)) return {12, 12};
    if ((t.i2 == 1 && t.i3 == 1) || (t.i2 == 3 && t.i3 == 0)) return {15, 11};
  }
  throw DomainError("type (" + std::to_string(t.d) + "," + std::to_string(t.i2) + "," +
                    std::to_string(t.i3) + ") has no closed form");
}

}  // namespace

Rational local_cc(const Graph& g, Vertex u) {
  require_vertex(g, u);
  const std::int64_t d = g.degree(u);
  if (d < 2) return Rational(0);
  return Rational(BigInt(static_cast<std::int64_t>(triangles_at(g, u))), BigInt(choose2(d)));
}

std::vector<Rational> local_ccs(const Graph& g) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) out.push_back(local_cc(g, u));
  return out;
}

Rational cc_sum(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  Rational sum;
  for (Vertex u : vertices) {
    require_vertex(g, u);
    if (seen[u]) continue;
    seen[u] = true;
    sum += local_cc(g, u);
  }
  return sum;
}

Rational graph_cc(const Graph& g) {
  if (g.order() == 0) throw DomainError("clustering coefficient of the empty graph is undefined");
  Rational sum;
  for (Vertex u = 0; u < g.order(); ++u) sum += local_cc(g, u);
  return sum / Rational(g.order());
}

Rational edge_add_delta(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (g.order() < 3) throw DomainError("edge addition delta needs n >= 3");
  if (u == v) throw DomainError("edge addition needs distinct endpoints");
  if (g.has_edge(u, v)) {
    throw DomainError("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are already adjacent");
  }
  // Only u, v and their common neighbors change their local coefficient.
  const Graph h = g.with_edge(u, v);
  std::vector<Vertex> affected{u, v};
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(affected));
  Rational change;
  for (Vertex w : affected) change += local_cc(h, w) - local_cc(g, w);
  return change / Rational(g.order());
}

Rational regular_cc_bound(int k) {
  if (k < 3) throw DomainError("regular bound needs k >= 3");
  return Rational(1) - Rational(6, std::int64_t{k} * (k + 1));
}

Rational subcubic_cc_bound(int n) {
  if (n < 6) throw DomainError("subcubic bound needs n >= 6");
  static constexpr std::array<int, 4> kExcess{12, 13, 14, 11};
  return Rational(7, 12) + Rational(kExcess[n % 4], 12 * std::int64_t{n});
}

Rational edge_add_bound(int n) {
  if (n < 3) throw DomainError("edge addition bound needs n >= 3");
  const std::int64_t nn = n;
  return Rational(1) - Rational(2, nn) + Rational(4, nn * (nn - 1));
}

std::span<const GraphType> family_b_types() { return kFamilyTypes; }
std::span<const GraphType> extremal_types() { return kExtremalTypes; }

bool is_extremal_type(const GraphType& t) {
  return std::find(kExtremalTypes.begin(), kExtremalTypes.end(), t) != kExtremalTypes.end();
}

int family_b_order(const GraphType& t, int k) {
  if (k < 0) throw DomainError("k must be non-negative");
  return type_constants(t).base_order + 4 * k;
}

Rational family_b_cc(const GraphType& t, int n) {
  const TypeConstants c = type_constants(t);
  if (n < c.base_order || (n - c.base_order) % 4 != 0) {
    throw DomainError("order " + std::to_string(n) + " is not attainable for this type");
  }
  return Rational(7, 12) + Rational(c.excess, 12 * std::int64_t{n});
}

}  // namespace clustmax
