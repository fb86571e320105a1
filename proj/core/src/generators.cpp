#include "clustmax/generators.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "clustmax/error.hpp"

namespace clustmax {

namespace {

// Appends the edges of K_{q} - e on labels base..base+q-1, missing the edge
// between the last two labels.
void add_complete_minus_edge(std::vector<Edge>& edges, int base, int q) {
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (i == q - 2 && j == q - 1) continue;
      edges.emplace_back(base + i, base + j);
    }
  }
}

void add_clique(std::vector<Edge>& edges, int base, int q) {
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) edges.emplace_back(base + i, base + j);
  }
}

int parse_argument(std::string_view name, std::string_view prefix) {
  // prefix "path" matches "path(7)".
  std::string_view rest = name.substr(prefix.size());
  if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') {
    throw DomainError("expected " + std::string(prefix) + "(N), got '" + std::string(name) + "'");
  }
  rest = rest.substr(1, rest.size() - 2);
  int value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) {
    throw DomainError("bad argument in '" + std::string(name) + "'");
  }
  return value;
}

void require_chain_parameters(int k, int l, int min_k) {
  if (k < min_k || l < 2) {
    throw DomainError("need k >= " + std::to_string(min_k) + " and l >= 2, got k=" + std::to_string(k) +
                      ", l=" + std::to_string(l));
  }
}

}  // namespace

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  if (n < 0) throw DomainError("complete graph needs n >= 0");
  std::vector<Edge> edges;
  add_clique(edges, 0, n);
  return Graph::from_edges(n, edges);
}

Graph named(std::string_view name) {
  if (name == "triangle") return complete_graph(3);
  if (name == "diamond") return complete_minus_edge(4);
  if (name == "paw") return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  if (name == "K4") return complete_graph(4);
  if (name.starts_with("path")) return path_graph(parse_argument(name, "path"));
  if (name.starts_with("cycle")) return cycle_graph(parse_argument(name, "cycle"));
  throw DomainError("unknown graph name '" + std::string(name) + "'");
}

Graph complete_minus_edge(int q) {
  if (q < 2) throw DomainError("K_q - e needs q >= 2");
  std::vector<Edge> edges;
  add_complete_minus_edge(edges, 0, q);
  return Graph::from_edges(q, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("complete bipartite graph needs both parts non-empty");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph::from_edges(a + b, edges);
}

Graph regular_chain(int k, int l) {
  require_chain_parameters(k, l, 3);
  const int q = k + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) add_complete_minus_edge(edges, i * q, q);
  for (int i = 0; i < l; ++i) {
    const int next = (i + 1) % l;
    edges.emplace_back(i * q + k, next * q + k - 1);
  }
  return Graph::from_edges(l * q, edges);
}

Graph caveman(int k, int l) {
  require_chain_parameters(k, l, 2);
  const int q = k + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) add_complete_minus_edge(edges, i * q, q);
  for (int i = 0; i < l; ++i) {
    const int next = (i + 1) % l;
    edges.emplace_back(i * q + k, next * q);
  }
  return Graph::from_edges(l * q, edges);
}

Graph caveman_rewired(int k, int l) {
  const Graph g = caveman(k, l);
  const int q = k + 1;
  return g.without_edge(k, q).with_edge(k - 1, k);
}

void validate(const BSkeleton& sk) {
  const Graph& t = sk.tree;
  const int n = t.order();
  if (n < 2) throw DomainError("skeleton tree needs at least two vertices");
  if (t.size() != static_cast<std::size_t>(n - 1) || !is_connected(t)) {
    throw DomainError("skeleton is not a tree");
  }
  if (t.max_degree() > 3) throw DomainError("skeleton tree has a vertex of degree above 3");
  for (Vertex v = 0; v < n; ++v) {
    const int d = t.degree(v);
    const bool leaf_marked = sk.leaf_marks.contains(v);
    const bool inner_marked = sk.inner_marks.contains(v);
    if (d == 1 && !leaf_marked) throw DomainError("leaf " + std::to_string(v) + " has no mark");
    if (d != 1 && leaf_marked) throw DomainError("vertex " + std::to_string(v) + " is not a leaf");
    if (d == 1 && inner_marked) throw DomainError("leaf " + std::to_string(v) + " cannot carry an inner mark");
    if (d == 2 && !inner_marked) {
      throw DomainError("internal vertex " + std::to_string(v) + " of degree 2 must be marked");
    }
  }
  for (auto [v, mark] : sk.leaf_marks) {
    if (!t.contains(v)) throw DomainError("leaf mark on missing vertex " + std::to_string(v));
  }
  for (Vertex v : sk.inner_marks) {
    if (!t.contains(v)) throw DomainError("inner mark on missing vertex " + std::to_string(v));
  }
}

Graph family_b(const BSkeleton& sk) {
  validate(sk);
  const Graph& t = sk.tree;
  const int tn = t.order();

  std::vector<Edge> edges;
  // attach[v][j] is the gadget vertex carrying the j-th tree edge of v.
  std::vector<std::vector<Vertex>> attach(static_cast<std::size_t>(tn));
  int next = 0;
  for (Vertex v = 0; v < tn; ++v) {
    const int d = t.degree(v);
    if (auto it = sk.leaf_marks.find(v); it != sk.leaf_marks.end()) {
      if (it->second == EndMark::triangle) {
        add_clique(edges, next, 3);
        attach[v] = {next};
        next += 3;
      } else {
        add_complete_minus_edge(edges, next, 4);
        attach[v] = {next + 3};  // a degree-2 diamond vertex
        next += 4;
      }
    } else if (sk.inner_marks.contains(v)) {
      add_clique(edges, next, 3);
      for (int j = 0; j < d; ++j) attach[v].push_back(next + j);
      next += 3;
    } else {
      attach[v].assign(static_cast<std::size_t>(d), next);
      next += 1;
    }
  }
  for (auto [u, v] : t.edges()) {
    auto nu = t.neighbors(u);
    auto nv = t.neighbors(v);
    const auto ju = std::lower_bound(nu.begin(), nu.end(), v) - nu.begin();
    const auto jv = std::lower_bound(nv.begin(), nv.end(), u) - nv.begin();
    edges.emplace_back(attach[u][ju], attach[v][jv]);
  }
  return Graph::from_edges(next, edges);
}

BSkeleton family_b_skeleton(const GraphType& t, int k) {
  family_b_order(t, k);  // rejects illegal types

  // Spine roles: 2 = marked degree-2, 3 = marked degree-3, 0 = unmarked degree-3.
  std::vector<int> roles;
  roles.insert(roles.end(), static_cast<std::size_t>(t.i2), 2);
  roles.insert(roles.end(), static_cast<std::size_t>(t.i3), 3);
  roles.insert(roles.end(), static_cast<std::size_t>(k), 0);

  const int spine = static_cast<int>(roles.size());
  std::vector<Edge> edges;
  std::vector<Vertex> leaves;
  int next = spine;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  const Vertex first_leaf = next++;
  const Vertex last_leaf = next++;
  leaves = {first_leaf, last_leaf};
  if (spine == 0) {
    edges.emplace_back(first_leaf, last_leaf);
  } else {
    edges.emplace_back(first_leaf, 0);
    edges.emplace_back(spine - 1, last_leaf);
  }
  for (int i = 0; i < spine; ++i) {
    if (roles[i] == 2) continue;
    edges.emplace_back(i, next);
    leaves.push_back(next++);
  }

  BSkeleton sk;
  sk.tree = Graph::from_edges(next, edges);
  for (std::size_t j = 0; j < leaves.size(); ++j) {
    sk.leaf_marks[leaves[j]] = static_cast<int>(j) < t.d ? EndMark::diamond : EndMark::triangle;
  }
  for (int i = 0; i < spine; ++i) {
    if (roles[i] != 0) sk.inner_marks.insert(i);
  }
  return sk;
}

}  // namespace clustmax
