#include "clustmax/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "clustmax/error.hpp"
#include "clustmax/graph6.hpp"

namespace clustmax {

DenseGraph DenseGraph::from_graph(const Graph& g) {
  if (g.order() > kMaxDenseOrder) {
    throw CapabilityError("order " + std::to_string(g.order()) + " exceeds the dense limit of " +
                          std::to_string(kMaxDenseOrder));
  }
  DenseGraph d;
  d.n = g.order();
  for (auto [u, v] : g.edges()) d.add_edge(u, v);
  return d;
}

Graph DenseGraph::to_graph() const {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

AdjacencyCode adjacency_code(const DenseGraph& g) {
  AdjacencyCode code;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) code.set(pair_bit(i, j));
    }
  }
  return code;
}

DenseGraph from_adjacency_code(int n, const AdjacencyCode& code) {
  DenseGraph g;
  g.n = n;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (code.test(pair_bit(i, j))) g.add_edge(i, j);
    }
  }
  return g;
}

std::string graph6_from_code(int n, const AdjacencyCode& code) {
  const int bits = n * (n - 1) / 2;
  std::string out(1 + static_cast<std::size_t>((bits + 5) / 6), static_cast<char>(63));
  out[0] = static_cast<char>(n + 63);
  for (int b = 0; b < bits; ++b) {
    if (code.test(b)) out[1 + b / 6] = static_cast<char>(out[1 + b / 6] + (1 << (5 - b % 6)));
  }
  return out;
}

namespace {

using Perm = std::array<std::uint8_t, kMaxDenseOrder>;

// Ordered partition of the vertex set; each cell is a bitmask.
struct Partition {
  std::array<std::uint32_t, kMaxDenseOrder> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

class CanonSearch {
 public:
  explicit CanonSearch(const DenseGraph& g) : g_(g) {}

  void run() {
    Partition root;
    if (g_.n > 0) {
      root.cells[0] = (1u << g_.n) - 1;
      root.count = 1;
    }
    refine(root);
    Perm path{};
    search(root, path, 0);
  }

  const AdjacencyCode& best_code() const { return best_; }
  const Perm& best_leaf() const { return best_leaf_; }

 private:
  // Splits cells by neighbor counts into other cells until the partition is
  // equitable. Sub-cells are ordered by ascending count, so the result
  // depends only on the ordered input partition, not on vertex labels.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < p.count && !changed; ++s) {
        const std::uint32_t splitter = p.cells[s];
        for (int i = 0; i < p.count; ++i) {
          const std::uint32_t cell = p.cells[i];
          if (std::has_single_bit(cell)) continue;
          std::array<std::uint32_t, kMaxDenseOrder + 1> by_count{};
          int lo = kMaxDenseOrder + 1;
          int hi = -1;
          for (std::uint32_t rest = cell; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int c = std::popcount(g_.adj[v] & splitter);
            by_count[c] |= 1u << v;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          if (lo == hi) continue;
          std::array<std::uint32_t, kMaxDenseOrder> pieces{};
          int np = 0;
          for (int c = lo; c <= hi; ++c) {
            if (by_count[c]) pieces[np++] = by_count[c];
          }
          std::copy_backward(p.cells.begin() + i + 1, p.cells.begin() + p.count,
                             p.cells.begin() + p.count + np - 1);
          std::copy(pieces.begin(), pieces.begin() + np, p.cells.begin() + i);
          p.count += np - 1;
          changed = true;
          break;
        }
      }
    }
  }

  // Adjacency code restricted to the leading run of singleton cells. Every
  // leaf below this node shares these bits.
  AdjacencyCode prefix_code(const Partition& p, int& prefix_len) const {
    prefix_len = 0;
    while (prefix_len < p.count && std::has_single_bit(p.cells[prefix_len])) ++prefix_len;
    AdjacencyCode code;
    for (int j = 1; j < prefix_len; ++j) {
      const int vj = std::countr_zero(p.cells[j]);
      for (int i = 0; i < j; ++i) {
        if (g_.has_edge(std::countr_zero(p.cells[i]), vj)) code.set(pair_bit(i, j));
      }
    }
    return code;
  }

  static AdjacencyCode mask_prefix(const AdjacencyCode& c, int bits) {
    AdjacencyCode m;
    if (bits >= 128) return c;
    if (bits <= 64) {
      m.hi = bits == 0 ? 0 : c.hi & (~std::uint64_t{0} << (64 - bits));
    } else {
      m.hi = c.hi;
      m.lo = c.lo & (~std::uint64_t{0} << (128 - bits));
    }
    return m;
  }

  void visit_leaf(const Partition& p) {
    Perm leaf{};
    for (int i = 0; i < g_.n; ++i) leaf[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
    AdjacencyCode code;
    for (int j = 1; j < g_.n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (g_.has_edge(leaf[i], leaf[j])) code.set(pair_bit(i, j));
      }
    }
    if (!have_best_ || code < best_) {
      best_ = code;
      best_leaf_ = leaf;
      have_best_ = true;
    } else if (code == best_) {
      Perm gamma{};
      for (int i = 0; i < g_.n; ++i) gamma[best_leaf_[i]] = leaf[i];
      generators_.push_back(gamma);
    }
  }

  void search(Partition p, Perm& path, int depth) {
    if (p.discrete(g_.n)) {
      visit_leaf(p);
      return;
    }
    if (have_best_) {
      int len = 0;
      const AdjacencyCode prefix = prefix_code(p, len);
      const int bits = len * (len - 1) / 2;
      if (mask_prefix(best_, bits) < prefix) return;
    }

    // Target: first smallest non-singleton cell.
    int target = -1;
    int target_size = kMaxDenseOrder + 1;
    for (int i = 0; i < p.count; ++i) {
      const int sz = std::popcount(p.cells[i]);
      if (sz > 1 && sz < target_size) {
        target = i;
        target_size = sz;
      }
    }

    const std::uint32_t cell = p.cells[target];
    std::uint32_t explored = 0;
    std::size_t gens_seen = 0;
    std::array<std::uint8_t, kMaxDenseOrder> orbit{};
    std::iota(orbit.begin(), orbit.begin() + g_.n, std::uint8_t{0});

    for (std::uint32_t rest = cell; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (gens_seen != generators_.size()) {
        update_orbits(orbit, path, depth, gens_seen);
        gens_seen = generators_.size();
      }
      bool equivalent = false;
      for (std::uint32_t e = explored; e; e &= e - 1) {
        if (find(orbit, std::countr_zero(e)) == find(orbit, v)) {
          equivalent = true;
          break;
        }
      }
      if (equivalent) continue;
      explored |= 1u << v;

      Partition child = p;
      std::copy_backward(child.cells.begin() + target + 1, child.cells.begin() + child.count,
                         child.cells.begin() + child.count + 1);
      child.cells[target] = 1u << v;
      child.cells[target + 1] = cell & ~(1u << v);
      ++child.count;
      refine(child);
      path[depth] = static_cast<std::uint8_t>(v);
      search(child, path, depth + 1);
    }
  }

  static int find(std::array<std::uint8_t, kMaxDenseOrder>& parent, int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  // Merges orbits under the generators that fix the current path pointwise.
  void update_orbits(std::array<std::uint8_t, kMaxDenseOrder>& orbit, const Perm& path, int depth,
                     std::size_t from) {
    for (std::size_t k = from; k < generators_.size(); ++k) {
      const Perm& gamma = generators_[k];
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = gamma[path[d]] == path[d];
      if (!fixes) continue;
      for (int v = 0; v < g_.n; ++v) {
        const int a = find(orbit, v);
        const int b = find(orbit, gamma[v]);
        if (a != b) orbit[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
  }

  const DenseGraph& g_;
  AdjacencyCode best_;
  Perm best_leaf_{};
  bool have_best_ = false;
  std::vector<Perm> generators_;
};

}  // namespace

AdjacencyCode canonical_code(const DenseGraph& g) {
  if (g.n > kMaxDenseOrder) throw CapabilityError("order exceeds canonical labeling limit");
  CanonSearch search(g);
  search.run();
  return search.best_code();
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  const DenseGraph dense = DenseGraph::from_graph(g);
  CanonSearch search(dense);
  search.run();
  CanonicalLabeling out;
  out.code = search.best_code();
  out.labeling.resize(static_cast<std::size_t>(g.order()));
  for (int pos = 0; pos < g.order(); ++pos) out.labeling[search.best_leaf()[pos]] = pos;
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  const DenseGraph dense = DenseGraph::from_graph(g);
  return CanonicalForm{graph6_from_code(dense.n, canonical_code(dense))};
}

Graph canonical_graph(const Graph& g) { return g.permuted(canonical_labeling(g).labeling); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace clustmax
