#include "clustmax/structure.hpp"

#include <algorithm>
#include <string>

#include "clustmax/error.hpp"

namespace clustmax {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DomainError("graph is not connected");
}

// Iterative Hopcroft-Tarjan with an edge stack.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(static_cast<std::size_t>(g.order()), -1), low_(disc_.size(), 0) {}

  BlockDecomposition run() {
    std::vector<bool> is_cut(disc_.size(), false);
    for (Vertex root = 0; root < g_.order(); ++root) {
      if (disc_[root] >= 0) continue;
      int root_children = 0;
      struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
      };
      std::vector<Frame> stack{{root, -1, 0}};
      disc_[root] = low_[root] = timer_++;
      while (!stack.empty()) {
        Frame& f = stack.back();
        auto nbrs = g_.neighbors(f.v);
        if (f.next < nbrs.size()) {
          const Vertex w = nbrs[f.next++];
          if (w == f.parent) continue;
          if (disc_[w] < 0) {
            edge_stack_.emplace_back(f.v, w);
            disc_[w] = low_[w] = timer_++;
            if (f.v == root) ++root_children;
            stack.push_back({w, f.v, 0});
          } else if (disc_[w] < disc_[f.v]) {
            edge_stack_.emplace_back(f.v, w);
            low_[f.v] = std::min(low_[f.v], disc_[w]);
          }
          continue;
        }
        const Vertex v = f.v;
        const Vertex parent = f.parent;
        stack.pop_back();
        if (parent < 0) continue;
        low_[parent] = std::min(low_[parent], low_[v]);
        if (low_[v] >= disc_[parent]) {
          if (parent != root) is_cut[parent] = true;
          pop_block(parent, v);
        }
      }
      if (root_children > 1) is_cut[root] = true;
    }

    BlockDecomposition out;
    out.blocks = std::move(blocks_);
    std::sort(out.blocks.begin(), out.blocks.end());
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (is_cut[v]) out.cut_vertices.push_back(v);
    }
    return out;
  }

 private:
  void pop_block(Vertex parent, Vertex child) {
    std::vector<Vertex> block;
    while (!edge_stack_.empty()) {
      const Edge e = edge_stack_.back();
      edge_stack_.pop_back();
      block.push_back(e.first);
      block.push_back(e.second);
      if (e == Edge{parent, child}) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    blocks_.push_back(std::move(block));
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  int timer_ = 0;
  std::vector<Edge> edge_stack_;
  std::vector<std::vector<Vertex>> blocks_;
};

std::size_t count_degree(const Graph& g, std::span<const Vertex> vertices, int degree) {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), [&](Vertex v) { return g.degree(v) == degree; }));
}

bool blocks_ok_and_diamonds_end(const Graph& g, const BlockDecomposition& bd) {
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const BlockKind kind = block_kind(g, bd.blocks[i]);
    if (kind == BlockKind::Other) return false;
    if (kind == BlockKind::Diamond && !bd.is_endblock(i)) return false;
  }
  return true;
}

void require_b_domain(const Graph& g) {
  if (g.order() < 6) throw DomainError("family membership needs order at least 6");
  require_connected(g);
}

}  // namespace

int BlockDecomposition::cut_count(std::size_t i) const {
  int count = 0;
  for (Vertex v : blocks.at(i)) {
    if (std::binary_search(cut_vertices.begin(), cut_vertices.end(), v)) ++count;
  }
  return count;
}

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::K2:
      return "K2";
    case BlockKind::K3:
      return "K3";
    case BlockKind::Diamond:
      return "diamond";
    case BlockKind::Other:
      return "other";
  }
  return "other";
}

BlockDecomposition blocks(const Graph& g) {
  require_connected(g);
  return BlockFinder(g).run();
}

BlockKind block_kind(const Graph& g, std::span<const Vertex> block) {
  const std::size_t m = edges_within(g, block);
  // A block is 2-connected (or K2), so order and size pin down these kinds.
  if (block.size() == 2 && m == 1) return BlockKind::K2;
  if (block.size() == 3 && m == 3) return BlockKind::K3;
  if (block.size() == 4 && m == 5) return BlockKind::Diamond;
  return BlockKind::Other;
}

BlockKind classify_block(const Graph& g, std::span<const Vertex> block) {
  std::vector<Vertex> sorted(block.begin(), block.end());
  std::sort(sorted.begin(), sorted.end());
  const BlockDecomposition bd = blocks(g);
  if (std::find(bd.blocks.begin(), bd.blocks.end(), sorted) == bd.blocks.end()) {
    throw DomainError("vertex set is not a block of the graph");
  }
  return block_kind(g, sorted);
}

TypeReport graph_type(const Graph& g) {
  const BlockDecomposition bd = blocks(g);
  TypeReport report;
  report.blocks_ok = true;
  for (const auto& b : bd.blocks) {
    switch (block_kind(g, b)) {
      case BlockKind::Diamond:
        ++report.type.d;
        break;
      case BlockKind::K3: {
        const std::size_t deg3 = count_degree(g, b, 3);
        if (deg3 == 2) ++report.type.i2;
        if (deg3 == 3) ++report.type.i3;
        break;
      }
      case BlockKind::K2:
        break;
      case BlockKind::Other:
        report.blocks_ok = false;
        break;
    }
  }
  return report;
}

std::vector<Vertex> s_set(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= 2 && triangles_at(g, v) == 0) out.push_back(v);
  }
  return out;
}

std::map<int, std::vector<Vertex>> v_partition(const Graph& g, int k) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) throw DomainError("graph is not " + std::to_string(k) + "-regular");
  }
  const int full = k * (k - 1) / 2;
  std::map<int, std::vector<Vertex>> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    out[full - static_cast<int>(triangles_at(g, v))].push_back(v);
  }
  return out;
}

bool is_in_b0(const Graph& g) {
  require_b_domain(g);
  if (g.max_degree() > 3) return false;
  return blocks_ok_and_diamonds_end(g, blocks(g));
}

bool is_in_b_literal(const Graph& g) {
  if (!is_in_b0(g)) return false;
  return is_extremal_type(graph_type(g).type);
}

bool is_in_b(const Graph& g) { return is_in_b_literal(g) && s_set(g).empty(); }

}  // namespace clustmax
