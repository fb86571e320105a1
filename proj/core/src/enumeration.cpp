#include "clustmax/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "clustmax/canonical.hpp"
#include "clustmax/dense_graph.hpp"
#include "clustmax/error.hpp"

namespace clustmax {

namespace {

struct Plan {
  int target = 0;
  int max_degree = 0;  // hereditary cap applied at every level
  bool regular = false;
  bool connected = false;
};

// A partial graph on m vertices can still grow into an admissible graph on
// plan.target vertices.
bool viable(const DenseGraph& g, const Plan& plan) {
  if (!plan.regular) return true;
  const int remaining = plan.target - g.n;
  int deficit = 0;
  for (int v = 0; v < g.n; ++v) {
    const int missing = plan.max_degree - g.degree(v);
    if (missing > remaining) return false;
    deficit += missing;
  }
  return deficit <= plan.max_degree * remaining;
}

void expand_parent(const AdjacencyCode& parent_code, int m, const Plan& plan,
                   std::vector<AdjacencyCode>& out) {
  const DenseGraph parent = from_adjacency_code(m, parent_code);
  std::uint32_t eligible = 0;
  for (int v = 0; v < m; ++v) {
    if (parent.degree(v) < plan.max_degree) eligible |= 1u << v;
  }
  const int min_size = plan.connected ? 1 : 0;
  // Walk all subsets of `eligible` (including the empty one) via the
  // standard submask recurrence.
  std::uint32_t s = eligible;
  while (true) {
    const int size = std::popcount(s);
    if (size >= min_size && size <= plan.max_degree) {
      DenseGraph child = parent;
      child.n = m + 1;
      for (std::uint32_t rest = s; rest; rest &= rest - 1) child.add_edge(m, std::countr_zero(rest));
      if (viable(child, plan)) out.push_back(canonical_code(child));
    }
    if (s == 0) break;
    s = (s - 1) & eligible;
  }
}

std::vector<AdjacencyCode> next_level(const std::vector<AdjacencyCode>& parents, int m, const Plan& plan,
                                      unsigned threads) {
  std::vector<std::vector<AdjacencyCode>> partial(threads);
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < parents.size(); i += threads) expand_parent(parents[i], m, plan, partial[t]);
    std::sort(partial[t].begin(), partial[t].end());
    partial[t].erase(std::unique(partial[t].begin(), partial[t].end()), partial[t].end());
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::vector<AdjacencyCode> merged;
  for (auto& p : partial) merged.insert(merged.end(), p.begin(), p.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

std::vector<AdjacencyCode> enumerate_codes(int n, const DegreeConstraint& c, const EnumerationOptions& opts) {
  if (n < 1) throw DomainError("enumeration needs n >= 1");
  if (c.degree < 0) throw DomainError("degree parameter must be non-negative");
  const int limit = enumeration_limit(c);
  if (n > limit) {
    throw CapabilityError("enumeration of " + c.describe() + " graphs is limited to n <= " + std::to_string(limit));
  }
  Plan plan;
  plan.target = n;
  plan.max_degree = c.mode == DegreeConstraint::Mode::any ? n - 1 : c.degree;
  plan.regular = c.mode == DegreeConstraint::Mode::regular;
  plan.connected = c.connected;

  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;

  std::vector<AdjacencyCode> level{AdjacencyCode{}};  // K1
  if (!viable(from_adjacency_code(1, level[0]), plan)) level.clear();
  for (int m = 1; m < n && !level.empty(); ++m) level = next_level(level, m, plan, threads);
  if (plan.regular) {
    std::erase_if(level, [&](const AdjacencyCode& code) {
      const DenseGraph g = from_adjacency_code(n, code);
      for (int v = 0; v < n; ++v) {
        if (g.degree(v) != plan.max_degree) return true;
      }
      return false;
    });
  }
  return level;
}

}  // namespace

bool DegreeConstraint::admits(const Graph& g) const {
  if (connected && !is_connected(g)) return false;
  switch (mode) {
    case Mode::any:
      return true;
    case Mode::max_degree:
      return g.max_degree() <= degree;
    case Mode::regular:
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != degree) return false;
      }
      return true;
  }
  return false;
}

std::string DegreeConstraint::describe() const {
  std::string s;
  switch (mode) {
    case Mode::any:
      s = "unconstrained";
      break;
    case Mode::max_degree:
      s = "max-degree-" + std::to_string(degree);
      break;
    case Mode::regular:
      s = std::to_string(degree) + "-regular";
      break;
  }
  return connected ? "connected " + s : s;
}

int enumeration_limit(const DegreeConstraint& c) {
  if (c.mode == DegreeConstraint::Mode::any) return 9;
  if (c.degree <= 3) return 14;
  if (c.degree <= 4) return 11;
  return 9;
}

std::vector<std::string> enumerate_graph6(int n, const DegreeConstraint& c, const EnumerationOptions& opts) {
  const auto codes = enumerate_codes(n, c, opts);
  std::vector<std::string> out;
  out.reserve(codes.size());
  for (const auto& code : codes) out.push_back(graph6_from_code(n, code));
  return out;
}

std::vector<Graph> enumerate(int n, const DegreeConstraint& c, const EnumerationOptions& opts) {
  const auto codes = enumerate_codes(n, c, opts);
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& code : codes) out.push_back(from_adjacency_code(n, code).to_graph());
  return out;
}

std::size_t count(int n, const DegreeConstraint& c, const EnumerationOptions& opts) {
  return enumerate_codes(n, c, opts).size();
}

}  // namespace clustmax
