#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clustmax/graph.hpp"
#include "clustmax/rational.hpp"

namespace clustmax {

// One named assertion inside a report.
struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Outcome of one exhaustive verification run.
//
// For the bound reports, `bound` is the claimed maximum and `max_found` the
// largest value seen. For the caveman report, `bound` holds C(caveman) and
// `max_found` C(caveman_rewired); the claim is a strict increase.
struct TheoremReport {
  std::string theorem_id;  // "T1", "T3" (bound plus characterization), "T4", "caveman_rewire"
  std::vector<std::pair<std::string, int>> parameters;
  Rational bound;
  Rational max_found;
  std::vector<std::string> extremal_graphs;   // canonical graph6, sorted
  std::vector<std::string> predicted_graphs;  // canonical graph6, sorted
  bool attained = false;
  bool characterization_ok = false;
  std::size_t graphs_examined = 0;
  std::vector<Check> checks;
  std::map<std::string, std::string> diagnostics;

  bool passed() const;
};

struct VerifyOptions {
  unsigned threads = 1;  // 0 picks std::thread::hardware_concurrency()
};

// Connected k-regular graphs of order n: C(G) <= regular_cc_bound(k), with
// equality exactly when (k+1) | n, and then only at regular_chain(k, n/(k+1)).
// Needs k >= 3 and n >= k + 2.
TheoremReport verify_regular_bound(int k, int n, const VerifyOptions& opts = {});

// Connected subcubic graphs of order n >= 6: C(G) <= subcubic_cc_bound(n),
// and the graphs attaining it are exactly the order-n members of is_in_b().
TheoremReport verify_subcubic_bound(int n, const VerifyOptions& opts = {});

// All graphs of order n >= 3 and all non-adjacent pairs: the edge addition
// delta is at most edge_add_bound(n), with equality only at K_{2,n-2} and its
// two vertices of degree n-2.
TheoremReport verify_edge_add_bound(int n, const VerifyOptions& opts = {});

// C(caveman_rewired(k, l)) > C(caveman(k, l)). Needs k >= 3, l >= 2.
TheoremReport verify_caveman_rewire(int k, int l);

// Structural predicates on a connected subcubic graph, in report order:
// blocks are K2/K3/diamond, diamonds are endblocks, at most two diamonds,
// no vertex in s_set, at most one inner triangle.
std::vector<Check> structural_claims(const Graph& g);

// JSON rendering (single line when indent < 0). Rationals are written as
// {"num": "...", "den": "...", "decimal": "..."}.
std::string report_json(const TheoremReport& report, int indent = -1);

// Block structure summary of one graph for the classify command.
std::string classify_json(const Graph& g);

}  // namespace clustmax
