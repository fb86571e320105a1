#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clustmax/graph.hpp"

namespace clustmax {

struct DegreeConstraint {
  enum class Mode { any, max_degree, regular };

  Mode mode = Mode::any;
  int degree = 0;  // Δ for max_degree, k for regular
  bool connected = false;

  static DegreeConstraint any(bool connected = false) { return {Mode::any, 0, connected}; }
  static DegreeConstraint max_degree(int delta, bool connected = false) {
    return {Mode::max_degree, delta, connected};
  }
  static DegreeConstraint regular(int k, bool connected = false) { return {Mode::regular, k, connected}; }

  bool admits(const Graph& g) const;
  std::string describe() const;
};

// Largest order enumerate() accepts for a constraint:
//   max degree / regular <= 3: 14; <= 4: 11; otherwise 9.
int enumeration_limit(const DegreeConstraint& c);

struct EnumerationOptions {
  unsigned threads = 1;  // 0 picks std::thread::hardware_concurrency()
};

// One canonical representative per isomorphism class of graphs of order n
// satisfying c, sorted by canonical graph6.
//
// Graphs are grown one vertex at a time from the classes of order n-1 (with
// the connectivity requirement carried through every level when c.connected
// is set: every connected graph has a vertex whose removal keeps it
// connected). Children are deduplicated by canonical code at each level.
// Throws DomainError for n < 1 and CapabilityError above the limit.
std::vector<Graph> enumerate(int n, const DegreeConstraint& c, const EnumerationOptions& opts = {});

// Same classes as enumerate(), as canonical graph6 strings.
std::vector<std::string> enumerate_graph6(int n, const DegreeConstraint& c,
                                          const EnumerationOptions& opts = {});

std::size_t count(int n, const DegreeConstraint& c, const EnumerationOptions& opts = {});

}  // namespace clustmax
