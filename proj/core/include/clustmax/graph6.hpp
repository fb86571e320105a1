#pragma once

#include <string>
#include <string_view>

#include "clustmax/graph.hpp"

namespace clustmax {

// graph6 covers orders 0..62 here (single size byte).
inline constexpr int kMaxGraph6Order = 62;

// Parses one graph6 line. An optional ">>graph6<<" header and trailing
// whitespace are accepted. Throws ParseError on a malformed string.
Graph parse_graph6(std::string_view line);

// Throws ParseError (unsupported) if g.order() > kMaxGraph6Order.
std::string to_graph6(const Graph& g);

}  // namespace clustmax
