#include "clustmax/graph6.hpp"

#include <vector>

#include "clustmax/error.hpp"

namespace clustmax {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw ParseError("graph6: empty input");
  for (char ch : line) {
    const int c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126");
  }
  const int size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte == 126) throw ParseError("graph6: orders above 62 are not supported");
  const int n = size_byte - kBias;
  const std::string_view body = line.substr(1);
  if (body.size() != body_length(n)) {
    throw ParseError("graph6: expected " + std::to_string(body_length(n)) + " data bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(body.size()));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(body[bit / 6]) - kBias;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; bit < body.size() * 6; ++bit) {
    const int byte = static_cast<unsigned char>(body[bit / 6]) - kBias;
    if ((byte >> (5 - bit % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGraph6Order));
  }
  std::string out(1 + body_length(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(n + kBias);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out;
}

}  // namespace clustmax
