#include <json.hpp>

#include "clustmax/error.hpp"
#include "clustmax/graph6.hpp"
#include "clustmax/harness.hpp"
#include "clustmax/structure.hpp"

namespace clustmax {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r) {
  return Json{{"num", r.num().str()}, {"den", r.den().str()}, {"decimal", r.decimal()}};
}

Json membership(const Graph& g, bool (*test)(const Graph&)) {
  try {
    return test(g);
  } catch (const Error&) {
    return nullptr;  // outside the family's domain (n < 6 or disconnected)
  }
}

}  // namespace

std::string report_json(const TheoremReport& report, int indent) {
  Json params = Json::object();
  for (const auto& [name, value] : report.parameters) params[name] = value;
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  Json diagnostics = Json::object();
  for (const auto& [key, value] : report.diagnostics) diagnostics[key] = value;

  Json j;
  j["theorem_id"] = report.theorem_id;
  j["parameters"] = params;
  j["bound"] = rational_json(report.bound);
  j["max_found"] = rational_json(report.max_found);
  j["extremal_graphs"] = report.extremal_graphs;
  j["predicted_graphs"] = report.predicted_graphs;
  j["attained"] = report.attained;
  j["characterization_ok"] = report.characterization_ok;
  j["graphs_examined"] = report.graphs_examined;
  j["checks"] = checks;
  j["diagnostics"] = diagnostics;
  j["passed"] = report.passed();
  return j.dump(indent);
}

std::string classify_json(const Graph& g) {
  Json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  if (!is_connected(g)) {
    j["connected"] = false;
    j["s_set"] = s_set(g);
    j["error"] = "block structure needs a connected graph";
    return j.dump();
  }
  j["connected"] = true;
  const BlockDecomposition bd = blocks(g);
  Json block_list = Json::array();
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    block_list.push_back({{"vertices", bd.blocks[i]},
                          {"kind", std::string(to_string(block_kind(g, bd.blocks[i])))},
                          {"endblock", bd.is_endblock(i)}});
  }
  j["blocks"] = block_list;
  j["cut_vertices"] = bd.cut_vertices;
  const TypeReport type = graph_type(g);
  j["type"] = {{"d", type.type.d}, {"i2", type.type.i2}, {"i3", type.type.i3}};
  j["blocks_ok"] = type.blocks_ok;
  j["s_set"] = s_set(g);
  j["in_b0"] = membership(g, is_in_b0);
  j["in_b"] = membership(g, is_in_b);
  j["in_b_literal"] = membership(g, is_in_b_literal);
  return j.dump();
}

}  // namespace clustmax
