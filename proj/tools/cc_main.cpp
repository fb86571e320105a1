// cc: exact clustering coefficients, graph families, block structure,
// isomorph-free enumeration and exhaustive bound verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "clustmax/clustmax.hpp"

namespace {

using namespace clustmax;

// Feeds each non-empty graph6 line of `source` ("-" for stdin) to `fn`.
// Returns false if the file cannot be opened or any line fails.
bool for_each_graph(const std::string& source, const std::function<void(const Graph&)>& fn) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (source != "-") {
    file.open(source);
    if (!file) {
      std::cerr << "cc: cannot open " << source << "\n";
      return false;
    }
    in = &file;
  }
  bool ok = true;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(parse_graph6(line));
    } catch (const Error& e) {
      std::cerr << "cc: line " << line_no << ": " << e.what() << "\n";
      ok = false;
    }
  }
  return ok;
}

std::string value_text(const Rational& r) { return r.str() + " " + r.decimal(); }

BSkeleton read_skeleton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open skeleton file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("skeleton: ") + e.what());
  }
  try {
    std::vector<Edge> edges;
    int n = 0;
    for (const auto& e : doc.at("edges")) {
      const int u = e.at(0).get<int>();
      const int v = e.at(1).get<int>();
      edges.emplace_back(u, v);
      n = std::max({n, u + 1, v + 1});
    }
    if (doc.contains("n")) n = doc["n"].get<int>();
    BSkeleton sk;
    sk.tree = Graph::from_edges(n, edges);
    for (const auto& [key, mark] : doc.at("leaf_marks").items()) {
      const std::string m = mark.get<std::string>();
      if (m != "triangle" && m != "diamond") throw ParseError("skeleton: unknown leaf mark '" + m + "'");
      sk.leaf_marks[std::stoi(key)] = m == "triangle" ? EndMark::triangle : EndMark::diamond;
    }
    if (doc.contains("inner_marks")) {
      for (const auto& v : doc["inner_marks"]) sk.inner_marks.insert(v.get<int>());
    }
    return sk;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("skeleton: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("skeleton: leaf_marks keys must be vertex numbers");
  }
}

void print_report(const TheoremReport& r, bool json) {
  if (json) {
    std::cout << report_json(r) << "\n";
    return;
  }
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.theorem_id;
  for (const auto& [name, value] : r.parameters) std::cout << " " << name << "=" << value;
  std::cout << " max=" << r.max_found.str() << " bound=" << r.bound.str()
            << (r.attained ? " attained" : " not-attained") << " graphs=" << r.graphs_examined << "\n";
  for (const auto& g6 : r.extremal_graphs) std::cout << "  extremal " << g6 << "\n";
  for (const auto& c : r.checks) {
    std::cout << "  [" << (c.ok ? "ok" : "FAILED") << "] " << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  for (const auto& [key, value] : r.diagnostics) std::cout << "  " << key << ": " << value << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact clustering coefficients and extremal-graph verification"};
  app.require_subcommand(1);
  int status = 0;

  // compute
  auto* compute = app.add_subcommand("compute", "C(G) for each graph6 line");
  bool per_vertex = false;
  std::string compute_in = "-";
  compute->add_flag("--per-vertex", per_vertex, "Also print C_u(G) for every vertex");
  compute->add_option("input", compute_in, "graph6 file, - for stdin");
  compute->callback([&] {
    const bool ok = for_each_graph(compute_in, [&](const Graph& g) {
      const Rational c = graph_cc(g);
      std::cout << to_graph6(g) << " " << value_text(c) << "\n";
      if (per_vertex) {
        const auto locals = local_ccs(g);
        for (Vertex u = 0; u < g.order(); ++u) std::cout << "  " << u << " " << value_text(locals[u]) << "\n";
      }
    });
    if (!ok) status = 1;
  });

  // delta
  auto* delta = app.add_subcommand("delta", "C(G+uv) - C(G) for each graph6 line");
  int du = 0;
  int dv = 0;
  std::string delta_in = "-";
  delta->add_option("-u", du, "First endpoint")->required();
  delta->add_option("-v", dv, "Second endpoint")->required();
  delta->add_option("input", delta_in, "graph6 file, - for stdin");
  delta->callback([&] {
    const bool ok = for_each_graph(delta_in, [&](const Graph& g) {
      std::cout << to_graph6(g) << " " << value_text(edge_add_delta(g, du, dv)) << "\n";
    });
    if (!ok) status = 1;
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a named construction as graph6");
  gen->require_subcommand(1);
  int gk = 0;
  int gl = 0;
  auto add_kl = [&](CLI::App* sub) {
    sub->add_option("-k", gk, "Copy parameter k")->required();
    sub->add_option("-l", gl, "Number of copies")->required();
  };
  auto* gen_gkl = gen->add_subcommand("gkl", "k-regular chain of l copies of K_{k+1}-e");
  add_kl(gen_gkl);
  gen_gkl->callback([&] { std::cout << to_graph6(regular_chain(gk, gl)) << "\n"; });
  auto* gen_cave = gen->add_subcommand("caveman", "Connected caveman graph");
  add_kl(gen_cave);
  gen_cave->callback([&] { std::cout << to_graph6(caveman(gk, gl)) << "\n"; });
  auto* gen_rewired = gen->add_subcommand("caveman-rewired", "Caveman graph after the single rewiring");
  add_kl(gen_rewired);
  gen_rewired->callback([&] { std::cout << to_graph6(caveman_rewired(gk, gl)) << "\n"; });
  auto* gen_family = gen->add_subcommand("family-b", "Tree skeleton with triangle/diamond gadgets");
  std::string skeleton_path;
  gen_family->add_option("--skeleton", skeleton_path, "JSON {edges, leaf_marks, inner_marks}")->required();
  gen_family->callback([&] { std::cout << to_graph6(family_b(read_skeleton(skeleton_path))) << "\n"; });
  auto* gen_named = gen->add_subcommand("named", "triangle, diamond, paw, K4, path(N), cycle(N)");
  std::string graph_name;
  gen_named->add_option("name", graph_name, "Graph name")->required();
  gen_named->callback([&] { std::cout << to_graph6(named(graph_name)) << "\n"; });

  // classify
  auto* classify = app.add_subcommand("classify", "Block structure and family membership as JSON");
  std::string classify_in = "-";
  classify->add_option("input", classify_in, "graph6 file, - for stdin");
  classify->callback([&] {
    if (!for_each_graph(classify_in, [](const Graph& g) { std::cout << classify_json(g) << "\n"; })) status = 1;
  });

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "One graph per isomorphism class, sorted graph6");
  int en = 0;
  std::optional<int> max_deg;
  std::optional<int> regular;
  bool connected = false;
  bool count_only = false;
  unsigned threads = 1;
  enumerate_cmd->add_option("-n", en, "Order")->required();
  auto* max_opt = enumerate_cmd->add_option("--max-deg", max_deg, "Maximum degree");
  enumerate_cmd->add_option("--regular", regular, "Common degree")->excludes(max_opt);
  enumerate_cmd->add_flag("--connected", connected, "Connected graphs only");
  enumerate_cmd->add_flag("--count-only", count_only, "Print the number of classes only");
  enumerate_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  enumerate_cmd->callback([&] {
    DegreeConstraint c = DegreeConstraint::any(connected);
    if (max_deg) c = DegreeConstraint::max_degree(*max_deg, connected);
    if (regular) c = DegreeConstraint::regular(*regular, connected);
    const auto lines = enumerate_graph6(en, c, {threads});
    if (count_only) {
      std::cout << lines.size() << "\n";
    } else {
      for (const auto& g6 : lines) std::cout << g6 << "\n";
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive verification; exit code 1 on any failure");
  verify->require_subcommand(1);
  bool json = false;
  std::vector<int> vk;
  std::vector<int> vn;
  std::vector<int> vl;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "One JSON report per line");
    sub->add_option("--threads", threads, "Worker threads (0 = all cores)");
  };
  auto run_reports = [&](const std::function<TheoremReport(int, int)>& fn, const std::vector<int>& as,
                         const std::vector<int>& bs) {
    for (int a : as) {
      for (int b : bs) {
        const TheoremReport r = fn(a, b);
        print_report(r, json);
        if (!r.passed()) status = 1;
      }
    }
  };

  auto* v_t1 = verify->add_subcommand("t1", "Connected k-regular graphs of order n");
  common(v_t1);
  v_t1->add_option("-k", vk, "Degree (default 3)");
  v_t1->add_option("-n", vn, "Orders")->required();
  v_t1->callback([&] {
    if (vk.empty()) vk = {3};
    run_reports([&](int k, int n) { return verify_regular_bound(k, n, {threads}); }, vk, vn);
  });

  auto* v_t23 = verify->add_subcommand("t23", "Connected subcubic graphs of order n");
  common(v_t23);
  v_t23->add_option("-n", vn, "Orders")->required();
  v_t23->callback([&] {
    run_reports([&](int n, int) { return verify_subcubic_bound(n, {threads}); }, vn, {0});
  });

  auto* v_t4 = verify->add_subcommand("t4", "Single edge additions over all graphs of order n");
  common(v_t4);
  v_t4->add_option("-n", vn, "Orders")->required();
  v_t4->callback([&] {
    run_reports([&](int n, int) { return verify_edge_add_bound(n, {threads}); }, vn, {0});
  });

  auto* v_cave = verify->add_subcommand("caveman", "Rewiring one caveman edge raises C(G)");
  common(v_cave);
  v_cave->add_option("-k", vk, "Copy parameters")->required();
  v_cave->add_option("-l", vl, "Copy counts")->required();
  v_cave->callback([&] { run_reports([](int k, int l) { return verify_caveman_rewire(k, l); }, vk, vl); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "cc: " << e.what() << "\n";
    return 2;
  }
  return status;
}
