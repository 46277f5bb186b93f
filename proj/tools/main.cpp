// sqham command-line front end. Talks to the library only through sqham.h.
#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "sqham/sqham.h"

using nlohmann::json;

namespace {

enum Exit : int {
  kPositive = 0,
  kNegative = 1,
  kRisky = 2,
  kBudget = 3,
  kUsage = 64,
  kInput = 65,
  kInternal = 70,
};

struct Failure {
  int code;
  std::string message;
};

int exit_for_status(int status) {
  switch (status) {
    case SQHAM_ERR_PARSE:
    case SQHAM_ERR_PRECONDITION: return kInput;
    case SQHAM_ERR_ARGUMENT: return kUsage;
    default: return kInternal;
  }
}

void check(int status) {
  if (status != SQHAM_OK) throw Failure{exit_for_status(status), sqham_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  sqham_string_free(s);
  return out;
}

using GraphPtr = std::unique_ptr<sqham_graph, decltype(&sqham_graph_free)>;

GraphPtr load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Failure{kInput, "cannot read " + path};
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  sqham_graph* g = nullptr;
  check(sqham_graph_parse(text.c_str(), &g));
  return GraphPtr(g, &sqham_graph_free);
}

GraphPtr square_of(const sqham_graph* g) {
  sqham_graph* sq = nullptr;
  check(sqham_square(g, &sq));
  return GraphPtr(sq, &sqham_graph_free);
}

json edge_list_json(const sqham_graph* g) {
  char* s = nullptr;
  check(sqham_graph_edgelist(g, &s));
  std::istringstream in(take(s));
  json vertices = json::array(), edges = json::array();
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::int64_t a, b;
    if (!(ls >> a)) continue;
    if (ls >> b)
      edges.push_back({a, b});
    else
      vertices.push_back(a);
  }
  return {{"isolated_vertices", vertices}, {"edges", edges}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Failure{kInput, "cannot write " + path};
  out << content;
}

std::string dot_with(const sqham_graph* g, const std::vector<std::int64_t>& seq, bool cyclic) {
  char* s = nullptr;
  check(sqham_graph_dot(g, seq.data(), seq.size(), cyclic ? 1 : 0, &s));
  return take(s);
}

std::string bc_dot(const sqham_graph* g) {
  char* s = nullptr;
  check(sqham_bc_tree_dot(g, &s));
  return take(s);
}

json call(int (*fn)(const sqham_graph*, char**), const sqham_graph* g) {
  char* s = nullptr;
  check(fn(g, &s));
  return json::parse(take(s));
}

std::string join(const json& arr, const char* sep = " ") {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += x.dump();
  }
  return out;
}

std::string edge_text(const json& e) { return e[0].dump() + "-" + e[1].dump(); }

// Human-readable renderings.

void print_input(const json& in) {
  std::cout << "graph: " << in["vertices"] << " vertices, " << in["edges"] << " edges, " << in["blocks"] << " blocks ("
            << in["two_blocks"] << " 2-blocks), " << in["cutvertices"] << " cutvertices\n";
}

void print_decomposition(const json& d) {
  for (const auto& b : d["blocks"])
    std::cout << "B" << b["index"] << (b["two_block"].get<bool>() ? " 2-block" : " bridge  ") << " cvn=" << b["cvn"]
              << (b["endblock"].get<bool>() ? " end " : "     ") << " {" << join(b["vertices"], ",") << "}\n";
  for (const auto& c : d["cutvertices"])
    std::cout << "cutvertex " << c["vertex"] << ": bn=" << c["bn"] << " k=" << c["k"] << " blocks=" << join(c["blocks"], ",")
              << "\n";
  std::cout << "nontrivial bridges:";
  for (const auto& e : d["nontrivial_bridges"]) std::cout << " " << edge_text(e);
  std::cout << "\nP0 components:";
  for (const auto& c : d["p0"]["components"])
    std::cout << " {" << join(c["vertices"], ",") << "}" << (c["is_caterpillar"].get<bool>() ? "" : "!");
  std::cout << "\nP0 all caterpillars: " << (d["p0"]["all_caterpillars"].get<bool>() ? "yes" : "no") << "\n";
}

void print_ham_verdict(const json& v) {
  std::cout << "verdict: " << v["outcome"].get<std::string>() << "\n";
  std::cout << "reason: " << v["reason"].get<std::string>() << "\n";
  if (!v["labelling"].empty()) {
    std::cout << "labelling (cutvertex, block, m):\n";
    for (const auto& e : v["labelling"]) std::cout << "  " << e["cutvertex"] << "\tB" << e["block"] << "\t" << e["m"] << "\n";
  }
  if (!v["trace"].empty()) {
    std::cout << "trace:\n";
    for (const auto& s : v["trace"]) {
      std::cout << "  case " << s["rule"].get<std::string>() << ") B" << s["block"];
      for (const auto& x : s["values"]) std::cout << " m_" << x["cutvertex"] << "=" << x["m"];
      if (!s["note"].get<std::string>().empty()) std::cout << "  (" << s["note"].get<std::string>() << ")";
      std::cout << "\n";
    }
  }
  if (!v["recipe"].is_null()) {
    std::cout << "counterexample recipe (condition " << v["recipe"]["condition"] << "):";
    for (const auto& x : v["recipe"]["exchanges"])
      std::cout << " B" << x["block"] << "->" << x["kind"].get<std::string>() << "[" << join(x["attach"], ",") << "]";
    std::cout << "\n";
  }
}

void print_hc_verdict(const json& v) {
  std::cout << "verdict: " << v["outcome"].get<std::string>() << "\n";
  std::cout << "reason: " << v["reason"].get<std::string>() << "\n";
  std::cout << "peeled innerblocks: " << join(v["peel_trace"]) << "\n";
}

void print_witness(const json& w) {
  std::cout << w["kind"].get<std::string>() << ": " << join(w["sequence"]) << "\n";
  std::cout << "valid in G^2: " << (w["valid"].get<bool>() ? "yes" : "no") << "\n";
  if (w.contains("merge_steps"))
    for (const auto& s : w["merge_steps"]) std::cout << "  " << s.get<std::string>() << "\n";
}

int ham_exit(const json& v) {
  auto o = v["outcome"].get<std::string>();
  if (o == "HAMILTONIAN" || o == "HAM_CONNECTED") return kPositive;
  if (o == "STRUCTURALLY_RISKY") return kRisky;
  return kNegative;
}

std::vector<std::int64_t> sequence_of(const json& w) {
  std::vector<std::int64_t> seq;
  if (!w.is_null()) seq = w["sequence"].get<std::vector<std::int64_t>>();
  return seq;
}

struct Options {
  std::string file;
  bool as_json = false;
  std::string dot;
  std::vector<std::int64_t> pair;
  std::string condition;
  std::string mode;
  std::uint64_t budget = 0;
};

int run(const std::string& cmd, const Options& o) {
  auto g = load(o.file);
  auto t0 = std::chrono::steady_clock::now();
  json out;
  int code = kPositive;
  std::string dot;

  if (cmd == "square") {
    auto sq = square_of(g.get());
    out["input"] = {{"vertices", sqham_graph_order(g.get())}, {"edges", sqham_graph_size(g.get())}};
    out["square"] = edge_list_json(sq.get());
    if (!o.as_json) {
      char* s = nullptr;
      check(sqham_graph_edgelist(sq.get(), &s));
      std::cout << take(s);
    }
    if (!o.dot.empty()) dot = dot_with(sq.get(), {}, false);
  } else if (cmd == "decompose") {
    out = call(sqham_decompose_json, g.get());
    if (!o.as_json) {
      print_input(out["input"]);
      print_decomposition(out["decomposition"]);
    }
    if (!o.dot.empty()) dot = bc_dot(g.get());
  } else if (cmd == "check-ham") {
    out = call(sqham_check_ham_json, g.get());
    code = ham_exit(out["verdict"]);
    if (!o.as_json) {
      print_input(out["input"]);
      print_ham_verdict(out["verdict"]);
    }
    if (!o.dot.empty()) dot = bc_dot(g.get());
  } else if (cmd == "check-hc") {
    out = call(sqham_check_hc_json, g.get());
    code = ham_exit(out["verdict"]);
    if (!o.as_json) {
      print_input(out["input"]);
      print_hc_verdict(out["verdict"]);
    }
    if (!o.pair.empty()) {
      char* s = nullptr;
      check(sqham_oracle_json(g.get(), "path", o.pair[0], o.pair[1], o.budget, &s));
      auto r = json::parse(take(s));
      out["pair"] = {{"x", o.pair[0]}, {"y", o.pair[1]}, {"result", r["result"]}};
      const auto status = r["result"]["status"].get<std::string>();
      if (status == "budget_exceeded") code = kBudget;
      if (!o.as_json) {
        std::cout << "pair " << o.pair[0] << " " << o.pair[1] << ": ";
        if (status == "found")
          std::cout << "hamiltonian path " << join(r["result"]["witness"]["sequence"]) << "\n";
        else
          std::cout << (status == "infeasible" ? "no hamiltonian path" : "search budget exceeded") << "\n";
      }
    }
    if (!o.dot.empty()) dot = bc_dot(g.get());
  } else if (cmd == "construct-cycle" || cmd == "construct-path") {
    const bool cycle = cmd == "construct-cycle";
    if (cycle) {
      out = call(sqham_construct_cycle_json, g.get());
    } else {
      char* s = nullptr;
      check(sqham_construct_path_json(g.get(), o.pair[0], o.pair[1], &s));
      out = json::parse(take(s));
    }
    code = out["witness"].is_null() ? ham_exit(out["verdict"]) : kPositive;
    if (!o.as_json) {
      print_input(out["input"]);
      if (out["witness"].is_null())
        std::cout << "no construction: verdict is " << out["verdict"]["outcome"].get<std::string>() << "\n"
                  << "reason: " << out["verdict"]["reason"].get<std::string>() << "\n";
      else
        print_witness(out["witness"]);
    }
    if (!o.dot.empty()) dot = dot_with(square_of(g.get()).get(), sequence_of(out["witness"]), cycle);
  } else if (cmd == "counterexample") {
    char* s = nullptr;
    check(sqham_counterexample_json(g.get(), o.condition.c_str(), o.budget, &s));
    out = json::parse(take(s));
    const auto& c = out["counterexample"];
    if (!out["applicable"].get<bool>()) {
      code = kNegative;
      if (!o.as_json) std::cerr << "no counterexample: " << out["message"].get<std::string>() << "\n";
    } else {
      code = c["certified"].get<bool>() ? kPositive : c["status"] == "budget_exceeded" ? kBudget : kNegative;
      if (!o.as_json) {
        std::cout << "# counterexample for condition " << o.condition << "\n";
        std::cout << "# bc-isomorphic to input: " << (c["bc_isomorphic"].get<bool>() ? "yes" : "no") << "\n";
        std::cout << "# bc-tree (input):          " << c["bc_certificate"]["original"].get<std::string>() << "\n";
        std::cout << "# bc-tree (counterexample): " << c["bc_certificate"]["counterexample"].get<std::string>() << "\n";
        std::cout << "# oracle: " << c["status"].get<std::string>();
        if (!c["failing_pair"].is_null()) std::cout << " (no hamiltonian path " << edge_text(c["failing_pair"]) << ")";
        std::cout << "\n";
        for (const auto& e : c["graph"]["edges"]) std::cout << e[0] << " " << e[1] << "\n";
      }
      if (!o.dot.empty()) {
        std::string text;
        for (const auto& e : c["graph"]["edges"]) text += e[0].dump() + " " + e[1].dump() + "\n";
        sqham_graph* h = nullptr;
        check(sqham_graph_parse(text.c_str(), &h));
        GraphPtr hp(h, &sqham_graph_free);
        dot = dot_with(hp.get(), {}, false);
      }
    }
  } else if (cmd == "oracle") {
    if (o.mode == "path" && o.pair.empty()) throw Failure{kUsage, "oracle path needs --pair x y"};
    char* s = nullptr;
    std::int64_t x = o.pair.empty() ? 0 : o.pair[0], y = o.pair.empty() ? 0 : o.pair[1];
    check(sqham_oracle_json(g.get(), o.mode.c_str(), x, y, o.budget, &s));
    out = json::parse(take(s));
    const auto& r = out["result"];
    const auto status = r["status"].get<std::string>();
    code = status == "found" ? kPositive : status == "infeasible" ? kNegative : kBudget;
    if (!o.as_json) {
      std::cout << "oracle " << o.mode << ": " << status << "\n";
      if (r.contains("witness") && !r["witness"].is_null()) print_witness(r["witness"]);
      if (r.contains("failing_pairs"))
        for (const auto& p : r["failing_pairs"]) std::cout << "no hamiltonian path " << edge_text(p) << "\n";
      if (r.contains("nodes")) std::cout << "search nodes: " << r["nodes"] << "\n";
    }
    if (!o.dot.empty() && r.contains("witness"))
      dot = dot_with(square_of(g.get()).get(), sequence_of(r["witness"]), o.mode == "cycle");
  }

  if (!o.dot.empty()) write_file(o.dot, dot);
  if (o.as_json) {
    out["command"] = cmd;
    out["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << out.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonicity of graph squares from the block-cutvertex structure"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sqham_version()));
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "edge-list file, or - for standard input")->required();
    sub->add_flag("--json", o.as_json, "print a JSON report");
    sub->add_option("--dot", o.dot, "write a DOT rendering to this path");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--node-budget", o.budget, "search node limit for the oracle (0 = unlimited)");
  };

  auto* square = app.add_subcommand("square", "print the square of the graph");
  auto* decompose = app.add_subcommand("decompose", "blocks, cutvertices, bridges and P0");
  auto* check_ham = app.add_subcommand("check-ham", "decide whether the square is hamiltonian");
  auto* check_hc = app.add_subcommand("check-hc", "decide whether the square is hamiltonian connected");
  auto* cycle = app.add_subcommand("construct-cycle", "build a hamiltonian cycle of the square");
  auto* path = app.add_subcommand("construct-path", "build a hamiltonian x-y path of the square");
  auto* cex = app.add_subcommand("counterexample", "build an oracle-certified counterexample");
  auto* oracle = app.add_subcommand("oracle", "exhaustive search in the square");
  for (auto* s : {square, decompose, check_ham, check_hc, cycle, path, cex, oracle}) add_common(s);
  check_hc->add_option("--pair", o.pair, "also search a hamiltonian x-y path")->expected(2);
  add_budget(check_hc);
  path->add_option("--pair", o.pair, "path endpoints x y")->expected(2)->required();
  cex->add_option("--condition", o.condition, "violated condition")
      ->required()
      ->check(CLI::IsMember({"4", "5", "6", "hc"}));
  add_budget(cex);
  oracle->add_option("mode", o.mode, "cycle, path or hc")->required()->check(CLI::IsMember({"cycle", "path", "hc"}));
  oracle->add_option("--pair", o.pair, "path endpoints x y")->expected(2);
  add_budget(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
