#include "sqham/sqham.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "report.hpp"

struct sqham_graph {
  sqham::Graph g;
};

namespace {

using sqham::report::json;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs f, translating exceptions into status codes.
template <class F>
int guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return SQHAM_OK;
  } catch (const sqham::ParseError& e) {
    last_error = e.what();
    return SQHAM_ERR_PARSE;
  } catch (const sqham::PreconditionError& e) {
    last_error = e.what();
    return SQHAM_ERR_PRECONDITION;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SQHAM_ERR_INTERNAL;
  }
}

int bad_argument(const char* what) {
  last_error = what;
  return SQHAM_ERR_ARGUMENT;
}

int emit(const json& j, char** out) {
  *out = dup(j.dump(2));
  if (!*out) return bad_argument("out of memory");
  return SQHAM_OK;
}

json verdict_doc(const sqham::Graph& g, const sqham::BlockDecomposition& d) {
  return {{"input", sqham::report::input_summary(g, d)}};
}

}  // namespace

extern "C" {

const char* sqham_version(void) { return "1.0.0"; }

const char* sqham_last_error(void) { return last_error.c_str(); }

void sqham_string_free(char* s) { std::free(s); }

int sqham_graph_parse(const char* text, sqham_graph** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] { *out = new sqham_graph{sqham::parse_graph(text)}; });
}

void sqham_graph_free(sqham_graph* g) { delete g; }

size_t sqham_graph_order(const sqham_graph* g) { return g ? g->g.order() : 0; }

size_t sqham_graph_size(const sqham_graph* g) { return g ? g->g.size() : 0; }

int sqham_graph_edgelist(const sqham_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] { *out = dup(sqham::serialize_graph(g->g)); });
}

int sqham_graph_dot(const sqham_graph* g, const int64_t* seq, size_t len, int cyclic, char** out) {
  if (!g || !out || (len && !seq)) return bad_argument("null argument");
  return guarded([&] {
    sqham::EdgeSet bold;
    for (size_t i = 0; i + 1 < len; ++i) bold.insert(sqham::Edge(seq[i], seq[i + 1]));
    if (cyclic && len > 2) bold.insert(sqham::Edge(seq[len - 1], seq[0]));
    *out = dup(sqham::to_dot(g->g, bold));
  });
}

int sqham_square(const sqham_graph* g, sqham_graph** out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] { *out = new sqham_graph{sqham::square(g->g)}; });
}

int sqham_decompose_json(const sqham_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  int rc = SQHAM_OK;
  int st = guarded([&] {
    auto d = sqham::decompose(g->g);
    json j = verdict_doc(g->g, d);
    j["decomposition"] = sqham::report::decomposition_json(g->g, d);
    rc = emit(j, out);
  });
  return st ? st : rc;
}

int sqham_bc_tree_dot(const sqham_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] { *out = dup(sqham::bc_tree(sqham::decompose(g->g)).to_dot()); });
}

int sqham_check_ham_json(const sqham_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  int rc = SQHAM_OK;
  int st = guarded([&] {
    if (!sqham::is_connected(g->g)) throw sqham::PreconditionError("graph is not connected");
    auto d = sqham::decompose(g->g);
    json j = verdict_doc(g->g, d);
    j["verdict"] = sqham::report::ham_verdict_json(sqham::algorithm1(g->g, d));
    rc = emit(j, out);
  });
  return st ? st : rc;
}

int sqham_check_hc_json(const sqham_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  int rc = SQHAM_OK;
  int st = guarded([&] {
    if (g->g.order() < 2) throw sqham::PreconditionError("algorithm2: needs at least two vertices");
    if (!sqham::is_connected(g->g)) throw sqham::PreconditionError("graph is not connected");
    auto d = sqham::decompose(g->g);
    json j = verdict_doc(g->g, d);
    j["verdict"] = sqham::report::hc_verdict_json(sqham::algorithm2(g->g, d));
    rc = emit(j, out);
  });
  return st ? st : rc;
}

int sqham_construct_cycle_json(const sqham_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  int rc = SQHAM_OK;
  int st = guarded([&] {
    auto v = sqham::algorithm1(g->g);
    auto d = sqham::decompose(g->g);
    json j = verdict_doc(g->g, d);
    j["verdict"] = sqham::report::ham_verdict_json(v);
    j["witness"] = nullptr;
    if (v.outcome == sqham::HamOutcome::Hamiltonian) {
      auto c = sqham::construct_ham_cycle(g->g, v.labelling);
      j["witness"] = sqham::report::witness_json(g->g, c.witness);
      j["witness"]["merge_steps"] = c.steps;
      j["witness"]["merge_invariant_held"] = c.merge_invariant_held;
    }
    rc = emit(j, out);
  });
  return st ? st : rc;
}

int sqham_construct_path_json(const sqham_graph* g, int64_t x, int64_t y, char** out) {
  if (!g || !out) return bad_argument("null argument");
  int rc = SQHAM_OK;
  int st = guarded([&] {
    auto v = sqham::algorithm2(g->g);
    auto d = sqham::decompose(g->g);
    json j = verdict_doc(g->g, d);
    j["verdict"] = sqham::report::hc_verdict_json(v);
    if (x == y || !g->g.has_vertex(x) || !g->g.has_vertex(y))
      throw sqham::PreconditionError("path endpoints must be two distinct vertices of the graph");
    j["witness"] = nullptr;
    if (v.outcome == sqham::HcOutcome::HamConnected)
      j["witness"] = sqham::report::witness_json(g->g, sqham::construct_ham_path(g->g, x, y));
    rc = emit(j, out);
  });
  return st ? st : rc;
}

int sqham_counterexample_json(const sqham_graph* g, const char* condition, uint64_t node_budget, char** out) {
  if (!g || !out || !condition) return bad_argument("null argument");
  const std::string cond = condition;
  if (cond != "4" && cond != "5" && cond != "6" && cond != "hc")
    return bad_argument("condition must be 4, 5, 6 or hc");
  int rc = SQHAM_OK;
  int st = guarded([&] {
    auto d = sqham::decompose(g->g);
    json j = verdict_doc(g->g, d);
    std::optional<sqham::Counterexample> c;
    std::string message;
    if (cond == "hc") {
      auto v = sqham::algorithm2(g->g, d);
      j["verdict"] = sqham::report::hc_verdict_json(v);
      if (v.outcome == sqham::HcOutcome::HamConnected)
        message = "G^2 is hamiltonian connected";
      else
        c = sqham::counterexample_for(g->g, v, node_budget);
    } else {
      auto v = sqham::algorithm1(g->g, d);
      j["verdict"] = sqham::report::ham_verdict_json(v);
      if (v.outcome == sqham::HamOutcome::Hamiltonian)
        message = "G^2 is hamiltonian";
      else if (std::to_string(v.violated_condition) != cond)
        message = "G violates condition " + std::to_string(v.violated_condition) + ", not " + cond;
      else
        c = sqham::counterexample_for(g->g, v, node_budget);
    }
    j["applicable"] = c.has_value();
    j["message"] = message;
    j["counterexample"] = c ? sqham::report::counterexample_json(*c) : json(nullptr);
    rc = emit(j, out);
  });
  return st ? st : rc;
}

int sqham_oracle_json(const sqham_graph* g, const char* mode, int64_t x, int64_t y, uint64_t node_budget, char** out) {
  if (!g || !out || !mode) return bad_argument("null argument");
  const std::string m = mode;
  if (m != "cycle" && m != "path" && m != "hc") return bad_argument("mode must be cycle, path or hc");
  int rc = SQHAM_OK;
  int st = guarded([&] {
    json j = {{"mode", m}};
    sqham::EdgeConstrainedSearch s;
    s.host = sqham::square(g->g);
    s.original = g->g;
    s.node_budget = node_budget;
    if (m == "cycle") {
      j["result"] = sqham::report::search_json(g->g, sqham::find_ham_cycle(s));
    } else if (m == "path") {
      if (x == y) throw sqham::PreconditionError("path endpoints must differ");
      if (!g->g.has_vertex(x) || !g->g.has_vertex(y)) throw sqham::PreconditionError("unknown path endpoint");
      s.endpoints = {x, y};
      j["result"] = sqham::report::search_json(g->g, sqham::find_ham_path(s));
    } else {
      auto missing = sqham::non_ham_connected_pairs(s.host);
      j["result"] = {{"status", missing.empty() ? "found" : "infeasible"},
                     {"hamiltonian_connected", missing.empty()},
                     {"failing_pairs", sqham::report::edges_json(missing)}};
    }
    rc = emit(j, out);
  });
  return st ? st : rc;
}

}  // extern "C"
