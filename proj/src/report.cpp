#include "report.hpp"

namespace sqham::report {

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

const char* basis_name(HamBasis b) {
  switch (b) {
    case HamBasis::None: return "none";
    case HamBasis::Caterpillar: return "caterpillar";
    case HamBasis::SingleTwoBlock: return "single_two_block";
    case HamBasis::Labelling: return "labelling";
  }
  return "none";
}

}  // namespace

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json input_summary(const Graph& g, const BlockDecomposition& d) {
  return {{"vertices", g.order()},
          {"edges", g.size()},
          {"blocks", d.blocks.size()},
          {"two_blocks", d.two_blocks.size()},
          {"cutvertices", d.cutvertices.size()},
          {"nontrivial_bridges", d.nontrivial_bridges.size()}};
}

json decomposition_json(const Graph& g, const BlockDecomposition& d) {
  json blocks = json::array();
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const Block& blk = d.blocks[b];
    blocks.push_back({{"index", b},
                      {"vertices", blk.vertices},
                      {"edges", edges_json(blk.edges)},
                      {"two_block", blk.is_two_block()},
                      {"cvn", d.cvn[b]},
                      {"endblock", d.is_endblock(b)}});
  }
  json cuts = json::array();
  for (Vertex c : d.cutvertices)
    cuts.push_back({{"vertex", c}, {"bn", d.bn_of(c)}, {"k", d.k_of(c)}, {"blocks", d.blocks_of.at(c)}});
  json comps = json::array();
  auto p0 = compute_p0(g, d);
  for (const auto& c : p0.components)
    comps.push_back({{"vertices", c.vertices},
                     {"edges", edges_json(c.edges)},
                     {"is_tree", c.is_tree},
                     {"is_caterpillar", c.is_caterpillar},
                     {"longest_path", c.longest_path}});
  return {{"blocks", blocks},
          {"cutvertices", cuts},
          {"trivial_bridges", edges_json(d.trivial_bridges)},
          {"nontrivial_bridges", edges_json(d.nontrivial_bridges)},
          {"p0", {{"components", comps}, {"all_caterpillars", p0.all_caterpillars()}}},
          {"bc_tree_canonical", bc_canonical_form(bc_tree(d))}};
}

json recipe_json(const SubstitutionRecipe& r) {
  json ex = json::array();
  for (const auto& x : r.exchanges) ex.push_back({{"block", x.block}, {"kind", to_string(x.kind)}, {"attach", x.attach}});
  return {{"condition", r.condition}, {"exchanges", ex}};
}

json ham_verdict_json(const HamVerdict& v) {
  json lab = json::array();
  for (const auto& [key, m] : v.labelling.entries()) lab.push_back({{"cutvertex", key.first}, {"block", key.second}, {"m", m}});
  json trace = json::array();
  for (const auto& s : v.trace) {
    json values = json::array();
    for (const auto& [c, m] : s.values) values.push_back({{"cutvertex", c}, {"m", m}});
    trace.push_back({{"rule", std::string(1, s.rule)},
                     {"block", s.block},
                     {"cutvertices", s.cutvertices},
                     {"values", values},
                     {"note", s.note}});
  }
  return {{"problem", "hamiltonian"},
          {"outcome", to_string(v.outcome)},
          {"basis", basis_name(v.basis)},
          {"reason", v.reason},
          {"violated_condition", v.violated_condition ? json(v.violated_condition) : json(nullptr)},
          {"failing_case", v.failing_case ? json(std::string(1, v.failing_case)) : json(nullptr)},
          {"offending_block", opt(v.offending_block)},
          {"offending_vertex", opt(v.offending_vertex)},
          {"labelling", lab},
          {"trace", trace},
          {"recipe", v.recipe ? recipe_json(*v.recipe) : json(nullptr)}};
}

json hc_verdict_json(const HcVerdict& v) {
  return {{"problem", "hamiltonian_connected"},
          {"outcome", to_string(v.outcome)},
          {"reason", v.reason},
          {"bridge", v.bridge ? json({v.bridge->u, v.bridge->v}) : json(nullptr)},
          {"risky_block", opt(v.risky_block)},
          {"risky_blocks", v.risky_blocks},
          {"peel_trace", v.peel_trace},
          {"recipe", v.recipe ? recipe_json(*v.recipe) : json(nullptr)}};
}

json witness_json(const Graph& g, const Witness& w) {
  bool valid = w.is_cycle ? is_ham_cycle_of_square(g, w.sequence)
                          : !w.sequence.empty() && is_ham_path_of_square(g, w.sequence, w.sequence.front(), w.sequence.back());
  return {{"kind", w.is_cycle ? "cycle" : "path"}, {"sequence", w.sequence}, {"valid", valid}};
}

json search_json(const Graph& g, const SearchResult& r) {
  return {{"status", to_string(r.status)},
          {"nodes", r.nodes},
          {"witness", r.witness ? witness_json(g, *r.witness) : json(nullptr)}};
}

json counterexample_json(const Counterexample& c) {
  auto ds = decompose(c.skeleton);
  auto dg = decompose(c.graph);
  return {{"graph", {{"vertices", c.graph.vertices()}, {"edges", edges_json(c.graph.edges())}}},
          {"recipe", c.recipe ? recipe_json(*c.recipe) : json(nullptr)},
          {"bc_isomorphic", c.bc_isomorphic},
          {"bc_certificate",
           {{"original", bc_canonical_form(bc_tree(ds))}, {"counterexample", bc_canonical_form(bc_tree(dg))}}},
          {"certified", c.certified},
          {"status", to_string(c.status)},
          {"failing_pair", c.failing_pair ? json({c.failing_pair->u, c.failing_pair->v}) : json(nullptr)},
          {"nodes", c.nodes}};
}

}  // namespace sqham::report
