#include "sqham/counterexamples.hpp"

#include <algorithm>
#include <set>

#include "sqham/decomposition.hpp"

namespace sqham {

namespace {

void check_plug(const Graph& h) {
  if (h.size() == 0) throw PreconditionError("plug graph needs at least one edge");
  if (!is_connected(h)) throw PreconditionError("plug graph must be connected");
}

// Copies h into g with its smallest vertex identified with `at` and every
// other vertex given a fresh identifier starting at `next`.
void hang(Graph& g, const Graph& h, Vertex at, Vertex& next) {
  std::map<Vertex, Vertex> m;
  auto vs = h.vertices();
  m[vs.front()] = at;
  for (std::size_t i = 1; i < vs.size(); ++i) m[vs[i]] = next++;
  for (const Edge& e : h.edges()) g.add_edge(m[e.u], m[e.v]);
}

Graph k2() { return path_graph(2); }

}  // namespace

Graph gen_bn3(const std::array<Graph, 4>& plugs) {
  for (const Graph& h : plugs) check_plug(h);
  Graph g;
  g.add_vertex(0);
  Vertex next = 1;
  hang(g, plugs[0], 0, next);
  for (int j = 1; j < 4; ++j) {
    Vertex a = next++;
    g.add_edge(0, a);
    hang(g, plugs[j], a, next);
  }
  return g;
}

Graph gen_bn3() { return gen_bn3({k2(), k2(), k2(), k2()}); }

Graph gen_hc_counterexample(int r, const std::vector<Graph>& plugs) {
  if (r < 3) throw PreconditionError("gen_hc_counterexample: r must be at least 3");
  if (plugs.size() != static_cast<std::size_t>(r))
    throw PreconditionError("gen_hc_counterexample: need one plug per cycle vertex");
  Graph g = cycle_graph(r);
  Vertex next = r;
  for (int j = 0; j < r; ++j) {
    check_plug(plugs[j]);
    hang(g, plugs[j], j, next);
  }
  return g;
}

Graph gen_hc_counterexample(int r) {
  if (r < 3) throw PreconditionError("gen_hc_counterexample: r must be at least 3");
  return gen_hc_counterexample(r, std::vector<Graph>(r, k2()));
}

Graph substitute(const Graph& g, const SubstitutionRecipe& r) {
  auto d = decompose(g);
  std::set<std::size_t> replaced;
  std::set<Edge> dropped_edges;
  std::set<Vertex> dropped_vertices;
  for (const auto& x : r.exchanges) {
    if (x.block >= d.blocks.size() || !d.blocks[x.block].is_two_block())
      throw PreconditionError("substitute: exchange does not name a 2-block");
    if (!replaced.insert(x.block).second) throw PreconditionError("substitute: block exchanged twice");
    auto cuts = d.cutvertices_in(x.block);
    std::vector<Vertex> attach = x.attach;
    std::sort(attach.begin(), attach.end());
    if (attach != cuts) throw PreconditionError("substitute: attachment does not match the cutvertices of the block");
    if (x.kind == ReplacementKind::K2k && attach.size() < 2)
      throw PreconditionError("substitute: K2k needs at least two cutvertices");
    if (x.kind == ReplacementKind::K23TwoMarked && attach.size() != 2)
      throw PreconditionError("substitute: K23 exchange needs exactly two cutvertices");
    for (const Edge& e : d.blocks[x.block].edges) dropped_edges.insert(e);
    for (Vertex v : d.blocks[x.block].vertices)
      if (!d.cutvertices.count(v)) dropped_vertices.insert(v);
  }
  Graph out;
  for (Vertex v : g.vertices())
    if (!dropped_vertices.count(v)) out.add_vertex(v);
  for (const Edge& e : g.edges())
    if (!dropped_edges.count(e)) out.add_edge(e.u, e.v);
  Vertex next = g.max_vertex() + 1;
  for (const auto& x : r.exchanges) {
    std::vector<Vertex> attach = x.attach;
    std::sort(attach.begin(), attach.end());
    switch (x.kind) {
      case ReplacementKind::K2k: {
        Vertex a = next++, b = next++;
        for (Vertex c : attach) {
          out.add_edge(a, c);
          out.add_edge(b, c);
        }
        break;
      }
      case ReplacementKind::Cycle: {
        while (attach.size() < 3) attach.push_back(next++);
        for (std::size_t i = 0; i < attach.size(); ++i) out.add_edge(attach[i], attach[(i + 1) % attach.size()]);
        break;
      }
      case ReplacementKind::K23TwoMarked: {
        Vertex a = next++, b = next++;
        attach.push_back(next++);
        for (Vertex c : attach) {
          out.add_edge(a, c);
          out.add_edge(b, c);
        }
        break;
      }
    }
  }
  return out;
}

Graph minimal_instantiation(const Graph& g, const SubstitutionRecipe& r) {
  auto d = decompose(g);
  SubstitutionRecipe all = r;
  std::set<std::size_t> named;
  for (const auto& x : r.exchanges) named.insert(x.block);
  for (std::size_t t : d.two_blocks)
    if (!named.count(t)) all.exchanges.push_back({t, ReplacementKind::Cycle, d.cutvertices_in(t)});
  return substitute(g, all);
}

namespace {

Counterexample certify_cycle(const Graph& g, std::optional<SubstitutionRecipe> recipe, std::uint64_t budget) {
  Counterexample c;
  c.skeleton = g;
  c.recipe = recipe;
  c.graph = minimal_instantiation(g, recipe.value_or(SubstitutionRecipe{}));
  c.bc_isomorphic = bc_isomorphic(bc_tree(decompose(g)), bc_tree(decompose(c.graph)));
  EdgeConstrainedSearch s;
  s.host = square(c.graph);
  s.original = c.graph;
  s.node_budget = budget;
  auto r = find_ham_cycle(s);
  c.status = r.status;
  c.nodes = r.nodes;
  c.certified = r.status == SearchStatus::Infeasible;
  return c;
}

}  // namespace

Counterexample counterexample_for(const Graph& g, const HamVerdict& v, std::uint64_t node_budget) {
  if (v.outcome == HamOutcome::Hamiltonian) throw PreconditionError("counterexample: G^2 is hamiltonian");
  if (v.outcome == HamOutcome::NotHamiltonian) return certify_cycle(g, std::nullopt, node_budget);
  return certify_cycle(g, v.recipe, node_budget);
}

Counterexample counterexample_for(const Graph& g, const HcVerdict& v, std::uint64_t node_budget) {
  if (v.outcome == HcOutcome::HamConnected) throw PreconditionError("counterexample: G^2 is hamiltonian connected");
  Counterexample c;
  c.skeleton = g;
  std::vector<Edge> pairs;
  if (v.outcome == HcOutcome::NotHamConnected) {
    c.graph = minimal_instantiation(g, {});
    pairs.push_back(*v.bridge);
  } else {
    c.recipe = v.recipe;
    c.graph = minimal_instantiation(g, *v.recipe);
    const auto& att = v.recipe->exchanges.front().attach;
    for (std::size_t i = 0; i < att.size(); ++i)
      for (std::size_t j = i + 1; j < att.size(); ++j) pairs.emplace_back(att[i], att[j]);
  }
  c.bc_isomorphic = bc_isomorphic(bc_tree(decompose(g)), bc_tree(decompose(c.graph)));
  c.status = SearchStatus::Found;
  for (const Edge& p : pairs) {
    EdgeConstrainedSearch s;
    s.host = square(c.graph);
    s.original = c.graph;
    s.endpoints = {p.u, p.v};
    s.node_budget = node_budget;
    auto r = find_ham_path(s);
    c.nodes += r.nodes;
    if (r.status == SearchStatus::BudgetExceeded) c.status = r.status;
    if (r.status == SearchStatus::Infeasible) {
      c.status = r.status;
      c.certified = true;
      c.failing_pair = p;
      break;
    }
  }
  return c;
}

std::string to_string(Figure f) {
  switch (f) {
    case Figure::A: return "a";
    case Figure::B: return "b";
    case Figure::C: return "c";
    case Figure::D: return "d";
    case Figure::E1: return "e1";
    case Figure::E2: return "e2";
    case Figure::HC: return "hc";
  }
  return "?";
}

std::optional<Figure> figure_from_string(const std::string& s) {
  for (Figure f : all_figures())
    if (to_string(f) == s) return f;
  return std::nullopt;
}

std::vector<Figure> all_figures() {
  return {Figure::A, Figure::B, Figure::C, Figure::D, Figure::E1, Figure::E2, Figure::HC};
}

namespace {

void add_k4(Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
  for (Vertex x : {a, b, c, d})
    for (Vertex y : {a, b, c, d})
      if (x < y) g.add_edge(x, y);
}

}  // namespace

Graph figure_skeleton(Figure f) {
  Graph g;
  switch (f) {
    case Figure::A:
      return gen_bn3();
    case Figure::B:
      g = cycle_graph(5);
      for (Vertex j = 0; j < 5; ++j) g.add_edge(j, j + 5);
      return g;
    case Figure::C:
      // i = 0 with two legs, j = 1 and l = 2 with pendants.
      add_k4(g, 0, 1, 2, 3);
      g.add_edge(0, 4), g.add_edge(4, 5), g.add_edge(0, 6), g.add_edge(6, 7);
      g.add_edge(1, 8), g.add_edge(2, 9);
      return g;
    case Figure::D:
      add_k4(g, 0, 1, 2, 3);
      g.add_edge(0, 4), g.add_edge(4, 5), g.add_edge(0, 6), g.add_edge(6, 7);
      g.add_edge(1, 8), g.add_edge(8, 9), g.add_edge(1, 10), g.add_edge(10, 11);
      return g;
    case Figure::E1:
      // bn(0) = 1; B1 = {0, 3, 4, 5} with bn(3) = 2; B2 = {0, 10, 11, 12}.
      g.add_edge(0, 1), g.add_edge(1, 2);
      add_k4(g, 0, 3, 4, 5);
      g.add_edge(3, 6), g.add_edge(6, 7), g.add_edge(3, 8), g.add_edge(8, 9);
      add_k4(g, 0, 10, 11, 12);
      g.add_edge(10, 13), g.add_edge(11, 14);
      return g;
    case Figure::E2:
      // bn(0) = 0; three 2-blocks at 0 with 2, 3 and 4 cutvertices.
      add_k4(g, 0, 1, 2, 3);
      g.add_edge(1, 4), g.add_edge(4, 5), g.add_edge(1, 6), g.add_edge(6, 7);
      add_k4(g, 0, 8, 9, 10);
      g.add_edge(8, 11), g.add_edge(9, 12);
      add_k4(g, 0, 13, 14, 15);
      g.add_edge(13, 17), g.add_edge(14, 18), g.add_edge(15, 19);
      return g;
    case Figure::HC:
      add_k4(g, 0, 1, 2, 3);
      g.add_edge(0, 4), g.add_edge(1, 5), g.add_edge(2, 6);
      return g;
  }
  return g;
}

Counterexample figure_instance(Figure f, std::uint64_t node_budget) {
  Graph g = figure_skeleton(f);
  if (f == Figure::HC) return counterexample_for(g, algorithm2(g), node_budget);
  auto v = algorithm1(g);
  if (v.outcome == HamOutcome::Hamiltonian) throw Error("figure skeleton does not trigger a failing verdict");
  return counterexample_for(g, v, node_budget);
}

}  // namespace sqham
