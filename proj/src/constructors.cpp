#include "sqham/constructors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sqham {

namespace {

std::vector<Vertex> rotate_to(const std::vector<Vertex>& cycle, Vertex first) {
  auto it = std::find(cycle.begin(), cycle.end(), first);
  if (it == cycle.end()) throw Error("vertex not on cycle");
  std::vector<Vertex> out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

// Rotation of `cycle` that starts with `first` followed by `second`.
std::vector<Vertex> orient(const std::vector<Vertex>& cycle, Vertex first, Vertex second) {
  auto r = rotate_to(cycle, first);
  if (r.size() > 1 && r[1] == second) return r;
  std::reverse(r.begin() + 1, r.end());
  if (r.size() > 1 && r[1] == second) return r;
  throw Error("vertices are not consecutive on cycle");
}

// Replaces the adjacency c-z of `seq` by c, p[1], ..., p.back(), z, where p
// starts at c. With `cyclic` the adjacency may wrap around.
std::vector<Vertex> splice(const std::vector<Vertex>& seq, Vertex c, Vertex z, const std::vector<Vertex>& p,
                           bool cyclic) {
  std::vector<Vertex> base = cyclic ? rotate_to(seq, c) : seq;
  auto ic = std::find(base.begin(), base.end(), c) - base.begin();
  const auto n = static_cast<std::ptrdiff_t>(base.size());
  std::vector<Vertex> out;
  if (ic + 1 < n && base[ic + 1] == z) {
    out.assign(base.begin(), base.begin() + ic + 1);
    out.insert(out.end(), p.begin() + 1, p.end());
    out.insert(out.end(), base.begin() + ic + 1, base.end());
  } else if (ic > 0 && base[ic - 1] == z) {
    out.assign(base.begin(), base.begin() + ic);
    out.insert(out.end(), p.rbegin(), p.rend() - 1);
    out.insert(out.end(), base.begin() + ic, base.end());
  } else if (cyclic && base.back() == z) {
    out = base;
    out.insert(out.end(), p.rbegin(), p.rend() - 1);
  } else {
    throw Error("splice: vertices are not adjacent in the sequence");
  }
  return out;
}

// Inserts `chain` between the consecutive vertices u and v of a cycle.
std::vector<Vertex> insert_between(const std::vector<Vertex>& cycle, Vertex u, Vertex v,
                                   const std::vector<Vertex>& chain) {
  auto r = orient(cycle, u, v);
  std::vector<Vertex> out{u};
  out.insert(out.end(), chain.begin(), chain.end());
  out.insert(out.end(), r.begin() + 1, r.end());
  return out;
}

Vertex smallest_neighbor(const Graph& g, Vertex v) {
  const auto& n = g.neighbors(v);
  if (n.empty()) throw Error("vertex has no neighbour");
  return *n.begin();
}

Witness path_search(const Graph& b, Vertex x, Vertex y, std::vector<Demand> demands,
                    std::function<bool(const std::vector<Vertex>&)> accept = {}) {
  EdgeConstrainedSearch s;
  s.host = square(b);
  s.original = b;
  s.endpoints = {x, y};
  s.demands = std::move(demands);
  s.accept = std::move(accept);
  auto r = find_ham_path(s);
  if (!r.found()) throw Error("no hamiltonian path with the required block edges");
  return *r.witness;
}

Edge assigned_edge(const Witness& w, Vertex c) {
  for (const auto& [v, e] : w.assigned)
    if (v == c) return e;
  throw Error("no edge assigned to vertex");
}

std::vector<Vertex> component_with(const Graph& g, Vertex v) {
  for (auto& comp : connected_components(g))
    if (std::find(comp.begin(), comp.end(), v) != comp.end()) return comp;
  throw Error("vertex not in graph");
}

Graph without_vertex(const Graph& g, Vertex v) {
  std::set<Vertex> keep;
  for (Vertex w : g.vertices())
    if (w != v) keep.insert(w);
  return induced_subgraph(g, keep);
}

std::vector<Vertex> ham_path_rec(const Graph& g, Vertex x, Vertex y);

// Cycle of H^2 through every vertex of H whose two edges at c lie in H.
// H hangs at c: no nontrivial bridge and every block has cvn <= 2 in G.
std::vector<Vertex> cycle_at(const Graph& h, Vertex c) {
  auto d = decompose(h);
  std::vector<Vertex> seq{c};
  std::vector<Vertex> leaves;
  for (Vertex w : h.neighbors(c))
    if (h.degree(w) == 1) leaves.push_back(w);
  std::vector<std::size_t> at_c;
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    if (d.blocks[b].is_two_block() && d.blocks[b].contains(c)) at_c.push_back(b);
  for (std::size_t b : at_c) {
    const Block& blk = d.blocks[b];
    Graph bg = blk.as_graph();
    std::optional<Vertex> yi;
    for (Vertex w : blk.vertices)
      if (w != c && d.cutvertices.count(w)) yi = w;
    std::vector<Demand> dem{{c, 2}};
    if (yi) dem.push_back({*yi, 1});
    EdgeConstrainedSearch s;
    s.host = square(bg);
    s.original = bg;
    s.demands = dem;
    auto r = find_ham_cycle(s);
    if (!r.found()) throw Error("no block cycle with the required edges");
    std::vector<Vertex> ci = r.witness->sequence;
    if (yi) {
      Edge e = assigned_edge(*r.witness, *yi);
      Vertex yp = e.other(*yi);
      std::set<Vertex> block_rest(blk.vertices.begin(), blk.vertices.end());
      block_rest.erase(*yi);
      std::set<Vertex> keep;
      for (Vertex w : h.vertices())
        if (!block_rest.count(w)) keep.insert(w);
      auto comp = component_with(induced_subgraph(h, keep), *yi);
      Graph hi = induced_subgraph(h, {comp.begin(), comp.end()});
      auto pi = ham_path_rec(hi, *yi, smallest_neighbor(hi, *yi));
      ci = splice(ci, *yi, yp, pi, true);
    }
    auto r2 = rotate_to(ci, c);
    if (!bg.has_edge(c, r2[1])) std::reverse(r2.begin() + 1, r2.end());
    seq.insert(seq.end(), r2.begin() + 1, r2.end());
  }
  seq.insert(seq.end(), leaves.begin(), leaves.end());
  return seq;
}

// Block of d containing both x and y, if any.
std::optional<std::size_t> common_block(const BlockDecomposition& d, Vertex x, Vertex y) {
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    if (d.blocks[b].contains(x) && d.blocks[b].contains(y)) return b;
  return std::nullopt;
}

std::vector<Vertex> split_path(const Graph& g, const BlockDecomposition& d, Vertex x, Vertex y) {
  // First cutvertex separating x from y along a shortest x-y path.
  std::map<Vertex, Vertex> parent{{x, x}};
  std::vector<Vertex> queue{x};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (Vertex w : g.neighbors(queue[q]))
      if (parent.emplace(w, queue[q]).second) queue.push_back(w);
  std::vector<Vertex> route;
  for (Vertex v = y; v != x; v = parent.at(v)) route.push_back(v);
  std::reverse(route.begin(), route.end());
  for (Vertex c : route) {
    if (c == y || !d.cutvertices.count(c)) continue;
    auto kx = component_with(without_vertex(g, c), x);
    if (std::find(kx.begin(), kx.end(), y) != kx.end()) continue;
    std::set<Vertex> side(kx.begin(), kx.end());
    side.insert(c);
    std::set<Vertex> rest;
    for (Vertex w : g.vertices())
      if (!side.count(w) || w == c) rest.insert(w);
    auto p1 = ham_path_rec(induced_subgraph(g, side), x, c);
    auto p2 = ham_path_rec(induced_subgraph(g, rest), c, y);
    p1.insert(p1.end(), p2.begin() + 1, p2.end());
    return p1;
  }
  throw Error("no separating cutvertex between the endpoints");
}

// The part of g - E(B) hanging at cutvertex c of block B.
Graph hanging_part(const Graph& g, const Block& blk, Vertex c) {
  Graph rest = subtract(g, blk.as_graph());
  auto comp = component_with(rest, c);
  return induced_subgraph(rest, {comp.begin(), comp.end()});
}

std::vector<Vertex> ham_path_rec(const Graph& g, Vertex x, Vertex y) {
  if (g.order() == 2) return {x, y};
  auto d = decompose(g);
  auto b = common_block(d, x, y);
  if (!b) return split_path(g, d, x, y);
  const Block& blk = d.blocks[*b];
  Graph bg = blk.as_graph();
  auto cuts = d.cutvertices_in(*b);
  if (cuts.empty()) {
    if (!blk.is_two_block()) return {x, y};
    return path_search(bg, x, y, {}).sequence;
  }
  if (cuts.size() == 1) {
    Vertex c = cuts[0];
    if (x == c) {
      auto p = ham_path_rec(g, y, x);
      std::reverse(p.begin(), p.end());
      return p;
    }
    std::vector<Vertex> pb;
    Vertex yp;
    if (!blk.is_two_block()) {
      pb = {x, y};
      yp = x;
    } else {
      auto w = path_search(bg, x, y, {{c, 1}});
      pb = w.sequence;
      yp = assigned_edge(w, c).other(c);
    }
    Graph r = hanging_part(g, blk, c);
    auto pg = ham_path_rec(r, c, smallest_neighbor(r, c));
    return splice(pb, c, yp, pg, false);
  }
  if (cuts.size() != 2) throw PreconditionError("block with more than two cutvertices");
  Vertex c1 = cuts[0], c2 = cuts[1];
  Graph g1 = hanging_part(g, blk, c1);
  Graph g2 = hanging_part(g, blk, c2);
  auto hang = [&](Vertex c) -> const Graph& { return c == c1 ? g1 : g2; };
  auto side_path = [&](Vertex c) { return ham_path_rec(hang(c), c, smallest_neighbor(hang(c), c)); };

  if (!blk.is_two_block()) {
    // x, y are the bridge ends; a trivial bridge would not have two cutvertices.
    throw PreconditionError("nontrivial bridge");
  }
  const bool ends_are_cuts = (x == c1 && y == c2) || (x == c2 && y == c1);
  if (!ends_are_cuts) {
    auto w = path_search(bg, x, y, {{c1, 1}, {c2, 1}});
    auto p = w.sequence;
    Edge e1 = assigned_edge(w, c1), e2 = assigned_edge(w, c2);
    p = splice(p, c1, e1.other(c1), side_path(c1), false);
    return splice(p, c2, e2.other(c2), side_path(c2), false);
  }
  EdgeConstrainedSearch s;
  s.host = square(bg);
  s.original = bg;
  s.endpoints = {x, y};
  s.demands = {{x, 1}, {y, 1}};
  if (auto r = find_ham_path(s); r.found()) {
    auto p = r.witness->sequence;
    Edge ex = assigned_edge(*r.witness, x), ey = assigned_edge(*r.witness, y);
    p = splice(p, x, ex.other(x), side_path(x), false);
    return splice(p, y, ey.other(y), side_path(y), false);
  }
  // Rescue: y has no free block edge, but two consecutive vertices u, v of the
  // path lie in N_B(y); the hanging part at y is threaded between them.
  auto uv = [&](const std::vector<Vertex>& p) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (bg.has_edge(p[i], y) && bg.has_edge(p[i + 1], y)) return i;
    return std::nullopt;
  };
  auto w = path_search(bg, x, y, {{x, 1}}, [&](const std::vector<Vertex>& p) { return uv(p).has_value(); });
  auto p = w.sequence;
  std::size_t i = *uv(p);
  const Graph& gy = hang(y);
  std::vector<Vertex> chain;
  if (gy.order() == 2) {
    chain = {smallest_neighbor(gy, y)};
  } else {
    auto cyc = cycle_at(gy, y);
    chain.assign(cyc.begin() + 1, cyc.end());
  }
  std::vector<Vertex> q(p.begin(), p.begin() + i + 1);
  q.insert(q.end(), chain.begin(), chain.end());
  q.insert(q.end(), p.begin() + i + 1, p.end());
  Edge ex = assigned_edge(w, x);
  return splice(q, x, ex.other(x), side_path(x), false);
}

}  // namespace

bool is_ham_cycle_of_square(const Graph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() != g.order() || cycle.size() < 3) return false;
  if (std::set<Vertex>(cycle.begin(), cycle.end()).size() != cycle.size()) return false;
  Graph sq = square(g);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!sq.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

bool is_ham_path_of_square(const Graph& g, const std::vector<Vertex>& path, Vertex x, Vertex y) {
  if (path.size() != g.order() || path.empty() || path.front() != x || path.back() != y) return false;
  if (std::set<Vertex>(path.begin(), path.end()).size() != path.size()) return false;
  Graph sq = square(g);
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!sq.has_edge(path[i], path[i + 1])) return false;
  return true;
}

Witness caterpillar_cycle(const Graph& tree, const std::vector<Vertex>& path) {
  auto tour = caterpillar_tour(tree, path);
  Witness w;
  w.sequence = tour.cycle;
  w.is_cycle = true;
  return w;
}

BlockCycle block_cycle(const Graph& block, std::size_t index, const std::vector<std::pair<Vertex, int>>& m) {
  EdgeConstrainedSearch s;
  s.host = square(block);
  s.original = block;
  for (const auto& [c, k] : m)
    if (k > 0) s.demands.push_back({c, k});
  auto r = find_ham_cycle(s);
  if (!r.found()) throw Error("no cycle of B^2 carries the labelled block edges");
  BlockCycle bc;
  bc.block = index;
  bc.cycle = r.witness->sequence;
  bc.owned = r.witness->assigned;
  return bc;
}

namespace {

class CycleBuilder {
 public:
  CycleBuilder(const Graph& g, const BlockDecomposition& d, const Labelling& l) : g_(g), d_(d), l_(l) {}

  CycleConstruction run() {
    sq_ = square(g_);
    for (std::size_t t : d_.two_blocks) {
      std::vector<std::pair<Vertex, int>> m;
      for (Vertex c : d_.cutvertices_in(t)) m.emplace_back(c, l_.get(c, t));
      auto bc = block_cycle(d_.blocks[t].as_graph(), t, m);
      for (const auto& [c, e] : bc.owned) owned_[c].insert(e);
      cycles_.push_back(bc.cycle);
      out_.block_cycles.push_back(std::move(bc));
    }
    add_p0_pieces();
    for (Vertex i : d_.cutvertices)
      if (d_.k_of(i) >= 1) merge_at(i);
    std::vector<std::vector<Vertex>> alive;
    for (auto& c : cycles_)
      if (!c.empty()) alive.push_back(c);
    if (alive.size() != 1) throw Error("construction left more than one cycle");
    out_.witness.sequence = alive.front();
    out_.witness.is_cycle = true;
    if (!is_ham_cycle_of_square(g_, out_.witness.sequence)) throw Error("constructed sequence is not a hamiltonian cycle");
    return out_;
  }

 private:
  bool attached(Vertex v) const { return d_.k_of(v) >= 1; }

  void add_p0_pieces() {
    auto p0 = compute_p0(g_, d_);
    for (const auto& comp : p0.components) {
      std::vector<Vertex> att;
      for (Vertex v : comp.vertices)
        if (attached(v)) att.push_back(v);
      if (att.empty()) throw Error("P0 component not attached to a 2-block");
      if (comp.vertices.size() == 1) continue;
      if (comp.vertices.size() == 2) {
        Vertex a = comp.vertices[0], b = comp.vertices[1];
        if (att.size() == 2) {
          partner_[a] = b;
          partner_[b] = a;
        } else {
          Vertex other = att[0] == a ? b : a;
          leaves_[att[0]].push_back(other);
        }
        continue;
      }
      if (att.size() == 1 && d_.bn_of(att[0]) == 0) {
        for (Vertex v : comp.vertices)
          if (v != att[0]) leaves_[att[0]].push_back(v);
        continue;
      }
      add_caterpillar(comp, att);
    }
  }

  // Chooses end leaves so that each attached vertex with bn = 1 owns an end
  // edge, and registers the neighbour-pair edges of those with bn = 2.
  void add_caterpillar(const P0Component& comp, const std::vector<Vertex>& att) {
    Graph t = comp.as_graph();
    std::vector<Vertex> spine = comp.spine;
    std::vector<Vertex> need;
    for (Vertex a : att)
      if (d_.bn_of(a) == 1) need.push_back(a);
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<Vertex> sp = spine;
      if (flip) std::reverse(sp.begin(), sp.end());
      for (Vertex x1 : t.neighbors(sp.front())) {
        if (t.degree(x1) != 1) continue;
        for (Vertex xm : t.neighbors(sp.back())) {
          if (t.degree(xm) != 1 || xm == x1) continue;
          Edge e1(x1, sp.front()), e2(sp.back(), xm);
          std::vector<std::pair<Vertex, Edge>> assign;
          bool ok = need.size() <= 2;
          if (ok && need.size() == 2) {
            if (e1.contains(need[0]) && e2.contains(need[1]))
              assign = {{need[0], e1}, {need[1], e2}};
            else if (e2.contains(need[0]) && e1.contains(need[1]))
              assign = {{need[0], e2}, {need[1], e1}};
            else
              ok = false;
          } else if (ok && need.size() == 1) {
            if (e1.contains(need[0]))
              assign = {{need[0], e1}};
            else if (e2.contains(need[0]))
              assign = {{need[0], e2}};
            else
              ok = false;
          }
          if (!ok) continue;
          std::vector<Vertex> path{x1};
          path.insert(path.end(), sp.begin(), sp.end());
          path.push_back(xm);
          auto tour = caterpillar_tour(t, path);
          for (const auto& [a, e] : assign) owned_[a].insert(e);
          for (const auto& [s, e] : tour.neighbor_pairs)
            if (attached(s) && d_.bn_of(s) == 2) owned_[s].insert(e);
          cycles_.push_back(tour.cycle);
          return;
        }
      }
    }
    throw Error("no longest path gives every attached vertex an end edge");
  }

  // Path of the cycle from the neighbour `from` of i round to `to`, without i.
  static std::vector<Vertex> arc(const std::vector<Vertex>& cycle, Vertex i, Vertex from) {
    auto r = orient(cycle, i, from);
    return {r.begin() + 1, r.end()};
  }

  void merge_at(Vertex i) {
    struct Piece {
      std::size_t idx;
      Vertex p, q;  // owned neighbour, other neighbour
    };
    std::vector<std::size_t> m2;
    std::vector<Piece> m1;
    std::optional<std::size_t> host;
    std::optional<Edge> host_edge;
    const auto& own = owned_[i];
    for (std::size_t idx = 0; idx < cycles_.size(); ++idx) {
      const auto& c = cycles_[idx];
      if (c.empty() || std::find(c.begin(), c.end(), i) == c.end()) continue;
      auto r = rotate_to(c, i);
      Vertex a = r[1], b = r.back();
      bool oa = own.count(Edge(i, a)) > 0, ob = own.count(Edge(i, b)) > 0;
      if (oa && ob) {
        m2.push_back(idx);
      } else if (oa || ob) {
        m1.push_back({idx, oa ? a : b, oa ? b : a});
      } else {
        for (const Edge& e : own)
          if (!e.contains(i)) {
            for (std::size_t k = 0; k < c.size(); ++k)
              if (Edge(c[k], c[(k + 1) % c.size()]) == e) host_edge = e;
          }
        if (!host_edge || host) throw Error("cutvertex has no reserved edge on a cycle through it");
        host = idx;
      }
    }
    std::vector<Vertex> extra = leaves_[i];
    std::optional<Vertex> partner;
    if (auto it = partner_.find(i); it != partner_.end() && !processed_.count(it->second)) partner = it->second;

    std::vector<Vertex> merged;
    std::ostringstream step;
    step << "merge at " << i << ": " << m2.size() << " cycle(s) with two reserved edges, " << m1.size()
         << " with one";
    if (host) {
      if (!m1.empty() || !extra.empty() || partner) throw Error("unexpected pieces at a caterpillar spine vertex");
      std::vector<Vertex> chain;
      for (std::size_t idx : m2) {
        auto r = rotate_to(cycles_[idx], i);
        chain.insert(chain.end(), r.begin() + 1, r.end());
      }
      // The host contains i; the chain is threaded through the pair edge u-v.
      auto pos = std::find(chain.begin(), chain.end(), i);
      if (pos != chain.end()) throw Error("chain repeats cutvertex");
      merged = insert_between(cycles_[*host], host_edge->u, host_edge->v, chain);
      step << ", threaded through " << host_edge->u << "-" << host_edge->v;
    } else {
      if (m1.size() > 2) throw Error("more than two cycles reach the cutvertex through one reserved edge");
      merged.push_back(i);
      if (!m1.empty()) {
        auto a = arc(cycles_[m1[0].idx], i, m1[0].q);
        merged.insert(merged.end(), a.begin(), a.end());
      }
      for (std::size_t idx : m2) {
        auto r = rotate_to(cycles_[idx], i);
        merged.insert(merged.end(), r.begin() + 1, r.end());
      }
      merged.insert(merged.end(), extra.begin(), extra.end());
      if (partner) {
        if (m1.size() > 1) throw Error("bridge partner cannot close the cycle");
        merged.push_back(*partner);
        owned_[*partner].insert(Edge(i, *partner));
        step << ", bridge partner " << *partner;
      }
      if (m1.size() == 2) {
        auto a = arc(cycles_[m1[1].idx], i, m1[1].p);
        merged.insert(merged.end(), a.begin(), a.end());
      }
      if (!extra.empty()) step << ", " << extra.size() << " leaves";
    }
    for (std::size_t k = 0; k < merged.size(); ++k)
      if (merged.size() > 1 && !sq_.has_edge(merged[k], merged[(k + 1) % merged.size()]))
        throw Error("merged sequence leaves the square");
    for (std::size_t idx : m2) cycles_[idx].clear();
    for (const auto& pc : m1) cycles_[pc.idx].clear();
    if (host) cycles_[*host].clear();
    cycles_.push_back(std::move(merged));
    processed_.insert(i);
    out_.steps.push_back(step.str());
    check_invariant();
  }

  void check_invariant() {
    std::set<Edge> present;
    for (const auto& c : cycles_)
      for (std::size_t k = 0; k < c.size() && c.size() > 1; ++k) present.insert(Edge(c[k], c[(k + 1) % c.size()]));
    for (const auto& [j, es] : owned_) {
      if (processed_.count(j) || !attached(j)) continue;
      for (const Edge& e : es)
        if (!present.count(e)) out_.merge_invariant_held = false;
    }
  }

  const Graph& g_;
  const BlockDecomposition& d_;
  const Labelling& l_;
  Graph sq_;
  std::vector<std::vector<Vertex>> cycles_;
  std::map<Vertex, std::set<Edge>> owned_;
  std::map<Vertex, std::vector<Vertex>> leaves_;
  std::map<Vertex, Vertex> partner_;
  std::set<Vertex> processed_;
  CycleConstruction out_;
};

}  // namespace

CycleConstruction construct_ham_cycle(const Graph& g, const Labelling& l) {
  if (g.order() < 3) throw PreconditionError("construct_ham_cycle: needs at least three vertices");
  if (!is_connected(g)) throw PreconditionError("construct_ham_cycle: graph is not connected");
  auto d = decompose(g);
  CycleConstruction out;
  if (d.two_blocks.empty()) {
    if (!is_caterpillar(g)) throw PreconditionError("construct_ham_cycle: tree is not a caterpillar");
    out.witness = caterpillar_cycle(g, longest_path_double_bfs(g));
    return out;
  }
  if (d.blocks.size() == 1) {
    out.block_cycles.push_back(block_cycle(g, 0, {}));
    out.witness.sequence = out.block_cycles.front().cycle;
    out.witness.is_cycle = true;
    return out;
  }
  if (!check_conditions(d, l).empty())
    throw PreconditionError("construct_ham_cycle: labelling violates conditions 1)-6)");
  return CycleBuilder(g, d, l).run();
}

Witness construct_ham_path(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw PreconditionError("construct_ham_path: endpoints must differ");
  if (!g.has_vertex(x) || !g.has_vertex(y)) throw PreconditionError("construct_ham_path: unknown vertex");
  if (!is_connected(g)) throw PreconditionError("construct_ham_path: graph is not connected");
  auto d = decompose(g);
  if (!d.nontrivial_bridges.empty()) throw PreconditionError("construct_ham_path: graph has a nontrivial bridge");
  for (int c : d.cvn)
    if (c > 2) throw PreconditionError("construct_ham_path: a block has more than two cutvertices");
  Witness w;
  w.sequence = ham_path_rec(g, x, y);
  if (!is_ham_path_of_square(g, w.sequence, x, y)) throw Error("constructed sequence is not a hamiltonian path");
  return w;
}

}  // namespace sqham
