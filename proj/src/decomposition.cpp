#include "sqham/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stack>

namespace sqham {

bool Block::contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

int BlockDecomposition::bn_of(Vertex v) const {
  auto it = bn.find(v);
  return it == bn.end() ? 0 : it->second;
}

int BlockDecomposition::k_of(Vertex v) const {
  auto it = k.find(v);
  return it == k.end() ? 0 : it->second;
}

std::vector<Vertex> BlockDecomposition::cutvertices_in(std::size_t b) const {
  std::vector<Vertex> out;
  for (Vertex v : blocks[b].vertices)
    if (cutvertices.count(v)) out.push_back(v);
  return out;
}

namespace {

// Hopcroft-Tarjan over an index-mapped copy of the graph, iterative so deep
// paths do not exhaust the call stack.
std::vector<std::vector<Edge>> biconnected_edge_sets(const Graph& g) {
  const auto verts = g.vertices();
  const std::size_t n = verts.size();
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[verts[i]] = i;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex w : g.neighbors(verts[i])) adj[i].push_back(index[w]);

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::vector<Edge>> out;
  std::vector<std::pair<std::size_t, std::size_t>> edge_stack;
  int timer = 0;

  struct Frame {
    std::size_t v;
    std::size_t parent;
    std::size_t next = 0;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, n, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        std::size_t w = adj[f.v][f.next++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      std::size_t v = f.v, p = f.parent;
      stack.pop_back();
      if (p == n) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<Edge> comp;
        while (true) {
          auto [a, b] = edge_stack.back();
          edge_stack.pop_back();
          comp.emplace_back(verts[a], verts[b]);
          if (a == p && b == v) break;
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace

BlockDecomposition decompose(const Graph& g) {
  if (g.empty()) throw PreconditionError("decompose: empty graph");
  if (!is_connected(g)) throw PreconditionError("decompose: graph is not connected");

  BlockDecomposition d;
  d.graph = g;
  for (auto& edges : biconnected_edge_sets(g)) {
    Block b;
    std::set<Vertex> vs;
    for (const Edge& e : edges) {
      vs.insert(e.u);
      vs.insert(e.v);
    }
    b.vertices.assign(vs.begin(), vs.end());
    b.edges = std::move(edges);
    d.blocks.push_back(std::move(b));
  }
  std::sort(d.blocks.begin(), d.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

  std::map<Vertex, int> membership;
  for (const Block& b : d.blocks)
    for (Vertex v : b.vertices) ++membership[v];
  for (auto [v, count] : membership)
    if (count >= 2) d.cutvertices.insert(v);

  d.cvn.assign(d.blocks.size(), 0);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const Block& b = d.blocks[i];
    if (b.is_two_block()) d.two_blocks.push_back(i);
    for (Vertex v : b.vertices) {
      if (!d.cutvertices.count(v)) continue;
      ++d.cvn[i];
      d.blocks_of[v].push_back(i);
      if (b.is_two_block()) ++d.k[v];
    }
    if (!b.is_two_block()) {
      const Edge& e = b.edges.front();
      bool trivial = g.degree(e.u) == 1 || g.degree(e.v) == 1;
      (trivial ? d.trivial_bridges : d.nontrivial_bridges).push_back(e);
    }
  }
  for (Vertex c : d.cutvertices) {
    d.bn[c] = 0;
    d.k.try_emplace(c, 0);
  }
  for (const Edge& e : d.nontrivial_bridges) {
    ++d.bn[e.u];
    ++d.bn[e.v];
  }
  return d;
}

std::string BcTree::to_dot() const {
  std::ostringstream os;
  os << "graph bc {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const BcNode& n = nodes[i];
    if (n.kind == BcNode::Kind::Block)
      os << "  n" << i << " [shape=box, label=\"B" << n.block << (n.two_block ? "" : " (bridge)") << "\"];\n";
    else
      os << "  n" << i << " [shape=circle, label=\"" << n.cut << "\"];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j : adj[i])
      if (i < j) os << "  n" << i << " -- n" << j << ";\n";
  os << "}\n";
  return os.str();
}

BcTree bc_tree(const BlockDecomposition& d) {
  BcTree t;
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    t.nodes.push_back({BcNode::Kind::Block, i, 0, d.blocks[i].is_two_block()});
  std::map<Vertex, std::size_t> cut_node;
  for (Vertex c : d.cutvertices) {
    cut_node[c] = t.nodes.size();
    t.nodes.push_back({BcNode::Kind::Cut, 0, c, false});
  }
  t.adj.resize(t.nodes.size());
  for (const auto& [c, blocks] : d.blocks_of) {
    for (std::size_t b : blocks) {
      t.adj[cut_node[c]].push_back(b);
      t.adj[b].push_back(cut_node[c]);
    }
  }
  for (auto& a : t.adj) std::sort(a.begin(), a.end());
  return t;
}

namespace {

std::string node_tag(const BcNode& n) {
  if (n.kind == BcNode::Kind::Cut) return "c";
  return n.two_block ? "B" : "b";
}

std::string ahu(const BcTree& t, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (std::size_t w : t.adj[v])
    if (w != parent) kids.push_back(ahu(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + node_tag(t.nodes[v]);
  for (auto& k : kids) s += k;
  return s + ")";
}

std::vector<std::size_t> tree_centers(const BcTree& t) {
  const std::size_t n = t.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = t.adj[i].size();
    if (deg[i] <= 1) layer.push_back(i);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer)
      for (std::size_t w : t.adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string bc_canonical_form(const BcTree& t) {
  if (t.size() == 0) return "()";
  std::string best;
  for (std::size_t c : tree_centers(t)) {
    std::string s = ahu(t, c, t.size());
    if (best.empty() || s < best) best = s;
  }
  return best;
}

bool bc_isomorphic(const BcTree& a, const BcTree& b) {
  return a.size() == b.size() && bc_canonical_form(a) == bc_canonical_form(b);
}

Graph P0Component::as_graph() const {
  Graph g;
  for (Vertex v : vertices) g.add_vertex(v);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool CaterpillarAnalysis::all_caterpillars() const {
  return std::all_of(components.begin(), components.end(),
                     [](const P0Component& c) { return c.is_caterpillar; });
}

namespace {

// BFS from `src`; returns the farthest vertex (smallest identifier on ties) and
// the parent map. Neighbours are visited in ascending order.
std::pair<Vertex, std::map<Vertex, Vertex>> bfs_farthest(const Graph& t, Vertex src) {
  std::map<Vertex, int> dist{{src, 0}};
  std::map<Vertex, Vertex> parent;
  std::deque<Vertex> q{src};
  Vertex best = src;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best)) best = v;
    for (Vertex w : t.neighbors(v)) {
      if (dist.count(w)) continue;
      dist[w] = dist[v] + 1;
      parent[w] = v;
      q.push_back(w);
    }
  }
  return {best, parent};
}

}  // namespace

std::vector<Vertex> longest_path_double_bfs(const Graph& tree) {
  if (tree.empty()) return {};
  auto [a, unused] = bfs_farthest(tree, tree.vertices().front());
  auto [b, parent] = bfs_farthest(tree, a);
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent.at(path.back()));
  if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  return path;
}

bool is_caterpillar(const Graph& tree) {
  if (tree.size() + 1 != tree.order() || !is_connected(tree)) return false;
  // Every vertex may have at most two non-leaf neighbours.
  for (Vertex v : tree.vertices()) {
    int inner = 0;
    for (Vertex w : tree.neighbors(v))
      if (tree.degree(w) > 1) ++inner;
    if (tree.degree(v) > 1 && inner > 2) return false;
  }
  return true;
}

CaterpillarAnalysis compute_p0(const Graph& g, const BlockDecomposition& d) {
  Graph union_two_blocks;
  for (std::size_t b : d.two_blocks)
    for (const Edge& e : d.blocks[b].edges) union_two_blocks.add_edge(e.u, e.v);

  CaterpillarAnalysis out;
  out.p0 = subtract(g, union_two_blocks);
  for (const auto& verts : connected_components(out.p0)) {
    P0Component c;
    c.vertices = verts;
    std::set<Vertex> keep(verts.begin(), verts.end());
    Graph sub = induced_subgraph(out.p0, keep);
    c.edges = sub.edges();
    c.is_tree = sub.size() + 1 == sub.order();
    c.is_caterpillar = c.is_tree && is_caterpillar(sub);
    if (c.is_tree) c.longest_path = longest_path_double_bfs(sub);
    if (c.is_caterpillar && c.longest_path.size() >= 3)
      c.spine.assign(c.longest_path.begin() + 1, c.longest_path.end() - 1);
    out.components.push_back(std::move(c));
  }
  return out;
}

CaterpillarTour caterpillar_tour(const Graph& tree, const std::vector<Vertex>& path) {
  const std::size_t m = path.size();
  if (m < 3) throw PreconditionError("caterpillar tour needs at least three vertices");
  if (!is_caterpillar(tree)) throw PreconditionError("caterpillar tour: input is not a caterpillar");
  for (std::size_t j = 0; j + 1 < m; ++j)
    if (!tree.has_edge(path[j], path[j + 1])) throw PreconditionError("caterpillar tour: not a path of the tree");
  if (tree.degree(path.front()) != 1 || tree.degree(path.back()) != 1)
    throw PreconditionError("caterpillar tour: path must end at leaves");

  std::set<Vertex> on_path(path.begin(), path.end());
  if (on_path.size() != m) throw PreconditionError("caterpillar tour: repeated vertex on path");
  // leaves[j] for the 0-based internal index j.
  std::vector<std::vector<Vertex>> leaves(m);
  std::size_t covered = m;
  for (std::size_t j = 1; j + 1 < m; ++j) {
    for (Vertex w : tree.neighbors(path[j])) {
      if (on_path.count(w)) continue;
      if (tree.degree(w) != 1) throw PreconditionError("caterpillar tour: path is not a longest path");
      leaves[j].push_back(w);
      ++covered;
    }
  }
  if (covered != tree.order()) throw PreconditionError("caterpillar tour: path is not a longest path");

  // 1-based index i = j + 1: even i on the outward pass, odd i on the return.
  auto outward = [](std::size_t j) { return (j + 1) % 2 == 0; };
  CaterpillarTour tour;
  auto& c = tour.cycle;
  c.push_back(path[0]);
  for (std::size_t j = 1; j + 1 < m; ++j) {
    if (outward(j))
      c.push_back(path[j]);
    else
      c.insert(c.end(), leaves[j].begin(), leaves[j].end());
  }
  c.push_back(path[m - 1]);
  for (std::size_t j = m - 2; j >= 1; --j) {
    if (outward(j))
      c.insert(c.end(), leaves[j].begin(), leaves[j].end());
    else
      c.push_back(path[j]);
  }
  tour.first_end = Edge(path[0], path[1]);
  tour.last_end = Edge(path[m - 2], path[m - 1]);
  for (std::size_t j = 1; j + 1 < m; ++j) {
    Vertex partner;
    if (outward(j)) {
      partner = leaves[j].empty() ? path[j - 1] : leaves[j].front();
      tour.neighbor_pairs.emplace_back(path[j], Edge(path[j + 1], partner));
    } else {
      partner = leaves[j].empty() ? path[j + 1] : leaves[j].front();
      tour.neighbor_pairs.emplace_back(path[j], Edge(path[j - 1], partner));
    }
  }
  return tour;
}

SpineEdges caterpillar_spine_edges(const CaterpillarAnalysis& c, std::size_t component) {
  if (component >= c.components.size()) throw PreconditionError("no such P0 component");
  const P0Component& comp = c.components[component];
  if (comp.vertices.size() < 3) throw PreconditionError("component has fewer than three vertices");
  if (!comp.is_caterpillar) throw PreconditionError("component is not a caterpillar");
  auto tour = caterpillar_tour(comp.as_graph(), comp.longest_path);
  return {tour.first_end, tour.last_end, tour.neighbor_pairs};
}

}  // namespace sqham
