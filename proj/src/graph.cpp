#include "sqham/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace sqham {

namespace {

const std::set<Vertex> kNoNeighbors;

std::optional<Vertex> parse_vertex(std::string_view token) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || v < 0) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

void Graph::add_vertex(Vertex v) {
  if (v < 0) throw PreconditionError("negative vertex identifier " + std::to_string(v));
  adj_[v];
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  add_vertex(u);
  add_vertex(v);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  return it == adj_.end() ? kNoNeighbors : it->second;
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (const auto& [v, nb] : adj_) twice += nb.size();
  return twice / 2;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj_.size());
  for (const auto& [v, nb] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (const auto& [v, nb] : adj_)
    for (Vertex w : nb)
      if (v < w) out.emplace_back(v, w);
  return out;
}

Vertex Graph::max_vertex() const { return adj_.empty() ? -1 : adj_.rbegin()->first; }

Graph parse_graph(std::string_view text) {
  Graph g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() > 2) throw ParseError(line_no, "expected one or two vertex identifiers");
    std::vector<Vertex> ids;
    for (auto t : tokens) {
      auto v = parse_vertex(t);
      if (!v) throw ParseError(line_no, "invalid vertex identifier '" + std::string(t) + "'");
      ids.push_back(*v);
    }
    if (ids.size() == 1) {
      g.add_vertex(ids[0]);
    } else {
      if (ids[0] == ids[1]) throw ParseError(line_no, "self-loop at vertex " + std::to_string(ids[0]));
      g.add_edge(ids[0], ids[1]);
    }
    if (end == text.size()) break;
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0) os << v << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph square(const Graph& g) {
  Graph sq;
  for (Vertex v : g.vertices()) {
    sq.add_vertex(v);
    for (Vertex w : g.neighbors(v)) {
      sq.add_edge(v, w);
      for (Vertex x : g.neighbors(w))
        if (x != v) sq.add_edge(v, x);
    }
  }
  return sq;
}

Graph subtract(const Graph& g, const Graph& h) {
  if (!is_subgraph(h, g)) throw PreconditionError("subtract: H is not a subgraph of G");
  Graph out;
  for (Vertex v : g.vertices()) {
    if (h.has_vertex(v) && h.degree(v) == g.degree(v)) continue;
    out.add_vertex(v);
  }
  for (const Edge& e : g.edges()) {
    if (h.has_edge(e)) continue;
    out.add_edge(e.u, e.v);
  }
  return out;
}

std::string to_dot(const Graph& g, const EdgeSet& highlight) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v : g.vertices()) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (highlight.count(e)) os << " [style=bold, penwidth=3]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::set<Vertex> seen;
  for (Vertex s : g.vertices()) {
    if (seen.count(s)) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (seen.insert(w).second) queue.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_subgraph(const Graph& h, const Graph& g) {
  for (Vertex v : h.vertices())
    if (!g.has_vertex(v)) return false;
  for (const Edge& e : h.edges())
    if (!g.has_edge(e)) return false;
  return true;
}

Graph graph_from_edges(const std::vector<Edge>& edges) {
  Graph g;
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph induced_subgraph(const Graph& g, const std::set<Vertex>& keep) {
  Graph out;
  for (Vertex v : keep) {
    if (!g.has_vertex(v)) continue;
    out.add_vertex(v);
    for (Vertex w : g.neighbors(v))
      if (keep.count(w)) out.add_edge(v, w);
  }
  return out;
}

Graph relabel(const Graph& g, const std::map<Vertex, Vertex>& mapping) {
  Graph out;
  for (Vertex v : g.vertices()) out.add_vertex(mapping.at(v));
  for (const Edge& e : g.edges()) out.add_edge(mapping.at(e.u), mapping.at(e.v));
  return out;
}

Graph path_graph(int n, Vertex first) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(first + i);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(first + i, first + i + 1);
  return g;
}

Graph cycle_graph(int n, Vertex first) {
  if (n < 3) throw PreconditionError("cycle needs at least three vertices");
  Graph g = path_graph(n, first);
  g.add_edge(first, first + n - 1);
  return g;
}

Graph complete_graph(int n, Vertex first) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(first + i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(first + i, first + j);
  return g;
}

Graph complete_bipartite(int a, int b, Vertex first) {
  Graph g;
  for (int i = 0; i < a + b; ++i) g.add_vertex(first + i);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(first + i, first + a + j);
  return g;
}

}  // namespace sqham
