#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqham {

using Vertex = std::int64_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when an input violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Simple undirected graph over non-negative integer vertex identifiers.
class Graph {
 public:
  Graph() = default;

  void add_vertex(Vertex v);
  /// Adds {u, v}; duplicates collapse. Throws PreconditionError on a self-loop.
  void add_edge(Vertex u, Vertex v);

  bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  const std::set<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const;
  bool empty() const { return adj_.empty(); }

  std::vector<Vertex> vertices() const;
  std::vector<Edge> edges() const;
  Vertex max_vertex() const;

  bool operator==(const Graph&) const = default;

 private:
  std::map<Vertex, std::set<Vertex>> adj_;
};

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// G plus an edge between every pair of vertices at distance two.
Graph square(const Graph& g);

/// G - H: drop the edges of H, then the vertices of H whose degree in H equals
/// their degree in G.
Graph subtract(const Graph& g, const Graph& h);

std::string to_dot(const Graph& g, const EdgeSet& highlight = {});

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_subgraph(const Graph& h, const Graph& g);

Graph graph_from_edges(const std::vector<Edge>& edges);
Graph induced_subgraph(const Graph& g, const std::set<Vertex>& keep);
Graph relabel(const Graph& g, const std::map<Vertex, Vertex>& mapping);

// Small named graphs used throughout the tests and generators.
Graph path_graph(int n, Vertex first = 0);
Graph cycle_graph(int n, Vertex first = 0);
Graph complete_graph(int n, Vertex first = 0);
Graph complete_bipartite(int a, int b, Vertex first = 0);

}  // namespace sqham
