#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sqham/graph.hpp"

namespace sqham {

/// A block is either a 2-block (more than two vertices) or a bridge.
struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted

  bool is_two_block() const { return vertices.size() > 2; }
  bool contains(Vertex v) const;
  Graph as_graph() const { return graph_from_edges(edges); }
};

struct BlockDecomposition {
  Graph graph;
  /// Blocks ordered lexicographically by their sorted vertex lists.
  std::vector<Block> blocks;
  std::vector<std::size_t> two_blocks;
  std::set<Vertex> cutvertices;
  std::vector<Edge> trivial_bridges;
  std::vector<Edge> nontrivial_bridges;
  std::map<Vertex, int> bn;  // nontrivial bridges at each cutvertex
  std::map<Vertex, int> k;   // 2-blocks containing each cutvertex
  std::vector<int> cvn;      // cutvertices of G in each block
  std::map<Vertex, std::vector<std::size_t>> blocks_of;  // cutvertex -> blocks containing it

  bool is_endblock(std::size_t b) const { return blocks.size() == 1 || cvn[b] <= 1; }
  bool is_leaf(Vertex v) const { return graph.degree(v) == 1; }
  int bn_of(Vertex v) const;
  int k_of(Vertex v) const;
  std::vector<Vertex> cutvertices_in(std::size_t b) const;
};

/// Blocks, cutvertices and bridges of a connected graph. Throws PreconditionError
/// on a disconnected or empty input.
BlockDecomposition decompose(const Graph& g);

struct BcNode {
  enum class Kind { Block, Cut };
  Kind kind = Kind::Block;
  std::size_t block = 0;  // valid for Kind::Block
  Vertex cut = 0;         // valid for Kind::Cut
  bool two_block = false;
};

struct BcTree {
  std::vector<BcNode> nodes;
  std::vector<std::vector<std::size_t>> adj;

  std::size_t size() const { return nodes.size(); }
  std::string to_dot() const;
};

BcTree bc_tree(const BlockDecomposition& d);

/// Tag-preserving tree isomorphism (block/cutvertex bipartition and 2-block vs
/// bridge tags), decided by comparing AHU canonical forms rooted at the centres.
bool bc_isomorphic(const BcTree& a, const BcTree& b);
std::string bc_canonical_form(const BcTree& t);

struct P0Component {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  bool is_tree = false;
  bool is_caterpillar = false;
  /// Non-leaf vertices in path order; empty for K1 and K2.
  std::vector<Vertex> spine;
  /// A longest path x1..xm found by double BFS, smallest identifiers on ties.
  std::vector<Vertex> longest_path;

  Graph as_graph() const;
};

struct CaterpillarAnalysis {
  Graph p0;
  std::vector<P0Component> components;
  bool all_caterpillars() const;
};

/// P0 = G - (union of the 2-blocks), split into components and classified.
CaterpillarAnalysis compute_p0(const Graph& g, const BlockDecomposition& d);

bool is_caterpillar(const Graph& tree);
std::vector<Vertex> longest_path_double_bfs(const Graph& tree);

/// Hamiltonian tour of T^2 for a caterpillar T along a longest path x1..xm.
/// Odd-indexed internal spine vertices are visited on the way out, even ones on
/// the way back, with the hanging leaves interleaved on the opposite pass.
struct CaterpillarTour {
  std::vector<Vertex> cycle;
  Edge first_end;
  Edge last_end;
  /// For each internal spine vertex x_j: an edge u_j v_j of the tour with
  /// u_j, v_j in N_T(x_j). All of these edges are distinct.
  std::vector<std::pair<Vertex, Edge>> neighbor_pairs;
};

CaterpillarTour caterpillar_tour(const Graph& tree, const std::vector<Vertex>& path);

struct SpineEdges {
  Edge first_end;
  Edge last_end;
  std::vector<std::pair<Vertex, Edge>> neighbor_pairs;
};

/// End edges of the recorded longest path and one neighbour-pair edge per
/// internal spine vertex. Throws PreconditionError for components with fewer
/// than three vertices or that are not caterpillars.
SpineEdges caterpillar_spine_edges(const CaterpillarAnalysis& c, std::size_t component);

}  // namespace sqham
