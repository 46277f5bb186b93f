#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqham/graph.hpp"

namespace sqham::testing {

/// Isomorphism-invariant string for graphs on vertices 0..n-1 (n <= 10).
std::string canonical_form(const Graph& g);

/// Relabels vertices to 0..n-1 in ascending order.
Graph compact(const Graph& g);

/// Non-isomorphic trees with `n` vertices.
std::vector<Graph> trees(int n);

/// Non-isomorphic connected graphs with `n` vertices (n <= 7).
std::vector<Graph> connected_graphs(int n);

/// Non-isomorphic 2-connected graphs with `n` vertices (3 <= n <= 7).
std::vector<Graph> two_connected_graphs(int n);

/// Connected graphs glued from blocks in {K2, C3, C4, K4, K2,3} with at most
/// `max_vertices` vertices and at most `max_cuts` cutvertices.
std::vector<Graph> glued_graphs(int max_vertices, int max_cuts);

/// Trees with 3..8 vertices plus glued graphs (<= 8 vertices, <= 3
/// cutvertices), deduplicated.
const std::vector<Graph>& structured_corpus();

/// Caterpillars with `n` vertices.
std::vector<Graph> caterpillars(int n);

/// Random bijection of the vertices onto 0..n-1 (or a shifted range).
Graph random_relabel(const Graph& g, std::uint64_t seed);

}  // namespace sqham::testing
