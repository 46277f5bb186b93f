#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sqham/decomposition.hpp"
#include "sqham/graph.hpp"
#include "sqham/labelling.hpp"
#include "sqham/oracle.hpp"

namespace sqham {

/// Hamiltonian cycle of T^2 through both end edges of `path` and one
/// neighbour-pair edge per internal path vertex. `path` must be a longest path.
Witness caterpillar_cycle(const Graph& tree, const std::vector<Vertex>& path);

struct BlockCycle {
  std::size_t block = 0;
  std::vector<Vertex> cycle;
  /// Edges of the block on the cycle reserved for each cutvertex; distinct,
  /// and exactly m_i(B) of them for cutvertex i.
  std::vector<std::pair<Vertex, Edge>> owned;
};

/// Hamiltonian cycle of B^2 carrying m_i(B) distinct block edges at each listed
/// cutvertex. Throws Error if no such cycle exists.
BlockCycle block_cycle(const Graph& block, std::size_t index, const std::vector<std::pair<Vertex, int>>& m);

struct CycleConstruction {
  Witness witness;
  std::vector<BlockCycle> block_cycles;
  /// One line per merge at a cutvertex.
  std::vector<std::string> steps;
  /// Every merge kept the reserved edges of all cutvertices not yet merged.
  bool merge_invariant_held = true;
};

/// Assembles a hamiltonian cycle of G^2 from per-block cycles, caterpillar
/// tours and leaves by merging at each cutvertex. Requires
/// check_conditions(g, l) to be empty and |V| >= 3.
CycleConstruction construct_ham_cycle(const Graph& g, const Labelling& l);

/// Hamiltonian x-y path of G^2 built inductively over the blocks. Requires G
/// to have no nontrivial bridge and at most two cutvertices per block.
Witness construct_ham_path(const Graph& g, Vertex x, Vertex y);

/// Structural checks against square(g).
bool is_ham_cycle_of_square(const Graph& g, const std::vector<Vertex>& cycle);
bool is_ham_path_of_square(const Graph& g, const std::vector<Vertex>& path, Vertex x, Vertex y);

}  // namespace sqham
