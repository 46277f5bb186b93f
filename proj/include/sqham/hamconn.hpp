#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqham/decomposition.hpp"
#include "sqham/graph.hpp"
#include "sqham/oracle.hpp"
#include "sqham/recipe.hpp"

namespace sqham {

enum class HcOutcome { HamConnected, NotHamConnected, StructurallyRisky };

std::string to_string(HcOutcome o);

struct HcVerdict {
  HcOutcome outcome = HcOutcome::HamConnected;
  std::string reason;
  std::optional<Edge> bridge;                 // NOT_HAM_CONNECTED witness
  std::optional<std::size_t> risky_block;     // first block with cvn > 2
  std::vector<std::size_t> risky_blocks;      // every peeled block with cvn > 2
  std::vector<std::size_t> peel_trace;        // innerblocks in removal order
  std::optional<SubstitutionRecipe> recipe;
};

/// Decides hamiltonian connectedness of G^2 by peeling endblocks of G minus
/// its endblocks. Throws PreconditionError for disconnected graphs or |V| < 2.
HcVerdict algorithm2(const Graph& g);
HcVerdict algorithm2(const Graph& g, const BlockDecomposition& d);

/// Hamiltonian x-y path of G^2, searched exhaustively.
SearchResult check_pair_path(const Graph& g, Vertex x, Vertex y, std::uint64_t node_budget = 0);

/// True iff the block-cutvertex tree of g is a path.
bool is_block_chain(const BlockDecomposition& d);

}  // namespace sqham
