#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sqham/graph.hpp"

namespace sqham {

enum class ReplacementKind {
  K2k,           // K_{2,k}; the k cutvertices become the 2-valent vertices
  Cycle,         // C_k on the cutvertices (C_3 with one fresh vertex when k = 2)
  K23TwoMarked,  // K_{2,3}; two of the 2-valent vertices are the cutvertices
};

std::string to_string(ReplacementKind k);

/// Exchange of one 2-block for a special 2-block exposing the same cutvertices.
struct BlockExchange {
  std::size_t block = 0;
  ReplacementKind kind = ReplacementKind::Cycle;
  std::vector<Vertex> attach;  // the cutvertices of G in the block, ascending
};

struct SubstitutionRecipe {
  int condition = 0;  // 5 or 6 for labelling failures, 0 for the connectedness case
  std::vector<BlockExchange> exchanges;
};

}  // namespace sqham
