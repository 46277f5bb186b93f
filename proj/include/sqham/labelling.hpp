#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqham/decomposition.hpp"
#include "sqham/graph.hpp"
#include "sqham/recipe.hpp"

namespace sqham {

/// m_i(B_t) over (cutvertex, 2-block index) pairs; absent entries read as 0.
class Labelling {
 public:
  int get(Vertex cut, std::size_t block) const;
  void set(Vertex cut, std::size_t block, int value);
  bool has(Vertex cut, std::size_t block) const { return m_.count({cut, block}) != 0; }
  const std::map<std::pair<Vertex, std::size_t>, int>& entries() const { return m_; }
  /// Σ_t m_i(B_t) for one cutvertex.
  int row_sum(Vertex cut) const;
  /// Σ_i m_i(B) for one block.
  int column_sum(std::size_t block) const;

  bool operator==(const Labelling&) const = default;

 private:
  std::map<std::pair<Vertex, std::size_t>, int> m_;
};

/// Conditions 1)-6) that `l` violates on `g`, ascending. Entries of `l` must
/// name a cutvertex and a 2-block of `decompose(g)`.
std::vector<int> check_conditions(const Graph& g, const Labelling& l);
std::vector<int> check_conditions(const BlockDecomposition& d, const Labelling& l);

enum class HamOutcome { Hamiltonian, NotHamiltonian, StructurallyRisky };

std::string to_string(HamOutcome o);

/// How a HAMILTONIAN verdict was reached.
enum class HamBasis { None, Caterpillar, SingleTwoBlock, Labelling };

struct TraceStep {
  char rule = '?';  // 'a'..'f'
  std::size_t block = 0;
  std::vector<Vertex> cutvertices;
  std::vector<std::pair<Vertex, int>> values;
  std::string note;
};

struct HamVerdict {
  HamOutcome outcome = HamOutcome::Hamiltonian;
  HamBasis basis = HamBasis::None;
  std::string reason;
  /// Complete for HAMILTONIAN via labelling; partial for STRUCTURALLY_RISKY.
  Labelling labelling;
  /// 4, 5 or 6 for negative and risky outcomes.
  int violated_condition = 0;
  char failing_case = 0;
  std::optional<std::size_t> offending_block;
  std::optional<Vertex> offending_vertex;
  std::optional<SubstitutionRecipe> recipe;
  std::vector<TraceStep> trace;
};

/// Decides hamiltonicity of G^2 from the block-cutvertex structure by building
/// a labelling block by block. Throws PreconditionError if g is disconnected or
/// has fewer than three vertices.
HamVerdict algorithm1(const Graph& g);
HamVerdict algorithm1(const Graph& g, const BlockDecomposition& d);

}  // namespace sqham
