#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sqham/graph.hpp"
#include "sqham/hamconn.hpp"
#include "sqham/labelling.hpp"
#include "sqham/oracle.hpp"
#include "sqham/recipe.hpp"

namespace sqham {

/// Centre 0 with plugs[0] hung at it and plugs[1..3] each joined to it by a
/// bridge. Each plug attaches at its smallest vertex. bn(0) = 3.
Graph gen_bn3(const std::array<Graph, 4>& plugs);
Graph gen_bn3();  // all plugs K2

/// Exchanges the blocks named by the recipe. Cutvertices keep their
/// identifiers; new vertices get fresh identifiers above max_vertex().
/// Throws PreconditionError on an attachment mismatch.
Graph substitute(const Graph& g, const SubstitutionRecipe& r);

/// C_r on 0..r-1 with plugs[j] hung at j. Throws PreconditionError for r < 3.
Graph gen_hc_counterexample(int r, const std::vector<Graph>& plugs);
Graph gen_hc_counterexample(int r);  // all plugs K2

/// Applies the recipe, then replaces every other 2-block by a cycle through its
/// cutvertices; the block-cutvertex tree is unchanged.
Graph minimal_instantiation(const Graph& g, const SubstitutionRecipe& r);

struct Counterexample {
  Graph skeleton;
  Graph graph;
  std::optional<SubstitutionRecipe> recipe;
  bool bc_isomorphic = false;
  /// The oracle found no hamiltonian cycle (or, for hamiltonian connectedness,
  /// no hamiltonian path between `failing_pair`).
  bool certified = false;
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<Edge> failing_pair;
  std::uint64_t nodes = 0;
};

/// For NOT_HAMILTONIAN and STRUCTURALLY_RISKY verdicts on g. Throws
/// PreconditionError for HAMILTONIAN.
Counterexample counterexample_for(const Graph& g, const HamVerdict& v, std::uint64_t node_budget = 0);
/// For NOT_HAM_CONNECTED and STRUCTURALLY_RISKY verdicts on g. Throws
/// PreconditionError for HAM_CONNECTED.
Counterexample counterexample_for(const Graph& g, const HcVerdict& v, std::uint64_t node_budget = 0);

/// Named minimal families with K2 plugs.
enum class Figure { A, B, C, D, E1, E2, HC };

std::string to_string(Figure f);
std::optional<Figure> figure_from_string(const std::string& s);
std::vector<Figure> all_figures();

/// Input graph whose verdict triggers the family; for A it is the family
/// member itself.
Graph figure_skeleton(Figure f);
/// Skeleton, verdict, exchange and oracle certificate in one step.
Counterexample figure_instance(Figure f, std::uint64_t node_budget = 0);

}  // namespace sqham
