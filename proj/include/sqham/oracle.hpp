#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqham/graph.hpp"

namespace sqham {

/// `count` distinct edges of the original graph must be incident to `vertex`
/// on the cycle/path. Distinctness is across all demands of one search.
struct Demand {
  Vertex vertex = 0;
  int count = 1;
};

struct EdgeConstrainedSearch {
  Graph host;      // usually the square of `original`
  Graph original;  // decides which host edges count as edges of G
  std::vector<Edge> required_edges;
  std::vector<Demand> demands;
  std::optional<std::pair<Vertex, Vertex>> endpoints;  // path mode
  /// Extra acceptance test on a complete candidate sequence.
  std::function<bool(const std::vector<Vertex>&)> accept;
  /// 0 means unlimited; otherwise exhaustion yields SearchStatus::BudgetExceeded.
  std::uint64_t node_budget = 0;
};

struct Witness {
  std::vector<Vertex> sequence;
  bool is_cycle = false;
  /// Distinct original edges realising each demand, in demand order.
  std::vector<std::pair<Vertex, Edge>> assigned;

  std::vector<Edge> edges() const;
};

enum class SearchStatus { Found, Infeasible, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::Found; }
};

enum class SearchStrategy {
  Auto,          // subset DP for unconstrained searches, backtracking otherwise
  Backtracking,  // depth-first with degree/connectivity pruning
  SubsetDp,      // bitmask DP over vertex subsets; unconstrained searches only
};

/// Largest host the search accepts; vertex sets are packed into 64-bit masks.
inline constexpr std::size_t kMaxSearchVertices = 64;
inline constexpr std::size_t kMaxDpVertices = 22;

SearchResult find_ham_cycle(const EdgeConstrainedSearch& s, SearchStrategy strategy = SearchStrategy::Auto);
SearchResult find_ham_path(const EdgeConstrainedSearch& s, SearchStrategy strategy = SearchStrategy::Auto);

/// Checks that `w` is a hamiltonian cycle/path of the host satisfying every
/// constraint of `s`; on success fills in the demand assignment.
bool validate_witness(const EdgeConstrainedSearch& s, Witness& w);

/// True iff every pair of distinct vertices of `host` is joined by a
/// hamiltonian path of `host`.
bool is_ham_connected(const Graph& host);

/// Pairs (x, y) with x < y that admit no hamiltonian x-y path in `host`.
std::vector<Edge> non_ham_connected_pairs(const Graph& host);

enum class PropertyKind { TwoBlockCycle, H4, H5, F4, StrongF3, StrongF3Ends };

std::string to_string(PropertyKind k);
std::optional<PropertyKind> property_from_string(const std::string& s);

struct PropertyResult {
  bool holds = true;
  /// The first vertex tuple (and, for strong F3, the index i) with no witness.
  std::vector<Vertex> counterexample;
  std::size_t instances = 0;
};

/// Quantifies the named property over all vertex tuples of the 2-block `b`.
PropertyResult verify_property(PropertyKind kind, const Graph& b);

}  // namespace sqham
