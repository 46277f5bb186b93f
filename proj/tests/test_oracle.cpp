#include <doctest.h>

#include "sqham/oracle.hpp"
#include "support/corpus.hpp"

using namespace sqham;

namespace {

EdgeConstrainedSearch over(const Graph& host, const Graph& original) {
  EdgeConstrainedSearch s;
  s.host = host;
  s.original = original;
  return s;
}

}  // namespace

TEST_CASE("cycle through a required edge of C4") {
  auto s = over(cycle_graph(4), cycle_graph(4));
  s.required_edges = {Edge(0, 1)};
  auto r = find_ham_cycle(s);
  REQUIRE(r.found());
  CHECK(r.witness->sequence.size() == 4);
  CHECK(r.witness->is_cycle);
  CHECK(validate_witness(s, *r.witness));
}

TEST_CASE("three required edges at one vertex are infeasible") {
  auto s = over(complete_graph(4), complete_graph(4));
  s.required_edges = {Edge(0, 1), Edge(0, 2), Edge(0, 3)};
  auto r = find_ham_cycle(s);
  CHECK(r.status == SearchStatus::Infeasible);
  CHECK_FALSE(r.witness);
}

TEST_CASE("demands on the square of K4") {
  Graph k4 = complete_graph(4);
  auto s = over(square(k4), k4);
  s.demands = {{0, 2}, {1, 1}};
  auto r = find_ham_cycle(s);
  REQUIRE(r.found());
  CHECK(r.witness->assigned.size() == 3);
}

TEST_CASE("demands count original edges only") {
  Graph p = path_graph(4);
  auto s = over(square(p), p);
  // Vertex 0 has a single original edge, so two distinct ones cannot exist.
  s.endpoints = std::make_pair(Vertex{1}, Vertex{3});
  s.demands = {{0, 2}};
  CHECK_FALSE(find_ham_path(s).found());
}

TEST_CASE("paths with fixed endpoints") {
  auto k2 = over(path_graph(2), path_graph(2));
  k2.endpoints = std::make_pair(Vertex{0}, Vertex{1});
  auto r = find_ham_path(k2);
  REQUIRE(r.found());
  CHECK(r.witness->sequence == std::vector<Vertex>{0, 1});

  auto p4 = over(square(path_graph(4)), path_graph(4));
  p4.endpoints = std::make_pair(Vertex{1}, Vertex{2});
  CHECK(find_ham_path(p4).status == SearchStatus::Infeasible);

  Graph c5 = cycle_graph(5);
  auto f4 = over(square(c5), c5);
  f4.endpoints = std::make_pair(Vertex{0}, Vertex{1});
  f4.demands = {{2, 1}, {3, 1}};
  auto w = find_ham_path(f4);
  REQUIRE(w.found());
  CHECK(w.witness->sequence.front() == 0);
  CHECK(w.witness->sequence.back() == 1);
}

TEST_CASE("path search requires endpoints") {
  auto s = over(complete_graph(3), complete_graph(3));
  CHECK_THROWS_AS(find_ham_path(s), PreconditionError);
}

TEST_CASE("hamiltonian connectedness") {
  CHECK(is_ham_connected(complete_graph(3)));
  CHECK_FALSE(is_ham_connected(square(path_graph(4))));
  CHECK(non_ham_connected_pairs(square(path_graph(4))) == std::vector<Edge>{Edge(1, 2)});
  Graph bowtie = parse_graph("0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n");
  CHECK(is_ham_connected(square(bowtie)));
  CHECK_THROWS_AS(is_ham_connected(parse_graph("0\n")), PreconditionError);
}

TEST_CASE("block properties on small blocks") {
  CHECK(verify_property(PropertyKind::H4, complete_graph(4)).holds);
  CHECK(verify_property(PropertyKind::StrongF3, cycle_graph(3)).holds);
  auto f4 = verify_property(PropertyKind::F4, cycle_graph(5));
  CHECK(f4.holds);
  CHECK(f4.instances > 0);
  CHECK(verify_property(PropertyKind::TwoBlockCycle, cycle_graph(4)).holds);
  CHECK(verify_property(PropertyKind::StrongF3Ends, complete_bipartite(2, 3)).holds);
}

TEST_CASE("verify_property rejects non-blocks and tiny blocks") {
  CHECK_THROWS_AS(verify_property(PropertyKind::H4, path_graph(4)), PreconditionError);
  CHECK_THROWS_AS(verify_property(PropertyKind::H4, cycle_graph(3)), PreconditionError);
}

TEST_CASE("H5 fails on some 2-block of order greater than four") {
  bool found = false;
  for (int n = 5; n <= 6 && !found; ++n)
    for (const Graph& b : sqham::testing::two_connected_graphs(n)) {
      auto r = verify_property(PropertyKind::H5, b);
      if (!r.holds) {
        CHECK_FALSE(r.counterexample.empty());
        found = true;
        break;
      }
    }
  CHECK(found);
}

TEST_CASE("property names round-trip") {
  for (auto k : {PropertyKind::TwoBlockCycle, PropertyKind::H4, PropertyKind::H5, PropertyKind::F4,
                 PropertyKind::StrongF3, PropertyKind::StrongF3Ends})
    CHECK(property_from_string(to_string(k)) == k);
  CHECK_FALSE(property_from_string("nope"));
}

TEST_CASE("backtracking and subset DP agree") {
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : sqham::testing::connected_graphs(n)) {
      auto s = over(g, g);
      auto a = find_ham_cycle(s, SearchStrategy::Backtracking);
      auto b = find_ham_cycle(s, SearchStrategy::SubsetDp);
      CHECK(a.found() == b.found());
      s.endpoints = std::make_pair(Vertex{0}, Vertex{static_cast<Vertex>(n - 1)});
      CHECK(find_ham_path(s, SearchStrategy::Backtracking).found() == find_ham_path(s, SearchStrategy::SubsetDp).found());
    }
}

TEST_CASE("subset DP refuses constrained searches") {
  auto s = over(complete_graph(4), complete_graph(4));
  s.required_edges = {Edge(0, 1)};
  CHECK_THROWS_AS(find_ham_cycle(s, SearchStrategy::SubsetDp), PreconditionError);
}

TEST_CASE("node budget stops the search") {
  Graph c = cycle_graph(12);
  auto s = over(square(c), c);
  s.demands = {{0, 2}};
  s.node_budget = 3;
  auto r = find_ham_cycle(s);
  CHECK(r.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(r.witness);
  s.node_budget = 0;
  CHECK(find_ham_cycle(s).found());
}

TEST_CASE("validate_witness rejects bad sequences") {
  auto s = over(cycle_graph(4), cycle_graph(4));
  Witness w;
  w.is_cycle = true;
  w.sequence = {0, 2, 1, 3};
  CHECK_FALSE(validate_witness(s, w));
  w.sequence = {0, 1, 2};
  CHECK_FALSE(validate_witness(s, w));
  w.sequence = {0, 1, 2, 3};
  CHECK(validate_witness(s, w));
}
