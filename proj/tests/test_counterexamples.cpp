#include <doctest.h>

#include "sqham/counterexamples.hpp"
#include "sqham/decomposition.hpp"

using namespace sqham;

TEST_CASE("gen_bn3 with edge plugs") {
  Graph g = gen_bn3();
  CHECK(g.order() == 8);
  CHECK(g.size() == 7);
  auto d = decompose(g);
  CHECK(d.bn_of(0) == 3);
  CHECK(algorithm1(g).outcome == HamOutcome::NotHamiltonian);
  EdgeConstrainedSearch s;
  s.host = square(g);
  s.original = g;
  CHECK(find_ham_cycle(s).status == SearchStatus::Infeasible);
}

TEST_CASE("gen_bn3 with larger plugs keeps three nontrivial bridges") {
  Graph g = gen_bn3({cycle_graph(3), complete_graph(4), path_graph(3), cycle_graph(4)});
  CHECK(decompose(g).bn_of(0) == 3);
  CHECK_THROWS_AS(gen_bn3({Graph{}, path_graph(2), path_graph(2), path_graph(2)}), PreconditionError);
  CHECK_THROWS_AS(gen_bn3({parse_graph("0 1\n2 3\n"), path_graph(2), path_graph(2), path_graph(2)}),
                  PreconditionError);
}

TEST_CASE("gen_hc_counterexample") {
  Graph g = gen_hc_counterexample(3);
  CHECK(g == parse_graph("0 1\n1 2\n0 2\n0 3\n1 4\n2 5\n"));
  CHECK_FALSE(is_ham_connected(square(g)));
  CHECK(gen_hc_counterexample(5).order() == 10);
  CHECK_THROWS_AS(gen_hc_counterexample(2), PreconditionError);
  CHECK_THROWS_AS(gen_hc_counterexample(3, {path_graph(2)}), PreconditionError);
}

TEST_CASE("substitute replaces a block by the requested shape") {
  // K4 with pendants at 0, 1 and 2.
  Graph g = parse_graph("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n1 5\n2 6\n");
  auto d = decompose(g);
  std::size_t b = d.two_blocks.at(0);

  Graph cyc = substitute(g, {6, {{b, ReplacementKind::Cycle, {0, 1, 2}}}});
  CHECK(cyc == parse_graph("0 1\n1 2\n0 2\n0 4\n1 5\n2 6\n"));

  Graph k2k = substitute(g, {5, {{b, ReplacementKind::K2k, {0, 1, 2}}}});
  CHECK(k2k.order() == 8);
  auto dk = decompose(k2k);
  CHECK(dk.two_blocks.size() == 1);
  CHECK(dk.blocks[dk.two_blocks[0]].edges.size() == 6);
  CHECK(bc_isomorphic(bc_tree(d), bc_tree(dk)));
}

TEST_CASE("substitute with two cutvertices") {
  Graph g = parse_graph("0 1\n1 2\n2 3\n3 0\n0 4\n2 5\n");
  auto d = decompose(g);
  std::size_t b = d.two_blocks.at(0);
  Graph k23 = substitute(g, {5, {{b, ReplacementKind::K23TwoMarked, {0, 2}}}});
  auto dk = decompose(k23);
  CHECK(dk.blocks[dk.two_blocks[0]].vertices.size() == 5);
  Graph tri = substitute(g, {6, {{b, ReplacementKind::Cycle, {0, 2}}}});
  CHECK(decompose(tri).blocks[decompose(tri).two_blocks[0]].vertices.size() == 3);
}

TEST_CASE("substitute validates the recipe") {
  Graph g = parse_graph("0 1\n1 2\n2 3\n3 0\n0 4\n2 5\n");
  auto d = decompose(g);
  std::size_t b = d.two_blocks.at(0);
  std::size_t bridge = b == 0 ? 1 : 0;
  CHECK_THROWS_AS(substitute(g, {5, {{bridge, ReplacementKind::Cycle, {0}}}}), PreconditionError);
  CHECK_THROWS_AS(substitute(g, {5, {{b, ReplacementKind::Cycle, {0, 1}}}}), PreconditionError);
  CHECK_THROWS_AS(
      substitute(g, {5, {{b, ReplacementKind::Cycle, {0, 2}}, {b, ReplacementKind::Cycle, {0, 2}}}}),
      PreconditionError);
  Graph bow = parse_graph("0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n");
  CHECK_THROWS_AS(substitute(bow, {5, {{0, ReplacementKind::K2k, {2}}}}), PreconditionError);
}

TEST_CASE("counterexample_for refuses positive verdicts") {
  Graph bow = parse_graph("0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n");
  CHECK_THROWS_AS(counterexample_for(bow, algorithm1(bow)), PreconditionError);
  CHECK_THROWS_AS(counterexample_for(bow, algorithm2(bow)), PreconditionError);
}

TEST_CASE("counterexample for a risky hamiltonicity verdict") {
  Graph g = parse_graph("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n");
  auto c = counterexample_for(g, algorithm1(g));
  CHECK(c.bc_isomorphic);
  CHECK(c.certified);
  CHECK(c.status == SearchStatus::Infeasible);
  REQUIRE(c.recipe);
  CHECK(c.recipe->condition == 5);
}

TEST_CASE("counterexample for a risky connectedness verdict") {
  Graph g = parse_graph("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n1 5\n2 6\n");
  auto c = counterexample_for(g, algorithm2(g));
  CHECK(c.bc_isomorphic);
  CHECK(c.certified);
  CHECK(c.failing_pair);
}

TEST_CASE("every figure instance is certified") {
  for (Figure f : all_figures()) {
    CAPTURE(to_string(f));
    CHECK(figure_from_string(to_string(f)) == f);
    auto c = figure_instance(f);
    CHECK(c.bc_isomorphic);
    CHECK(c.certified);
  }
  CHECK_FALSE(figure_from_string("z"));
}

TEST_CASE("a node budget too small leaves the instance uncertified") {
  Graph g = parse_graph("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n");
  auto c = counterexample_for(g, algorithm1(g), 1);
  CHECK_FALSE(c.certified);
  CHECK(c.status == SearchStatus::BudgetExceeded);
}
