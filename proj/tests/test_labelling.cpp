#include <doctest.h>

#include "sqham/counterexamples.hpp"
#include "sqham/labelling.hpp"
#include "support/corpus.hpp"

using namespace sqham;

namespace {

const Graph bowtie = parse_graph("0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n");

// K2,5 with parts {0,1} and {2..6}, plus a pendant at each of 2..6.
Graph k25_pendants() {
  Graph g = complete_bipartite(2, 5);
  for (Vertex v = 2; v <= 6; ++v) g.add_edge(v, v + 5);
  return g;
}

}  // namespace

TEST_CASE("a single 2-block is hamiltonian") {
  auto v = algorithm1(cycle_graph(4));
  CHECK(v.outcome == HamOutcome::Hamiltonian);
  CHECK(v.basis == HamBasis::SingleTwoBlock);
}

TEST_CASE("caterpillars are hamiltonian, spiders are not") {
  auto p = algorithm1(path_graph(5));
  CHECK(p.outcome == HamOutcome::Hamiltonian);
  CHECK(p.basis == HamBasis::Caterpillar);

  auto s = algorithm1(parse_graph("0 1\n0 2\n2 3\n0 4\n4 5\n0 6\n6 7\n"));
  CHECK(s.outcome == HamOutcome::NotHamiltonian);
  CHECK(s.violated_condition == 4);
  CHECK(s.offending_vertex == Vertex{0});
}

TEST_CASE("three bridges to triangles are caught without the caterpillar test") {
  Graph g = parse_graph("0 1\n1 2\n1 3\n2 3\n0 4\n4 5\n4 6\n5 6\n0 7\n7 8\n7 9\n8 9\n");
  auto v = algorithm1(g);
  CHECK(v.outcome == HamOutcome::NotHamiltonian);
  CHECK(v.violated_condition == 4);
}

TEST_CASE("five cutvertices in one block is risky by case a") {
  for (const Graph& g : {k25_pendants(), parse_graph("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n")}) {
    auto v = algorithm1(g);
    CHECK(v.outcome == HamOutcome::StructurallyRisky);
    CHECK(v.violated_condition == 5);
    CHECK(v.failing_case == 'a');
    REQUIRE(v.recipe);
    CHECK(v.recipe->condition == 5);
    CHECK(v.reason.find("may not be hamiltonian") != std::string::npos);
  }
}

TEST_CASE("bowtie is labelled by case d twice") {
  auto v = algorithm1(bowtie);
  REQUIRE(v.outcome == HamOutcome::Hamiltonian);
  CHECK(v.basis == HamBasis::Labelling);
  CHECK(v.labelling.get(2, 0) == 2);
  CHECK(v.labelling.get(2, 1) == 2);
  int d_steps = 0;
  for (const auto& s : v.trace) d_steps += s.rule == 'd';
  CHECK(d_steps == 2);
  CHECK(check_conditions(bowtie, v.labelling).empty());
}

TEST_CASE("figure e2 skeleton is risky on condition 6") {
  auto v = algorithm1(figure_skeleton(Figure::E2));
  CHECK(v.outcome == HamOutcome::StructurallyRisky);
  CHECK(v.violated_condition == 6);
  REQUIRE(v.recipe);
  CHECK_FALSE(v.recipe->exchanges.empty());
}

TEST_CASE("check_conditions evaluates each inequality") {
  Labelling ok;
  ok.set(2, 0, 2);
  ok.set(2, 1, 2);
  CHECK(check_conditions(bowtie, ok).empty());

  Labelling zero;
  zero.set(2, 0, 1);
  zero.set(2, 1, 0);
  CHECK(check_conditions(bowtie, zero) == std::vector<int>{2, 6});

  Graph g = k25_pendants();
  auto d = decompose(g);
  REQUIRE(d.two_blocks.size() == 1);
  Labelling five;
  for (Vertex c = 2; c <= 6; ++c) five.set(c, d.two_blocks[0], 1);
  CHECK(check_conditions(d, five) == std::vector<int>{5});
}

TEST_CASE("check_conditions rejects entries off the block-cutvertex incidence") {
  Labelling l;
  l.set(0, 0, 1);
  CHECK_THROWS_AS(check_conditions(bowtie, l), PreconditionError);
  Labelling far;
  far.set(2, 7, 1);
  CHECK_THROWS_AS(check_conditions(bowtie, far), PreconditionError);
}

TEST_CASE("algorithm1 preconditions") {
  CHECK_THROWS_AS(algorithm1(path_graph(2)), PreconditionError);
  CHECK_THROWS_AS(algorithm1(parse_graph("0 1\n1 2\n3 4\n")), PreconditionError);
}

TEST_CASE("positive labellings satisfy every condition on the corpus") {
  for (const Graph& g : sqham::testing::structured_corpus()) {
    if (g.order() < 3) continue;
    auto v = algorithm1(g);
    if (v.outcome == HamOutcome::Hamiltonian && v.basis == HamBasis::Labelling)
      CHECK(check_conditions(g, v.labelling).empty());
  }
}

TEST_CASE("verdict does not depend on vertex names") {
  int n = 0;
  for (const Graph& g : sqham::testing::structured_corpus()) {
    if (g.order() < 3 || ++n % 5) continue;
    auto a = algorithm1(g);
    auto b = algorithm1(sqham::testing::random_relabel(g, n));
    CHECK(a.outcome == b.outcome);
    CHECK(a.violated_condition == b.violated_condition);
  }
}
