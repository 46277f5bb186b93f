#include <doctest.h>

#include "sqham/graph.hpp"
#include "support/corpus.hpp"

using namespace sqham;

TEST_CASE("parse_graph reads edges and isolated vertices") {
  Graph g = parse_graph("0 1\n1 2");
  CHECK(g == path_graph(3));
  Graph h = parse_graph("# comment\n\n5\n7 9\n");
  CHECK(h.order() == 3);
  CHECK(h.has_vertex(5));
  CHECK(h.degree(5) == 0);
  CHECK(h.has_edge(9, 7));
}

TEST_CASE("parse_graph collapses duplicate edges") {
  Graph g = parse_graph("0 1\n0 1\n1 0\n");
  CHECK(g.size() == 1);
  CHECK(g.order() == 2);
}

TEST_CASE("parse_graph rejects self-loops and malformed lines with a line number") {
  CHECK_THROWS_AS(parse_graph("0 0"), ParseError);
  try {
    parse_graph("0 1\n1 two\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("-1 2\n"), ParseError);
}

TEST_CASE("serialize and parse round-trip") {
  for (const Graph& g : sqham::testing::structured_corpus()) CHECK(parse_graph(serialize_graph(g)) == g);
  Graph iso = parse_graph("4\n0 1\n");
  CHECK(parse_graph(serialize_graph(iso)) == iso);
}

TEST_CASE("square of small graphs") {
  CHECK(square(path_graph(2)) == path_graph(2));
  CHECK(square(path_graph(3)) == complete_graph(3));
  CHECK(square(cycle_graph(5)) == complete_graph(5));
  Graph p4 = square(path_graph(4));
  CHECK(p4.size() == 5);
  CHECK_FALSE(p4.has_edge(0, 3));
}

TEST_CASE("square is monotone and completes diameter-two graphs") {
  for (const Graph& g : sqham::testing::structured_corpus()) {
    Graph sq = square(g);
    CHECK(is_subgraph(g, sq));
    CHECK(sq.order() == g.order());
  }
  Graph k23 = complete_bipartite(2, 3);
  CHECK(square(k23) == complete_graph(5));
}

TEST_CASE("subtract removes edges and saturated vertices") {
  Graph g = parse_graph("0 1\n1 2\n0 2\n0 3\n");
  Graph tri = cycle_graph(3);
  Graph r = subtract(g, tri);
  CHECK(r.order() == 2);
  CHECK(r.has_edge(0, 3));
  CHECK(subtract(g, g).empty());
  CHECK(subtract(g, Graph{}) == g);

  Graph bowtie = parse_graph("0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n");
  CHECK(subtract(bowtie, cycle_graph(3)) == parse_graph("2 3\n3 4\n2 4\n"));
  CHECK_THROWS_AS(subtract(tri, path_graph(4)), PreconditionError);
}

TEST_CASE("to_dot emits a graph block with bold highlighted edges") {
  std::string k2 = to_dot(path_graph(2));
  CHECK(k2.find("graph") != std::string::npos);
  CHECK(k2.find("0 -- 1") != std::string::npos);
  std::string tri = to_dot(cycle_graph(3), {Edge(0, 1)});
  std::size_t bold = 0;
  for (std::size_t p = tri.find("bold"); p != std::string::npos; p = tri.find("bold", p + 1)) ++bold;
  CHECK(bold == 1);
  CHECK(tri.front() != ' ');
  CHECK(tri.find('}') != std::string::npos);
}

TEST_CASE("graph helpers") {
  Graph g = parse_graph("0 1\n2 3\n");
  CHECK_FALSE(is_connected(g));
  CHECK(connected_components(g).size() == 2);
  CHECK_THROWS_AS(g.add_edge(4, 4), PreconditionError);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(cycle_graph(4, 10).has_edge(13, 10));
  Graph r = relabel(path_graph(3), {{0, 5}, {1, 6}, {2, 7}});
  CHECK(r.has_edge(5, 6));
  CHECK(induced_subgraph(complete_graph(4), {0, 1, 2}) == complete_graph(3));
}
