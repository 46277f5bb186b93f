#include <doctest.h>

#include <set>

#include "sqham/decomposition.hpp"
#include "support/corpus.hpp"

using namespace sqham;
using namespace sqham::testing;

TEST_CASE("2-connected graph counts match the known sequence") {
  const std::size_t expected[] = {1, 3, 10, 56, 468};
  for (int n = 3; n <= 7; ++n) CHECK(two_connected_graphs(n).size() == expected[n - 3]);
}

TEST_CASE("tree and connected graph counts match the known sequences") {
  const std::size_t trees_expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) CHECK(trees(n).size() == trees_expected[n - 1]);
  const std::size_t connected_expected[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) CHECK(connected_graphs(n).size() == connected_expected[n - 1]);
}

TEST_CASE("canonical form is a relabelling invariant") {
  for (const Graph& g : connected_graphs(5)) {
    auto c = canonical_form(g);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Graph h = compact(random_relabel(g, seed));
      CHECK(canonical_form(h) == c);
    }
  }
  CHECK(canonical_form(path_graph(4)) != canonical_form(complete_bipartite(1, 3)));
}

TEST_CASE("structured corpus is connected and duplicate free") {
  const auto& corpus = structured_corpus();
  CHECK(corpus.size() >= 300);
  std::set<std::string> forms;
  for (const Graph& g : corpus) {
    CHECK(is_connected(g));
    forms.insert(canonical_form(compact(g)));
  }
  CHECK(forms.size() == corpus.size());
}

TEST_CASE("caterpillars are caterpillars") {
  for (int n = 3; n <= 8; ++n)
    for (const Graph& t : caterpillars(n)) {
      CHECK(t.order() == static_cast<std::size_t>(n));
      CHECK(is_caterpillar(t));
    }
}
