// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sqham/constructors.hpp"
#include "sqham/counterexamples.hpp"
#include "sqham/decomposition.hpp"
#include "sqham/hamconn.hpp"
#include "sqham/labelling.hpp"
#include "sqham/oracle.hpp"
#include "support/corpus.hpp"

using namespace sqham;
using sqham::testing::structured_corpus;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool has_ham_cycle(const Graph& g) {
  EdgeConstrainedSearch s;
  s.host = square(g);
  s.original = g;
  return find_ham_cycle(s).found();
}

void criteria_1_2() {
  auto t0 = Clock::now();
  const auto& corpus = structured_corpus();
  std::size_t pos = 0, neg = 0, risky = 0, bad_pos = 0, bad_neg = 0;
  for (const Graph& g : corpus) {
    auto v = algorithm1(g);
    if (v.outcome == HamOutcome::Hamiltonian) {
      ++pos;
      if (!has_ham_cycle(g)) ++bad_pos;
    } else if (v.outcome == HamOutcome::NotHamiltonian) {
      ++neg;
      if (has_ham_cycle(g)) ++bad_neg;
    } else {
      ++risky;
    }
  }
  double t = seconds_since(t0);
  report(1, bad_pos == 0 && t <= 60.0,
         std::to_string(corpus.size()) + " corpus graphs, " + std::to_string(pos) + " HAMILTONIAN, " +
             std::to_string(bad_pos) + " without an oracle cycle, " + std::to_string(t) + " s");
  report(2, bad_neg == 0,
         std::to_string(neg) + " NOT_HAMILTONIAN verdicts, " + std::to_string(bad_neg) + " with an oracle cycle (" +
             std::to_string(risky) + " STRUCTURALLY_RISKY not counted)");
}

void criterion_3() {
  int ok = 0;
  std::string detail;
  for (Figure f : all_figures()) {
    auto t0 = Clock::now();
    auto c = figure_instance(f);
    double t = seconds_since(t0);
    bool pass = c.certified && c.bc_isomorphic && t <= 5.0;
    ok += pass;
    detail += " " + to_string(f) + (pass ? "=ok" : "=fail") + "(" + std::to_string(c.graph.order()) + "v)";
  }
  report(3, ok == 7, std::to_string(ok) + "/7 instances certified;" + detail);
}

void criterion_4() {
  struct Row {
    PropertyKind kind;
    int lo;
  };
  const std::vector<Row> rows{{PropertyKind::H4, 4},
                              {PropertyKind::F4, 4},
                              {PropertyKind::StrongF3, 3},
                              {PropertyKind::StrongF3Ends, 3},
                              {PropertyKind::TwoBlockCycle, 3}};
  std::vector<std::vector<Graph>> by_n(8);
  for (int n = 3; n <= 7; ++n) by_n[n] = sqham::testing::two_connected_graphs(n);
  bool all = true;
  std::string detail;
  for (const auto& r : rows) {
    std::size_t blocks = 0, held = 0;
    for (int n = r.lo; n <= 7; ++n)
      for (const Graph& b : by_n[n]) {
        ++blocks;
        held += verify_property(r.kind, b).holds;
      }
    all = all && held == blocks;
    detail += to_string(r.kind) + " " + std::to_string(held) + "/" + std::to_string(blocks) + "; ";
  }
  std::size_t h5_fail = 0;
  for (int n = 5; n <= 7; ++n)
    for (const Graph& b : by_n[n])
      if (!verify_property(PropertyKind::H5, b).holds) ++h5_fail;
  all = all && h5_fail > 0;
  detail += "H5 fails on " + std::to_string(h5_fail) + " 2-blocks of order 5-7";
  report(4, all, detail);
}

void criterion_5() {
  std::size_t cycles = 0, cycle_bad = 0, pairs = 0, path_bad = 0;
  for (const Graph& g : structured_corpus()) {
    auto d = decompose(g);
    auto v = algorithm1(g, d);
    if (v.outcome == HamOutcome::Hamiltonian) {
      ++cycles;
      try {
        auto c = construct_ham_cycle(g, v.labelling);
        bool ok = is_ham_cycle_of_square(g, c.witness.sequence) && c.merge_invariant_held;
        for (const auto& bc : c.block_cycles) {
          std::map<Vertex, int> got;
          for (const auto& [cut, e] : bc.owned) {
            ++got[cut];
            ok = ok && e.contains(cut) && d.blocks[bc.block].as_graph().has_edge(e);
          }
          for (Vertex cut : d.cutvertices_in(bc.block)) ok = ok && got[cut] == v.labelling.get(cut, bc.block);
        }
        cycle_bad += !ok;
      } catch (const Error&) {
        ++cycle_bad;
      }
    }
    if (algorithm2(g, d).outcome == HcOutcome::HamConnected) {
      auto vs = g.vertices();
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
          if (i == j) continue;
          ++pairs;
          try {
            auto w = construct_ham_path(g, vs[i], vs[j]);
            path_bad += !is_ham_path_of_square(g, w.sequence, vs[i], vs[j]);
          } catch (const Error&) {
            ++path_bad;
          }
        }
    }
  }
  report(5, cycle_bad == 0 && path_bad == 0,
         std::to_string(cycles - cycle_bad) + "/" + std::to_string(cycles) + " cycles, " +
             std::to_string(pairs - path_bad) + "/" + std::to_string(pairs) + " ordered pairs");
}

void criterion_6() {
  std::size_t total = 0, ok = 0;
  for (int n = 3; n <= 10; ++n)
    for (const Graph& t : sqham::testing::caterpillars(n)) {
      ++total;
      auto path = longest_path_double_bfs(t);
      auto tour = caterpillar_tour(t, path);
      auto w = caterpillar_cycle(t, path);
      std::set<Edge> on;
      const auto& c = w.sequence;
      for (std::size_t i = 0; i < c.size(); ++i) on.insert(Edge(c[i], c[(i + 1) % c.size()]));
      bool good = is_ham_cycle_of_square(t, c) && on.count(Edge(path[0], path[1])) &&
                  on.count(Edge(path[path.size() - 2], path.back())) &&
                  tour.neighbor_pairs.size() + 2 == path.size();
      for (const auto& [x, e] : tour.neighbor_pairs)
        good = good && on.count(e) && t.has_edge(x, e.u) && t.has_edge(x, e.v);
      ok += good;
    }
  report(6, ok == total, std::to_string(ok) + "/" + std::to_string(total) + " caterpillars with 3-10 vertices");
}

void criterion_7() {
  std::size_t chains = 0, bad = 0;
  for (const Graph& g : structured_corpus()) {
    auto d = decompose(g);
    if (!is_block_chain(d)) continue;
    ++chains;
    bool inner_two = true;
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
      if (!d.is_endblock(b) && !d.blocks[b].is_two_block()) inner_two = false;
    bad += (algorithm2(g, d).outcome == HcOutcome::HamConnected) != inner_two;
  }
  report(7, bad == 0, std::to_string(chains) + " block-chains, " + std::to_string(bad) + " discrepancies");
}

void criterion_8() {
  std::size_t graphs = 0, bad = 0;
  for (const Graph& g : structured_corpus()) {
    ++graphs;
    auto a1 = algorithm1(g).outcome;
    auto a2 = algorithm2(g).outcome;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Graph h = sqham::testing::random_relabel(g, seed * 7919 + graphs);
      if (algorithm1(h).outcome != a1 || algorithm2(h).outcome != a2) {
        ++bad;
        break;
      }
    }
  }
  report(8, bad == 0, std::to_string(graphs) + " graphs x 20 relabellings, " + std::to_string(bad) + " unstable");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> runs{criteria_1_2, criterion_3, criterion_4, criterion_5,
                                                criterion_6,  criterion_7, criterion_8};
  for (const auto& run : runs) {
    try {
      run();
    } catch (const std::exception& e) {
      std::printf("FAIL unexpected exception: %s\n", e.what());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
