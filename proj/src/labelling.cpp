#include "sqham/labelling.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sqham {

std::string to_string(ReplacementKind k) {
  switch (k) {
    case ReplacementKind::K2k: return "K2k";
    case ReplacementKind::Cycle: return "Cycle";
    case ReplacementKind::K23TwoMarked: return "K23-two-marked";
  }
  return "?";
}

int Labelling::get(Vertex cut, std::size_t block) const {
  auto it = m_.find({cut, block});
  return it == m_.end() ? 0 : it->second;
}

void Labelling::set(Vertex cut, std::size_t block, int value) { m_[{cut, block}] = value; }

int Labelling::row_sum(Vertex cut) const {
  int s = 0;
  for (const auto& [key, v] : m_)
    if (key.first == cut) s += v;
  return s;
}

int Labelling::column_sum(std::size_t block) const {
  int s = 0;
  for (const auto& [key, v] : m_)
    if (key.second == block) s += v;
  return s;
}

std::string to_string(HamOutcome o) {
  switch (o) {
    case HamOutcome::Hamiltonian: return "HAMILTONIAN";
    case HamOutcome::NotHamiltonian: return "NOT_HAMILTONIAN";
    case HamOutcome::StructurallyRisky: return "STRUCTURALLY_RISKY";
  }
  return "?";
}

std::vector<int> check_conditions(const BlockDecomposition& d, const Labelling& l) {
  for (const auto& [key, v] : l.entries()) {
    auto [cut, block] = key;
    if (!d.cutvertices.count(cut) || block >= d.blocks.size() || !d.blocks[block].is_two_block())
      throw PreconditionError("labelling entry does not name a (cutvertex, 2-block) pair");
  }
  std::set<int> bad;
  for (Vertex i : d.cutvertices) {
    for (std::size_t t : d.two_blocks) {
      int m = l.get(i, t);
      bool inside = d.blocks[t].contains(i);
      if (m < 0 || m > 2) bad.insert(1);
      if ((m == 0) == inside) bad.insert(2);
      if (inside && m < d.bn_of(i)) bad.insert(3);
    }
    if (d.bn_of(i) > 2) bad.insert(4);
    if (l.row_sum(i) < 2 * d.k_of(i) + d.bn_of(i) - 2) bad.insert(6);
  }
  for (std::size_t t : d.two_blocks) {
    int sum = 0;
    bool has_two = false;
    for (Vertex i : d.cutvertices) {
      sum += l.get(i, t);
      has_two = has_two || l.get(i, t) == 2;
    }
    if (sum > 4 || (has_two && sum > 3)) bad.insert(5);
  }
  return {bad.begin(), bad.end()};
}

std::vector<int> check_conditions(const Graph& g, const Labelling& l) { return check_conditions(decompose(g), l); }

namespace {

class Algorithm1 {
 public:
  Algorithm1(const Graph& g, const BlockDecomposition& d) : g_(g), d_(d) {}

  HamVerdict run() {
    auto p0 = compute_p0(g_, d_);
    if (!p0.all_caterpillars()) {
      v_.outcome = HamOutcome::NotHamiltonian;
      v_.violated_condition = 4;
      v_.offending_vertex = vertex_with_bn_at_least_3();
      v_.reason = "a component of P0 is not a caterpillar, so bn(i) >= 3 for cutvertex " +
                  std::to_string(*v_.offending_vertex) + "; G^2 is not hamiltonian";
      return v_;
    }
    // A caterpillar P0 does not rule out bn(i) >= 3 when the bridge ends are
    // attached to 2-blocks, so condition 4) is checked directly as well.
    if (auto i = vertex_with_bn_at_least_3()) {
      v_.outcome = HamOutcome::NotHamiltonian;
      v_.violated_condition = 4;
      v_.offending_vertex = i;
      v_.reason = "bn(" + std::to_string(*i) + ") = " + std::to_string(d_.bn_of(*i)) +
                  " >= 3; G^2 is not hamiltonian";
      return v_;
    }
    if (d_.two_blocks.empty()) {
      v_.basis = HamBasis::Caterpillar;
      v_.reason = "G is a caterpillar; G^2 is hamiltonian";
      return v_;
    }
    if (d_.blocks.size() == 1) {
      v_.basis = HamBasis::SingleTwoBlock;
      v_.reason = "G is a 2-block; G^2 is hamiltonian";
      return v_;
    }
    return peel();
  }

 private:
  std::optional<Vertex> vertex_with_bn_at_least_3() const {
    for (Vertex c : d_.cutvertices)
      if (d_.bn_of(c) >= 3) return c;
    return std::nullopt;
  }

  bool complete(Vertex c) const {
    for (std::size_t t : d_.blocks_of.at(c))
      if (d_.blocks[t].is_two_block() && !labelled_.count(t)) return false;
    return true;
  }

  bool complete_except(Vertex c, std::size_t block) const {
    for (std::size_t t : d_.blocks_of.at(c))
      if (t != block && d_.blocks[t].is_two_block() && !labelled_.count(t)) return false;
    return true;
  }

  bool cond6(Vertex c) const { return v_.labelling.row_sum(c) >= 2 * d_.k_of(c) + d_.bn_of(c) - 2; }

  // Unlabelled 2-block with at most one vertex shared with another unlabelled
  // 2-block; smallest index wins.
  std::optional<std::size_t> choose_block() const {
    for (std::size_t t : d_.two_blocks) {
      if (labelled_.count(t)) continue;
      int shared = 0;
      for (Vertex v : d_.cutvertices_in(t)) {
        for (std::size_t o : d_.blocks_of.at(v))
          if (o != t && d_.blocks[o].is_two_block() && !labelled_.count(o)) {
            ++shared;
            break;
          }
      }
      if (shared <= 1) return t;
    }
    return std::nullopt;
  }

  HamVerdict risky5(char rule, std::size_t b, const std::vector<Vertex>& cuts, ReplacementKind kind,
                    std::optional<Vertex> at, const std::string& why) {
    v_.outcome = HamOutcome::StructurallyRisky;
    v_.violated_condition = 5;
    v_.failing_case = rule;
    v_.offending_block = b;
    v_.offending_vertex = at;
    v_.recipe = SubstitutionRecipe{5, {{b, kind, cuts}}};
    v_.trace.push_back({rule, b, cuts, {}, why});
    v_.reason = "condition 5) cannot hold for block B" + std::to_string(b) + " (" + why +
                "); G^2 may not be hamiltonian: some graph with an isomorphic block-cutvertex tree has a "
                "non-hamiltonian square, but this does not decide G itself";
    return v_;
  }

  HamVerdict risky6(char rule, Vertex c) {
    v_.outcome = HamOutcome::StructurallyRisky;
    v_.violated_condition = 6;
    v_.failing_case = rule;
    v_.offending_vertex = c;
    SubstitutionRecipe r{6, {}};
    for (std::size_t t : d_.blocks_of.at(c)) {
      if (!d_.blocks[t].is_two_block() || v_.labelling.get(c, t) != 1) continue;
      r.exchanges.push_back({t, ReplacementKind::Cycle, d_.cutvertices_in(t)});
    }
    v_.recipe = r;
    std::ostringstream os;
    os << "condition 6) fails at cutvertex " << c << ": sum m = " << v_.labelling.row_sum(c) << " < 2k + bn - 2 = "
       << 2 * d_.k_of(c) + d_.bn_of(c) - 2
       << "; G^2 may not be hamiltonian: some graph with an isomorphic block-cutvertex tree has a "
          "non-hamiltonian square, but this does not decide G itself";
    v_.reason = os.str();
    return v_;
  }

  void record(char rule, std::size_t b, const std::vector<Vertex>& cuts, std::string note = {}) {
    TraceStep s{rule, b, cuts, {}, std::move(note)};
    for (Vertex c : cuts) s.values.emplace_back(c, v_.labelling.get(c, b));
    v_.trace.push_back(std::move(s));
  }

  HamVerdict peel() {
    v_.basis = HamBasis::Labelling;
    while (labelled_.size() < d_.two_blocks.size()) {
      auto chosen = choose_block();
      if (!chosen) throw Error("algorithm1: no eligible 2-block (block-cutvertex graph is not a tree?)");
      const std::size_t b = *chosen;
      auto cuts = d_.cutvertices_in(b);
      const std::size_t k = cuts.size();
      auto bn = [&](Vertex c) { return d_.bn_of(c); };

      if (k >= 5) return risky5('a', b, cuts, ReplacementKind::K2k, std::nullopt, "k = " + std::to_string(k) + " >= 5");
      if (k >= 3) {
        for (Vertex c : cuts)
          if (bn(c) == 2)
            return risky5('b', b, cuts, ReplacementKind::Cycle, c,
                          "k = " + std::to_string(k) + " and bn(" + std::to_string(c) + ") = 2");
      }
      if (k == 2 && bn(cuts[0]) == 2 && bn(cuts[1]) == 2)
        return risky5('c', b, cuts, ReplacementKind::K23TwoMarked, std::nullopt, "k = 2 and both bn = 2");

      if (k == 1) {
        Vertex c = cuts[0];
        v_.labelling.set(c, b, 2);
        labelled_.insert(b);
        record('d', b, cuts);
        if (complete(c) && !cond6(c)) return risky6('d', c);
        continue;
      }
      if (k == 2) {
        Vertex c1 = cuts[0], c2 = cuts[1];
        if (bn(c1) == 2) std::swap(c1, c2);
        std::string note;
        if (bn(c2) == 2) {
          v_.labelling.set(c1, b, 1);
          v_.labelling.set(c2, b, 2);
          note = "bn(" + std::to_string(c2) + ") = 2";
        } else {
          // c_j: a cutvertex whose other 2-blocks are already labelled.
          Vertex cj = complete_except(c1, b) ? c1 : c2;
          Vertex other = cj == c1 ? c2 : c1;
          v_.labelling.set(cj, b, 1);
          if (cond6(cj)) {
            v_.labelling.set(other, b, 2);
            note = "m=1 keeps condition 6) at " + std::to_string(cj);
          } else {
            v_.labelling.set(cj, b, 2);
            v_.labelling.set(other, b, 1);
            note = "condition 6) at " + std::to_string(cj) + " needs m=2";
          }
        }
        labelled_.insert(b);
        record('e', b, cuts, note);
        for (Vertex c : {c1, c2})
          if (complete(c) && !cond6(c)) return risky6('e', c);
        continue;
      }
      // k in {3, 4}, every bn <= 1.
      for (Vertex c : cuts) v_.labelling.set(c, b, 1);
      labelled_.insert(b);
      record('f', b, cuts);
      for (Vertex c : cuts)
        if (complete(c) && !cond6(c)) return risky6('f', c);
    }
    auto violated = check_conditions(d_, v_.labelling);
    if (!violated.empty()) throw Error("algorithm1: produced a labelling violating its own conditions");
    v_.reason = "the labelling satisfies conditions 1)-6); G^2 is hamiltonian";
    return v_;
  }

  const Graph& g_;
  const BlockDecomposition& d_;
  HamVerdict v_;
  std::set<std::size_t> labelled_;
};

}  // namespace

HamVerdict algorithm1(const Graph& g, const BlockDecomposition& d) {
  if (g.order() < 3) throw PreconditionError("algorithm1: needs at least three vertices");
  return Algorithm1(g, d).run();
}

HamVerdict algorithm1(const Graph& g) {
  if (g.order() < 3) throw PreconditionError("algorithm1: needs at least three vertices");
  if (!is_connected(g)) throw PreconditionError("algorithm1: graph is not connected");
  auto d = decompose(g);
  return Algorithm1(g, d).run();
}

}  // namespace sqham
