#include "sqham/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "sqham/decomposition.hpp"

namespace sqham {

std::vector<Edge> Witness::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) out.emplace_back(sequence[i], sequence[i + 1]);
  if (is_cycle && sequence.size() >= 3) out.emplace_back(sequence.back(), sequence.front());
  return out;
}

namespace {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

// Distinct representatives: slot s (a demand unit at vertex demand[s]) may take
// any original edge at that vertex on the walk. Kuhn's augmenting paths.
std::optional<std::vector<std::pair<Vertex, Edge>>> assign_demands(const std::vector<Demand>& demands,
                                                                   const std::vector<Edge>& walk_edges,
                                                                   const Graph& original) {
  std::vector<Vertex> slots;
  for (const Demand& d : demands)
    for (int c = 0; c < d.count; ++c) slots.push_back(d.vertex);
  if (slots.empty()) return std::vector<std::pair<Vertex, Edge>>{};
  std::vector<Edge> cand;
  for (const Edge& e : walk_edges)
    if (original.has_edge(e)) cand.push_back(e);
  std::vector<int> owner(cand.size(), -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t s) -> bool {
    for (std::size_t e = 0; e < cand.size(); ++e) {
      if (!cand[e].contains(slots[s]) || seen[e]) continue;
      seen[e] = 1;
      if (owner[e] < 0 || augment(static_cast<std::size_t>(owner[e]))) {
        owner[e] = static_cast<int>(s);
        return true;
      }
    }
    return false;
  };
  for (std::size_t s = 0; s < slots.size(); ++s) {
    seen.assign(cand.size(), 0);
    if (!augment(s)) return std::nullopt;
  }
  std::vector<std::pair<Vertex, Edge>> out(slots.size());
  for (std::size_t e = 0; e < cand.size(); ++e)
    if (owner[e] >= 0) out[static_cast<std::size_t>(owner[e])] = {slots[owner[e]], cand[e]};
  return out;
}

class Searcher {
 public:
  Searcher(const EdgeConstrainedSearch& s, bool cycle) : s_(s), cycle_(cycle) {
    verts_ = s.host.vertices();
    n_ = verts_.size();
    if (n_ > kMaxSearchVertices) throw PreconditionError("oracle: host has more than 64 vertices");
    for (std::size_t i = 0; i < n_; ++i) index_[verts_[i]] = i;
    adj_.assign(n_, 0);
    orig_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (Vertex w : s.host.neighbors(verts_[i])) adj_[i] |= bit(index_.at(w));
      for (Vertex w : s.original.neighbors(verts_[i]))
        if (index_.count(w)) orig_[i] |= bit(index_.at(w));
    }
    required_.assign(n_, 0);
    req_count_.assign(n_, 0);
    demand_.assign(n_, 0);
    full_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
  }

  // Returns false when the constraints are trivially unsatisfiable.
  bool prepare() {
    for (const Edge& e : s_.required_edges) {
      if (!index_.count(e.u) || !index_.count(e.v) || !s_.host.has_edge(e)) return false;
      std::size_t a = index_.at(e.u), b = index_.at(e.v);
      if (!(required_[a] & bit(b))) {
        required_[a] |= bit(b);
        required_[b] |= bit(a);
        ++req_count_[a];
        ++req_count_[b];
      }
    }
    for (const Demand& d : s_.demands) {
      if (!index_.count(d.vertex) || d.count < 0) return false;
      demand_[index_.at(d.vertex)] += d.count;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      int cap = 2;
      if (!cycle_ && (verts_[i] == s_.endpoints->first || verts_[i] == s_.endpoints->second)) cap = 1;
      if (req_count_[i] > cap || demand_[i] > cap) return false;
    }
    if (!cycle_) {
      auto [x, y] = *s_.endpoints;
      if (x == y || !index_.count(x) || !index_.count(y)) return false;
      start_ = index_.at(x);
      target_ = index_.at(y);
    } else {
      start_ = 0;
      for (std::size_t i = 0; i < n_; ++i)
        if (req_count_[i] > 0 || demand_[i] > 0) {
          start_ = i;
          break;
        }
    }
    return true;
  }

  SearchResult run() {
    SearchResult r;
    if (!prepare()) return r;
    if (cycle_ && n_ < 3) return r;
    if (!cycle_ && n_ == 2) {
      // Only the edge x-y itself.
      path_ = {start_, target_};
      if (adj_[start_] & bit(target_)) complete(r);
      return r;
    }
    path_.clear();
    path_.push_back(start_);
    dfs(bit(start_), r);
    if (budget_hit_) r.status = SearchStatus::BudgetExceeded;
    r.nodes = nodes_;
    return r;
  }

 private:
  bool interior_ok(std::size_t v, std::size_t a, std::size_t b) const {
    Mask used = bit(a) | bit(b);
    if ((required_[v] & used) != required_[v]) return false;
    int g = std::popcount(orig_[v] & used);
    return g >= demand_[v];
  }

  bool endpoint_ok(std::size_t v, std::size_t a) const {
    if ((required_[v] & bit(a)) != required_[v]) return false;
    return std::popcount(orig_[v] & bit(a)) >= demand_[v];
  }

  bool prune(Mask visited, std::size_t end) const {
    Mask open = full_ & ~visited;
    if (!cycle_) open &= ~bit(target_);
    // Degree feasibility for unvisited vertices.
    Mask reach = open | bit(end);
    if (cycle_) reach |= bit(start_);
    else reach |= bit(target_);
    for (Mask m = open; m; m &= m - 1) {
      std::size_t u = static_cast<std::size_t>(std::countr_zero(m));
      if (std::popcount(adj_[u] & reach & ~bit(u)) < 2) return true;
    }
    if (!cycle_ && open != 0 && (adj_[target_] & open) == 0) return true;
    // Remaining vertices reachable from the current end.
    Mask frontier = bit(end), seen = bit(end);
    Mask goal = open | (cycle_ ? bit(start_) : bit(target_));
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= adj_[std::countr_zero(m)];
      next &= goal & ~seen;
      seen |= next;
      frontier = next & open;
    }
    return (seen & goal) != goal;
  }

  void complete(SearchResult& r) {
    Witness w;
    w.is_cycle = cycle_;
    for (std::size_t i : path_) w.sequence.push_back(verts_[i]);
    if (!validate_witness(s_, w)) return;
    r.status = SearchStatus::Found;
    r.witness = std::move(w);
  }

  // Returns true when the search should stop (found or budget exhausted).
  bool dfs(Mask visited, SearchResult& r) {
    if (s_.node_budget && ++nodes_ > s_.node_budget) {
      budget_hit_ = true;
      return true;
    }
    if (!s_.node_budget) ++nodes_;
    const std::size_t end = path_.back();
    const Mask goal_mask = cycle_ ? full_ : (full_ & ~bit(target_));
    if (visited == goal_mask) {
      if (cycle_) {
        if (!(adj_[end] & bit(start_))) return false;
        std::size_t prev = path_.size() > 1 ? path_[path_.size() - 2] : end;
        if (path_.size() > 1 && !interior_ok(end, prev, start_)) return false;
        if (!interior_ok(start_, path_[1], end)) return false;
      } else {
        if (!(adj_[end] & bit(target_))) return false;
        std::size_t prev = path_.size() > 1 ? path_[path_.size() - 2] : end;
        if (end != start_ && !interior_ok(end, prev, target_)) return false;
        if (end == start_ && !endpoint_ok(start_, target_)) return false;
        if (!endpoint_ok(target_, end)) return false;
        path_.push_back(target_);
      }
      complete(r);
      if (!cycle_) path_.pop_back();
      return r.found();
    }
    if (prune(visited, end)) return false;

    Mask options = adj_[end] & ~visited;
    if (!cycle_) options &= ~bit(target_);
    for (Mask m = options; m; m &= m - 1) {
      std::size_t w = static_cast<std::size_t>(std::countr_zero(m));
      if (path_.size() >= 2) {
        if (!interior_ok(end, path_[path_.size() - 2], w)) continue;
      } else if (!cycle_ && !endpoint_ok(end, w)) {
        continue;
      }
      path_.push_back(w);
      bool stop = dfs(visited | bit(w), r);
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const EdgeConstrainedSearch& s_;
  bool cycle_;
  std::vector<Vertex> verts_;
  std::map<Vertex, std::size_t> index_;
  std::size_t n_ = 0;
  std::vector<Mask> adj_, orig_, required_;
  std::vector<int> req_count_, demand_;
  Mask full_ = 0;
  std::size_t start_ = 0, target_ = 0;
  std::vector<std::size_t> path_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

bool unconstrained(const EdgeConstrainedSearch& s) {
  return s.required_edges.empty() && s.demands.empty() && !s.accept;
}

// Subset DP: ends[mask] holds every vertex v such that some path from the
// start vertex covers exactly `mask` and ends at v.
SearchResult dp_search(const EdgeConstrainedSearch& s, bool cycle) {
  SearchResult r;
  const auto verts = s.host.vertices();
  const std::size_t n = verts.size();
  if (n > kMaxDpVertices) throw PreconditionError("oracle: subset DP limited to 22 vertices");
  if (cycle && n < 3) return r;
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[verts[i]] = i;
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex w : s.host.neighbors(verts[i])) adj[i] |= std::uint32_t{1} << index.at(w);

  std::size_t start = 0, target = 0;
  if (!cycle) {
    auto [x, y] = *s.endpoints;
    if (x == y || !index.count(x) || !index.count(y)) return r;
    start = index.at(x);
    target = index.at(y);
  }
  const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[std::size_t{1} << start] = std::uint32_t{1} << start;
  std::uint64_t nodes = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    if (s.node_budget && ++nodes > s.node_budget) {
      r.status = SearchStatus::BudgetExceeded;
      r.nodes = nodes;
      return r;
    }
    for (std::uint32_t m = e; m; m &= m - 1) {
      std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(m));
      std::uint32_t next = adj[v] & ~mask;
      if (!cycle && (mask | (std::uint32_t{1} << target)) != full) next &= ~(std::uint32_t{1} << target);
      for (std::uint32_t nm = next; nm; nm &= nm - 1) {
        std::uint32_t w = static_cast<std::uint32_t>(std::countr_zero(nm));
        ends[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  if (!s.node_budget) nodes = std::size_t{1} << n;
  r.nodes = nodes;

  std::uint32_t last_ok = ends[full];
  if (cycle) last_ok &= adj[start];
  else last_ok &= std::uint32_t{1} << target;
  if (!last_ok) return r;

  std::vector<std::size_t> rev;
  std::uint32_t mask = full;
  std::uint32_t cur = static_cast<std::uint32_t>(std::countr_zero(last_ok));
  while (true) {
    rev.push_back(cur);
    std::uint32_t prev_mask = mask & ~(std::uint32_t{1} << cur);
    if (!prev_mask) break;
    std::uint32_t cands = ends[prev_mask] & adj[cur];
    cur = static_cast<std::uint32_t>(std::countr_zero(cands));
    mask = prev_mask;
  }
  Witness w;
  w.is_cycle = cycle;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) w.sequence.push_back(verts[*it]);
  if (!validate_witness(s, w)) throw Error("oracle: subset DP produced an invalid witness");
  r.status = SearchStatus::Found;
  r.witness = std::move(w);
  return r;
}

SearchResult search(const EdgeConstrainedSearch& s, bool cycle, SearchStrategy strategy) {
  if (!cycle && !s.endpoints) throw PreconditionError("find_ham_path: endpoints are required");
  bool dp_ok = unconstrained(s) && s.host.order() <= kMaxDpVertices;
  if (strategy == SearchStrategy::SubsetDp) {
    if (!dp_ok) throw PreconditionError("oracle: subset DP needs an unconstrained search on at most 22 vertices");
    return dp_search(s, cycle);
  }
  if (strategy == SearchStrategy::Auto && dp_ok) return dp_search(s, cycle);
  Searcher searcher(s, cycle);
  return searcher.run();
}

}  // namespace

bool validate_witness(const EdgeConstrainedSearch& s, Witness& w) {
  const auto& seq = w.sequence;
  if (seq.size() != s.host.order()) return false;
  std::set<Vertex> seen(seq.begin(), seq.end());
  if (seen.size() != seq.size()) return false;
  for (Vertex v : seq)
    if (!s.host.has_vertex(v)) return false;
  if (w.is_cycle && seq.size() < 3) return false;
  if (!w.is_cycle) {
    if (!s.endpoints || seq.empty()) return false;
    if (seq.front() != s.endpoints->first || seq.back() != s.endpoints->second) return false;
  }
  auto edges = w.edges();
  for (const Edge& e : edges)
    if (!s.host.has_edge(e)) return false;
  std::set<Edge> edge_set(edges.begin(), edges.end());
  for (const Edge& e : s.required_edges)
    if (!edge_set.count(e)) return false;
  auto assigned = assign_demands(s.demands, edges, s.original);
  if (!assigned) return false;
  if (s.accept && !s.accept(seq)) return false;
  w.assigned = std::move(*assigned);
  return true;
}

SearchResult find_ham_cycle(const EdgeConstrainedSearch& s, SearchStrategy strategy) {
  return search(s, true, strategy);
}

SearchResult find_ham_path(const EdgeConstrainedSearch& s, SearchStrategy strategy) {
  return search(s, false, strategy);
}

std::vector<Edge> non_ham_connected_pairs(const Graph& host) {
  const auto verts = host.vertices();
  const std::size_t n = verts.size();
  std::vector<Edge> missing;
  if (n < 2) return missing;
  if (n > kMaxDpVertices) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        EdgeConstrainedSearch s;
        s.host = host;
        s.original = host;
        s.endpoints = {verts[i], verts[j]};
        if (!find_ham_path(s, SearchStrategy::Backtracking).found()) missing.emplace_back(verts[i], verts[j]);
      }
    return missing;
  }
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[verts[i]] = i;
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex w : host.neighbors(verts[i])) adj[i] |= std::uint32_t{1} << index.at(w);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(ends.begin(), ends.end(), 0);
    ends[std::size_t{1} << x] = std::uint32_t{1} << x;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      for (std::uint32_t m = ends[mask]; m; m &= m - 1) {
        std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(m));
        for (std::uint32_t nm = adj[v] & ~mask; nm; nm &= nm - 1) {
          std::uint32_t w = static_cast<std::uint32_t>(std::countr_zero(nm));
          ends[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
        }
      }
    }
    for (std::size_t y = x + 1; y < n; ++y)
      if (!(ends[full] & (std::uint32_t{1} << y))) missing.emplace_back(verts[x], verts[y]);
  }
  return missing;
}

bool is_ham_connected(const Graph& host) {
  if (host.order() < 2) throw PreconditionError("is_ham_connected: needs at least two vertices");
  return non_ham_connected_pairs(host).empty();
}

std::string to_string(PropertyKind k) {
  switch (k) {
    case PropertyKind::TwoBlockCycle: return "twoBlockCycle";
    case PropertyKind::H4: return "H4";
    case PropertyKind::H5: return "H5";
    case PropertyKind::F4: return "F4";
    case PropertyKind::StrongF3: return "strongF3";
    case PropertyKind::StrongF3Ends: return "strongF3ends";
  }
  return "?";
}

std::optional<PropertyKind> property_from_string(const std::string& s) {
  for (auto k : {PropertyKind::TwoBlockCycle, PropertyKind::H4, PropertyKind::H5, PropertyKind::F4,
                 PropertyKind::StrongF3, PropertyKind::StrongF3Ends})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

namespace {

bool is_two_block(const Graph& b) {
  if (b.order() < 3 || !is_connected(b)) return false;
  auto d = decompose(b);
  return d.blocks.size() == 1 && d.blocks.front().is_two_block();
}

void for_each_subset(const std::vector<Vertex>& vs, std::size_t k, std::vector<Vertex>& cur, std::size_t from,
                     const std::function<bool(const std::vector<Vertex>&)>& fn, bool& stop) {
  if (stop) return;
  if (cur.size() == k) {
    if (!fn(cur)) stop = true;
    return;
  }
  for (std::size_t i = from; i < vs.size() && !stop; ++i) {
    cur.push_back(vs[i]);
    for_each_subset(vs, k, cur, i + 1, fn, stop);
    cur.pop_back();
  }
}

}  // namespace

PropertyResult verify_property(PropertyKind kind, const Graph& b) {
  if (!is_two_block(b)) throw PreconditionError("verify_property: input is not a 2-block");
  const std::size_t min_order =
      (kind == PropertyKind::H4 || kind == PropertyKind::F4) ? 4 : (kind == PropertyKind::H5 ? 5 : 3);
  if (b.order() < min_order)
    throw PreconditionError("verify_property: " + to_string(kind) + " needs at least " +
                            std::to_string(min_order) + " vertices");

  PropertyResult result;
  EdgeConstrainedSearch base;
  base.host = square(b);
  base.original = b;
  const auto vs = b.vertices();
  bool stop = false;
  std::vector<Vertex> cur;

  auto fail = [&](std::vector<Vertex> tuple) {
    result.holds = false;
    result.counterexample = std::move(tuple);
    return false;
  };

  switch (kind) {
    case PropertyKind::TwoBlockCycle:
      for (Vertex v : vs)
        for (Vertex w : vs) {
          if (v == w || !result.holds) continue;
          EdgeConstrainedSearch s = base;
          s.demands = {{v, 2}, {w, 1}};
          ++result.instances;
          if (!find_ham_cycle(s).found()) fail({v, w});
        }
      break;
    case PropertyKind::H4:
    case PropertyKind::H5: {
      std::size_t k = kind == PropertyKind::H4 ? 4 : 5;
      for_each_subset(vs, k, cur, 0, [&](const std::vector<Vertex>& xs) {
        EdgeConstrainedSearch s = base;
        for (Vertex x : xs) s.demands.push_back({x, 1});
        ++result.instances;
        return find_ham_cycle(s).found() || fail(xs);
      }, stop);
      break;
    }
    case PropertyKind::F4:
      for_each_subset(vs, 2, cur, 0, [&](const std::vector<Vertex>& ends) {
        std::vector<Vertex> rest;
        for (Vertex v : vs)
          if (v != ends[0] && v != ends[1]) rest.push_back(v);
        std::vector<Vertex> inner;
        bool inner_stop = false;
        for_each_subset(rest, 2, inner, 0, [&](const std::vector<Vertex>& xs) {
          EdgeConstrainedSearch s = base;
          s.endpoints = {ends[0], ends[1]};
          s.demands = {{xs[0], 1}, {xs[1], 1}};
          ++result.instances;
          return find_ham_path(s).found() || fail({ends[0], ends[1], xs[0], xs[1]});
        }, inner_stop);
        return !inner_stop;
      }, stop);
      break;
    case PropertyKind::StrongF3:
      for_each_subset(vs, 2, cur, 0, [&](const std::vector<Vertex>& ends) {
        for (Vertex x3 : vs) {
          if (x3 == ends[0] || x3 == ends[1]) continue;
          for (int i = 0; i < 2; ++i) {
            EdgeConstrainedSearch s = base;
            s.endpoints = {ends[0], ends[1]};
            s.demands = {{x3, 1}, {ends[static_cast<std::size_t>(i)], 1}};
            ++result.instances;
            if (!find_ham_path(s).found()) return fail({ends[0], ends[1], x3, static_cast<Vertex>(i + 1)});
          }
        }
        return true;
      }, stop);
      break;
    case PropertyKind::StrongF3Ends:
      for (Vertex x : vs)
        for (Vertex y : vs) {
          if (x == y || !result.holds) continue;
          EdgeConstrainedSearch s = base;
          s.endpoints = {x, y};
          s.demands = {{x, 1}};
          const Graph& g = b;
          s.accept = [&g, y](const std::vector<Vertex>& seq) {
            // (ii): the edge at y is an edge of G, or some path edge joins two
            // neighbours of y.
            if (g.has_edge(seq[seq.size() - 2], y)) return true;
            const auto& ny = g.neighbors(y);
            for (std::size_t i = 0; i + 1 < seq.size(); ++i)
              if (ny.count(seq[i]) && ny.count(seq[i + 1])) return true;
            return false;
          };
          ++result.instances;
          if (!find_ham_path(s).found()) fail({x, y});
        }
      break;
  }
  return result;
}

}  // namespace sqham
