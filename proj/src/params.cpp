#include "nfree/params.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_map>

#include "nfree/errors.hpp"

namespace nfree {

BoundsReport bounds(const Poset& poset, bool assume_separated, std::size_t budget) {
  const ArcDiagram diagram = arc_diagram(poset);
  const auto indeg = diagram.in_degrees();
  const auto outdeg = diagram.out_degrees();

  BoundsReport r;
  // The vertex order of A(P) need not be N-free; count it on its lattice.
  r.e_arc = downset_count(arc_order(diagram), budget);

  Count out_product = 1, in_product = 1;
  ExactFraction ratio = 1;
  for (std::size_t v = 0; v < diagram.vertex_count; ++v) {
    Count fi = factorial(indeg[v]), fo = factorial(outdeg[v]);
    out_product *= fo;
    in_product *= fi;
    ratio *= ExactFraction(fi * fo, factorial(indeg[v] + outdeg[v]));
  }
  ratio.canonicalize();

  r.lower = r.e_arc * out_product;
  r.dual_lower = r.e_arc * in_product;
  r.best_lower = r.lower > r.dual_lower ? r.lower : r.dual_lower;
  r.upper_exact = ExactFraction(factorial(poset.size())) * ratio;
  r.upper_exact.canonicalize();
  r.upper_floor = floor_of(r.upper_exact);
  if (assume_separated) r.separated_lower = Count(r.lower + r.dual_lower);
  return r;
}

Count good_vertex_formula(std::size_t n, std::size_t in_degree, std::size_t out_degree) {
  return factorial(n) * factorial(in_degree) * factorial(out_degree) /
         factorial(in_degree + out_degree);
}

Count good_vertex_count(const Poset& poset, VertexId v) {
  const ArcDiagram diagram = arc_diagram(poset);
  if (v >= diagram.vertex_count) {
    throw IndexError("vertex " + std::to_string(v) + " out of range");
  }
  check_enumerable(poset.size(), "good_vertex_count");
  const auto ins = diagram.in_edges()[v];
  const auto outs = diagram.out_edges()[v];
  std::vector<std::size_t> pos(poset.size());
  Count good = 0;
  for_each_permutation(poset.size(), [&](std::span<const ElementId> perm) {
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    std::size_t last_in = 0, first_out = std::numeric_limits<std::size_t>::max();
    for (ElementId e : ins) last_in = std::max(last_in, pos[e] + 1);
    for (ElementId e : outs) first_out = std::min(first_out, pos[e] + 1);
    if (ins.empty() || outs.empty() || last_in < first_out) ++good;
  });
  return good;
}

RankedExtension rank_and_canonical(const ArcDiagram& diagram) {
  const auto topo = topological_order(diagram);
  const auto outs = diagram.out_edges();
  RankedExtension r;
  r.rank.assign(diagram.vertex_count, 0);
  for (VertexId v : topo) {
    for (ElementId e : outs[v]) {
      auto& h = r.rank[diagram.arcs[e].head];
      h = std::max(h, r.rank[v] + 1);
    }
  }
  std::vector<VertexId> by_rank(topo.begin(), topo.end());
  std::sort(by_rank.begin(), by_rank.end(), [&](VertexId a, VertexId b) {
    return std::pair(r.rank[a], a) < std::pair(r.rank[b], b);
  });
  for (VertexId v : by_rank) {
    r.extension.insert(r.extension.end(), outs[v].begin(), outs[v].end());
  }
  return r;
}

std::vector<std::vector<VertexId>> activity_trace(const ArcDiagram& diagram,
                                                  std::span<const ElementId> order) {
  const std::size_t n = diagram.edge_count();
  require_linear_extension(line_digraph(diagram), order);
  const auto indeg = diagram.in_degrees();
  const auto outdeg = diagram.out_degrees();
  std::vector<std::size_t> placed_in(diagram.vertex_count, 0), placed_out(diagram.vertex_count, 0);
  std::vector<VertexId> active;
  std::vector<std::vector<VertexId>> trace;
  trace.reserve(n);
  for (ElementId x : order) {
    const Arc a = diagram.arcs[x];
    if (indeg[a.tail] > 0 && ++placed_out[a.tail] == outdeg[a.tail]) std::erase(active, a.tail);
    if (++placed_in[a.head] == 1 && outdeg[a.head] > 0) {
      active.insert(std::upper_bound(active.begin(), active.end(), a.head), a.head);
    }
    trace.push_back(active);
  }
  return trace;
}

std::size_t activity_of_extension(const Poset& poset, std::span<const ElementId> order) {
  require_linear_extension(poset, order);
  std::size_t alpha = 0;
  for (const auto& a : activity_trace(arc_diagram(poset), order)) alpha = std::max(alpha, a.size());
  return alpha;
}

ExactActivity exact_activity(const Poset& poset, std::size_t budget) {
  const ArcDiagram diagram = arc_diagram(poset);
  const std::size_t n = poset.size();
  const auto ins = diagram.in_edges();
  const auto outs = diagram.out_edges();

  // Internal vertices as (in-edge mask, out-edge mask).
  std::vector<std::pair<ElementSet, ElementSet>> masks;
  for (std::size_t v = 0; v < diagram.vertex_count; ++v) {
    if (ins[v].empty() || outs[v].empty()) continue;
    ElementSet in_mask(n), out_mask(n);
    for (ElementId e : ins[v]) in_mask.set(e);
    for (ElementId e : outs[v]) out_mask.set(e);
    masks.emplace_back(std::move(in_mask), std::move(out_mask));
  }
  auto active_size = [&](const ElementSet& d) {
    std::size_t k = 0;
    for (const auto& [in_mask, out_mask] : masks)
      if (d.intersects(in_mask) && out_mask.has_outside(d)) ++k;
    return k;
  };

  // layers[k] holds the downsets of size k; index[k] maps them to slots.
  std::vector<std::vector<ElementSet>> layers(n + 1);
  std::vector<std::unordered_map<ElementSet, std::size_t, ElementSetHash>> index(n + 1);
  layers[0].emplace_back(n);
  index[0].emplace(layers[0][0], 0);
  std::size_t seen = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& d : layers[k]) {
      for (std::size_t x = 0; x < n; ++x) {
        if (d.test(x) || !poset.below(x).is_subset_of(d)) continue;
        ElementSet grown = d;
        grown.set(x);
        if (index[k + 1].emplace(grown, layers[k + 1].size()).second) {
          layers[k + 1].push_back(std::move(grown));
          if (++seen > budget) {
            throw BudgetExceededError("downset lattice exceeds budget of " +
                                          std::to_string(budget) + " downsets",
                                      seen);
          }
        }
      }
    }
  }

  // best[k][slot]: smallest achievable max active-set size from this downset
  // to the full set, counting the downset itself.
  std::vector<std::vector<std::size_t>> best(n + 1);
  best[n].assign(layers[n].size(), 0);
  for (std::size_t k = n; k-- > 0;) {
    best[k].resize(layers[k].size());
    for (std::size_t s = 0; s < layers[k].size(); ++s) {
      const auto& d = layers[k][s];
      std::size_t onward = std::numeric_limits<std::size_t>::max();
      for (std::size_t x = 0; x < n; ++x) {
        if (d.test(x) || !poset.below(x).is_subset_of(d)) continue;
        ElementSet grown = d;
        grown.set(x);
        onward = std::min(onward, best[k + 1][index[k + 1].at(grown)]);
      }
      best[k][s] = std::max(active_size(d), onward);
    }
  }

  ExactActivity out;
  out.activity = best[0][0];
  out.downsets = seen;
  // Greedy smallest-id choice among steps that keep the bottleneck.
  ElementSet d(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (d.test(x) || !poset.below(x).is_subset_of(d)) continue;
      ElementSet grown = d;
      grown.set(x);
      if (best[k + 1][index[k + 1].at(grown)] <= out.activity) {
        out.witness.push_back(static_cast<ElementId>(x));
        d = std::move(grown);
        break;
      }
    }
  }
  return out;
}

namespace {

// Two interiorly disjoint u -> v paths exist iff the vertex-split flow with
// unit capacities reaches 2.
bool has_two_disjoint_paths(const ArcDiagram& d, VertexId u, VertexId v) {
  // Node 2w is w_in, 2w+1 is w_out. Residual graph as adjacency of edge ids.
  struct Edge {
    std::size_t to;
    int cap;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> adj(2 * d.vertex_count);
  auto add = [&](std::size_t a, std::size_t b, int cap) {
    adj[a].push_back(edges.size());
    edges.push_back({b, cap});
    adj[b].push_back(edges.size());
    edges.push_back({a, 0});
  };
  for (std::size_t w = 0; w < d.vertex_count; ++w) {
    add(2 * w, 2 * w + 1, (w == u || w == v) ? 2 : 1);
  }
  for (const auto& a : d.arcs) add(2 * a.tail + 1, 2 * a.head, 1);

  const std::size_t s = 2 * u + 1, t = 2 * static_cast<std::size_t>(v);
  int flow = 0;
  while (flow < 2) {
    std::vector<std::size_t> via(adj.size(), std::numeric_limits<std::size_t>::max());
    std::vector<char> seen(adj.size(), 0);
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      std::size_t a = q.front();
      q.pop();
      for (std::size_t id : adj[a]) {
        if (edges[id].cap > 0 && !seen[edges[id].to]) {
          seen[edges[id].to] = 1;
          via[edges[id].to] = id;
          q.push(edges[id].to);
        }
      }
    }
    if (!seen[t]) break;
    for (std::size_t a = t; a != s;) {
      std::size_t id = via[a];
      edges[id].cap -= 1;
      edges[id ^ 1].cap += 1;
      a = edges[id ^ 1].to;
    }
    ++flow;
  }
  return flow >= 2;
}

struct PathInfo {
  ElementSet interior;  // over vertices
  std::size_t length = 0;
};

// All u -> v paths (parallel edges give distinct paths). Returns false if
// more than `cap` paths exist.
bool enumerate_paths(const ArcDiagram& d, const std::vector<std::vector<ElementId>>& outs,
                     const std::vector<ElementSet>& reaches, VertexId u, VertexId v,
                     std::size_t cap, std::vector<PathInfo>& out) {
  PathInfo cur{ElementSet(d.vertex_count), 0};
  bool ok = true;
  auto dfs = [&](auto&& self, VertexId w) -> void {
    if (!ok) return;
    for (ElementId e : outs[w]) {
      VertexId h = d.arcs[e].head;
      if (h == v) {
        if (out.size() >= cap) {
          ok = false;
          return;
        }
        out.push_back({cur.interior, cur.length + 1});
        continue;
      }
      if (!reaches[h].test(v)) continue;
      cur.interior.set(h);
      ++cur.length;
      self(self, h);
      --cur.length;
      cur.interior.reset(h);
      if (!ok) return;
    }
  };
  dfs(dfs, u);
  return ok;
}

}  // namespace

SpreadResult spread(const ArcDiagram& diagram, std::size_t pair_budget) {
  const auto topo = topological_order(diagram);
  const auto outs = diagram.out_edges();
  const std::size_t vc = diagram.vertex_count;

  // reaches[w]: vertices reachable from w by a nonempty path.
  std::vector<ElementSet> reaches(vc, ElementSet(vc));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (ElementId e : outs[*it]) {
      VertexId h = diagram.arcs[e].head;
      reaches[*it].set(h);
      reaches[*it] |= reaches[h];
    }
  }

  SpreadResult r;
  std::size_t exact = 0;
  bool exact_known = true;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  for (VertexId u : topo) {
    // Longest/shortest path lengths from u.
    std::vector<std::size_t> longest(vc, 0), shortest(vc, kNone);
    std::vector<char> reached(vc, 0);
    reached[u] = 1;
    shortest[u] = 0;
    for (VertexId w : topo) {
      if (!reached[w]) continue;
      for (ElementId e : outs[w]) {
        VertexId h = diagram.arcs[e].head;
        reached[h] = 1;
        longest[h] = std::max(longest[h], longest[w] + 1);
        shortest[h] = std::min(shortest[h], shortest[w] + 1);
      }
    }

    for (VertexId v = 0; v < vc; ++v) {
      if (v == u || !reaches[u].test(v)) continue;
      const bool two = has_two_disjoint_paths(diagram, u, v);
      const std::size_t estimate = two ? longest[v] - shortest[v] : 0;
      r.upper = std::max(r.upper, estimate);

      // Enumerated independently of the flow test above.
      std::vector<PathInfo> paths;
      if (!enumerate_paths(diagram, outs, reaches, u, v, pair_budget, paths)) {
        exact_known = false;
        continue;
      }
      std::sort(paths.begin(), paths.end(),
                [](const PathInfo& a, const PathInfo& b) { return a.length < b.length; });
      std::size_t local = 0, checks = 0;
      bool tripped = false;
      for (std::size_t i = 0; i < paths.size() && !tripped; ++i) {
        for (std::size_t j = paths.size(); j-- > i + 1;) {
          if (paths[j].length - paths[i].length <= local) break;
          if (++checks > pair_budget) {
            tripped = true;
            break;
          }
          if (!paths[i].interior.intersects(paths[j].interior)) {
            local = paths[j].length - paths[i].length;
            break;
          }
        }
      }
      if (tripped) {
        exact_known = false;
        continue;
      }
      exact = std::max(exact, local);
      if (two && local != estimate) r.disagreements.emplace_back(u, v);
    }
  }
  if (exact_known) r.exact = exact;
  return r;
}

LemmaBound activity_lemma_bound(const Poset& poset, std::size_t pair_budget) {
  const ArcDiagram diagram = arc_diagram(poset);
  const SpreadResult s = spread(diagram, pair_budget);
  LemmaBound b;
  b.width = width(arc_order(diagram)).width;
  b.spread_exact = s.exact.has_value();
  b.spread = s.exact.value_or(s.upper);
  b.bound = b.width * (b.spread + 2);
  return b;
}

}  // namespace nfree
