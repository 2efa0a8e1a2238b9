#include "nfree/arc_diagram.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>

#include "nfree/errors.hpp"

namespace nfree {

std::vector<std::size_t> ArcDiagram::in_degrees() const {
  std::vector<std::size_t> deg(vertex_count, 0);
  for (const auto& a : arcs) ++deg[a.head];
  return deg;
}

std::vector<std::size_t> ArcDiagram::out_degrees() const {
  std::vector<std::size_t> deg(vertex_count, 0);
  for (const auto& a : arcs) ++deg[a.tail];
  return deg;
}

std::vector<std::vector<ElementId>> ArcDiagram::in_edges() const {
  std::vector<std::vector<ElementId>> out(vertex_count);
  for (std::size_t e = 0; e < arcs.size(); ++e)
    out[arcs[e].head].push_back(static_cast<ElementId>(e));
  return out;
}

std::vector<std::vector<ElementId>> ArcDiagram::out_edges() const {
  std::vector<std::vector<ElementId>> out(vertex_count);
  for (std::size_t e = 0; e < arcs.size(); ++e)
    out[arcs[e].tail].push_back(static_cast<ElementId>(e));
  return out;
}

namespace {

void check_vertices(const ArcDiagram& d) {
  for (std::size_t e = 0; e < d.arcs.size(); ++e) {
    if (d.arcs[e].tail >= d.vertex_count || d.arcs[e].head >= d.vertex_count) {
      throw IndexError("edge " + std::to_string(e) + " references a vertex >= " +
                       std::to_string(d.vertex_count));
    }
  }
}

}  // namespace

std::vector<VertexId> topological_order(const ArcDiagram& diagram) {
  check_vertices(diagram);
  auto indeg = diagram.in_degrees();
  auto outs = diagram.out_edges();
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (std::size_t v = 0; v < diagram.vertex_count; ++v)
    if (indeg[v] == 0) ready.push(static_cast<VertexId>(v));
  std::vector<VertexId> order;
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (ElementId e : outs[v]) {
      if (--indeg[diagram.arcs[e].head] == 0) ready.push(diagram.arcs[e].head);
    }
  }
  if (order.size() != diagram.vertex_count) {
    throw CycleError("digraph has a directed cycle");
  }
  return order;
}

std::optional<std::string> validate_arc_diagram(const ArcDiagram& d) {
  try {
    topological_order(d);
  } catch (const Error& e) {
    return std::string(e.what());
  }
  if (d.source >= d.vertex_count || d.sink >= d.vertex_count || d.source == d.sink) {
    return "source/sink ids invalid";
  }
  if (d.arcs.empty()) {
    if (d.vertex_count == 2) return std::nullopt;
    return "edgeless diagram must consist of source and sink only";
  }
  auto indeg = d.in_degrees();
  auto outdeg = d.out_degrees();
  for (std::size_t v = 0; v < d.vertex_count; ++v) {
    if (indeg[v] == 0 && v != d.source) return "vertex " + std::to_string(v) + " is a second source";
    if (outdeg[v] == 0 && v != d.sink) return "vertex " + std::to_string(v) + " is a second sink";
  }
  if (indeg[d.source] != 0 || outdeg[d.sink] != 0) {
    return "source has in-edges or sink has out-edges";
  }
  // With a single source and sink in a DAG, every vertex is on a source-sink
  // path: walk back to a zero-in-degree vertex and forward to a zero-out one.
  return std::nullopt;
}

NFreeVerdict is_nfree(const Poset& poset) {
  const auto diagram = transitive_reduction(poset);
  const std::size_t n = poset.size();
  NFreeVerdict verdict;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const auto& ux = diagram.upper_covers[x];
      const auto& uy = diagram.upper_covers[y];
      if (ux == uy || !ux.intersects(uy)) continue;
      // Orient so that b has an upper cover d that a lacks.
      std::size_t a = x, b = y;
      if (uy.is_subset_of(ux)) std::swap(a, b);
      const auto& ua = diagram.upper_covers[a];
      const auto& ub = diagram.upper_covers[b];
      std::size_t c = (ua & ub).to_vector().front();
      std::size_t d = (ub - ua).to_vector().front();
      verdict.nfree = false;
      verdict.witness = std::array<ElementId, 4>{
          static_cast<ElementId>(a), static_cast<ElementId>(b),
          static_cast<ElementId>(c), static_cast<ElementId>(d)};
      return verdict;
    }
  }
  return verdict;
}

ArcDiagram arc_diagram(const Poset& poset) {
  const auto verdict = is_nfree(poset);
  if (!verdict.nfree) {
    const auto& w = *verdict.witness;
    throw NotNFreeError("order contains an N: " + poset.name(w[0]) + "<" + poset.name(w[2]) +
                        ", " + poset.name(w[1]) + "<" + poset.name(w[2]) + ", " +
                        poset.name(w[1]) + "<" + poset.name(w[3]));
  }
  const auto diagram = transitive_reduction(poset);
  const std::size_t n = poset.size();

  // One internal vertex per distinct nonempty upper-cover set. Key each block
  // by the smallest element of that set, which orders internal vertices by
  // the smallest element leaving them.
  std::map<std::size_t, std::size_t> block_of_first_upper;
  for (std::size_t x = 0; x < n; ++x) {
    const auto& up = diagram.upper_covers[x];
    if (up.none()) continue;
    block_of_first_upper.emplace(up.to_vector().front(), 0);
  }
  std::size_t next = 1;
  for (auto& [key, id] : block_of_first_upper) id = next++;

  ArcDiagram out;
  out.vertex_count = block_of_first_upper.size() + 2;
  out.source = 0;
  out.sink = static_cast<VertexId>(out.vertex_count - 1);
  out.arcs.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& up = diagram.upper_covers[x];
    out.arcs[x].head = up.none()
                           ? out.sink
                           : static_cast<VertexId>(block_of_first_upper.at(up.to_vector().front()));
  }
  for (std::size_t y = 0; y < n; ++y) {
    const auto& low = diagram.lower_covers[y];
    if (low.none()) {
      out.arcs[y].tail = out.source;
    } else {
      // All lower covers of y share one upper-cover set, hence one head.
      out.arcs[y].tail = out.arcs[low.to_vector().front()].head;
    }
  }
  return out;
}

Poset line_digraph(const ArcDiagram& diagram) {
  topological_order(diagram);
  auto outs = diagram.out_edges();
  std::vector<Relation> pairs;
  for (std::size_t e = 0; e < diagram.arcs.size(); ++e) {
    for (ElementId f : outs[diagram.arcs[e].head]) {
      pairs.emplace_back(static_cast<ElementId>(e), f);
    }
  }
  return transitive_closure(pairs, diagram.arcs.size());
}

Poset arc_order(const ArcDiagram& diagram) {
  topological_order(diagram);
  std::vector<Relation> pairs;
  for (const auto& a : diagram.arcs) pairs.emplace_back(a.tail, a.head);
  return transitive_closure(pairs, diagram.vertex_count);
}

ArcDiagram reverse(const ArcDiagram& diagram) {
  ArcDiagram r = diagram;
  std::swap(r.source, r.sink);
  for (auto& a : r.arcs) std::swap(a.tail, a.head);
  return r;
}

CanonicalArcForm canonical_form(const ArcDiagram& diagram) {
  auto ins = diagram.in_edges();
  auto outs = diagram.out_edges();
  CanonicalArcForm form;
  for (std::size_t v = 0; v < diagram.vertex_count; ++v) {
    form.vertices.emplace_back(ins[v], outs[v]);
  }
  std::sort(form.vertices.begin(), form.vertices.end());
  return form;
}

ArcDiagram gen_random_dag(std::size_t vertex_count, double edge_prob, std::uint64_t seed) {
  if (vertex_count < 2) throw RangeError("vertex_count must be >= 2");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) throw RangeError("edge_prob must lie in (0, 1]");

  // Bits to [0,1) by hand: std::*_distribution output is library-specific.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<std::pair<std::size_t, std::size_t>> sampled;
  for (std::size_t i = 0; i < vertex_count; ++i)
    for (std::size_t j = i + 1; j < vertex_count; ++j)
      if (uniform() < edge_prob) sampled.emplace_back(i, j);
  if (sampled.empty()) throw EmptyInstanceError("no edge sampled");

  std::vector<int> renumber(vertex_count, -1);
  for (auto [i, j] : sampled) renumber[i] = renumber[j] = 0;
  VertexId next = 1;
  for (auto& r : renumber)
    if (r == 0) r = static_cast<int>(next++);

  ArcDiagram d;
  d.vertex_count = next + 1;
  d.source = 0;
  d.sink = next;
  std::vector<std::size_t> indeg(d.vertex_count, 0), outdeg(d.vertex_count, 0);
  std::vector<Arc> inner;
  for (auto [i, j] : sampled) {
    Arc a{static_cast<VertexId>(renumber[i]), static_cast<VertexId>(renumber[j])};
    ++outdeg[a.tail];
    ++indeg[a.head];
    inner.push_back(a);
  }
  for (VertexId v = 1; v < d.sink; ++v)
    if (indeg[v] == 0) d.arcs.push_back({d.source, v});
  d.arcs.insert(d.arcs.end(), inner.begin(), inner.end());
  for (VertexId v = 1; v < d.sink; ++v)
    if (outdeg[v] == 0) d.arcs.push_back({v, d.sink});
  return d;
}

Poset gen_random_nfree(std::size_t vertex_count, double edge_prob, std::uint64_t seed) {
  return line_digraph(gen_random_dag(vertex_count, edge_prob, seed));
}

ArcDiagram gen_high_spread(std::size_t ell) {
  if (ell < 1) throw RangeError("ell must be >= 1");
  const std::size_t last = 2 * ell + 2;
  ArcDiagram d;
  d.vertex_count = last + 1;
  d.source = 0;
  d.sink = static_cast<VertexId>(last);
  for (std::size_t k = 0; k < last; ++k) {
    d.arcs.push_back({static_cast<VertexId>(k), static_cast<VertexId>(k + 1)});
  }
  for (std::size_t j = 1; j <= ell; ++j) {
    d.arcs.push_back({static_cast<VertexId>(j), static_cast<VertexId>(last - j)});
  }
  return d;
}

Poset gen_weak_order(std::span<const std::size_t> block_sizes) {
  std::size_t n = 0;
  for (auto s : block_sizes) {
    if (s == 0) throw RangeError("block sizes must be >= 1");
    n += s;
  }
  std::vector<Relation> pairs;
  std::size_t start = 0;
  for (std::size_t b = 0; b + 1 < block_sizes.size(); ++b) {
    std::size_t mid = start + block_sizes[b];
    std::size_t end = mid + block_sizes[b + 1];
    for (std::size_t x = start; x < mid; ++x)
      for (std::size_t y = mid; y < end; ++y)
        pairs.emplace_back(static_cast<ElementId>(x), static_cast<ElementId>(y));
    start = mid;
  }
  return transitive_closure(pairs, n);
}

}  // namespace nfree
