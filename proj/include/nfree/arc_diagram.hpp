#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nfree/poset.hpp"

namespace nfree {

using VertexId = std::uint32_t;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed multigraph whose edges are poset elements: arcs[e] is the edge
// carrying element e. A normalized arc diagram has a unique source and a
// unique sink; line_digraph accepts any acyclic multigraph.
struct ArcDiagram {
  std::size_t vertex_count = 0;
  VertexId source = 0;
  VertexId sink = 0;
  std::vector<Arc> arcs;

  std::size_t edge_count() const { return arcs.size(); }
  std::vector<std::size_t> in_degrees() const;
  std::vector<std::size_t> out_degrees() const;
  // Element ids sorted ascending.
  std::vector<std::vector<ElementId>> in_edges() const;
  std::vector<std::vector<ElementId>> out_edges() const;
};

// Throws CycleError if the multigraph has a directed cycle (self-loops
// included). Returns vertices in topological order, smallest id first.
std::vector<VertexId> topological_order(const ArcDiagram& diagram);

// Checks the structural invariants of a normalized diagram: acyclic, source
// and sink are the only vertices of in-/out-degree zero, every vertex on a
// source-sink path. Returns a description of the first violation.
std::optional<std::string> validate_arc_diagram(const ArcDiagram& diagram);

struct NFreeVerdict {
  bool nfree = true;
  // Covers a<c, b<c, b<d with d not an upper cover of a.
  std::optional<std::array<ElementId, 4>> witness;
};

// Line-digraph test on the Hasse diagram: any two upper-cover sets are
// equal or disjoint.
NFreeVerdict is_nfree(const Poset& poset);

// Normalized arc diagram. Vertex 0 is the source, vertex_count-1 the sink,
// and internal vertices are numbered by the smallest element leaving them.
// Throws NotNFreeError. The empty poset maps to a bare source and sink.
ArcDiagram arc_diagram(const Poset& poset);

// Poset on edge ids generated by (e,f) whenever head(e) = tail(f).
Poset line_digraph(const ArcDiagram& diagram);

// Order on the diagram's vertices induced by reachability.
Poset arc_order(const ArcDiagram& diagram);

// Same edges reversed; source and sink swap.
ArcDiagram reverse(const ArcDiagram& diagram);

// Vertex-renaming-invariant form: for each vertex its (in-edge ids,
// out-edge ids), sorted. Two diagrams with equal forms are isomorphic by an
// isomorphism that fixes every edge label.
struct CanonicalArcForm {
  std::vector<std::pair<std::vector<ElementId>, std::vector<ElementId>>> vertices;
  friend bool operator==(const CanonicalArcForm&, const CanonicalArcForm&) = default;
};
CanonicalArcForm canonical_form(const ArcDiagram& diagram);

// Random DAG on `vertex_count` ordered vertices (each forward pair kept with
// probability edge_prob), isolated vertices dropped, then hooked to a fresh
// source and sink. Returns its line digraph. Deterministic per seed.
// Throws EmptyInstanceError when no edge is sampled.
Poset gen_random_nfree(std::size_t vertex_count, double edge_prob, std::uint64_t seed);

// Same sample as gen_random_nfree, before taking the line digraph.
ArcDiagram gen_random_dag(std::size_t vertex_count, double edge_prob, std::uint64_t seed);

// Path v_0 -> ... -> v_{2l+2} (elements 0..2l+1) plus long edges
// v_j -> v_{2l+2-j} for j = 1..l (elements 2l+2..3l+1). The vertex order is
// a chain, yet every extension passes a prefix where l vertices are active:
// when the middle edge v_l -> v_{l+1} is placed, for each j either v_j
// still waits for its long edge or v_{2l+2-j} waits for its path edge.
ArcDiagram gen_high_spread(std::size_t ell);

// Blocks B_1 < B_2 < ... of the given sizes, elements numbered block by block.
Poset gen_weak_order(std::span<const std::size_t> block_sizes);

}  // namespace nfree
