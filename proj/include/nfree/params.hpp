#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nfree/arc_diagram.hpp"
#include "nfree/count.hpp"
#include "nfree/counting.hpp"
#include "nfree/poset.hpp"

namespace nfree {

// Degree-product bounds on e(P) from the arc diagram A = A(P):
//   e(A) * prod o_v!  <=  e(P)  <=  n! * prod i_v! o_v! / (i_v + o_v)!
// and the dual lower bound e(A) * prod i_v!.
struct BoundsReport {
  Count e_arc;  // linear extensions of the vertex order of A
  Count lower;
  Count dual_lower;
  Count best_lower;
  ExactFraction upper_exact;
  Count upper_floor;
  // lower + dual_lower; only filled when the caller asserts that the two
  // families of extensions are disjoint.
  std::optional<Count> separated_lower;
};

BoundsReport bounds(const Poset& poset, bool assume_separated = false,
                    std::size_t budget = downset_budget());

// Permutations of P in which every in-edge of vertex v precedes every
// out-edge of v. Enumerates; throws TooLargeError above kMaxEnumerationSize.
Count good_vertex_count(const Poset& poset, VertexId v);

// n! * i! * o! / (i + o)!
Count good_vertex_formula(std::size_t n, std::size_t in_degree, std::size_t out_degree);

struct RankedExtension {
  std::vector<std::size_t> rank;  // longest path from the source, per vertex
  LinearExtension extension;      // out-edges of vertices in (rank, id) order
};

RankedExtension rank_and_canonical(const ArcDiagram& diagram);

// Active set A_i after each prefix of `order`, i = 1..n. Throws
// NotExtensionError / PermutationError for an invalid order.
std::vector<std::vector<VertexId>> activity_trace(const ArcDiagram& diagram,
                                                  std::span<const ElementId> order);

// Largest active set along `order`.
std::size_t activity_of_extension(const Poset& poset, std::span<const ElementId> order);

struct ExactActivity {
  std::size_t activity = 0;
  LinearExtension witness;  // lexicographically smallest extension attaining it
  std::size_t downsets = 0;
};

// Minimum activity over all linear extensions. The active set depends only on
// the prefix as a set, so this is a bottleneck shortest path from the empty
// downset to the full one.
ExactActivity exact_activity(const Poset& poset, std::size_t budget = downset_budget());

inline constexpr std::size_t kDefaultSpreadPairBudget = 1'000'000;

struct SpreadResult {
  // Max length difference over pairs of interiorly disjoint paths; empty when
  // some vertex pair tripped the enumeration budget.
  std::optional<std::size_t> exact;
  // Max of longest - shortest over vertex pairs joined by two interiorly
  // disjoint paths. Always >= exact.
  std::size_t upper = 0;
  // Vertex pairs where the enumerated value and longest - shortest differ.
  std::vector<std::pair<VertexId, VertexId>> disagreements;
};

SpreadResult spread(const ArcDiagram& diagram,
                    std::size_t pair_budget = kDefaultSpreadPairBudget);

struct LemmaBound {
  std::size_t width = 0;   // width of the vertex order of A(P)
  std::size_t spread = 0;  // exact when known, else the upper estimate
  bool spread_exact = true;
  std::size_t bound = 0;   // width * (spread + 2)
};

LemmaBound activity_lemma_bound(const Poset& poset,
                                std::size_t pair_budget = kDefaultSpreadPairBudget);

}  // namespace nfree
