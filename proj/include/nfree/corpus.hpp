#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nfree/poset.hpp"

namespace nfree {

struct CorpusEntry {
  std::uint64_t seed = 0;
  std::size_t vertex_count = 0;
  double edge_prob = 0.0;
  Poset poset;
};

// Seeded random N-free orders from gen_random_nfree, cycling through
// 3..6 sampled vertices and edge probabilities 0.3/0.45/0.6/0.75, keeping
// distinct orders whose arc diagram has at most `max_arc_vertices` vertices
// and at most `max_elements` elements. Element ids are shuffled with the
// entry seed. Seeds run upward from `base_seed`.
std::vector<CorpusEntry> random_nfree_corpus(std::size_t count, std::uint64_t base_seed,
                                             std::size_t max_arc_vertices = 6,
                                             std::size_t max_elements = 9);

}  // namespace nfree
