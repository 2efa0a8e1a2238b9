#include "nfree/corpus.hpp"

#include <array>
#include <random>
#include <set>

#include "nfree/arc_diagram.hpp"
#include "nfree/errors.hpp"

namespace nfree {

namespace {

// The generator numbers elements in sampling order, so few distinct labeled
// orders fit the size limits. A seeded shuffle of the ids fixes that.
Poset relabel(const Poset& p, std::uint64_t seed) {
  const std::size_t n = p.size();
  std::vector<ElementId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<ElementId>(i);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  std::vector<Relation> pairs;
  for (auto [x, y] : p.relations()) pairs.emplace_back(perm[x], perm[y]);
  return transitive_closure(pairs, n);
}

}  // namespace

std::vector<CorpusEntry> random_nfree_corpus(std::size_t count, std::uint64_t base_seed,
                                             std::size_t max_arc_vertices,
                                             std::size_t max_elements) {
  constexpr std::array<double, 4> kProbs{0.3, 0.45, 0.6, 0.75};
  std::set<std::pair<std::size_t, std::vector<Relation>>> seen;
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::uint64_t k = 0; out.size() < count; ++k) {
    CorpusEntry entry;
    entry.seed = base_seed + k;
    entry.vertex_count = 3 + k % 4;
    entry.edge_prob = kProbs[(k / 4) % kProbs.size()];
    try {
      entry.poset = gen_random_nfree(entry.vertex_count, entry.edge_prob, entry.seed);
    } catch (const EmptyInstanceError&) {
      continue;
    }
    if (entry.poset.size() > max_elements) continue;
    entry.poset = relabel(entry.poset, entry.seed);
    if (arc_diagram(entry.poset).vertex_count > max_arc_vertices) continue;
    // Small shapes recur often; keep each labeled order once.
    if (!seen.emplace(entry.poset.size(), entry.poset.relations()).second) continue;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace nfree
