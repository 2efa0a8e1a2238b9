#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nfree/element_set.hpp"

namespace nfree {

using ElementId = std::uint32_t;
using Relation = std::pair<ElementId, ElementId>;

// A permutation of 0..n-1, read left to right.
using LinearExtension = std::vector<ElementId>;

// Permutation enumeration (brute-force counting, good-vertex checks) refuses
// posets larger than this.
inline constexpr std::size_t kMaxEnumerationSize = 10;

// Finite strict partial order on 0..n-1, stored transitively closed as one
// up-set and one down-set bit row per element.
class Poset {
 public:
  Poset() = default;
  // Antichain on n elements.
  explicit Poset(std::size_t n);

  std::size_t size() const { return up_.size(); }

  bool less(ElementId x, ElementId y) const { return up_[x].test(y); }
  bool comparable(ElementId x, ElementId y) const {
    return less(x, y) || less(y, x);
  }
  // Strict up-set {y : x < y} and down-set {y : y < x}.
  const ElementSet& above(ElementId x) const { return up_[x]; }
  const ElementSet& below(ElementId x) const { return down_[x]; }

  // All pairs (x,y) with x < y, lexicographically sorted.
  std::vector<Relation> relations() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  // Label if present, decimal id otherwise.
  std::string name(ElementId x) const;

  // Labels are presentation only and do not take part in comparison.
  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  friend Poset transitive_closure(std::span<const Relation>, std::size_t);
  friend Poset dual(const Poset&);
  friend Poset induced_subposet(const Poset&, std::span<const ElementId>);

  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::string> labels_;
};

// Hasse diagram: (x,y) with y an upper cover of x.
struct CoverDigraph {
  std::size_t n = 0;
  std::vector<Relation> covers;  // sorted
  std::vector<ElementSet> upper_covers;
  std::vector<ElementSet> lower_covers;
};

// Smallest transitively closed relation containing `pairs`. Pairs are added
// one at a time so a CycleError can name the pair that closed the cycle.
Poset transitive_closure(std::span<const Relation> pairs, std::size_t n);

CoverDigraph transitive_reduction(const Poset& poset);

struct WidthResult {
  std::size_t width = 0;
  std::vector<ElementId> antichain;            // maximum antichain witness
  std::vector<std::vector<ElementId>> chains;  // minimum chain cover
};

// Dilworth via König: width = n - maximum matching in the split
// comparability graph (x on the left, y on the right, edge iff x < y).
WidthResult width(const Poset& poset);

Poset dual(const Poset& poset);

// Subposet on the listed elements; element k of the result is elements[k].
Poset induced_subposet(const Poset& poset, std::span<const ElementId> elements);

// Throws PermutationError if `order` is not a bijection on 0..n-1.
bool is_linear_extension(const Poset& poset, std::span<const ElementId> order);

// Throws NotExtensionError when `order` is a permutation but violates the
// order (and PermutationError when it is not a permutation at all).
void require_linear_extension(const Poset& poset, std::span<const ElementId> order);

// Some linear extension, smallest available id first.
LinearExtension any_linear_extension(const Poset& poset);

// Calls fn(perm) for every permutation of 0..n-1 in lexicographic order.
// Throws TooLargeError above kMaxEnumerationSize.
template <class F>
void for_each_permutation(std::size_t n, F&& fn);

void check_enumerable(std::size_t n, const char* what);

}  // namespace nfree

#include <algorithm>
#include <numeric>

namespace nfree {

template <class F>
void for_each_permutation(std::size_t n, F&& fn) {
  check_enumerable(n, "permutation enumeration");
  std::vector<ElementId> perm(n);
  std::iota(perm.begin(), perm.end(), ElementId{0});
  do {
    fn(std::span<const ElementId>(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace nfree
