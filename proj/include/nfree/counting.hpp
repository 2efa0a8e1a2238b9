#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nfree/arc_diagram.hpp"
#include "nfree/count.hpp"
#include "nfree/element_set.hpp"
#include "nfree/poset.hpp"

namespace nfree {

// Default cap on the number of downsets any lattice search may materialize.
inline constexpr std::size_t kDefaultDownsetBudget = 4'000'000;

// kDefaultDownsetBudget unless NFREE_DOWNSET_BUDGET holds a positive integer.
std::size_t downset_budget();

// Exhaustive enumeration of all n! permutations. Throws TooLargeError for
// n > kMaxEnumerationSize.
Count brute_count(const Poset& poset);

// Ideal-lattice DP, one layer of equal-size downsets at a time:
// e(D u {x}) += e(D) for every x whose predecessors all lie in D.
// Throws BudgetExceededError once more than `budget` downsets are seen.
Count downset_count(const Poset& poset, std::size_t budget = downset_budget());

bool is_downset(const Poset& poset, const ElementSet& members);

// Vertices with an in-edge inside `prefix` and an out-edge outside it.
// `prefix` must be a downset of line_digraph(diagram) (NotDownsetError).
std::vector<VertexId> active_set(const ArcDiagram& diagram, const ElementSet& prefix);

// DP state: for every active vertex v, the position of the last placed
// element whose head is v. Sorted by vertex.
using ActiveProfile = std::vector<std::pair<VertexId, std::size_t>>;

struct ActiveProfileHash {
  std::size_t operator()(const ActiveProfile& f) const;
};

using LevelTable = std::unordered_map<ActiveProfile, Count, ActiveProfileHash>;

// What placing the i-th element (tail -> head) does to the active set.
struct StepEvent {
  std::size_t level = 0;  // i, the level being built; the old profile has i-1 elements
  VertexId tail = 0;
  VertexId head = 0;
  bool tail_is_source = false;
  bool tail_leaves = false;  // this was the last unplaced out-edge of tail
  bool head_enters = false;  // first in-edge of head, and head is not the sink
};

// Insert the new element after the t-th element of an (i-1)-element
// extension. Valid for f(tail) <= t <= i-1, with f(source) = 0; anything
// else throws RangeError.
ActiveProfile dp_transition(const ActiveProfile& f, const StepEvent& step, std::size_t t);

struct ActivityStats {
  std::size_t max_active = 0;
  std::size_t max_table_size = 0;
  std::vector<std::size_t> active_sizes;  // |A_i| for i = 1..n
  std::vector<std::size_t> table_sizes;   // stored profiles at level i = 1..n
};

struct LevelView {
  std::size_t level = 0;
  std::span<const VertexId> active;
  const LevelTable& table;
};

struct ActivityOptions {
  // Recompute every active set from its prefix downset and check the
  // incremental update events against it. Throws std::logic_error on a
  // mismatch.
  bool verify_events = false;
  // Called once per level after the level table is complete.
  std::function<void(const LevelView&)> on_level;
};

// Activity dynamic program along `order`. Only two levels are live at a time.
Count activity_count(const ArcDiagram& diagram, std::span<const ElementId> order,
                     ActivityStats* stats = nullptr, const ActivityOptions& options = {});

// Builds the arc diagram (NotNFreeError) and validates `order`
// (NotExtensionError); defaults to the rank-canonical extension.
Count activity_count(const Poset& poset, std::optional<LinearExtension> order = std::nullopt,
                     ActivityStats* stats = nullptr, const ActivityOptions& options = {});

enum class CountAlgorithm { kActivity, kDownset, kBrute };
const char* to_string(CountAlgorithm algo);

struct AutoCountOptions {
  std::size_t activity_threshold = 8;
  std::size_t downset_budget = nfree::downset_budget();
};

struct AutoCountResult {
  Count count;
  CountAlgorithm algorithm = CountAlgorithm::kActivity;
  std::optional<std::size_t> activity;  // alpha of the extension used, if N-free
  std::optional<ActivityStats> stats;   // set when the activity DP ran
};

// Activity DP when N-free with alpha(L_T) <= threshold, else the downset DP
// within budget, else brute force when n <= 10, else InfeasibleError.
AutoCountResult count_auto(const Poset& poset, const AutoCountOptions& options = {});

}  // namespace nfree
