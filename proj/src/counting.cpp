#include "nfree/counting.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "nfree/errors.hpp"
#include "nfree/params.hpp"

namespace nfree {

std::size_t downset_budget() {
  if (const char* env = std::getenv("NFREE_DOWNSET_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultDownsetBudget;
}

Count brute_count(const Poset& poset) {
  const std::size_t n = poset.size();
  check_enumerable(n, "brute_count");
  Count total = 0;
  for_each_permutation(n, [&](std::span<const ElementId> perm) {
    ElementSet placed(n);
    for (ElementId x : perm) {
      if (!poset.below(x).is_subset_of(placed)) return;
      placed.set(x);
    }
    ++total;
  });
  return total;
}

Count downset_count(const Poset& poset, std::size_t budget) {
  const std::size_t n = poset.size();
  std::unordered_map<ElementSet, Count, ElementSetHash> layer;
  layer.emplace(ElementSet(n), Count(1));
  std::size_t seen = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::unordered_map<ElementSet, Count, ElementSetHash> next;
    for (const auto& [down, c] : layer) {
      for (std::size_t x = 0; x < n; ++x) {
        if (down.test(x) || !poset.below(x).is_subset_of(down)) continue;
        ElementSet grown = down;
        grown.set(x);
        next[std::move(grown)] += c;
      }
    }
    seen += next.size();
    if (seen > budget) {
      throw BudgetExceededError("downset lattice exceeds budget of " + std::to_string(budget) +
                                    " downsets",
                                seen);
    }
    layer = std::move(next);
  }
  return layer.begin()->second;
}

bool is_downset(const Poset& poset, const ElementSet& members) {
  bool ok = true;
  members.for_each([&](std::size_t x) {
    if (!poset.below(x).is_subset_of(members)) ok = false;
  });
  return ok;
}

std::vector<VertexId> active_set(const ArcDiagram& diagram, const ElementSet& prefix) {
  const std::size_t n = diagram.edge_count();
  if (prefix.universe() != n) {
    throw IndexError("prefix universe " + std::to_string(prefix.universe()) +
                     " does not match " + std::to_string(n) + " edges");
  }
  const auto ins = diagram.in_edges();
  const auto outs = diagram.out_edges();
  // Downward closed iff each placed edge has all edges into its tail placed.
  prefix.for_each([&](std::size_t e) {
    for (ElementId pred : ins[diagram.arcs[e].tail]) {
      if (!prefix.test(pred)) {
        throw NotDownsetError("element " + std::to_string(e) + " is placed before " +
                              std::to_string(pred));
      }
    }
  });
  std::vector<VertexId> active;
  for (std::size_t v = 0; v < diagram.vertex_count; ++v) {
    bool has_in = std::any_of(ins[v].begin(), ins[v].end(),
                              [&](ElementId e) { return prefix.test(e); });
    bool has_out = std::any_of(outs[v].begin(), outs[v].end(),
                               [&](ElementId e) { return !prefix.test(e); });
    if (has_in && has_out) active.push_back(static_cast<VertexId>(v));
  }
  return active;
}

std::size_t ActiveProfileHash::operator()(const ActiveProfile& f) const {
  std::size_t h = f.size();
  for (const auto& [v, pos] : f) {
    h ^= (static_cast<std::size_t>(v) << 32 | pos) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

ActiveProfile dp_transition(const ActiveProfile& f, const StepEvent& step, std::size_t t) {
  const std::size_t i = step.level;
  std::size_t lo = 0;
  if (!step.tail_is_source) {
    auto it = std::find_if(f.begin(), f.end(), [&](const auto& p) { return p.first == step.tail; });
    if (it == f.end()) {
      throw RangeError("tail vertex " + std::to_string(step.tail) + " is not active");
    }
    lo = it->second;
  }
  if (i == 0 || t < lo || t > i - 1) {
    throw RangeError("insertion point " + std::to_string(t) + " outside [" + std::to_string(lo) +
                     ", " + std::to_string(i == 0 ? 0 : i - 1) + "]");
  }

  ActiveProfile out;
  out.reserve(f.size() + 1);
  bool head_written = false;
  for (const auto& [v, pos] : f) {
    if (v == step.tail && step.tail_leaves) continue;
    if (step.head_enters && !head_written && step.head < v) {
      out.emplace_back(step.head, t + 1);
      head_written = true;
    }
    if (v == step.head) {
      out.emplace_back(v, std::max(pos, t) + 1);
    } else {
      out.emplace_back(v, pos <= t ? pos : pos + 1);
    }
  }
  if (step.head_enters && !head_written) out.emplace_back(step.head, t + 1);
  return out;
}

namespace {

// Positions of an extension, validated against the diagram: every element
// must follow all edges entering its tail.
void check_order(const ArcDiagram& d, std::span<const ElementId> order,
                 const std::vector<std::vector<ElementId>>& ins) {
  const std::size_t n = d.edge_count();
  if (order.size() != n) {
    throw PermutationError("sequence has " + std::to_string(order.size()) + " entries, expected " +
                           std::to_string(n));
  }
  ElementSet placed(n);
  for (ElementId x : order) {
    if (x >= n) throw PermutationError("entry " + std::to_string(x) + " out of range");
    if (placed.test(x)) throw PermutationError("entry " + std::to_string(x) + " repeated");
    placed.set(x);
  }
  placed = ElementSet(n);
  for (ElementId x : order) {
    for (ElementId pred : ins[d.arcs[x].tail]) {
      if (!placed.test(pred)) {
        throw NotExtensionError("element " + std::to_string(x) + " placed before its predecessor " +
                                std::to_string(pred));
      }
    }
    placed.set(x);
  }
}

}  // namespace

Count activity_count(const ArcDiagram& diagram, std::span<const ElementId> order,
                     ActivityStats* stats, const ActivityOptions& options) {
  topological_order(diagram);
  const std::size_t n = diagram.edge_count();
  const auto ins = diagram.in_edges();
  check_order(diagram, order, ins);

  const auto indeg = diagram.in_degrees();
  const auto outdeg = diagram.out_degrees();
  std::vector<std::size_t> placed_in(diagram.vertex_count, 0), placed_out(diagram.vertex_count, 0);
  std::vector<VertexId> active;
  ElementSet prefix(n);

  ActivityStats local;
  ActivityStats& st = stats ? *stats : local;
  st = ActivityStats{};

  LevelTable table;
  table.emplace(ActiveProfile{}, Count(1));

  for (std::size_t i = 1; i <= n; ++i) {
    const ElementId x = order[i - 1];
    const Arc arc = diagram.arcs[x];
    StepEvent step;
    step.level = i;
    step.tail = arc.tail;
    step.head = arc.head;
    // Vertices without in-edges play the source's role: f(source) = 0.
    step.tail_is_source = indeg[arc.tail] == 0;
    ++placed_out[arc.tail];
    step.tail_leaves = !step.tail_is_source && placed_out[arc.tail] == outdeg[arc.tail];
    step.head_enters = ++placed_in[arc.head] == 1 && outdeg[arc.head] > 0;

    if (step.tail_leaves) std::erase(active, arc.tail);
    if (step.head_enters) active.insert(std::upper_bound(active.begin(), active.end(), arc.head), arc.head);
    prefix.set(x);

    LevelTable next;
    next.reserve(table.size() * 2);
    for (const auto& [f, c] : table) {
      std::size_t lo = 0;
      if (!step.tail_is_source) {
        auto it = std::find_if(f.begin(), f.end(), [&](const auto& p) { return p.first == arc.tail; });
        lo = it->second;
      }
      for (std::size_t t = lo; t < i; ++t) next[dp_transition(f, step, t)] += c;
    }
    table = std::move(next);

    if (options.verify_events) {
      if (active_set(diagram, prefix) != active) {
        throw std::logic_error("incremental active set diverged at level " + std::to_string(i));
      }
      for (const auto& [f, c] : table) {
        if (f.size() != active.size() || c <= 0) {
          throw std::logic_error("profile domain or count invalid at level " + std::to_string(i));
        }
        for (std::size_t k = 0; k < f.size(); ++k) {
          if (f[k].first != active[k] || f[k].second < 1 || f[k].second > i) {
            throw std::logic_error("profile entry invalid at level " + std::to_string(i));
          }
        }
      }
    }

    st.active_sizes.push_back(active.size());
    st.table_sizes.push_back(table.size());
    st.max_active = std::max(st.max_active, active.size());
    st.max_table_size = std::max(st.max_table_size, table.size());
    if (options.on_level) options.on_level(LevelView{i, active, table});
  }

  if (!active.empty() || table.size() != 1 || !table.begin()->first.empty()) {
    throw std::logic_error("final level did not collapse to the empty profile");
  }
  return table.begin()->second;
}

Count activity_count(const Poset& poset, std::optional<LinearExtension> order, ActivityStats* stats,
                     const ActivityOptions& options) {
  const ArcDiagram diagram = arc_diagram(poset);
  LinearExtension ext = order ? std::move(*order) : rank_and_canonical(diagram).extension;
  require_linear_extension(poset, ext);
  return activity_count(diagram, ext, stats, options);
}

const char* to_string(CountAlgorithm algo) {
  switch (algo) {
    case CountAlgorithm::kActivity:
      return "activity";
    case CountAlgorithm::kDownset:
      return "downset";
    case CountAlgorithm::kBrute:
      return "brute";
  }
  return "unknown";
}

AutoCountResult count_auto(const Poset& poset, const AutoCountOptions& options) {
  AutoCountResult result;
  if (is_nfree(poset).nfree) {
    const ArcDiagram diagram = arc_diagram(poset);
    const LinearExtension ext = rank_and_canonical(diagram).extension;
    std::size_t alpha = 0;
    for (const auto& a : activity_trace(diagram, ext)) alpha = std::max(alpha, a.size());
    result.activity = alpha;
    if (alpha <= options.activity_threshold) {
      ActivityStats stats;
      result.count = activity_count(diagram, ext, &stats);
      result.algorithm = CountAlgorithm::kActivity;
      result.stats = std::move(stats);
      return result;
    }
  }
  std::size_t seen = 0;
  try {
    result.count = downset_count(poset, options.downset_budget);
    result.algorithm = CountAlgorithm::kDownset;
    return result;
  } catch (const BudgetExceededError& e) {
    seen = e.seen();
  }
  if (poset.size() <= kMaxEnumerationSize) {
    result.count = brute_count(poset);
    result.algorithm = CountAlgorithm::kBrute;
    return result;
  }
  std::string why = "no counting route fits: downsets seen " + std::to_string(seen);
  if (result.activity) why += ", activity of canonical extension " + std::to_string(*result.activity);
  else why += ", order is not N-free";
  throw InfeasibleError(why);
}

}  // namespace nfree
