#include "nfree/poset.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "nfree/errors.hpp"

namespace nfree {

Poset::Poset(std::size_t n)
    : up_(n, ElementSet(n)), down_(n, ElementSet(n)) {}

std::vector<Relation> Poset::relations() const {
  std::vector<Relation> out;
  for (std::size_t x = 0; x < size(); ++x) {
    up_[x].for_each([&](std::size_t y) {
      out.emplace_back(static_cast<ElementId>(x), static_cast<ElementId>(y));
    });
  }
  return out;
}

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != size()) {
    throw IndexError("label count " + std::to_string(labels.size()) +
                     " does not match element count " + std::to_string(size()));
  }
  labels_ = std::move(labels);
}

std::string Poset::name(ElementId x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

void check_enumerable(std::size_t n, const char* what) {
  if (n > kMaxEnumerationSize) {
    throw TooLargeError(std::string(what) + " refuses n = " + std::to_string(n) +
                        " (cap " + std::to_string(kMaxEnumerationSize) + ")");
  }
}

Poset transitive_closure(std::span<const Relation> pairs, std::size_t n) {
  Poset p(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, y] = pairs[k];
    if (x >= n || y >= n) {
      throw IndexError("pair (" + std::to_string(x) + "," + std::to_string(y) +
                       ") out of range for n = " + std::to_string(n));
    }
    if (x == y || p.up_[y].test(x)) {
      throw CycleError("relation (" + std::to_string(x) + "," + std::to_string(y) +
                           ") closes a cycle",
                       k);
    }
    if (p.up_[x].test(y)) continue;
    // Everything at or below x now lies below everything at or above y.
    ElementSet lower = p.down_[x];
    lower.set(x);
    ElementSet upper = p.up_[y];
    upper.set(y);
    lower.for_each([&](std::size_t a) { p.up_[a] |= upper; });
    upper.for_each([&](std::size_t b) { p.down_[b] |= lower; });
  }
  return p;
}

CoverDigraph transitive_reduction(const Poset& poset) {
  const std::size_t n = poset.size();
  CoverDigraph d;
  d.n = n;
  d.upper_covers.assign(n, ElementSet(n));
  d.lower_covers.assign(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    poset.above(x).for_each([&](std::size_t y) {
      if (!poset.above(x).intersects(poset.below(y))) {
        d.covers.emplace_back(static_cast<ElementId>(x), static_cast<ElementId>(y));
        d.upper_covers[x].set(y);
        d.lower_covers[y].set(x);
      }
    });
  }
  return d;
}

namespace {

// Kuhn's augmenting paths; the instances here are small.
struct Matching {
  std::vector<int> left_to_right;
  std::vector<int> right_to_left;
  std::size_t size = 0;
};

bool augment(const Poset& p, std::size_t x, std::vector<char>& seen, Matching& m) {
  bool found = false;
  p.above(x).for_each([&](std::size_t y) {
    if (found || seen[y]) return;
    seen[y] = 1;
    if (m.right_to_left[y] < 0 ||
        augment(p, static_cast<std::size_t>(m.right_to_left[y]), seen, m)) {
      m.left_to_right[x] = static_cast<int>(y);
      m.right_to_left[y] = static_cast<int>(x);
      found = true;
    }
  });
  return found;
}

}  // namespace

WidthResult width(const Poset& poset) {
  const std::size_t n = poset.size();
  Matching m{std::vector<int>(n, -1), std::vector<int>(n, -1), 0};
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<char> seen(n, 0);
    if (augment(poset, x, seen, m)) ++m.size;
  }

  WidthResult out;
  out.width = n - m.size;

  // König: Z = vertices reachable from unmatched left vertices by alternating
  // paths. Cover = (L \ Z) u (R n Z); x is in the antichain iff neither of
  // its copies is in the cover.
  std::vector<char> left_z(n, 0), right_z(n, 0);
  std::queue<std::size_t> q;
  for (std::size_t x = 0; x < n; ++x) {
    if (m.left_to_right[x] < 0) {
      left_z[x] = 1;
      q.push(x);
    }
  }
  while (!q.empty()) {
    std::size_t x = q.front();
    q.pop();
    poset.above(x).for_each([&](std::size_t y) {
      if (right_z[y] || m.left_to_right[x] == static_cast<int>(y)) return;
      right_z[y] = 1;
      int back = m.right_to_left[y];
      if (back >= 0 && !left_z[back]) {
        left_z[back] = 1;
        q.push(static_cast<std::size_t>(back));
      }
    });
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (left_z[x] && !right_z[x]) out.antichain.push_back(static_cast<ElementId>(x));
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (m.right_to_left[x] >= 0) continue;  // x continues some chain
    std::vector<ElementId> chain;
    for (int cur = static_cast<int>(x); cur >= 0; cur = m.left_to_right[cur]) {
      chain.push_back(static_cast<ElementId>(cur));
    }
    out.chains.push_back(std::move(chain));
  }
  return out;
}

Poset dual(const Poset& poset) {
  Poset d;
  d.up_ = poset.down_;
  d.down_ = poset.up_;
  d.labels_ = poset.labels_;
  return d;
}

Poset induced_subposet(const Poset& poset, std::span<const ElementId> elements) {
  const std::size_t k = elements.size();
  Poset sub(k);
  for (std::size_t a = 0; a < k; ++a) {
    if (elements[a] >= poset.size()) {
      throw IndexError("element " + std::to_string(elements[a]) + " out of range");
    }
    for (std::size_t b = 0; b < k; ++b) {
      if (poset.less(elements[a], elements[b])) {
        sub.up_[a].set(b);
        sub.down_[b].set(a);
      }
    }
  }
  if (!poset.labels().empty()) {
    std::vector<std::string> labels;
    for (auto e : elements) labels.push_back(poset.labels()[e]);
    sub.labels_ = std::move(labels);
  }
  return sub;
}

namespace {

std::vector<std::size_t> positions_of(std::size_t n, std::span<const ElementId> order) {
  if (order.size() != n) {
    throw PermutationError("sequence has " + std::to_string(order.size()) +
                           " entries, expected " + std::to_string(n));
  }
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pos(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n) {
      throw PermutationError("entry " + std::to_string(order[i]) + " out of range");
    }
    if (pos[order[i]] != kUnset) {
      throw PermutationError("entry " + std::to_string(order[i]) + " repeated");
    }
    pos[order[i]] = i;
  }
  return pos;
}

}  // namespace

bool is_linear_extension(const Poset& poset, std::span<const ElementId> order) {
  auto pos = positions_of(poset.size(), order);
  for (std::size_t x = 0; x < poset.size(); ++x) {
    bool ok = true;
    poset.above(x).for_each([&](std::size_t y) {
      if (pos[y] < pos[x]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

void require_linear_extension(const Poset& poset, std::span<const ElementId> order) {
  if (!is_linear_extension(poset, order)) {
    throw NotExtensionError("sequence violates the order");
  }
}

LinearExtension any_linear_extension(const Poset& poset) {
  const std::size_t n = poset.size();
  LinearExtension out;
  out.reserve(n);
  ElementSet placed(n);
  std::vector<std::size_t> missing(n);
  for (std::size_t x = 0; x < n; ++x) missing[x] = poset.below(x).count();
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x)
    if (missing[x] == 0) ready.push(static_cast<ElementId>(x));
  while (!ready.empty()) {
    ElementId x = ready.top();
    ready.pop();
    out.push_back(x);
    poset.above(x).for_each([&](std::size_t y) {
      if (--missing[y] == 0) ready.push(static_cast<ElementId>(y));
    });
  }
  return out;
}

}  // namespace nfree
