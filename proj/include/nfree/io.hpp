#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfree/arc_diagram.hpp"
#include "nfree/poset.hpp"

namespace nfree {

// Instance files:
//
//   poset <n>          dag <m>
//   <i> <j>            <tail> <head>
//   ...                ...
//
// '#' starts a comment, blank lines are ignored, ids are 0-based. A poset
// body lists generating relations i < j and is closed on load. A dag body
// lists edges over m vertices; edge k (0-based line order) is element k, and
// repeated lines are parallel edges.
enum class InstanceKind { kPoset, kDag };

struct Instance {
  InstanceKind kind = InstanceKind::kPoset;
  Poset poset;                    // the closed order; the line digraph for dags
  std::optional<ArcDiagram> dag;  // the multigraph as written, dag files only
};

// Throws ParseError (with line number), or CycleError carrying the line of
// the pair that closed the cycle.
Instance parse_instance(std::string_view text);

// Canonical writers. Posets are written as their sorted cover pairs; dags as
// edges in element order.
std::string write_instance(const Poset& poset);
std::string write_instance(const ArcDiagram& dag);

// Linear extension file: whitespace-separated element ids, '#' comments.
LinearExtension parse_extension(std::string_view text);

struct DotOptions {
  // Per-vertex rank shown in the label.
  std::optional<std::vector<std::size_t>> ranks;
  // Extension whose active-set trace is appended as comments.
  std::optional<LinearExtension> trace;
};

// Arc diagram with edges labeled by element names.
std::string emit_dot(const ArcDiagram& diagram, const Poset* labels = nullptr,
                     const DotOptions& options = {});

// Hasse diagram of the order.
std::string emit_dot(const Poset& poset);

// "fnv1a64:<16 hex digits>" of the raw input bytes.
std::string input_digest(std::string_view bytes);

}  // namespace nfree
