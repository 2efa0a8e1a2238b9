#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nfree/arc_diagram.hpp"
#include "nfree/counting.hpp"
#include "nfree/params.hpp"

namespace nfree {

// JSON views of library results. Counts are decimal strings and fractions
// "num/den"; nothing countable is ever a JSON number. Key order is fixed
// (nlohmann::json sorts object keys), so equal inputs give equal bytes.

nlohmann::json to_json(const NFreeVerdict& verdict);
nlohmann::json to_json(const ArcDiagram& diagram, const RankedExtension& ranked);
nlohmann::json to_json(const BoundsReport& bounds);
nlohmann::json to_json(const SpreadResult& spread);
nlohmann::json to_json(const AutoCountResult& result);

Count count_from_json(const nlohmann::json& value);
ExactFraction fraction_from_json(const nlohmann::json& value);

struct ParamsReport {
  std::size_t elements = 0;
  std::size_t width = 0;          // of P
  std::size_t arc_vertices = 0;
  std::size_t arc_width = 0;      // of the vertex order of A(P)
  std::vector<std::size_t> rank;
  LinearExtension canonical_extension;
  std::size_t canonical_activity = 0;
  SpreadResult spread;
  LemmaBound lemma;
  std::optional<ExactActivity> exact;
};

// Requires an N-free order.
ParamsReport compute_params(const Poset& poset, bool with_exact_activity);
nlohmann::json to_json(const ParamsReport& params);

struct InstanceReportOptions {
  bool exact_activity = false;
  bool assume_separated = false;
  AutoCountOptions count;
};

// Everything the bench command records for one instance: digest, N-free
// verdict, count and algorithm, and for N-free orders bounds and parameters.
// Budget failures become an "error" entry instead of propagating.
nlohmann::json instance_report(std::string_view input_bytes, const Poset& poset,
                               const InstanceReportOptions& options = {});

}  // namespace nfree
