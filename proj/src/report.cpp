#include "nfree/report.hpp"

#include "nfree/errors.hpp"
#include "nfree/io.hpp"

namespace nfree {

using nlohmann::json;

json to_json(const NFreeVerdict& verdict) {
  json j;
  j["nfree"] = verdict.nfree;
  j["witness"] = verdict.witness ? json(*verdict.witness) : json(nullptr);
  return j;
}

json to_json(const ArcDiagram& diagram, const RankedExtension& ranked) {
  json j;
  j["vertex_count"] = diagram.vertex_count;
  j["source"] = diagram.source;
  j["sink"] = diagram.sink;
  json edges = json::array();
  for (std::size_t e = 0; e < diagram.arcs.size(); ++e) {
    edges.push_back({{"element", e}, {"tail", diagram.arcs[e].tail}, {"head", diagram.arcs[e].head}});
  }
  j["edges"] = std::move(edges);
  const auto indeg = diagram.in_degrees();
  const auto outdeg = diagram.out_degrees();
  json vertices = json::array();
  for (std::size_t v = 0; v < diagram.vertex_count; ++v) {
    vertices.push_back({{"vertex", v}, {"in", indeg[v]}, {"out", outdeg[v]}, {"rank", ranked.rank[v]}});
  }
  j["vertices"] = std::move(vertices);
  j["canonical_extension"] = ranked.extension;
  return j;
}

json to_json(const BoundsReport& b) {
  json j;
  j["e_arc"] = to_decimal(b.e_arc);
  j["lower"] = to_decimal(b.lower);
  j["dual_lower"] = to_decimal(b.dual_lower);
  j["best_lower"] = to_decimal(b.best_lower);
  j["upper_exact"] = to_decimal(b.upper_exact);
  j["upper_floor"] = to_decimal(b.upper_floor);
  if (b.separated_lower) j["separated_lower"] = to_decimal(*b.separated_lower);
  return j;
}

json to_json(const SpreadResult& s) {
  json j;
  j["exact"] = s.exact ? json(*s.exact) : json(nullptr);
  j["upper"] = s.upper;
  json dis = json::array();
  for (auto [u, v] : s.disagreements) dis.push_back({u, v});
  j["disagreements"] = std::move(dis);
  return j;
}

json to_json(const AutoCountResult& r) {
  json j;
  j["count"] = to_decimal(r.count);
  j["algorithm"] = to_string(r.algorithm);
  j["activity"] = r.activity ? json(*r.activity) : json(nullptr);
  if (r.stats) {
    j["max_active"] = r.stats->max_active;
    j["max_table_size"] = r.stats->max_table_size;
  } else {
    j["max_active"] = nullptr;
    j["max_table_size"] = nullptr;
  }
  return j;
}

Count count_from_json(const json& value) {
  Count c;
  if (!value.is_string() || c.set_str(value.get<std::string>(), 10) != 0) {
    throw ParseError("count field is not a decimal string", 0);
  }
  return c;
}

ExactFraction fraction_from_json(const json& value) {
  ExactFraction q;
  if (!value.is_string() || q.set_str(value.get<std::string>(), 10) != 0) {
    throw ParseError("fraction field is not 'num/den'", 0);
  }
  q.canonicalize();
  return q;
}

ParamsReport compute_params(const Poset& poset, bool with_exact_activity) {
  const ArcDiagram diagram = arc_diagram(poset);
  ParamsReport p;
  p.elements = poset.size();
  p.width = width(poset).width;
  p.arc_vertices = diagram.vertex_count;
  p.arc_width = width(arc_order(diagram)).width;
  auto ranked = rank_and_canonical(diagram);
  p.rank = std::move(ranked.rank);
  p.canonical_extension = std::move(ranked.extension);
  for (const auto& a : activity_trace(diagram, p.canonical_extension)) {
    p.canonical_activity = std::max(p.canonical_activity, a.size());
  }
  p.spread = spread(diagram);
  p.lemma.width = p.arc_width;
  p.lemma.spread_exact = p.spread.exact.has_value();
  p.lemma.spread = p.spread.exact.value_or(p.spread.upper);
  p.lemma.bound = p.lemma.width * (p.lemma.spread + 2);
  if (with_exact_activity) p.exact = exact_activity(poset);
  return p;
}

json to_json(const ParamsReport& p) {
  json j;
  j["elements"] = p.elements;
  j["width"] = p.width;
  j["arc_vertices"] = p.arc_vertices;
  j["arc_width"] = p.arc_width;
  j["rank"] = p.rank;
  j["canonical_extension"] = p.canonical_extension;
  j["canonical_activity"] = p.canonical_activity;
  j["spread"] = to_json(p.spread);
  j["lemma_bound"] = {{"width", p.lemma.width},
                      {"spread", p.lemma.spread},
                      {"spread_exact", p.lemma.spread_exact},
                      {"bound", p.lemma.bound}};
  if (p.exact) {
    j["exact_activity"] = {{"value", p.exact->activity},
                           {"witness", p.exact->witness},
                           {"downsets", p.exact->downsets}};
  }
  return j;
}

json instance_report(std::string_view input_bytes, const Poset& poset,
                     const InstanceReportOptions& options) {
  json j;
  j["input"] = {{"digest", input_digest(input_bytes)}, {"elements", poset.size()}};
  const auto verdict = is_nfree(poset);
  j["check"] = to_json(verdict);
  try {
    j["count"] = to_json(count_auto(poset, options.count));
    if (verdict.nfree) {
      j["bounds"] = to_json(bounds(poset, options.assume_separated, options.count.downset_budget));
      j["parameters"] = to_json(compute_params(poset, options.exact_activity));
    }
  } catch (const Error& e) {
    j["error"] = e.what();
  }
  return j;
}

}  // namespace nfree
