#include "nfree/io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "nfree/errors.hpp"
#include "nfree/params.hpp"

namespace nfree {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError("expected a nonnegative integer, got '" + std::string(tok) + "'", line);
  }
  return v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance inst;
  std::optional<std::size_t> declared;
  std::vector<Relation> pairs;
  std::vector<std::size_t> pair_lines;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const auto toks = tokens_of(text.substr(start, end - start));
    start = end + 1;
    if (toks.empty()) continue;

    if (!declared) {
      if (toks.size() != 2 || (toks[0] != "poset" && toks[0] != "dag")) {
        throw ParseError("expected header 'poset <n>' or 'dag <m>'", line_no);
      }
      inst.kind = toks[0] == "poset" ? InstanceKind::kPoset : InstanceKind::kDag;
      declared = to_index(toks[1], line_no);
      continue;
    }
    if (toks.size() != 2) throw ParseError("expected a pair '<i> <j>'", line_no);
    std::size_t i = to_index(toks[0], line_no), j = to_index(toks[1], line_no);
    if (i >= *declared || j >= *declared) {
      throw ParseError("identifier out of range for " + std::to_string(*declared) + " " +
                           (inst.kind == InstanceKind::kPoset ? "elements" : "vertices"),
                       line_no);
    }
    pairs.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(j));
    pair_lines.push_back(line_no);
  }
  if (!declared) throw ParseError("missing header", line_no + 1);

  if (inst.kind == InstanceKind::kPoset) {
    try {
      inst.poset = transitive_closure(pairs, *declared);
    } catch (const CycleError& e) {
      const std::size_t k = e.pair_index().value_or(0);
      const std::size_t line = pair_lines.empty() ? 1 : pair_lines[k];
      throw CycleError("line " + std::to_string(line) + ": " + e.what(), k, line);
    }
    return inst;
  }

  ArcDiagram dag;
  dag.vertex_count = *declared;
  for (auto [t, h] : pairs) dag.arcs.push_back({t, h});
  const auto indeg = dag.in_degrees();
  const auto outdeg = dag.out_degrees();
  dag.source = 0;
  dag.sink = dag.vertex_count == 0 ? 0 : static_cast<VertexId>(dag.vertex_count - 1);
  for (std::size_t v = dag.vertex_count; v-- > 0;) {
    if (indeg[v] == 0) dag.source = static_cast<VertexId>(v);
  }
  for (std::size_t v = 0; v < dag.vertex_count; ++v) {
    if (outdeg[v] == 0) {
      dag.sink = static_cast<VertexId>(v);
      if (v != dag.source) break;
    }
  }
  inst.poset = line_digraph(dag);
  inst.dag = std::move(dag);
  return inst;
}

std::string write_instance(const Poset& poset) {
  std::string out = "poset " + std::to_string(poset.size()) + "\n";
  for (auto [x, y] : transitive_reduction(poset).covers) {
    out += std::to_string(x) + " " + std::to_string(y) + "\n";
  }
  return out;
}

std::string write_instance(const ArcDiagram& dag) {
  std::string out = "dag " + std::to_string(dag.vertex_count) + "\n";
  for (const auto& a : dag.arcs) {
    out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  }
  return out;
}

LinearExtension parse_extension(std::string_view text) {
  LinearExtension out;
  std::size_t line_no = 0, start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    for (auto tok : tokens_of(text.substr(start, end - start))) {
      out.push_back(static_cast<ElementId>(to_index(tok, line_no)));
    }
    start = end + 1;
  }
  return out;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const ArcDiagram& diagram, const Poset* labels, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph arc_diagram {\n";
  if (diagram.vertex_count > 0) os << "  rankdir=LR;\n";
  for (std::size_t v = 0; v < diagram.vertex_count; ++v) {
    std::string label = v == diagram.source ? "source" : v == diagram.sink ? "sink" : "v" + std::to_string(v);
    if (options.ranks) label += " (rank " + std::to_string((*options.ranks)[v]) + ")";
    os << "  v" << v << " [label=" << quote(label) << "];\n";
  }
  for (std::size_t e = 0; e < diagram.arcs.size(); ++e) {
    const auto id = static_cast<ElementId>(e);
    std::string name = labels ? labels->name(id) : std::to_string(e);
    os << "  v" << diagram.arcs[e].tail << " -> v" << diagram.arcs[e].head
       << " [label=" << quote(name) << "];\n";
  }
  if (options.trace) {
    const auto trace = activity_trace(diagram, *options.trace);
    for (std::size_t i = 0; i < trace.size(); ++i) {
      os << "  // step " << (i + 1) << ": place " << (*options.trace)[i] << ", active {";
      for (std::size_t k = 0; k < trace[i].size(); ++k) os << (k ? "," : "") << "v" << trace[i][k];
      os << "}\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string emit_dot(const Poset& poset) {
  std::ostringstream os;
  os << "digraph poset {\n";
  if (poset.size() > 0) os << "  rankdir=BT;\n";
  for (std::size_t x = 0; x < poset.size(); ++x) {
    os << "  n" << x << " [label=" << quote(poset.name(static_cast<ElementId>(x))) << "];\n";
  }
  for (auto [x, y] : transitive_reduction(poset).covers) {
    os << "  n" << x << " -> n" << y << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace nfree
