// nfree: N-free order toolkit.
//
//   nfree check FILE            N-free verdict and witness
//   nfree arc FILE              arc diagram, degrees, ranks
//   nfree count FILE            exact number of linear extensions
//   nfree bounds FILE           degree-product bounds
//   nfree params FILE           width, spread, rank, activity
//   nfree gen KIND ...          instance generators
//   nfree bench [FILES...]      one report per instance
//
// Exit codes: 0 ok, 2 parse/validation error, 3 infeasible, 4 not N-free.

#include <atomic>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nfree/arc_diagram.hpp"
#include "nfree/corpus.hpp"
#include "nfree/counting.hpp"
#include "nfree/errors.hpp"
#include "nfree/io.hpp"
#include "nfree/params.hpp"
#include "nfree/report.hpp"

namespace {

using nlohmann::json;
using namespace nfree;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitPrecondition = 4;

struct Globals {
  std::string format = "text";
  bool timings = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'", 0);
  out << text;
}

struct Loaded {
  std::string bytes;
  Instance instance;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.bytes = read_file(path);
  l.instance = parse_instance(l.bytes);
  return l;
}

json input_json(const Loaded& l) {
  return {{"digest", input_digest(l.bytes)},
          {"kind", l.instance.kind == InstanceKind::kPoset ? "poset" : "dag"},
          {"elements", l.instance.poset.size()}};
}

using Clock = std::chrono::steady_clock;

void emit(const Globals& g, json report, const std::string& text, Clock::time_point started) {
  if (g.format == "json") {
    if (g.timings) {
      report["timings_ms"] =
          std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    }
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string join(const std::vector<ElementId>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int run_check(const Globals& g, const std::string& file, const std::string& dot) {
  auto started = Clock::now();
  Loaded l = load(file);
  const auto verdict = is_nfree(l.instance.poset);
  if (!dot.empty()) write_file(dot, emit_dot(l.instance.poset));
  json r = {{"command", "check"}, {"input", input_json(l)}, {"check", to_json(verdict)}};
  std::string text = verdict.nfree ? "N-free: yes\n" : "N-free: no\n";
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    text += "witness: " + std::to_string(w[0]) + "<" + std::to_string(w[2]) + ", " +
            std::to_string(w[1]) + "<" + std::to_string(w[2]) + ", " + std::to_string(w[1]) +
            "<" + std::to_string(w[3]) + "\n";
  }
  emit(g, r, text, started);
  return kExitOk;
}

int run_arc(const Globals& g, const std::string& file, const std::string& dot, bool ranks,
            bool trace) {
  auto started = Clock::now();
  Loaded l = load(file);
  const ArcDiagram d = arc_diagram(l.instance.poset);
  const RankedExtension ranked = rank_and_canonical(d);
  if (!dot.empty()) {
    DotOptions opts;
    if (ranks) opts.ranks = ranked.rank;
    if (trace) opts.trace = ranked.extension;
    write_file(dot, emit_dot(d, &l.instance.poset, opts));
  }
  json r = {{"command", "arc"}, {"input", input_json(l)}, {"arc_diagram", to_json(d, ranked)}};
  std::ostringstream os;
  os << "vertices: " << d.vertex_count << " (source " << d.source << ", sink " << d.sink << ")\n";
  for (std::size_t e = 0; e < d.arcs.size(); ++e) {
    os << "edge " << e << ": " << d.arcs[e].tail << " -> " << d.arcs[e].head << "\n";
  }
  const auto in = d.in_degrees();
  const auto out = d.out_degrees();
  for (std::size_t v = 0; v < d.vertex_count; ++v) {
    os << "vertex " << v << ": in " << in[v] << ", out " << out[v] << ", rank " << ranked.rank[v]
       << "\n";
  }
  os << "canonical extension: " << join(ranked.extension) << "\n";
  emit(g, r, os.str(), started);
  return kExitOk;
}

int run_count(const Globals& g, const std::string& file, const std::string& algo,
              const std::string& extension_file, std::size_t threshold) {
  auto started = Clock::now();
  Loaded l = load(file);
  const Poset& p = l.instance.poset;
  AutoCountResult result;
  if (algo == "auto") {
    AutoCountOptions opts;
    opts.activity_threshold = threshold;
    if (!extension_file.empty()) {
      throw ParseError("--extension requires --algo activity", 0);
    }
    result = count_auto(p, opts);
  } else if (algo == "brute") {
    result.count = brute_count(p);
    result.algorithm = CountAlgorithm::kBrute;
  } else if (algo == "downset") {
    result.count = downset_count(p);
    result.algorithm = CountAlgorithm::kDownset;
  } else {
    std::optional<LinearExtension> ext;
    if (!extension_file.empty()) ext = parse_extension(read_file(extension_file));
    ActivityStats stats;
    result.count = activity_count(p, ext, &stats);
    result.algorithm = CountAlgorithm::kActivity;
    result.activity = stats.max_active;
    result.stats = stats;
  }
  json r = {{"command", "count"}, {"input", input_json(l)}, {"result", to_json(result)}};
  std::string text = "count: " + to_decimal(result.count) + "\nalgorithm: " +
                     to_string(result.algorithm) + "\n";
  if (result.stats) {
    text += "max active set: " + std::to_string(result.stats->max_active) +
            "\nmax table size: " + std::to_string(result.stats->max_table_size) + "\n";
  }
  emit(g, r, text, started);
  return kExitOk;
}

int run_bounds(const Globals& g, const std::string& file, bool separated) {
  auto started = Clock::now();
  Loaded l = load(file);
  const BoundsReport b = bounds(l.instance.poset, separated);
  json r = {{"command", "bounds"}, {"input", input_json(l)}, {"bounds", to_json(b)}};
  std::string text = "e(A(P)): " + to_decimal(b.e_arc) + "\nlower: " + to_decimal(b.lower) +
                     "\ndual lower: " + to_decimal(b.dual_lower) +
                     "\nbest lower: " + to_decimal(b.best_lower) +
                     "\nupper: " + to_decimal(b.upper_exact) +
                     " (floor " + to_decimal(b.upper_floor) + ")\n";
  if (b.separated_lower) text += "separated lower: " + to_decimal(*b.separated_lower) + "\n";
  emit(g, r, text, started);
  return kExitOk;
}

int run_params(const Globals& g, const std::string& file, bool exact) {
  auto started = Clock::now();
  Loaded l = load(file);
  const ParamsReport p = compute_params(l.instance.poset, exact);
  json r = {{"command", "params"}, {"input", input_json(l)}, {"parameters", to_json(p)}};
  std::ostringstream os;
  os << "elements: " << p.elements << "\nwidth: " << p.width << "\narc vertices: "
     << p.arc_vertices << "\narc width: " << p.arc_width << "\nspread: "
     << (p.spread.exact ? std::to_string(*p.spread.exact) : std::string("unknown"))
     << " (upper " << p.spread.upper << ")\nactivity of canonical extension: "
     << p.canonical_activity << "\nlemma bound: " << p.lemma.bound << "\n";
  if (p.exact) {
    os << "exact activity: " << p.exact->activity << " (witness " << join(p.exact->witness)
       << ")\n";
  }
  emit(g, r, os.str(), started);
  return kExitOk;
}

int run_gen(const Globals& g, const std::string& kind, std::size_t vertices, double prob,
            std::uint64_t seed, std::size_t ell, const std::vector<std::size_t>& blocks,
            const std::string& out_path, bool as_dag) {
  auto started = Clock::now();
  std::string text;
  json params;
  if (kind == "random-nfree") {
    params = {{"vertices", vertices}, {"prob", prob}, {"seed", seed}};
    text = as_dag ? write_instance(gen_random_dag(vertices, prob, seed))
                  : write_instance(gen_random_nfree(vertices, prob, seed));
  } else if (kind == "high-spread") {
    params = {{"ell", ell}};
    const ArcDiagram d = gen_high_spread(ell);
    text = as_dag ? write_instance(d) : write_instance(line_digraph(d));
  } else {
    params = {{"blocks", blocks}};
    const Poset p = gen_weak_order(blocks);
    text = as_dag ? write_instance(arc_diagram(p)) : write_instance(p);
  }
  if (!out_path.empty()) write_file(out_path, text);
  json r = {{"command", "gen"},
            {"kind", kind},
            {"params", params},
            {"digest", input_digest(text)},
            {"instance", text}};
  emit(g, r, out_path.empty() ? text : "", started);
  return kExitOk;
}

int run_bench(const Globals& g, const std::vector<std::string>& files, std::size_t count,
              std::uint64_t seed, std::size_t max_vertices, std::size_t max_elements,
              std::size_t jobs, bool exact) {
  auto started = Clock::now();
  struct Item {
    std::string label;
    std::string bytes;
    Poset poset;
  };
  std::vector<Item> items;
  if (!files.empty()) {
    for (const auto& f : files) {
      Loaded l = load(f);
      items.push_back({f, std::move(l.bytes), std::move(l.instance.poset)});
    }
  } else {
    for (auto& e : random_nfree_corpus(count, seed, max_vertices, max_elements)) {
      std::string bytes = write_instance(e.poset);
      items.push_back({"seed " + std::to_string(e.seed), std::move(bytes), std::move(e.poset)});
    }
  }

  InstanceReportOptions opts;
  opts.exact_activity = exact;
  // Instances are independent; results are collected by index, so output
  // order does not depend on scheduling.
  std::vector<json> reports(items.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i)
      reports[i] = instance_report(items[i].bytes, items[i].poset, opts);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();)
          reports[i] = instance_report(items[i].bytes, items[i].poset, opts);
      }));
    }
    for (auto& w : workers) w.get();
  }

  json list = json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) {
    reports[i]["label"] = items[i].label;
    os << items[i].label << ": n=" << items[i].poset.size();
    if (reports[i].contains("count")) {
      os << " count=" << reports[i]["count"]["count"].get<std::string>() << " via "
         << reports[i]["count"]["algorithm"].get<std::string>();
    }
    if (reports[i].contains("error")) os << " error=" << reports[i]["error"].get<std::string>();
    os << "\n";
    list.push_back(std::move(reports[i]));
  }
  json r = {{"command", "bench"}, {"instances", std::move(list)}};
  emit(g, r, os.str(), started);
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kValidation:
      return kExitValidation;
    case ErrorKind::kInfeasible:
      return kExitInfeasible;
    case ErrorKind::kPrecondition:
      return kExitPrecondition;
  }
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"N-free orders: recognition, arc diagrams, exact linear-extension counts"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--timings", g.timings, "Add wall-clock timings to JSON output");

  std::string file, dot, algo = "auto", extension_file;
  bool ranks = false, trace = false, separated = false, exact = false, as_dag = false;
  std::size_t threshold = 8;

  auto* check = app.add_subcommand("check", "N-free verdict with an N witness");
  check->add_option("file", file)->required();
  check->add_option("--dot", dot, "Write the Hasse diagram as DOT");

  auto* arc = app.add_subcommand("arc", "Arc diagram with degrees and ranks");
  arc->add_option("file", file)->required();
  arc->add_option("--dot", dot, "Write the arc diagram as DOT");
  arc->add_flag("--ranks", ranks, "Annotate DOT vertices with ranks");
  arc->add_flag("--trace", trace, "Append the active-set trace of the canonical extension");

  auto* count = app.add_subcommand("count", "Exact number of linear extensions");
  count->add_option("file", file)->required();
  count->add_option("--algo", algo)
      ->check(CLI::IsMember({"auto", "brute", "downset", "activity"}))
      ->capture_default_str();
  count->add_option("--extension", extension_file, "Initial extension for the activity DP");
  count->add_option("--threshold", threshold, "Activity threshold for --algo auto")
      ->capture_default_str();

  auto* bnd = app.add_subcommand("bounds", "Lower and upper bounds from the arc diagram");
  bnd->add_option("file", file)->required();
  bnd->add_flag("--assume-separated", separated,
                "Also report lower + dual lower (caller asserts the families are disjoint)");

  auto* params = app.add_subcommand("params", "Width, spread, rank and activity");
  params->add_option("file", file)->required();
  params->add_flag("--exact-activity", exact, "Search the downset lattice for the exact activity");

  std::string kind;
  std::size_t vertices = 5, ell = 3;
  double prob = 0.5;
  std::uint64_t seed = 1;
  std::vector<std::size_t> blocks{2, 2};
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"random-nfree", "high-spread", "weak"}));
  gen->add_option("--vertices", vertices)->capture_default_str();
  gen->add_option("--prob", prob)->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--ell", ell)->capture_default_str();
  gen->add_option("--blocks", blocks)->delimiter(',');
  gen->add_option("--out", out_path, "Write the instance here instead of stdout");
  gen->add_flag("--dag", as_dag, "Write the underlying digraph instead of the order");

  std::vector<std::string> bench_files;
  std::size_t bench_count = 50, max_vertices = 6, max_elements = 9, jobs = 1;
  auto* bench = app.add_subcommand("bench", "Report per instance (files, or a seeded corpus)");
  bench->add_option("files", bench_files);
  bench->add_option("--count", bench_count)->capture_default_str();
  bench->add_option("--seed", seed)->capture_default_str();
  bench->add_option("--max-vertices", max_vertices)->capture_default_str();
  bench->add_option("--max-elements", max_elements)->capture_default_str();
  bench->add_option("--jobs", jobs)->capture_default_str();
  bench->add_flag("--exact-activity", exact);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*check) return run_check(g, file, dot);
    if (*arc) return run_arc(g, file, dot, ranks, trace);
    if (*count) return run_count(g, file, algo, extension_file, threshold);
    if (*bnd) return run_bounds(g, file, separated);
    if (*params) return run_params(g, file, exact);
    if (*gen) return run_gen(g, kind, vertices, prob, seed, ell, blocks, out_path, as_dag);
    if (*bench) {
      return run_bench(g, bench_files, bench_count, seed, max_vertices, max_elements, jobs, exact);
    }
  } catch (const Error& e) {
    std::cerr << "nfree: " << e.what() << "\n";
    const int code = exit_code_for(e);
    // Scripts reading JSON still get a record on failure.
    if (g.format == "json") {
      const json r = {{"error", {{"message", e.what()}, {"exit_code", code}}}};
      std::cout << r.dump(2) << "\n";
    }
    return code;
  }
  return kExitValidation;
}
