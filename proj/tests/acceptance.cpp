// Acceptance gate. One PASS/FAIL line per criterion; exits nonzero if any
// criterion fails. Usage: acceptance <path-to-nfree-cli>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nfree/arc_diagram.hpp"
#include "nfree/corpus.hpp"
#include "nfree/counting.hpp"
#include "nfree/io.hpp"
#include "nfree/params.hpp"
#include "support/oracles.hpp"

using namespace nfree;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << o.detail << std::endl;
}

const std::vector<CorpusEntry>& corpus() {
  static const auto c = random_nfree_corpus(520, 20240601, 6, 9);
  return c;
}

Outcome oracle_triangle() {
  const auto t0 = Clock::now();
  std::size_t mismatches = 0, oversize = 0;
  for (const auto& e : corpus()) {
    const ArcDiagram d = arc_diagram(e.poset);
    if (d.vertex_count > 6 || e.poset.size() > 9) ++oversize;
    const Count b = brute_count(e.poset);
    if (b != downset_count(e.poset) || b != activity_count(e.poset)) ++mismatches;
  }
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << corpus().size() << " posets, " << mismatches << " mismatches, " << oversize
     << " outside size limits, " << s << " s";
  return {corpus().size() >= 500 && mismatches == 0 && oversize == 0 && s < 60.0, os.str()};
}

Outcome bound_sandwich() {
  std::size_t violations = 0;
  for (const auto& e : corpus()) {
    const BoundsReport b = bounds(e.poset);
    const ExactFraction ext(brute_count(e.poset));
    if (ExactFraction(b.lower) > ext || ExactFraction(b.dual_lower) > ext || ext > b.upper_exact)
      ++violations;
  }
  return {violations == 0, std::to_string(corpus().size()) + " posets, " +
                               std::to_string(violations) + " violations"};
}

Outcome sharpness() {
  const std::vector<std::size_t> blocks{2, 2};
  const Poset w = gen_weak_order(blocks);
  const BoundsReport bw = bounds(w);
  const Count ew = brute_count(w);
  const Poset c = nfree::testing::two_chains();
  const BoundsReport bc = bounds(c);
  const Count ec = brute_count(c);
  const bool ok = bw.lower == 4 && bw.upper_floor == 4 && ew == 4 && ec == 6 &&
                  bc.upper_floor == 6 && bc.lower == 4;
  std::ostringstream os;
  os << "weak(2,2): lower " << bw.lower.get_str() << ", upper_floor " << bw.upper_floor.get_str()
     << ", e " << ew.get_str() << "; two 2-chains: lower " << bc.lower.get_str()
     << ", upper_floor " << bc.upper_floor.get_str() << ", e " << ec.get_str();
  return {ok, os.str()};
}

Outcome round_trip() {
  std::size_t bad_line = 0, bad_dual = 0;
  for (const auto& e : corpus()) {
    Poset p = e.poset;
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < p.size(); ++x) labels.push_back("e" + std::to_string(x));
    p.set_labels(labels);
    const ArcDiagram d = arc_diagram(p);
    // Element k of the diagram is edge k, so equal relations on equal ids
    // means the labels line up as well.
    const Poset back = line_digraph(d);
    if (!(back == p) || back.relations() != p.relations()) ++bad_line;
    if (canonical_form(arc_diagram(dual(p))) != canonical_form(reverse(d))) ++bad_dual;
  }
  std::ostringstream os;
  os << corpus().size() << " posets, " << bad_line << " line-digraph mismatches, " << bad_dual
     << " dual mismatches";
  return {bad_line == 0 && bad_dual == 0, os.str()};
}

Outcome good_vertices() {
  std::size_t checked = 0, violations = 0;
  for (const auto& e : corpus()) {
    if (e.poset.size() > 8) continue;
    const ArcDiagram d = arc_diagram(e.poset);
    const auto in = d.in_degrees(), out = d.out_degrees();
    for (VertexId v = 0; v < d.vertex_count; ++v) {
      ++checked;
      if (good_vertex_count(e.poset, v) != good_vertex_formula(e.poset.size(), in[v], out[v]))
        ++violations;
    }
  }
  return {checked > 0 && violations == 0,
          std::to_string(checked) + " (poset, vertex) pairs, " + std::to_string(violations) +
              " violations"};
}

Outcome lemma_chain() {
  std::size_t checked = 0, skipped = 0, violations = 0;
  for (const auto& e : corpus()) {
    const LemmaBound lb = activity_lemma_bound(e.poset);
    if (!lb.spread_exact) {
      ++skipped;
      continue;
    }
    ++checked;
    const auto lt = rank_and_canonical(arc_diagram(e.poset)).extension;
    const std::size_t a_lt = activity_of_extension(e.poset, lt);
    const std::size_t a_min = exact_activity(e.poset).activity;
    if (!(a_min <= a_lt && a_lt <= lb.bound)) ++violations;
  }
  std::ostringstream os;
  os << checked << " posets checked, " << skipped << " without exact spread, " << violations
     << " violations";
  return {checked > 0 && violations == 0, os.str()};
}

Outcome activity_blowup() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream os;
  for (std::size_t ell = 1; ell <= 4; ++ell) {
    const ArcDiagram d = gen_high_spread(ell);
    const std::size_t a = exact_activity(line_digraph(d)).activity;
    const std::size_t w = width(arc_order(d)).width;
    ok = ok && a >= ell && w == 1;
    os << "ell=" << ell << " activity " << a << " width " << w << "; ";
  }
  const double s = seconds_since(t0);
  os << s << " s";
  return {ok && s < 30.0, os.str()};
}

Outcome closed_form() {
  const std::vector<std::size_t> blocks{4, 4, 4, 4};
  const Poset p = gen_weak_order(blocks);
  const auto t0 = Clock::now();
  const AutoCountResult r = count_auto(p);
  const double s = seconds_since(t0);
  const std::size_t max_active = r.stats ? r.stats->max_active : 99;
  std::ostringstream os;
  os << "count " << r.count.get_str() << " via " << to_string(r.algorithm) << ", max active "
     << max_active << ", " << s << " s";
  return {r.count == 331776 && r.algorithm == CountAlgorithm::kActivity && max_active <= 2 && s < 1.0,
          os.str()};
}

Outcome dp_consistency() {
  std::size_t instances = 0, levels = 0, sum_bad = 0, size_bad = 0;
  for (const auto& e : corpus()) {
    if (instances == 50) break;
    ++instances;
    const ArcDiagram d = arc_diagram(e.poset);
    const LinearExtension ext = rank_and_canonical(d).extension;
    ActivityOptions opts;
    opts.on_level = [&](const LevelView& view) {
      ++levels;
      Count sum = 0;
      for (const auto& [f, z] : view.table) sum += z;
      const std::vector<ElementId> prefix(ext.begin(), ext.begin() + view.level);
      if (sum != downset_count(induced_subposet(e.poset, prefix))) ++sum_bad;
      Count cap = 1;
      for (std::size_t k = 0; k < view.active.size(); ++k) cap *= static_cast<unsigned long>(view.level);
      if (Count(static_cast<unsigned long>(view.table.size())) > cap) ++size_bad;
    };
    activity_count(d, ext, nullptr, opts);
  }
  std::ostringstream os;
  os << instances << " instances, " << levels << " levels, " << sum_bad << " sum mismatches, "
     << size_bad << " table-size violations";
  return {instances == 50 && sum_bad == 0 && size_bad == 0, os.str()};
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

Outcome cli_determinism(const std::string& cli) {
  if (cli.empty() || !fs::exists(cli)) return {false, "CLI binary not found: '" + cli + "'"};
  const fs::path dir = fs::temp_directory_path() / ("nfree_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::size_t> weak{4, 4, 4, 4};
  const std::string random = (dir / "random.txt").string();
  const std::string hs = (dir / "hs.txt").string();
  const std::string hsdag = (dir / "hs_dag.txt").string();
  const std::string wk = (dir / "weak.txt").string();
  const std::string np = (dir / "n.txt").string();
  const std::string ext = (dir / "ext.txt").string();
  write_text(random, write_instance(gen_random_nfree(5, 0.5, 3)));
  write_text(hs, write_instance(line_digraph(gen_high_spread(3))));
  write_text(hsdag, write_instance(gen_high_spread(3)));
  write_text(wk, write_instance(gen_weak_order(weak)));
  write_text(np, write_instance(nfree::testing::n_poset()));
  write_text(ext, "0 1 2 3\n");
  const std::string k22 = (dir / "k22.txt").string();
  write_text(k22, write_instance(nfree::testing::k22()));

  const std::string q = "'" + cli + "' --format json ";
  const std::vector<std::string> cmds{
      q + "gen random-nfree --vertices 5 --prob 0.5 --seed 3",
      q + "gen random-nfree --vertices 4 --prob 0.6 --seed 11 --dag",
      q + "gen high-spread --ell 3",
      q + "gen weak --blocks 4,4,4,4",
      q + "check " + random,
      q + "check " + np,
      q + "arc " + hs,
      q + "arc " + hsdag,
      q + "arc " + np,
      q + "count " + random,
      q + "count " + wk,
      q + "count " + np + " --algo downset",
      q + "count " + random + " --algo brute",
      q + "count " + k22 + " --algo activity --extension " + ext,
      q + "bounds " + hs,
      q + "bounds " + wk + " --assume-separated",
      q + "params " + hs + " --exact-activity",
      q + "params " + random,
      q + "bench --count 40 --seed 7 --jobs 4",
      q + "bench --count 20 --seed 8 --jobs 1 --exact-activity",
      q + "bench " + random + " " + hs + " " + np,
  };
  std::size_t differing = 0, empty = 0;
  std::string first_bad;
  for (const auto& c : cmds) {
    const RunResult a = run(c), b = run(c);
    if (a.out.empty() || a.out.front() != '{') ++empty;
    if (a.out != b.out || a.status != b.status) {
      ++differing;
      if (first_bad.empty()) first_bad = c;
    }
  }
  fs::remove_all(dir);
  std::ostringstream os;
  os << cmds.size() << " commands run twice, " << differing << " differ, " << empty
     << " without a JSON report";
  if (!first_bad.empty()) os << " (first: " << first_bad << ")";
  return {differing == 0 && empty == 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  report(1, "oracle triangle", oracle_triangle);
  report(2, "bound sandwich", bound_sandwich);
  report(3, "sharpness instances", sharpness);
  report(4, "round trip and duality", round_trip);
  report(5, "good-vertex identity", good_vertices);
  report(6, "activity chain", lemma_chain);
  report(7, "activity blow-up", activity_blowup);
  report(8, "closed-form scaling", closed_form);
  report(9, "DP internal consistency", dp_consistency);
  report(10, "CLI determinism", [&] { return cli_determinism(cli); });
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
