#include <gtest/gtest.h>

#include "nfree/corpus.hpp"
#include "nfree/errors.hpp"
#include "nfree/io.hpp"
#include "nfree/report.hpp"
#include "support/oracles.hpp"

namespace nfree {
namespace {

using testing::k22;

TEST(Parse, PosetWithCommentsAndBlanks) {
  const Instance in = parse_instance("# K22\n\nposet 4\n0 2\n0 3  # trailing\n1 2\n1 3\n");
  EXPECT_EQ(in.kind, InstanceKind::kPoset);
  EXPECT_EQ(in.poset, k22());
  EXPECT_FALSE(in.dag.has_value());
}

TEST(Parse, CycleReportsLine) {
  try {
    parse_instance("poset 2\n0 1\n1 0\n");
    FAIL();
  } catch (const CycleError& e) {
    EXPECT_EQ(e.line().value(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Parse, Malformed) {
  EXPECT_THROW(parse_instance(""), ParseError);
  EXPECT_THROW(parse_instance("graph 3\n"), ParseError);
  EXPECT_THROW(parse_instance("poset x\n"), ParseError);
  EXPECT_THROW(parse_instance("poset 3\n0\n"), ParseError);
  EXPECT_THROW(parse_instance("poset 3\n0 1 2\n"), ParseError);
  try {
    parse_instance("poset 3\n0 1\n0 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Parse, DagDoubleEdgeIsAntichain) {
  const Instance in = parse_instance("dag 2\n0 1\n0 1\n");
  EXPECT_EQ(in.kind, InstanceKind::kDag);
  EXPECT_EQ(in.poset, testing::antichain(2));
  ASSERT_TRUE(in.dag.has_value());
  EXPECT_EQ(in.dag->arcs.size(), 2u);
}

TEST(Parse, Extension) {
  EXPECT_EQ(parse_extension("3 1 # c\n0 2\n"), (LinearExtension{3, 1, 0, 2}));
  EXPECT_THROW(parse_extension("1 x"), ParseError);
}

TEST(Writer, CanonicalRoundTrip) {
  const std::string text = write_instance(k22());
  EXPECT_EQ(text, "poset 4\n0 2\n0 3\n1 2\n1 3\n");
  EXPECT_EQ(parse_instance(text).poset, k22());
  for (const auto& e : random_nfree_corpus(30, 9)) {
    const std::string w = write_instance(e.poset);
    EXPECT_EQ(parse_instance(w).poset, e.poset);
    EXPECT_EQ(write_instance(parse_instance(w).poset), w);
    const ArcDiagram d = arc_diagram(e.poset);
    EXPECT_EQ(parse_instance(write_instance(d)).poset, e.poset);
  }
}

TEST(Dot, K22Golden) {
  const Poset p = k22();
  EXPECT_EQ(emit_dot(arc_diagram(p), &p),
            "digraph arc_diagram {\n"
            "  rankdir=LR;\n"
            "  v0 [label=\"source\"];\n"
            "  v1 [label=\"v1\"];\n"
            "  v2 [label=\"sink\"];\n"
            "  v0 -> v1 [label=\"0\"];\n"
            "  v0 -> v1 [label=\"1\"];\n"
            "  v1 -> v2 [label=\"2\"];\n"
            "  v1 -> v2 [label=\"3\"];\n"
            "}\n");
  EXPECT_EQ(emit_dot(p),
            "digraph poset {\n"
            "  rankdir=BT;\n"
            "  n0 [label=\"0\"];\n"
            "  n1 [label=\"1\"];\n"
            "  n2 [label=\"2\"];\n"
            "  n3 [label=\"3\"];\n"
            "  n0 -> n2;\n"
            "  n0 -> n3;\n"
            "  n1 -> n2;\n"
            "  n1 -> n3;\n"
            "}\n");
  EXPECT_EQ(emit_dot(Poset(0)), "digraph poset {\n}\n");
}

TEST(Dot, TraceAndDeterminism) {
  const Poset p = k22();
  DotOptions opts;
  opts.trace = LinearExtension{1, 0, 3, 2};
  const std::string a = emit_dot(arc_diagram(p), &p, opts);
  EXPECT_NE(a.find("// step 4: place 2, active {}"), std::string::npos);
  EXPECT_EQ(a, emit_dot(arc_diagram(p), &p, opts));
}

TEST(Digest, KnownValues) {
  EXPECT_EQ(input_digest(""), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(input_digest("a"), "fnv1a64:af63dc4c8601ec8c");
}

TEST(Json, CountsAreStringsAndReparse) {
  const std::vector<std::size_t> blocks{4, 4, 4, 4};
  const auto r = count_auto(gen_weak_order(blocks));
  const nlohmann::json j = to_json(r);
  ASSERT_TRUE(j.at("count").is_string());
  const auto back = nlohmann::json::parse(j.dump());
  EXPECT_EQ(count_from_json(back.at("count")), Count(331776));

  const auto b = to_json(bounds(testing::chain(3)));
  EXPECT_EQ(fraction_from_json(b.at("upper_exact")), ExactFraction(3, 2));
  EXPECT_THROW(count_from_json(nlohmann::json(5)), ParseError);
}

TEST(Json, InstanceReportIsStable) {
  const std::string text = write_instance(k22());
  const auto a = instance_report(text, k22()).dump();
  const auto b = instance_report(text, k22()).dump();
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j.at("input").at("digest"), input_digest(text));
  EXPECT_EQ(count_from_json(j.at("count").at("count")), Count(4));
}

}  // namespace
}  // namespace nfree
