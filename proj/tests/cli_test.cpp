#include "kneser/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "kneser/errors.hpp"
#include "kneser/kneser_graph.hpp"

namespace kneser::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// H(n,k) with one edge removed, still carrying the H(n,k) labels.
KneserGraph damaged(int n, int k) {
  const auto kg = build_bipartite_kneser(n, k);
  auto edges = kg.graph().edges();
  edges.erase(edges.begin());
  return KneserGraph::with_graph(n, k, Graph(kg.vertex_count(), edges));
}

TEST(CliTest, Props) {
  const auto r = invoke({"props", "--n", "5", "--k", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"vertices\":20,\"edges\":30,\"degree\":3,\"diameter\":5}\n");
}

TEST(CliTest, BuildJsonAndDot) {
  const auto json = invoke({"build", "--n", "3", "--k", "1"});
  EXPECT_EQ(json.code, kExitOk);
  EXPECT_EQ(json.out.rfind("{\"vertex_count\":6,", 0), 0u);
  const auto dot = invoke({"build", "--n", "3", "--k", "1", "--format", "dot"});
  EXPECT_EQ(dot.code, kExitOk);
  EXPECT_EQ(dot.out.rfind("graph G {", 0), 0u);
}

TEST(CliTest, NullGraphIsAUsageError) {
  const auto r = invoke({"build", "--n", "4", "--k", "2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("null graph"), std::string::npos);
  EXPECT_EQ(invoke({"build", "--n", "4", "--k", "2", "--allow-null"}).code, kExitOk);
}

TEST(CliTest, BadArguments) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"props", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"props", "--n", "3", "--k", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"aut", "--n", "4", "--k", "1", "--method", "guess"}).code, kExitUsage);
  EXPECT_EQ(invoke({"props", "--n", "40", "--k", "2"}).code, kExitUsage);
}

TEST(CliTest, AutBoth) {
  const auto r = invoke({"aut", "--n", "4", "--k", "1", "--method", "both"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"order\":48,\"agree\":true}\n");
}

TEST(CliTest, AutEngineListsGenerators) {
  const auto r = invoke({"aut", "--n", "5", "--k", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("{\"order\":240,\"generators\":[", 0), 0u);
}

TEST(CliTest, Transitivity) {
  const auto r = invoke({"transitivity", "--n", "4", "--k", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "{\"vertex\":{\"transitive\":true,\"orbits\":1},"
            "\"edge\":{\"transitive\":true,\"orbits\":1},"
            "\"arc\":{\"transitive\":true,\"orbits\":1},"
            "\"distance\":{\"transitive\":true,\"orbits\":4,\"distance_classes\":4}}\n");
  const auto v = invoke({"transitivity", "--n", "5", "--k", "2", "--level", "vertex"});
  EXPECT_EQ(v.out, "{\"vertex\":{\"transitive\":true,\"orbits\":1}}\n");
}

TEST(CliTest, Connectivity) {
  const auto r = invoke({"connectivity", "--n", "4", "--k", "1", "--certificate"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("{\"kappa\":3,\"expected\":3,\"match\":true,\"certificate\":[", 0), 0u);
}

TEST(CliTest, CayleyCheck) {
  const auto r = invoke({"cayley-check", "--n", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"left_regular_order\":10"), std::string::npos);
  EXPECT_NE(r.out.find("\"regular\":true"), std::string::npos);
  EXPECT_EQ(invoke({"cayley-check", "--n", "2"}).code, kExitUsage);
}

TEST(CliTest, ExploreQuestionOne) {
  const auto r = invoke({"explore", "--question", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"regular_subgroup_found\":false"), std::string::npos);
  EXPECT_NE(r.out.find("not a proof"), std::string::npos);
  EXPECT_NE(r.out.find("\"exhaustive\":false"), std::string::npos);
}

TEST(CliTest, ExploreQuestionTwo) {
  const auto r = invoke({"explore", "--question", "2", "--nmax", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"result\":\"equal\""), std::string::npos);
  EXPECT_EQ(r.out.find("not equal"), std::string::npos);
  EXPECT_NE(r.out.find("evidence only"), std::string::npos);
  const auto text = invoke({"explore", "--question", "2", "--nmax", "6", "--format", "text"});
  EXPECT_NE(text.out.find("evidence only"), std::string::npos);
}

TEST(CliTest, RepeatedRunsAreByteIdentical) {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"aut", "--n", "6", "--k", "2"},
        {"build", "--n", "5", "--k", "2"},
        {"connectivity", "--n", "5", "--k", "2", "--certificate"},
        {"explore", "--question", "1", "--n", "4", "--k", "1"}}) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(CliTest, DamagedGraphsExitWithAssertionCode) {
  std::ostringstream out;
  try {
    props_command(damaged(5, 2), out);
    FAIL() << "expected an assertion failure";
  } catch (const AssertionFailure& e) {
    EXPECT_EQ(exit_code_for(e), kExitAssertion);
  }
  EXPECT_EQ(aut_command(damaged(4, 1), AutMethod::kEngine, out), kExitAssertion);
  EXPECT_EQ(connectivity_command(damaged(4, 1), false, out), kExitAssertion);
  EXPECT_THROW(transitivity_command(damaged(4, 1), Level::kVertex, out), AssertionFailure);
}

TEST(CliTest, ExitCodeMapping) {
  EXPECT_EQ(exit_code_for(DomainError("x")), kExitUsage);
  EXPECT_EQ(exit_code_for(NullGraphError("x")), kExitUsage);
  EXPECT_EQ(exit_code_for(StructureError("x")), kExitAssertion);
  EXPECT_EQ(exit_code_for(std::runtime_error("x")), kExitAssertion);
}

}  // namespace
}  // namespace kneser::cli
