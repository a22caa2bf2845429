#include "kneser/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "kneser/automorphism.hpp"
#include "kneser/connectivity.hpp"
#include "kneser/dihedral.hpp"
#include "kneser/errors.hpp"
#include "kneser/perm_group.hpp"
#include "kneser/symmetry.hpp"

namespace kneser::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> cycle_strings(const std::vector<VertexPermutation>& perms) {
  std::vector<std::string> out;
  for (const auto& p : perms) out.push_back(p.to_cycle_string());
  return out;
}

// Cases where the automorphism group is known to be Sym([n]) x Z2:
// k = 1, and the middle-levels graphs H(2k+1, k).
bool aut_order_claimed(const KneserGraph& kg) { return kg.k() == 1 || kg.n() == 2 * kg.k() + 1; }

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

int exit_code_for(const std::exception& e) {
  return dynamic_cast<const UsageError*>(&e) != nullptr ? kExitUsage : kExitAssertion;
}

int props_command(const KneserGraph& kg, std::ostream& out) {
  const auto report = verify_family_counts(kg);
  Json j;
  j["vertices"] = report.vertices;
  j["edges"] = report.edges;
  j["degree"] = report.degree;
  j["diameter"] = diameter(kg.graph());
  emit(out, j);
  return kExitOk;
}

int aut_command(const KneserGraph& kg, AutMethod method, std::ostream& out) {
  std::optional<PermutationGroup> engine;
  std::optional<PermutationGroup> known;
  if (method != AutMethod::kGenerators) engine = automorphism_group(kg.graph());
  if (method != AutMethod::kEngine) {
    known = group_closure(kg.vertex_count(), symmetric_generators(kg, true), order_cap_from_env());
  }
  Json j;
  int code = kExitOk;
  const std::uint64_t expected = 2 * factorial(kg.n());
  if (method == AutMethod::kBoth) {
    const bool agree = engine->order() == known->order();
    j["order"] = engine->order();
    j["agree"] = agree;
    if (!agree) code = kExitAssertion;
  } else {
    const auto& group = engine ? *engine : *known;
    j["order"] = group.order();
    j["generators"] = cycle_strings(group.generators());
  }
  const auto order = engine ? engine->order() : known->order();
  if (aut_order_claimed(kg) && order != expected) code = kExitAssertion;
  emit(out, j);
  return code;
}

int transitivity_command(const KneserGraph& kg, Level level, std::ostream& out) {
  const PermutationGroup group(kg.vertex_count(), symmetric_generators(kg, true));
  const Graph& g = kg.graph();
  Json j;
  bool ok = true;
  auto add = [&](const char* key, bool transitive, std::size_t orbits, bool claimed) {
    j[key] = {{"transitive", transitive}, {"orbits", orbits}};
    if (claimed && !transitive) ok = false;
  };
  if (level == Level::kAll) {
    const auto r = transitivity_report(g, group);
    add("vertex", r.vertex_transitive, r.vertex_orbits, true);
    add("edge", r.edge_transitive, r.edge_orbits, true);
    add("arc", r.arc_transitive, r.arc_orbits, true);
    add("distance", r.distance_transitive, r.pair_orbits, kg.k() == 1);
    j["distance"]["distance_classes"] = r.distance_classes;
  } else if (level == Level::kVertex) {
    add("vertex", is_vertex_transitive(g, group), orbits_on_vertices(group).size(), true);
  } else if (level == Level::kEdge) {
    const auto r = transitivity_report(g, group);
    add("edge", r.edge_transitive, r.edge_orbits, true);
  } else if (level == Level::kArc) {
    const auto r = transitivity_report(g, group);
    add("arc", r.arc_transitive, r.arc_orbits, true);
  } else {
    const auto r = transitivity_report(g, group);
    add("distance", r.distance_transitive, r.pair_orbits, kg.k() == 1);
    j["distance"]["distance_classes"] = r.distance_classes;
  }
  emit(out, j);
  return ok ? kExitOk : kExitAssertion;
}

int connectivity_command(const KneserGraph& kg, bool certificate, std::ostream& out) {
  const Graph& g = kg.graph();
  const auto kappa = vertex_connectivity(g);
  const auto expected = binomial(kg.n() - kg.k(), kg.k());
  Json j;
  j["kappa"] = kappa;
  j["expected"] = expected;
  j["match"] = kappa == expected;
  if (certificate && g.vertex_count() >= 2) {
    Vertex v = 1;
    for (Vertex w = 1; w < g.vertex_count(); ++w) {
      if (!g.adjacent(0, w)) {
        v = w;
        break;
      }
    }
    j["certificate"] = menger_certificate(g, 0, v);
  }
  emit(out, j);
  return kappa == expected ? kExitOk : kExitAssertion;
}

int cayley_check_command(int n, std::ostream& out) {
  const auto iso = explicit_iso_Hn1(n);
  const auto left = left_regular_subgroup(iso);
  const bool regular = is_regular_action(left, iso.kneser.vertex_count());
  const bool engine_agrees = are_isomorphic(iso.kneser.graph(), iso.cayley).has_value();
  Json j;
  j["n"] = n;
  j["vertices"] = iso.kneser.vertex_count();
  j["edges"] = iso.kneser.graph().edge_count();
  j["connection_set"] = ConnectionSet::reflections_except_b(n).to_string();
  j["explicit_isomorphism"] = true;
  j["engine_isomorphic"] = engine_agrees;
  j["left_regular_order"] = left.order();
  j["regular"] = regular;
  emit(out, j);
  return regular && engine_agrees ? kExitOk : kExitAssertion;
}

int explore_question1_command(int n, int k, int generator_bound, std::ostream& out) {
  const auto kg = build_bipartite_kneser(n, k);
  const auto aut = automorphism_group(kg.graph());
  const auto group = group_closure(kg.vertex_count(), aut.generators(), order_cap_from_env());
  const auto search = find_regular_subgroup(group, kg.vertex_count(), generator_bound);
  const auto name = "H(" + std::to_string(n) + "," + std::to_string(k) + ")";
  Json j;
  j["question"] = 1;
  j["n"] = n;
  j["k"] = k;
  j["vertices"] = kg.vertex_count();
  j["aut_order"] = group.order();
  j["generator_bound"] = generator_bound;
  j["candidates_examined"] = search.candidates_examined;
  j["regular_subgroup_found"] = search.subgroup.has_value();
  if (search.subgroup) {
    j["subgroup_order"] = search.subgroup->order();
    j["subgroup_generators"] = cycle_strings(search.subgroup->generators());
  }
  j["exhaustive"] = search.exhaustive_over_all_subgroups;
  j["caveat"] = "only subgroups generated by at most " + std::to_string(generator_bound) +
                " element(s) of Aut were examined; absence is not a proof";
  j["conclusion"] = search.subgroup
                        ? "regular subgroup found: " + name + " is a Cayley graph"
                        : "no regular subgroup found: consistent with " + name +
                              " not being a Cayley graph";
  emit(out, j);
  return kExitOk;
}

int explore_question2_command(int n_max, int k_max, bool text, std::ostream& out) {
  const auto rows = explore_question2(n_max, k_max);
  if (text) {
    out << render_question2_table(rows);
    return kExitOk;
  }
  Json j;
  j["question"] = 2;
  auto list = Json::array();
  bool any_unequal = false;
  for (const auto& r : rows) {
    Json row;
    row["n"] = r.n;
    row["k"] = r.k;
    if (r.skipped) {
      row["aut_order"] = nullptr;
      row["two_n_factorial"] = r.twice_factorial;
      row["result"] = "skipped";
      row["reason"] = r.skip_reason;
    } else {
      row["aut_order"] = r.aut_order;
      row["two_n_factorial"] = r.twice_factorial;
      row["result"] = r.equal ? "equal" : "not equal";
      any_unequal = any_unequal || !r.equal;
    }
    list.push_back(std::move(row));
  }
  j["rows"] = std::move(list);
  j["summary"] = any_unequal ? "counterexample found: some |Aut(H(n,k))| differs from 2*n!"
                             : "consistent with Aut(H(n,k)) = Sym([n]) x Z2 on every computed row";
  j["caveat"] = "evidence only: bounded computation, not a proof";
  emit(out, j);
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite Kneser graph H(n,k) verification tool", "kneser"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  bool allow_null = false;
  std::string format = "json";
  std::string out_path;
  std::string method = "engine";
  std::string level = "all";
  bool certificate = false;
  int question = 0;
  int n_max = 7;
  int k_max = kMaxGroundSet;
  int bound = 2;

  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("--n", n, "ground set size")->required();
    sub->add_option("--k", k, "subset size")->required();
  };

  auto* build = app.add_subcommand("build", "emit H(n,k) as JSON or DOT");
  add_nk(build);
  build->add_flag("--allow-null", allow_null, "accept n = 2k (edgeless graph)");
  build->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  build->add_option("--out", out_path, "write to this file instead of stdout");

  auto* props = app.add_subcommand("props", "counts, degree, bipartition and diameter");
  add_nk(props);

  auto* aut = app.add_subcommand("aut", "automorphism group order and generators");
  add_nk(aut);
  aut->add_option("--method", method)->check(CLI::IsMember({"engine", "generators", "both"}));

  auto* trans = app.add_subcommand("transitivity", "vertex/edge/arc/distance transitivity");
  add_nk(trans);
  trans->add_option("--level", level)
      ->check(CLI::IsMember({"vertex", "edge", "arc", "distance", "all"}));

  auto* conn = app.add_subcommand("connectivity", "vertex connectivity against C(n-k,k)");
  add_nk(conn);
  conn->add_flag("--certificate", certificate, "include disjoint paths for one vertex pair");

  auto* cayley = app.add_subcommand("cayley-check", "H(n,1) as a Cayley graph of D_2n");
  cayley->add_option("--n", n)->required();

  auto* explore = app.add_subcommand("explore", "bounded searches for the open questions");
  explore->add_option("--question", question)->required()->check(CLI::IsMember({1, 2}));
  explore->add_option("--nmax", n_max, "question 2: largest n");
  explore->add_option("--kmax", k_max, "question 2: largest k");
  explore->add_option("--n", n, "question 1: n (default 5)");
  explore->add_option("--k", k, "question 1: k (default 2)");
  explore->add_option("--bound", bound, "question 1: generators per subgroup")
      ->check(CLI::IsMember({1, 2}));
  explore->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::vector<const char*> argv{"kneser"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) {
      const auto kg = build_bipartite_kneser(n, k, allow_null);
      const auto text = format == "dot" ? to_dot(kg.graph()) : to_json(kg.graph()) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(out_path);
        if (!file) throw DomainError("cannot open " + out_path + " for writing");
        file << text;
      }
      return kExitOk;
    }
    if (props->parsed()) return props_command(build_bipartite_kneser(n, k), out);
    if (aut->parsed()) {
      const auto m = method == "generators" ? AutMethod::kGenerators
                     : method == "both"     ? AutMethod::kBoth
                                            : AutMethod::kEngine;
      return aut_command(build_bipartite_kneser(n, k), m, out);
    }
    if (trans->parsed()) {
      const auto l = level == "vertex"     ? Level::kVertex
                     : level == "edge"     ? Level::kEdge
                     : level == "arc"      ? Level::kArc
                     : level == "distance" ? Level::kDistance
                                           : Level::kAll;
      return transitivity_command(build_bipartite_kneser(n, k), l, out);
    }
    if (conn->parsed()) return connectivity_command(build_bipartite_kneser(n, k), certificate, out);
    if (cayley->parsed()) return cayley_check_command(n, out);
    if (explore->parsed()) {
      if (question == 1) {
        return explore_question1_command(n == 0 ? 5 : n, k == 0 ? 2 : k, bound, out);
      }
      return explore_question2_command(n_max, k_max, format == "text", out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace kneser::cli
