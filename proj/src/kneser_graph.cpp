#include "kneser/kneser_graph.hpp"

#include <string>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

std::string params(int n, int k) {
  return "H(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

}  // namespace

KneserGraph::KneserGraph(int n, int k, Graph graph, std::vector<Subset> labels)
    : n_(n), k_(k), half_(binomial(n, k)), graph_(std::move(graph)), labels_(std::move(labels)) {}

Vertex KneserGraph::vertex_of_subset(const Subset& s) const {
  if (s.n() != n_) throw DomainError("subset ground set does not match n");
  if (s.size() == k_) return static_cast<Vertex>(rank_subset(s, n_, k_));
  if (s.size() == n_ - k_) {
    return static_cast<Vertex>(half_ + rank_subset(complement(s), n_, k_));
  }
  throw CardinalityError("subset " + s.to_string() + " is not a vertex of " + params(n_, k_));
}

KneserGraph KneserGraph::with_graph(int n, int k, Graph graph) {
  auto base = build_bipartite_kneser(n, k, true);
  if (graph.vertex_count() != base.vertex_count()) {
    throw DomainError("graph has " + std::to_string(graph.vertex_count()) + " vertices, " +
                      params(n, k) + " has " + std::to_string(base.vertex_count()));
  }
  return KneserGraph(n, k, std::move(graph), std::move(base.labels_));
}

KneserGraph build_bipartite_kneser(int n, int k, bool allow_null) {
  if (k < 1 || n <= k) {
    throw DomainError(params(n, k) + " requires n > k >= 1");
  }
  if (n > kMaxGroundSet) {
    throw DomainError(params(n, k) + " exceeds the ground-set cap n <= " +
                      std::to_string(kMaxGroundSet));
  }
  if (n < 2 * k) throw DomainError(params(n, k) + " requires n >= 2k");
  if (n == 2 * k && !allow_null) {
    throw NullGraphError(params(n, k) + " with n = 2k is a null graph (no edges); need n >= 2k+1");
  }

  const std::uint64_t half = binomial(n, k);
  std::vector<Subset> subsets;
  subsets.reserve(2 * half);
  for (std::uint64_t r = 0; r < half; ++r) subsets.push_back(unrank_subset(r, n, k));
  for (std::uint64_t r = 0; r < half; ++r) subsets.push_back(complement(subsets[r]));

  std::vector<Edge> edges;
  std::vector<std::string> names;
  names.reserve(subsets.size());
  for (const auto& s : subsets) names.push_back(s.to_string());
  if (n != 2 * k) {
    for (std::uint64_t a = 0; a < half; ++a) {
      for (std::uint64_t b = half; b < 2 * half; ++b) {
        if (subsets[a].is_subset_of(subsets[b])) {
          edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
      }
    }
  }
  Graph g(subsets.size(), edges, std::move(names));
  return KneserGraph(n, k, std::move(g), std::move(subsets));
}

FamilyReport verify_family_counts(const KneserGraph& kg) {
  const Graph& g = kg.graph();
  const std::uint64_t half = binomial(kg.n(), kg.k());
  const std::uint64_t degree = binomial(kg.n() - kg.k(), kg.k());
  const auto where = params(kg.n(), kg.k());

  FamilyReport report;
  report.n = kg.n();
  report.k = kg.k();
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  report.degree = degree;

  if (g.vertex_count() != 2 * half) {
    throw FamilyInvariantError(where + ": vertex count " + std::to_string(g.vertex_count()) +
                               " != 2*C(n,k) = " + std::to_string(2 * half));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != degree) {
      throw FamilyInvariantError(where + ": degree of " + kg.label(v).to_string() + " is " +
                                 std::to_string(g.degree(v)) + ", expected C(n-k,k) = " +
                                 std::to_string(degree));
    }
  }
  if (g.edge_count() != half * degree) {
    throw FamilyInvariantError(where + ": edge count " + std::to_string(g.edge_count()) +
                               " != C(n,k)*C(n-k,k)");
  }
  const auto parts = bipartition(g);
  if (!parts) throw FamilyInvariantError(where + ": bipartition: graph has an odd cycle");
  report.part_first = parts->first.size();
  report.part_second = parts->second.size();
  if (report.part_first != half || report.part_second != half) {
    throw FamilyInvariantError(where + ": bipartition sizes " + std::to_string(report.part_first) +
                               "/" + std::to_string(report.part_second) + " != C(n,k) each");
  }
  report.connected = is_connected(g);
  if (!report.connected) throw FamilyInvariantError(where + ": connectivity: graph is disconnected");
  return report;
}

}  // namespace kneser
