#ifndef KNESER_KNESER_GRAPH_HPP
#define KNESER_KNESER_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/subset.hpp"

namespace kneser {

// The bipartite Kneser graph H(n,k): k-subsets and (n-k)-subsets of [n],
// adjacent when one contains the other.
//
// Vertex indexing: index i < C(n,k) is the k-subset of lexicographic rank i;
// index C(n,k) + r is the complement of the k-subset of rank r. The
// complementation map is therefore the shift i <-> i + C(n,k).
class KneserGraph {
 public:
  int n() const { return n_; }
  int k() const { return k_; }
  const Graph& graph() const { return graph_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  // C(n,k): the size of each side.
  std::uint64_t half() const { return half_; }

  const Subset& label(Vertex v) const { return labels_.at(v); }

  // Inverse of label(). When n = 2k both sides hold k-sets and the k-side
  // index is returned.
  Vertex vertex_of_subset(const Subset& s) const;

  // The labeling of H(n,k) paired with an arbitrary graph on 2*C(n,k)
  // vertices. Lets the verifiers be run against graphs that are not H(n,k).
  static KneserGraph with_graph(int n, int k, Graph graph);

 private:
  friend KneserGraph build_bipartite_kneser(int n, int k, bool allow_null);
  KneserGraph(int n, int k, Graph graph, std::vector<Subset> labels);

  int n_;
  int k_;
  std::uint64_t half_;
  Graph graph_;
  std::vector<Subset> labels_;
};

// Requires n > k >= 1 and n >= 2k+1; n = 2k is accepted only with allow_null
// and yields an edgeless graph. n is capped at kMaxGroundSet.
KneserGraph build_bipartite_kneser(int n, int k, bool allow_null = false);

struct FamilyReport {
  int n = 0;
  int k = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::uint64_t degree = 0;
  std::size_t part_first = 0;
  std::size_t part_second = 0;
  bool connected = false;
};

// Checks vertex count 2*C(n,k), degree C(n-k,k) everywhere, equal parts of
// size C(n,k) and connectivity. Throws FamilyInvariantError naming the first
// count that is off.
FamilyReport verify_family_counts(const KneserGraph& kg);

}  // namespace kneser

#endif  // KNESER_KNESER_GRAPH_HPP
