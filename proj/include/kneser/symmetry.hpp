#ifndef KNESER_SYMMETRY_HPP
#define KNESER_SYMMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/kneser_graph.hpp"
#include "kneser/perm_group.hpp"

namespace kneser {

// The transitivity tests take the group as input, so the same test can be
// run against the known generators and against the engine's output. Every
// generator must be an automorphism of g (DomainError otherwise).
bool is_vertex_transitive(const Graph& g, const PermutationGroup& group);
bool is_edge_transitive(const Graph& g, const PermutationGroup& group);
bool is_arc_transitive(const Graph& g, const PermutationGroup& group);
// Pair orbits coincide with distance classes. Throws DisconnectedError.
bool is_distance_transitive(const Graph& g, const PermutationGroup& group);

struct TransitivityReport {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  bool distance_transitive = false;
  std::size_t vertex_orbits = 0;
  std::size_t edge_orbits = 0;
  std::size_t arc_orbits = 0;
  std::size_t pair_orbits = 0;
  std::size_t distance_classes = 0;
};

// All four levels plus orbit counts. Throws StructureError if the result
// contradicts distance-transitive => arc-transitive => vertex-transitive or
// arc-transitive => edge-transitive, or if some pair orbit mixes distances.
TransitivityReport transitivity_report(const Graph& g, const PermutationGroup& group);

struct DirectProductReport {
  int n = 0;
  int k = 0;
  std::uint64_t sym_order = 0;        // |K|, K = <f_(1 2), f_(1 2 ... n)>
  bool complement_outside = false;    // alpha not in K
  bool complement_commutes = false;   // alpha commutes with both generators of K
  std::uint64_t product_order = 0;    // |<K, alpha>|
  std::uint64_t aut_order = 0;
};

// Checks, in order: (a) |K| = n!, (b) alpha is not in K, (c) alpha commutes
// with both generators of K, (d) |<K, alpha>| = 2 n! = aut_order. Throws
// StructureError naming the first step that fails.
DirectProductReport verify_direct_product(const KneserGraph& kg, std::uint64_t aut_order,
                                          std::size_t order_cap = kDefaultOrderCap);

struct RegularSubgroupSearch {
  std::optional<PermutationGroup> subgroup;
  int generator_bound = 0;
  std::uint64_t candidates_examined = 0;
  // Always false: only subgroups generated by at most generator_bound
  // elements are examined, never the full subgroup lattice.
  bool exhaustive_over_all_subgroups = false;
};

// Looks for a subgroup acting regularly on 0..vertex_count-1 among the
// subgroups generated by at most generator_bound (1 or 2) elements of an
// enumerated group.
RegularSubgroupSearch find_regular_subgroup(const PermutationGroup& group,
                                            std::size_t vertex_count, int generator_bound);

struct Question2Row {
  int n = 0;
  int k = 0;
  bool skipped = false;
  std::string skip_reason;
  std::uint64_t aut_order = 0;
  std::uint64_t twice_factorial = 0;
  bool equal = false;
};

// One row per (n,k) with 3 <= n <= n_max, 1 <= k <= k_max, n >= 2k+1.
std::vector<Question2Row> explore_question2(int n_max, int k_max);

// Aligned plain-text rendering of explore_question2 rows.
std::string render_question2_table(const std::vector<Question2Row>& rows);

std::uint64_t factorial(int n);

}  // namespace kneser

#endif  // KNESER_SYMMETRY_HPP
