#ifndef KNESER_PERM_GROUP_HPP
#define KNESER_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kneser/kneser_graph.hpp"
#include "kneser/permutation.hpp"

namespace kneser {

inline constexpr std::size_t kDefaultOrderCap = 100000;

// Order cap from the KNESER_ORDER_CAP environment variable, or the default.
std::size_t order_cap_from_env();

// A group of vertex permutations given by generators. The element list is
// present only after enumeration (group_closure); an exact order may also be
// attached without enumeration (the automorphism engine does this).
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<VertexPermutation> generators,
                   std::optional<std::vector<VertexPermutation>> elements = std::nullopt,
                   std::optional<std::uint64_t> known_order = std::nullopt);

  std::size_t degree() const { return degree_; }
  const std::vector<VertexPermutation>& generators() const { return generators_; }
  bool is_enumerated() const { return elements_.has_value(); }
  // Sorted; throws NeedEnumerationError when not enumerated.
  const std::vector<VertexPermutation>& elements() const;
  bool has_order() const { return elements_.has_value() || known_order_.has_value(); }
  // Throws NeedEnumerationError when the order is unknown.
  std::uint64_t order() const;
  bool contains(const VertexPermutation& p) const;

 private:
  std::size_t degree_;
  std::vector<VertexPermutation> generators_;
  std::optional<std::vector<VertexPermutation>> elements_;
  std::optional<std::uint64_t> known_order_;
};

// f_theta: the vertex map {x1,...,xt} -> {theta(x1),...,theta(xt)}. Verified
// edge-preserving; throws NotAnAutomorphism otherwise and DomainError when
// theta acts on the wrong ground set.
VertexPermutation induced_automorphism(const KneserGraph& kg, const Permutation& theta);

// alpha: v -> [n] \ v, i.e. the index shift i <-> i + C(n,k). Verified
// edge-preserving.
VertexPermutation complement_automorphism(const KneserGraph& kg);

// {f_(1 2), f_(1 2 ... n)}, optionally followed by alpha.
std::vector<VertexPermutation> symmetric_generators(const KneserGraph& kg, bool with_complement);

// Breadth-first closure under right multiplication by generators. Throws
// OrderCapExceeded as soon as more than order_cap elements are found.
PermutationGroup group_closure(std::size_t degree, std::vector<VertexPermutation> generators,
                               std::size_t order_cap = kDefaultOrderCap);

// Orbits are computed from the generators alone.
std::vector<Vertex> orbit(const PermutationGroup& group, Vertex point);

// Vertex orbits, each sorted, ordered by least member.
std::vector<std::vector<Vertex>> orbits_on_vertices(const PermutationGroup& group);

// Orbits of the diagonal action g(u,v) = (g(u),g(v)) on ordered pairs.
// orbit_of[u * degree + v] is the orbit id of (u,v); ids are numbered in
// order of first appearance in row-major order.
struct PairOrbits {
  std::size_t degree = 0;
  std::size_t count = 0;
  std::vector<std::uint32_t> orbit_of;
  std::uint32_t id(Vertex u, Vertex v) const { return orbit_of[u * degree + v]; }
};
PairOrbits orbits_on_ordered_pairs(const PermutationGroup& group);

// All elements fixing point. Requires an enumerated group.
PermutationGroup stabilizer(const PermutationGroup& group, Vertex point);

// Transitive and |group| = vertex_count. Requires an enumerated group.
bool is_regular_action(const PermutationGroup& group, std::size_t vertex_count);

}  // namespace kneser

#endif  // KNESER_PERM_GROUP_HPP
