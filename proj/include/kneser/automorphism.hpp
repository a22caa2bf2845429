#ifndef KNESER_AUTOMORPHISM_HPP
#define KNESER_AUTOMORPHISM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/perm_group.hpp"

namespace kneser {

// Ordered partition of 0..n-1 into non-empty cells. Each cell is kept sorted;
// the order of cells is significant.
class OrderedPartition {
 public:
  // Throws DomainError unless the cells are disjoint, non-empty and cover
  // 0..vertex_count-1.
  OrderedPartition(std::size_t vertex_count, std::vector<std::vector<Vertex>> cells);
  static OrderedPartition unit(std::size_t vertex_count);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::vector<Vertex>>& cells() const { return cells_; }
  const std::vector<Vertex>& cell(std::size_t i) const { return cells_[i]; }
  bool is_discrete() const { return cells_.size() == vertex_count_; }
  bool refines(const OrderedPartition& coarser) const;
  std::string to_string() const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<std::vector<Vertex>> cells_;
};

// Coarsest equitable partition refining p. Cells split in place; the pieces
// of a cell are ordered by their neighbour-count signature, so the result
// depends only on the structure of (g, p), never on vertex names.
OrderedPartition equitable_refinement(const Graph& g, const OrderedPartition& p);

struct AutomorphismOptions {
  std::size_t vertex_limit = 128;
  // Search the complement when it has fewer edges.
  bool allow_complement = true;
};

// Generators and exact order of Aut(g), by individualization-refinement
// backtracking. The order is the product of the orbit lengths along the
// stabilizer chain of the first path. Throws SizeLimitError above the vertex
// limit or when the order does not fit in 64 bits.
PermutationGroup automorphism_group(const Graph& g, const AutomorphismOptions& options = {});

// An adjacency-preserving bijection V(g1) -> V(g2) (map[v] is the image of
// v), or nullopt when the graphs are not isomorphic.
std::optional<std::vector<Vertex>> are_isomorphic(const Graph& g1, const Graph& g2,
                                                  const AutomorphismOptions& options = {});

}  // namespace kneser

#endif  // KNESER_AUTOMORPHISM_HPP
