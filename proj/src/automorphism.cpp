#include "kneser/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

Cells refine_cells(const Graph& g, Cells cells) {
  const std::size_t n = g.vertex_count();
  for (;;) {
    std::vector<Bitset> masks(cells.size(), Bitset(n));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (Vertex v : cells[c]) masks[c].set(v);
    }
    Cells next;
    next.reserve(n);
    std::vector<std::vector<std::uint32_t>> signature(n);
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      for (Vertex v : cell) {
        auto& sig = signature[v];
        sig.resize(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
          sig[c] = static_cast<std::uint32_t>(g.neighborhood(v).count_and(masks[c]));
        }
      }
      std::vector<Vertex> order(cell);
      std::stable_sort(order.begin(), order.end(),
                       [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= order.size(); ++i) {
        if (i == order.size() || signature[order[i]] != signature[order[start]]) {
          std::vector<Vertex> piece(order.begin() + start, order.begin() + i);
          std::sort(piece.begin(), piece.end());
          next.push_back(std::move(piece));
          start = i;
        }
      }
    }
    const bool split = next.size() != cells.size();
    cells = std::move(next);
    if (!split) return cells;
  }
}

// Cell sizes followed by the quotient matrix; equal for two nodes related by
// an isomorphism.
std::vector<std::uint32_t> quotient_invariant(const Graph& g, const Cells& cells) {
  std::vector<Bitset> masks(cells.size(), Bitset(g.vertex_count()));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (Vertex v : cells[c]) masks[c].set(v);
  }
  std::vector<std::uint32_t> inv;
  inv.reserve(1 + cells.size() * (cells.size() + 1));
  inv.push_back(static_cast<std::uint32_t>(cells.size()));
  for (const auto& cell : cells) inv.push_back(static_cast<std::uint32_t>(cell.size()));
  for (const auto& cell : cells) {
    for (const auto& mask : masks) {
      inv.push_back(static_cast<std::uint32_t>(g.neighborhood(cell.front()).count_and(mask)));
    }
  }
  return inv;
}

// First largest non-singleton cell, or npos when discrete.
std::size_t target_cell(const Cells& cells) {
  std::size_t best = std::string::npos;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() > 1 && (best == std::string::npos || cells[c].size() > cells[best].size())) {
      best = c;
    }
  }
  return best;
}

Cells individualize(const Cells& cells, std::size_t c, Vertex v) {
  Cells out;
  out.reserve(cells.size() + 1);
  out.insert(out.end(), cells.begin(), cells.begin() + c);
  out.push_back({v});
  std::vector<Vertex> rest;
  for (Vertex w : cells[c]) {
    if (w != v) rest.push_back(w);
  }
  out.push_back(std::move(rest));
  out.insert(out.end(), cells.begin() + c + 1, cells.end());
  return out;
}

struct PathNode {
  Cells cells;
  std::vector<std::uint32_t> invariant;
  std::size_t target = std::string::npos;
};

// The leftmost path of the search tree of a reference graph, against which
// leaves of a (possibly different) target graph are matched.
class ReferencePath {
 public:
  ReferencePath(const Graph& ref, Cells root) : ref_(ref) {
    Cells cells = refine_cells(ref, std::move(root));
    for (;;) {
      PathNode node;
      node.invariant = quotient_invariant(ref, cells);
      node.target = target_cell(cells);
      node.cells = cells;
      nodes_.push_back(node);
      if (node.target == std::string::npos) break;
      const Vertex v = cells[node.target].front();
      cells = refine_cells(ref, individualize(cells, node.target, v));
    }
    for (const auto& cell : nodes_.back().cells) leaf_.push_back(cell.front());
  }

  const std::vector<PathNode>& nodes() const { return nodes_; }

  // Search the subtree of target rooted at `cells` (at depth `level`) for a
  // leaf whose induced map from the reference leaf is an isomorphism.
  std::optional<std::vector<Vertex>> find_leaf(const Graph& target, const Cells& cells,
                                               std::size_t level) const {
    const PathNode& ref_node = nodes_[level];
    if (quotient_invariant(target, cells) != ref_node.invariant) return std::nullopt;
    if (ref_node.target == std::string::npos) {
      std::vector<Vertex> map(leaf_.size());
      for (std::size_t i = 0; i < leaf_.size(); ++i) map[leaf_[i]] = cells[i].front();
      if (preserves_edges(target, map)) return map;
      return std::nullopt;
    }
    for (Vertex u : cells[ref_node.target]) {
      auto found =
          find_leaf(target, refine_cells(target, individualize(cells, ref_node.target, u)), level + 1);
      if (found) return found;
    }
    return std::nullopt;
  }

  bool preserves_edges(const Graph& target, const std::vector<Vertex>& map) const {
    if (ref_.edge_count() != target.edge_count()) return false;
    for (const auto& [u, v] : ref_.edges()) {
      if (!target.adjacent(map[u], map[v])) return false;
    }
    return true;
  }

 private:
  const Graph& ref_;
  std::vector<PathNode> nodes_;
  std::vector<Vertex> leaf_;
};

std::vector<Vertex> orbit_under(const std::vector<VertexPermutation>& gens, Vertex point,
                                std::size_t n) {
  std::vector<bool> seen(n, false);
  std::vector<Vertex> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      const Vertex y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

void check_limit(const Graph& g, const AutomorphismOptions& options) {
  if (g.vertex_count() > options.vertex_limit) {
    throw SizeLimitError("graph has " + std::to_string(g.vertex_count()) +
                         " vertices; the automorphism engine limit is " +
                         std::to_string(options.vertex_limit));
  }
}

bool prefer_complement(const Graph& g, const AutomorphismOptions& options) {
  const std::size_t n = g.vertex_count();
  return options.allow_complement && n > 1 && 4 * g.edge_count() > n * (n - 1);
}

}  // namespace

OrderedPartition::OrderedPartition(std::size_t vertex_count, std::vector<std::vector<Vertex>> cells)
    : vertex_count_(vertex_count), cells_(std::move(cells)) {
  std::vector<bool> seen(vertex_count_, false);
  std::size_t covered = 0;
  for (auto& cell : cells_) {
    if (cell.empty()) throw DomainError("partition has an empty cell");
    std::sort(cell.begin(), cell.end());
    for (Vertex v : cell) {
      if (v >= vertex_count_ || seen[v]) throw DomainError("partition cells overlap or exceed range");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != vertex_count_) throw DomainError("partition does not cover every vertex");
}

OrderedPartition OrderedPartition::unit(std::size_t vertex_count) {
  if (vertex_count == 0) return OrderedPartition(0, {});
  std::vector<Vertex> all(vertex_count);
  std::iota(all.begin(), all.end(), Vertex{0});
  return OrderedPartition(vertex_count, {std::move(all)});
}

bool OrderedPartition::refines(const OrderedPartition& coarser) const {
  if (vertex_count_ != coarser.vertex_count_) return false;
  std::vector<std::size_t> owner(vertex_count_);
  for (std::size_t c = 0; c < coarser.cells_.size(); ++c) {
    for (Vertex v : coarser.cells_[c]) owner[v] = c;
  }
  for (const auto& cell : cells_) {
    for (Vertex v : cell) {
      if (owner[v] != owner[cell.front()]) return false;
    }
  }
  return true;
}

std::string OrderedPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (c) os << " | ";
    for (std::size_t i = 0; i < cells_[c].size(); ++i) os << (i ? " " : "") << cells_[c][i];
  }
  return os.str();
}

OrderedPartition equitable_refinement(const Graph& g, const OrderedPartition& p) {
  if (p.vertex_count() != g.vertex_count()) throw DomainError("partition size does not match graph");
  return OrderedPartition(g.vertex_count(), refine_cells(g, p.cells()));
}

PermutationGroup automorphism_group(const Graph& g, const AutomorphismOptions& options) {
  check_limit(g, options);
  const std::size_t n = g.vertex_count();
  if (n <= 1) return PermutationGroup(n, {}, std::nullopt, 1);

  // Aut(X) = Aut(complement of X).
  const bool use_complement = prefer_complement(g, options);
  std::optional<Graph> complemented;
  if (use_complement) complemented.emplace(g.complement());
  const Graph& work = use_complement ? *complemented : g;

  const ReferencePath path(work, OrderedPartition::unit(n).cells());
  const auto& nodes = path.nodes();

  std::vector<VertexPermutation> generators;
  std::uint64_t order = 1;
  // Deepest level first, so that when level i is processed the generators
  // found so far generate a subgroup of the pointwise stabilizer of the
  // first i chosen vertices.
  for (std::size_t level = nodes.size() - 1; level-- > 0;) {
    const PathNode& node = nodes[level];
    const auto& cell = node.cells[node.target];
    const Vertex v = cell.front();
    std::vector<bool> in_orbit(n, false);
    std::vector<bool> excluded(n, false);
    auto mark_orbit = [&] {
      for (Vertex w : orbit_under(generators, v, n)) in_orbit[w] = true;
    };
    mark_orbit();
    for (Vertex w : cell) {
      if (in_orbit[w] || excluded[w]) continue;
      auto leaf = path.find_leaf(work, refine_cells(work, individualize(node.cells, node.target, w)),
                                 level + 1);
      if (leaf) {
        generators.emplace_back(std::move(*leaf));
        mark_orbit();
      } else {
        for (Vertex x : orbit_under(generators, w, n)) excluded[x] = true;
      }
    }
    const auto orbit_length =
        static_cast<std::uint64_t>(std::count(in_orbit.begin(), in_orbit.end(), true));
    if (__builtin_mul_overflow(order, orbit_length, &order)) {
      throw SizeLimitError("automorphism group order exceeds 64 bits");
    }
  }

  for (const auto& gen : generators) {
    if (!gen.is_automorphism_of(g)) {
      throw NotAnAutomorphism("engine produced a non-automorphism " + gen.to_cycle_string());
    }
  }
  return PermutationGroup(n, std::move(generators), std::nullopt, order);
}

std::optional<std::vector<Vertex>> are_isomorphic(const Graph& g1, const Graph& g2,
                                                  const AutomorphismOptions& options) {
  check_limit(g1, options);
  check_limit(g2, options);
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  auto d1 = degree_sequence(g1);
  auto d2 = degree_sequence(g2);
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  const std::size_t n = g1.vertex_count();
  if (n == 0) return std::vector<Vertex>{};

  const ReferencePath path(g1, OrderedPartition::unit(n).cells());
  auto map = path.find_leaf(g2, refine_cells(g2, OrderedPartition::unit(n).cells()), 0);
  if (!map) return std::nullopt;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g1.adjacent(u, v) != g2.adjacent((*map)[u], (*map)[v])) {
        throw IsomorphismError("isomorphism search returned a map that is not edge-preserving");
      }
    }
  }
  return map;
}

}  // namespace kneser
