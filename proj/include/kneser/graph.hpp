#ifndef KNESER_GRAPH_HPP
#define KNESER_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kneser {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Fixed-size bitset over vertex indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const;
  // |*this & other|
  std::size_t count_and(const Bitset& other) const;
  std::vector<Vertex> members() const;

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph, immutable after construction.
class Graph {
 public:
  // Throws DomainError on self-loops or out-of-range endpoints. Duplicate
  // edges collapse. labels, when non-empty, must have one entry per vertex.
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }
  const Bitset& neighborhood(Vertex v) const { return adjacency_[v]; }
  std::vector<Vertex> neighbors(Vertex v) const { return adjacency_[v].members(); }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Graph on the same vertices with exactly the non-edges as edges.
  Graph complement() const;

 private:
  std::vector<Bitset> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Breadth-first distances from v; kUnreachable marks other components.
std::vector<int> bfs_distances(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

// Throws DisconnectedError for disconnected input.
int diameter(const Graph& g);

struct Bipartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

// Two-colouring with the lowest vertex of each component in `first`;
// nullopt when the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

std::vector<std::size_t> degree_sequence(const Graph& g);

// {"vertex_count":N,"edges":[[i,j],...],"labels":[...]}; labels omitted when
// the graph carries none.
std::string to_json(const Graph& g);

// Undirected DOT; labels become node labels.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace kneser

#endif  // KNESER_GRAPH_HPP
