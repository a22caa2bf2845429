#ifndef KNESER_CONNECTIVITY_HPP
#define KNESER_CONNECTIVITY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kneser/graph.hpp"

namespace kneser {

// Directed network with integer capacities.
class FlowNetwork {
 public:
  struct Arc {
    std::size_t from;
    std::size_t to;
    std::int64_t capacity;
  };

  FlowNetwork(std::size_t node_count, std::size_t source, std::size_t sink);

  // Returns the arc index. Throws DomainError on a negative capacity.
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity);

  std::size_t node_count() const { return node_count_; }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::size_t node_count_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Arc> arcs_;
};

struct FlowResult {
  std::int64_t value = 0;
  // Flow on each arc, indexed like FlowNetwork::arcs().
  std::vector<std::int64_t> arc_flow;
  // Nodes reachable from the source in the final residual network.
  std::vector<bool> source_side;
  std::int64_t cut_capacity = 0;
};

// Maximum s-t flow by blocking flows on level graphs. The minimum cut is
// extracted from the final residual network; a mismatch between its
// capacity and the flow value, or a conservation violation, throws
// std::logic_error. Throws DomainError when source == sink.
FlowResult max_flow(const FlowNetwork& net);

// Minimum number of vertices other than u, v whose removal separates u from
// v. Throws AdjacencyError when u ~ v, DomainError when u == v.
std::size_t local_vertex_connectivity(const Graph& g, Vertex u, Vertex v);

// Minimum over all non-adjacent pairs; m-1 for the complete graph K_m and 0
// for disconnected graphs.
std::size_t vertex_connectivity(const Graph& g);

// Internally disjoint u-v paths (vertex lists from u to v). For a
// non-adjacent pair there are local_vertex_connectivity(u,v) of them; for an
// adjacent pair the edge uv is the first path and the rest come from the
// graph with that edge removed. Every path is verified edge by edge.
std::vector<std::vector<Vertex>> menger_certificate(const Graph& g, Vertex u, Vertex v);

}  // namespace kneser

#endif  // KNESER_CONNECTIVITY_HPP
