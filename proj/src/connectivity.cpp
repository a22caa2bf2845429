#include "kneser/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

// Residual graph: arc 2i is network arc i, arc 2i+1 its reverse.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : net_(net), head_(net.node_count()), level_(net.node_count()), next_(net.node_count()) {
    for (std::size_t i = 0; i < net.arcs().size(); ++i) {
      const auto& a = net.arcs()[i];
      push(a.from, a.to, a.capacity);
      push(a.to, a.from, 0);
    }
  }

  std::int64_t run() {
    std::int64_t total = 0;
    while (build_levels()) {
      std::fill(next_.begin(), next_.end(), 0);
      while (const auto pushed = augment(net_.source(), std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  std::int64_t flow_on(std::size_t arc) const { return net_.arcs()[arc].capacity - residual_[2 * arc]; }

  std::vector<bool> reachable_from_source() const {
    std::vector<bool> seen(net_.node_count(), false);
    std::deque<std::size_t> queue{net_.source()};
    seen[net_.source()] = true;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto e : head_[x]) {
        if (residual_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = true;
          queue.push_back(to_[e]);
        }
      }
    }
    return seen;
  }

 private:
  void push(std::size_t from, std::size_t to, std::int64_t cap) {
    head_[from].push_back(to_.size());
    to_.push_back(to);
    residual_.push_back(cap);
  }

  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<std::size_t> queue{net_.source()};
    level_[net_.source()] = 0;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto e : head_[x]) {
        if (residual_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[x] + 1;
          queue.push_back(to_[e]);
        }
      }
    }
    return level_[net_.sink()] >= 0;
  }

  std::int64_t augment(std::size_t x, std::int64_t limit) {
    if (x == net_.sink()) return limit;
    for (auto& i = next_[x]; i < head_[x].size(); ++i) {
      const auto e = head_[x][i];
      const auto y = to_[e];
      if (residual_[e] <= 0 || level_[y] != level_[x] + 1) continue;
      if (const auto got = augment(y, std::min(limit, residual_[e]))) {
        residual_[e] -= got;
        residual_[e ^ 1] += got;
        return got;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<std::vector<std::size_t>> head_;
  std::vector<std::size_t> to_;
  std::vector<std::int64_t> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

// Vertex w becomes w_in = 2w and w_out = 2w+1. Interior vertices get a unit
// arc w_in -> w_out; u and v get an unbounded one. Each edge {x,y} becomes
// x_out -> y_in and y_out -> x_in with unit capacity. Source u_out, sink v_in.
struct SplitNetwork {
  FlowNetwork net;
  std::vector<std::size_t> edge_arcs;
};

SplitNetwork split_network(const Graph& g, Vertex u, Vertex v) {
  const std::size_t n = g.vertex_count();
  const auto big = static_cast<std::int64_t>(n + 1);
  SplitNetwork s{FlowNetwork(2 * n, 2 * u + 1, 2 * v), {}};
  for (Vertex w = 0; w < n; ++w) s.net.add_arc(2 * w, 2 * w + 1, (w == u || w == v) ? big : 1);
  for (const auto& [x, y] : g.edges()) {
    s.edge_arcs.push_back(s.net.add_arc(2 * x + 1, 2 * y, 1));
    s.edge_arcs.push_back(s.net.add_arc(2 * y + 1, 2 * x, 1));
  }
  return s;
}

void check_pair(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw IndexError("vertex out of range");
  if (u == v) throw DomainError("connectivity needs two distinct vertices");
}

// Paths from the unit-capacity flow between original vertices.
std::vector<std::vector<Vertex>> decompose(const Graph& g, Vertex u, Vertex v) {
  const auto s = split_network(g, u, v);
  const auto flow = max_flow(s.net);
  const std::size_t n = g.vertex_count();
  // successor lists over original vertices, consumed as paths are walked
  std::vector<std::vector<Vertex>> out_edges(n);
  for (auto a : s.edge_arcs) {
    if (flow.arc_flow[a] > 0) {
      const auto& arc = s.net.arcs()[a];
      out_edges[arc.from / 2].push_back(static_cast<Vertex>(arc.to / 2));
    }
  }
  std::vector<std::vector<Vertex>> paths;
  for (std::int64_t p = 0; p < flow.value; ++p) {
    std::vector<Vertex> path{u};
    Vertex x = u;
    while (x != v) {
      if (out_edges[x].empty()) throw std::logic_error("flow decomposition ran out of arcs");
      const Vertex y = out_edges[x].back();
      out_edges[x].pop_back();
      // drop any flow cycle the walk closed
      if (const auto seen = std::find(path.begin(), path.end(), y); seen != path.end()) {
        path.erase(seen + 1, path.end());
      } else {
        path.push_back(y);
      }
      x = y;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

void verify_paths(const Graph& g, Vertex u, Vertex v, const std::vector<std::vector<Vertex>>& paths) {
  std::vector<int> used(g.vertex_count(), 0);
  for (const auto& path : paths) {
    if (path.size() < 2 || path.front() != u || path.back() != v) {
      throw std::logic_error("certificate path has wrong endpoints");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.adjacent(path[i], path[i + 1])) throw std::logic_error("certificate path uses a non-edge");
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (used[path[i]]++) throw std::logic_error("certificate paths share an interior vertex");
    }
  }
}

}  // namespace

FlowNetwork::FlowNetwork(std::size_t node_count, std::size_t source, std::size_t sink)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (source >= node_count || sink >= node_count) throw DomainError("source or sink out of range");
  if (source == sink) throw DomainError("source and sink coincide");
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
  if (from >= node_count_ || to >= node_count_) throw DomainError("arc endpoint out of range");
  if (capacity < 0) throw DomainError("negative capacity");
  arcs_.push_back({from, to, capacity});
  return arcs_.size() - 1;
}

FlowResult max_flow(const FlowNetwork& net) {
  if (net.source() == net.sink()) throw DomainError("source and sink coincide");
  Dinic solver(net);
  FlowResult result;
  result.value = solver.run();
  result.arc_flow.resize(net.arcs().size());
  std::vector<std::int64_t> balance(net.node_count(), 0);
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    const auto& a = net.arcs()[i];
    result.arc_flow[i] = solver.flow_on(i);
    balance[a.from] -= result.arc_flow[i];
    balance[a.to] += result.arc_flow[i];
  }
  for (std::size_t x = 0; x < net.node_count(); ++x) {
    if (x != net.source() && x != net.sink() && balance[x] != 0) {
      throw std::logic_error("flow conservation violated at node " + std::to_string(x));
    }
  }
  result.source_side = solver.reachable_from_source();
  for (const auto& a : net.arcs()) {
    if (result.source_side[a.from] && !result.source_side[a.to]) result.cut_capacity += a.capacity;
  }
  if (result.cut_capacity != result.value || balance[net.sink()] != result.value) {
    throw std::logic_error("max-flow value " + std::to_string(result.value) +
                           " differs from min-cut capacity " + std::to_string(result.cut_capacity));
  }
  return result;
}

std::size_t local_vertex_connectivity(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  if (g.adjacent(u, v)) {
    throw AdjacencyError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         " are adjacent; no vertex cut separates them");
  }
  return static_cast<std::size_t>(max_flow(split_network(g, u, v).net).value);
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return 0;
  std::size_t best = n - 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) best = std::min(best, local_vertex_connectivity(g, u, v));
    }
  }
  return best;
}

std::vector<std::vector<Vertex>> menger_certificate(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  std::vector<std::vector<Vertex>> paths;
  if (g.adjacent(u, v)) {
    std::vector<Edge> rest;
    for (const auto& e : g.edges()) {
      if (e != Edge{std::min(u, v), std::max(u, v)}) rest.push_back(e);
    }
    paths.push_back({u, v});
    for (auto& p : decompose(Graph(g.vertex_count(), rest), u, v)) paths.push_back(std::move(p));
  } else {
    paths = decompose(g, u, v);
  }
  std::sort(paths.begin() + (g.adjacent(u, v) ? 1 : 0), paths.end());
  verify_paths(g, u, v, paths);
  return paths;
}

}  // namespace kneser
