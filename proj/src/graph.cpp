#include "kneser/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "json.hpp"
#include "kneser/errors.hpp"

namespace kneser {

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::size_t Bitset::count_and(const Bitset& other) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
  return c;
}

std::vector<Vertex> Bitset::members() const {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges,
             std::vector<std::string> labels)
    : adjacency_(vertex_count, Bitset(vertex_count)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count) {
    throw DomainError("label count does not match vertex count");
  }
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw DomainError("edge endpoint out of range");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (!adjacency_[u].test(v)) ++edge_count_;
    adjacency_[u].set(v);
    adjacency_[v].set(u);
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u].members()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v = u + 1; v < vertex_count(); ++v) {
      if (!adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return Graph(vertex_count(), out, labels_);
}

std::vector<int> bfs_distances(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw IndexError("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d == kUnreachable) throw DisconnectedError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    (colour[v] == 0 ? parts.first : parts.second).push_back(v);
  }
  return parts;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
  return out;
}

std::string to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertex_count"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump();
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (g.has_labels()) os << " [label=\"" << g.labels()[v] << "\"]";
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace kneser
