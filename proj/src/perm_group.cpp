#include "kneser/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_generators(std::size_t degree, const std::vector<VertexPermutation>& gens) {
  for (const auto& g : gens) {
    if (g.size() != degree) throw DomainError("generator acts on the wrong number of points");
  }
}

}  // namespace

std::size_t order_cap_from_env() {
  if (const char* raw = std::getenv("KNESER_ORDER_CAP")) {
    try {
      std::size_t pos = 0;
      const auto value = std::stoull(raw, &pos);
      if (pos == std::string(raw).size() && value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("KNESER_ORDER_CAP must be a positive integer, got '") + raw + "'");
  }
  return kDefaultOrderCap;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<VertexPermutation> generators,
                                   std::optional<std::vector<VertexPermutation>> elements,
                                   std::optional<std::uint64_t> known_order)
    : degree_(degree),
      generators_(std::move(generators)),
      elements_(std::move(elements)),
      known_order_(known_order) {
  check_generators(degree_, generators_);
  if (elements_) {
    check_generators(degree_, *elements_);
    std::sort(elements_->begin(), elements_->end());
  }
}

const std::vector<VertexPermutation>& PermutationGroup::elements() const {
  if (!elements_) throw NeedEnumerationError("group elements have not been enumerated");
  return *elements_;
}

std::uint64_t PermutationGroup::order() const {
  if (elements_) return elements_->size();
  if (known_order_) return *known_order_;
  throw NeedEnumerationError("group order is unknown; enumerate the group first");
}

bool PermutationGroup::contains(const VertexPermutation& p) const {
  const auto& all = elements();
  return std::binary_search(all.begin(), all.end(), p);
}

VertexPermutation induced_automorphism(const KneserGraph& kg, const Permutation& theta) {
  if (theta.n() != kg.n()) {
    throw DomainError("permutation acts on [" + std::to_string(theta.n()) + "], graph has n = " +
                      std::to_string(kg.n()));
  }
  std::vector<Vertex> images(kg.vertex_count());
  for (Vertex v = 0; v < kg.vertex_count(); ++v) {
    std::uint32_t bits = 0;
    for (int x : kg.label(v).elements()) bits |= 1u << (theta(x) - 1);
    const Subset image(kg.n(), bits);
    // n = 2k: keep each side on its own side so f_theta commutes with alpha.
    images[v] = v < kg.half() ? static_cast<Vertex>(rank_subset(image, kg.n(), kg.k()))
                              : static_cast<Vertex>(kg.half() +
                                                    rank_subset(complement(image), kg.n(), kg.k()));
  }
  VertexPermutation f(std::move(images));
  if (!f.is_automorphism_of(kg.graph())) {
    throw NotAnAutomorphism("f_theta for theta = " + theta.to_cycle_string() +
                            " does not preserve adjacency");
  }
  return f;
}

VertexPermutation complement_automorphism(const KneserGraph& kg) {
  const auto half = static_cast<Vertex>(kg.half());
  std::vector<Vertex> images(kg.vertex_count());
  for (Vertex v = 0; v < kg.vertex_count(); ++v) images[v] = v < half ? v + half : v - half;
  VertexPermutation alpha(std::move(images));
  if (!alpha.is_automorphism_of(kg.graph())) {
    throw NotAnAutomorphism("complementation does not preserve adjacency");
  }
  return alpha;
}

std::vector<VertexPermutation> symmetric_generators(const KneserGraph& kg, bool with_complement) {
  std::vector<VertexPermutation> gens{
      induced_automorphism(kg, Permutation::transposition12(kg.n())),
      induced_automorphism(kg, Permutation::long_cycle(kg.n())),
  };
  if (with_complement) gens.push_back(complement_automorphism(kg));
  return gens;
}

PermutationGroup group_closure(std::size_t degree, std::vector<VertexPermutation> generators,
                               std::size_t order_cap) {
  check_generators(degree, generators);
  std::unordered_set<VertexPermutation, VertexPermutationHash> seen;
  std::vector<VertexPermutation> elements;
  std::deque<VertexPermutation> frontier;
  auto id = VertexPermutation::identity(degree);
  seen.insert(id);
  elements.push_back(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    const VertexPermutation x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      auto y = compose(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > order_cap) {
          throw OrderCapExceeded("group closure exceeds order cap " + std::to_string(order_cap));
        }
        elements.push_back(y);
        frontier.push_back(std::move(y));
      }
    }
  }
  return PermutationGroup(degree, std::move(generators), std::move(elements));
}

std::vector<Vertex> orbit(const PermutationGroup& group, Vertex point) {
  if (point >= group.degree()) throw IndexError("point out of range");
  std::vector<bool> seen(group.degree(), false);
  std::vector<Vertex> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : group.generators()) {
      const Vertex y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> orbits_on_vertices(const PermutationGroup& group) {
  std::vector<bool> placed(group.degree(), false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < group.degree(); ++v) {
    if (placed[v]) continue;
    auto o = orbit(group, v);
    for (Vertex w : o) placed[w] = true;
    out.push_back(std::move(o));
  }
  return out;
}

PairOrbits orbits_on_ordered_pairs(const PermutationGroup& group) {
  const std::size_t n = group.degree();
  DisjointSets sets(n * n);
  for (const auto& g : group.generators()) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) sets.unite(u * n + v, g(u) * n + g(v));
    }
  }
  PairOrbits result;
  result.degree = n;
  result.orbit_of.assign(n * n, 0);
  std::vector<std::uint32_t> id_of_root(n * n, UINT32_MAX);
  for (std::size_t i = 0; i < n * n; ++i) {
    const auto root = sets.find(i);
    if (id_of_root[root] == UINT32_MAX) id_of_root[root] = static_cast<std::uint32_t>(result.count++);
    result.orbit_of[i] = id_of_root[root];
  }
  return result;
}

PermutationGroup stabilizer(const PermutationGroup& group, Vertex point) {
  if (point >= group.degree()) throw IndexError("point out of range");
  std::vector<VertexPermutation> fixing;
  for (const auto& g : group.elements()) {
    if (g(point) == point) fixing.push_back(g);
  }
  std::vector<VertexPermutation> gens;
  for (const auto& g : fixing) {
    if (!g.is_identity()) gens.push_back(g);
  }
  return PermutationGroup(group.degree(), std::move(gens), std::move(fixing));
}

bool is_regular_action(const PermutationGroup& group, std::size_t vertex_count) {
  if (group.degree() != vertex_count) return false;
  if (group.elements().size() != vertex_count) return false;
  if (vertex_count == 0) return false;
  return orbit(group, 0).size() == vertex_count;
}

}  // namespace kneser
