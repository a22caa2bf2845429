#include "kneser/dihedral.hpp"

#include <algorithm>
#include <sstream>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

void check_n(int n) {
  if (n < 3) throw DomainError("dihedral group D_2n needs n >= 3");
}

int mod(int x, int n) { return ((x % n) + n) % n; }

}  // namespace

DihedralElement DihedralElement::rotation_by(int i, int n) { return {mod(i, n), 0}; }

DihedralElement DihedralElement::reflection_at(int i, int n) { return {mod(i, n), 1}; }

DihedralElement DihedralElement::from_index(Vertex v, int n) {
  return {static_cast<int>(v) % n, static_cast<int>(v) / n};
}

std::string DihedralElement::to_string() const {
  std::string out;
  if (rotation == 1) {
    out = "a";
  } else if (rotation > 1) {
    out = "a^" + std::to_string(rotation);
  }
  if (reflection) out += out.empty() ? "b" : " b";
  return out.empty() ? "e" : out;
}

DihedralElement dihedral_multiply(const DihedralElement& x, const DihedralElement& y, int n) {
  check_n(n);
  const int sign = x.reflection ? -1 : 1;
  return {mod(x.rotation + sign * y.rotation, n), (x.reflection + y.reflection) % 2};
}

DihedralElement dihedral_inverse(const DihedralElement& x, int n) {
  check_n(n);
  // reflections are involutions
  if (x.reflection) return x;
  return {mod(-x.rotation, n), 0};
}

ConnectionSet::ConnectionSet(int n, std::vector<DihedralElement> elements)
    : n_(n), elements_(std::move(elements)) {
  check_n(n);
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto& x : elements_) {
    if (x.rotation < 0 || x.rotation >= n || (x.reflection != 0 && x.reflection != 1)) {
      throw ConnectionSetError("element out of normal form a^i b^s, 0 <= i < n");
    }
    if (x == DihedralElement::identity()) {
      throw ConnectionSetError("connection set contains the identity");
    }
  }
  for (const auto& x : elements_) {
    if (!contains(dihedral_inverse(x, n))) {
      throw ConnectionSetError("connection set is not inverse-closed: " + x.to_string() +
                               " present, its inverse missing");
    }
  }
}

ConnectionSet ConnectionSet::reflections_except_b(int n) {
  check_n(n);
  std::vector<DihedralElement> elements;
  for (int i = 1; i < n; ++i) elements.push_back(DihedralElement::reflection_at(i, n));
  return ConnectionSet(n, std::move(elements));
}

bool ConnectionSet::contains(const DihedralElement& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string ConnectionSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? ", " : "") << elements_[i].to_string();
  os << '}';
  return os.str();
}

Graph build_cayley_graph(const ConnectionSet& omega) {
  const int n = omega.n();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex u = 0; u < static_cast<Vertex>(2 * n); ++u) {
    const auto x = DihedralElement::from_index(u, n);
    labels.push_back(x.to_string());
    const auto x_inv = dihedral_inverse(x, n);
    for (Vertex v = u + 1; v < static_cast<Vertex>(2 * n); ++v) {
      if (omega.contains(dihedral_multiply(x_inv, DihedralElement::from_index(v, n), n))) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(2 * n, edges, std::move(labels));
}

HnOneIsomorphism explicit_iso_Hn1(int n) {
  check_n(n);
  auto kneser = build_bipartite_kneser(n, 1);
  auto cayley = build_cayley_graph(ConnectionSet::reflections_except_b(n));

  std::vector<Vertex> map(kneser.vertex_count());
  for (int i = 1; i <= n; ++i) {
    map[kneser.vertex_of_subset(Subset::from_elements(n, {i}))] =
        DihedralElement::rotation_by(i, n).index(n);
    map[kneser.vertex_of_subset(complement(Subset::from_elements(n, {i})))] =
        DihedralElement::reflection_at(i, n).index(n);
  }

  std::vector<bool> hit(cayley.vertex_count(), false);
  for (Vertex v : map) {
    if (hit[v]) throw IsomorphismError("explicit map H(n,1) -> Cay(D_2n, omega) is not injective");
    hit[v] = true;
  }
  const Graph& h = kneser.graph();
  for (Vertex u = 0; u < h.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < h.vertex_count(); ++v) {
      if (h.adjacent(u, v) != cayley.adjacent(map[u], map[v])) {
        throw IsomorphismError("explicit map breaks adjacency between " + kneser.label(u).to_string() +
                               " and " + kneser.label(v).to_string());
      }
    }
  }
  return {std::move(kneser), std::move(cayley), std::move(map)};
}

PermutationGroup left_regular_subgroup(const HnOneIsomorphism& iso) {
  const int n = iso.kneser.n();
  const std::size_t size = iso.map.size();
  std::vector<Vertex> back(size);
  for (Vertex v = 0; v < size; ++v) back[iso.map[v]] = v;

  auto transported = [&](const DihedralElement& g) {
    std::vector<Vertex> images(size);
    for (Vertex v = 0; v < size; ++v) {
      const auto x = DihedralElement::from_index(iso.map[v], n);
      images[v] = back[dihedral_multiply(g, x, n).index(n)];
    }
    VertexPermutation p(std::move(images));
    if (!p.is_automorphism_of(iso.kneser.graph())) {
      throw IsomorphismError("left translation by " + g.to_string() +
                             " is not an automorphism of H(n,1)");
    }
    return p;
  };

  std::vector<VertexPermutation> elements;
  for (Vertex i = 0; i < size; ++i) elements.push_back(transported(DihedralElement::from_index(i, n)));
  std::vector<VertexPermutation> generators{transported(DihedralElement::rotation_by(1, n)),
                                            transported(DihedralElement::reflection_at(0, n))};
  return PermutationGroup(size, std::move(generators), std::move(elements));
}

}  // namespace kneser
