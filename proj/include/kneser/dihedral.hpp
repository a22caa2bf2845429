#ifndef KNESER_DIHEDRAL_HPP
#define KNESER_DIHEDRAL_HPP

#include <string>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/kneser_graph.hpp"
#include "kneser/perm_group.hpp"

namespace kneser {

// a^rotation b^reflection in D_2n = <a, b | a^n = b^2 = 1, ba = a^-1 b>.
struct DihedralElement {
  int rotation = 0;
  int reflection = 0;

  static DihedralElement identity() { return {}; }
  static DihedralElement rotation_by(int i, int n);
  static DihedralElement reflection_at(int i, int n);

  // "e", "a", "a^3", "b", "a b", "a^2 b".
  std::string to_string() const;
  // Position in the vertex order a^0, ..., a^{n-1}, a^0 b, ..., a^{n-1} b.
  Vertex index(int n) const { return static_cast<Vertex>(rotation + reflection * n); }
  static DihedralElement from_index(Vertex v, int n);

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

// (a^i b^s)(a^j b^t) = a^(i + (-1)^s j) b^(s+t). Throws DomainError for n < 3.
DihedralElement dihedral_multiply(const DihedralElement& x, const DihedralElement& y, int n);
DihedralElement dihedral_inverse(const DihedralElement& x, int n);

// Inverse-closed, identity-free subset of D_2n, kept sorted.
class ConnectionSet {
 public:
  // Throws ConnectionSetError naming the violation.
  ConnectionSet(int n, std::vector<DihedralElement> elements);

  // {ab, a^2 b, ..., a^(n-1) b}.
  static ConnectionSet reflections_except_b(int n);

  int n() const { return n_; }
  const std::vector<DihedralElement>& elements() const { return elements_; }
  bool contains(const DihedralElement& x) const;
  std::size_t size() const { return elements_.size(); }
  std::string to_string() const;

 private:
  int n_;
  std::vector<DihedralElement> elements_;
};

// Cay(D_2n, omega): 2n vertices in DihedralElement::index order, x ~ y iff
// x^-1 y in omega.
Graph build_cayley_graph(const ConnectionSet& omega);

// The isomorphism H(n,1) -> Cay(D_2n, {ab, ..., a^(n-1) b}) sending {i} to
// a^i and [n] - {j} to a^j b. map[v] is the Cayley vertex index of H(n,1)
// vertex v. Verified bijective and edge-preserving in both directions;
// throws IsomorphismError otherwise.
struct HnOneIsomorphism {
  KneserGraph kneser;
  Graph cayley;
  std::vector<Vertex> map;
};
HnOneIsomorphism explicit_iso_Hn1(int n);

// Left translations x -> gx of D_2n carried to V(H(n,1)) through the
// isomorphism. Enumerated, with generators the images of a and b; each
// element is checked to be an automorphism of H(n,1).
PermutationGroup left_regular_subgroup(const HnOneIsomorphism& iso);

}  // namespace kneser

#endif  // KNESER_DIHEDRAL_HPP
